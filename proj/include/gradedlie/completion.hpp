#pragma once
// Number field front end: signature-driven dimension tables, generator
// specs for the motivic Lie algebra, presentation reports with freeness
// certificates, the polylogarithm quotient, and subfield reduction of
// cohomology data.

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gradedlie/errors.hpp"
#include "gradedlie/generator_spec.hpp"
#include "gradedlie/presentation.hpp"
#include "gradedlie/witt.hpp"

namespace gradedlie {

enum class CohomologyVariant { kSoule, kCrystalline };

// Archimedean signature of a number field plus the finite data the
// cohomology tables depend on: #S removed primes and the variant selecting
// which first cohomology the dimensions describe.
struct FieldSignature {
  int r1 = 0;
  int r2 = 0;
  int s_size = 0;
  CohomologyVariant variant = CohomologyVariant::kSoule;
};

inline bool is_spec_z(const FieldSignature& sig) {
  return sig.r1 == 1 && sig.r2 == 0 && sig.s_size == 0 &&
         sig.variant == CohomologyVariant::kCrystalline;
}

namespace detail {

inline void check_signature(const FieldSignature& sig) {
  if (sig.r1 < 0 || sig.r2 < 0 || sig.s_size < 0)
    throw DomainError("field signature counts must be nonnegative");
  if (sig.r1 + 2 * sig.r2 < 1)
    throw DomainError("field signature must have at least one archimedean place");
}

inline void check_motivic_bound(int weight_bound) {
  if (weight_bound > -2) throw DomainError("weight bound must be at most -2");
  if (weight_bound % 2 != 0) throw DomainError("weight bound must be even");
}

}  // namespace detail

// Order of vanishing of the zeta function at s = 1 - n, by the closed form:
// r1 + r2 - 1 at n = 1, r1 + r2 for odd n > 1, r2 for even n.
inline int dn(const FieldSignature& sig, int n) {
  detail::check_signature(sig);
  if (n <= 0) throw DomainError("twist must be positive");
  if (n == 1) return sig.r1 + sig.r2 - 1;
  return n % 2 != 0 ? sig.r1 + sig.r2 : sig.r2;
}

// Dimension of the weight -2n block of first cohomology: d_1 + #S at n = 1
// and d_n beyond. Both variants share the formula; the variant only changes
// which S the count refers to.
inline int h1_dim(const FieldSignature& sig, int n) {
  if (n == 1) return dn(sig, 1) + sig.s_size;
  return dn(sig, n);
}

// One generator of weight -2n per unit of h1_dim(sig, n), for 2n up to the
// bound. Labels are z<n>_<i>; the classical sigma<n> aliases are emitted for
// the crystalline rational signature with no primes removed.
inline GeneratorSpec motivic_generator_spec(const FieldSignature& sig, int weight_bound) {
  detail::check_signature(sig);
  detail::check_motivic_bound(weight_bound);
  const bool sigma_labels = is_spec_z(sig);
  std::vector<Generator> generators;
  for (int n = 1; 2 * n <= -weight_bound; ++n) {
    const int mult = h1_dim(sig, n);
    for (int i = 1; i <= mult; ++i) {
      std::string label = sigma_labels ? "sigma" + std::to_string(n)
                                       : "z" + std::to_string(n) + "_" + std::to_string(i);
      generators.push_back({std::move(label), -2 * n});
    }
  }
  return GeneratorSpec(std::move(generators));
}

// Cohomology of one irreducible isotypic block: its weight n_alpha under the
// central cocharacter and the first/second cohomology multiplicities.
struct IrreducibleCohomologyDatum {
  int n_alpha = 0;
  int h1 = 0;
  int h2 = 0;
  bool trivial_isotypic = true;
};

struct WeightedCompletionInput {
  std::vector<IrreducibleCohomologyDatum> data;
  int gap = 2;
};

enum class Freeness { kCertifiedFree, kUnknown };

struct PresentationReport {
  GradedLiePresentation presentation;
  Freeness freeness;
  int obstruction_ceiling = 0;
  std::vector<std::string> audit;
};

// Presentation of the prounipotent radical from cohomology data: generators
// at weight n_alpha with multiplicity h1. Freeness is certified when the gap
// hypothesis holds (h1 = 0 strictly between 0 and -gap) and no second
// cohomology survives at or below -2 gap, where relations would live; a
// trivial radical is free outright.
inline PresentationReport weighted_completion_presentation(const WeightedCompletionInput& input) {
  if (input.gap < 1) throw DomainError("weight gap must be positive");
  std::map<int, IrreducibleCohomologyDatum> by_weight;
  for (const IrreducibleCohomologyDatum& d : input.data) {
    if (d.h1 < 0 || d.h2 < 0) throw DomainError("cohomology counts must be nonnegative");
    if (!by_weight.emplace(d.n_alpha, d).second)
      throw DomainError("duplicate weight in the completion input");
  }

  std::vector<Generator> generators;
  int bound = 0;
  for (auto it = by_weight.rbegin(); it != by_weight.rend(); ++it) {
    const IrreducibleCohomologyDatum& d = it->second;
    if (d.n_alpha > -1) continue;
    bound = std::min(bound, d.n_alpha);
    const int mag = -d.n_alpha;
    for (int i = 1; i <= d.h1; ++i)
      generators.push_back({"u" + std::to_string(mag) + "_" + std::to_string(i), d.n_alpha});
  }
  if (bound == 0) bound = -2;

  const int ceiling = -2 * input.gap;
  std::vector<std::string> audit;
  audit.push_back("window: degree two obstructions are confined to weights <= " +
                  std::to_string(ceiling));

  bool gap_ok = true;
  for (const auto& [w, d] : by_weight) {
    if (w >= 0 || w <= -input.gap || d.h1 == 0) continue;
    gap_ok = false;
    audit.push_back("gap violated: h1 = " + std::to_string(d.h1) + " at weight " +
                    std::to_string(w));
  }
  if (gap_ok)
    audit.push_back("gap holds: h1 = 0 strictly between 0 and " + std::to_string(-input.gap));

  bool h2_ok = true;
  for (const auto& [w, d] : by_weight) {
    if (w > ceiling || d.h2 == 0) continue;
    h2_ok = false;
    audit.push_back("obstruction: h2 = " + std::to_string(d.h2) + " at weight " +
                    std::to_string(w));
  }
  if (h2_ok)
    audit.push_back("obstructions vanish: h2 = 0 at every data weight <= " +
                    std::to_string(ceiling));

  Freeness freeness = Freeness::kUnknown;
  if (generators.empty()) {
    freeness = Freeness::kCertifiedFree;
    audit.push_back("no generators: the radical is trivial, hence free");
  } else if (gap_ok && h2_ok) {
    freeness = Freeness::kCertifiedFree;
  }

  GradedLiePresentation pres(FreeLieAlgebra::make(GeneratorSpec(std::move(generators))), {},
                             bound);
  return PresentationReport{std::move(pres), freeness, ceiling, std::move(audit)};
}

// The completion input encoding the standard vanishing results for the
// signature: h1 from the dimension tables, h2 = 0 throughout.
inline WeightedCompletionInput motivic_completion_input(const FieldSignature& sig,
                                                        int weight_bound) {
  detail::check_signature(sig);
  detail::check_motivic_bound(weight_bound);
  WeightedCompletionInput input;
  for (int n = 1; 2 * n <= -weight_bound; ++n)
    input.data.push_back({-2 * n, h1_dim(sig, n), 0, true});
  return input;
}

// Closed form for Ext^m(Q, Q(n)) in the category the completion presents:
// the base field at m = n = 0, h1_dim at m = 1 for positive twists, zero
// otherwise. weight_bound fixes the truncation used by cross checks.
inline Int ext_dims(const FieldSignature& sig, int n, int m, int weight_bound) {
  detail::check_signature(sig);
  detail::check_motivic_bound(weight_bound);
  if (m < 0) throw DomainError("cohomological degree must be nonnegative");
  const int mag = n < 0 ? -2 * n : 2 * n;
  if (mag > -weight_bound) throw DomainError("twist weight beyond the truncation bound");
  if (m == 0) return n == 0 ? Int(1) : Int(0);
  if (m == 1 && n > 0) return Int(h1_dim(sig, n));
  return Int(0);
}

// Graded dimensions of the polylogarithm quotient: weight zero contributes
// one, and weight -2n contributes the generator multiplicity, since the
// derived subalgebra of a free Lie algebra spans every non-generator slice.
inline DimensionTable polylog_quotient_dims(const FieldSignature& sig, int weight_bound) {
  detail::check_signature(sig);
  detail::check_motivic_bound(weight_bound);
  DimensionTable out;
  out[0] = 1;
  for (int n = 1; 2 * n <= -weight_bound; ++n) out[-2 * n] = h1_dim(sig, n);
  return out;
}

// Restriction/transfer reduction to a subfield fixed by a finite group of
// order invertible in the coefficients: blocks attached to a nontrivial
// irreducible lose their cohomology, trivial-isotypic blocks pass through.
inline std::vector<IrreducibleCohomologyDatum> subfield_reduction(
    int order_of_g, std::vector<IrreducibleCohomologyDatum> data) {
  if (order_of_g < 1) throw DomainError("group order must be positive");
  for (IrreducibleCohomologyDatum& d : data) {
    if (d.h1 < 0 || d.h2 < 0) throw DomainError("cohomology counts must be nonnegative");
    if (!d.trivial_isotypic) {
      d.h1 = 0;
      d.h2 = 0;
    }
  }
  return data;
}

}  // namespace gradedlie

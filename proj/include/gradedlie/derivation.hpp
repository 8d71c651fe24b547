#pragma once
// Derivations of the rank two free Lie algebra on x, y of weight -2: Leibniz
// application, the derivation bracket, inner derivations and outer dimension
// tables, the Ihara bracket transported from the derivations killing x, and
// generation reports for Galois image candidates.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gradedlie/errors.hpp"
#include "gradedlie/lie_element.hpp"
#include "gradedlie/linalg.hpp"
#include "gradedlie/lyndon.hpp"
#include "gradedlie/parallel.hpp"
#include "gradedlie/subalgebra.hpp"

namespace gradedlie {

// Shared instance of the rank two algebra; its internal caches make sharing
// much cheaper than rebuilding per call site.
inline const std::shared_ptr<const FreeLieAlgebra>& rank_two_algebra() {
  static const std::shared_ptr<const FreeLieAlgebra> alg =
      FreeLieAlgebra::make(GeneratorSpec({{"x", -2}, {"y", -2}}));
  return alg;
}

namespace detail {

inline void check_rank_two(const std::shared_ptr<const FreeLieAlgebra>& alg) {
  if (!alg) throw DomainError("derivations need an algebra to act on");
  const GeneratorSpec& s = alg->spec();
  if (s.size() != 2 || s.at(0).label != "x" || s.at(1).label != "y" || s.at(0).weight != -2 ||
      s.at(1).weight != -2)
    throw DomainError("derivations act on the rank two algebra on x, y of weight -2");
}

}  // namespace detail

// A derivation is determined by its images of x and y, both homogeneous of
// weight (weight - 2); the weight is stored so the zero derivation keeps one.
struct Derivation {
  LieElement image_x;
  LieElement image_y;
  int weight = 0;

  bool is_zero() const { return image_x.is_zero() && image_y.is_zero(); }
  bool operator==(const Derivation&) const = default;
};

inline Derivation derivation_from_images(LieElement dx, LieElement dy) {
  const auto& alg = dx.algebra() ? dx.algebra() : dy.algebra();
  detail::check_rank_two(alg);
  std::optional<int> w;
  if (!dx.is_zero()) {
    w = dx.weight();
    if (!w) throw DomainError("derivation image is not homogeneous");
  }
  if (!dy.is_zero()) {
    const std::optional<int> wy = dy.weight();
    if (!wy) throw DomainError("derivation image is not homogeneous");
    if (w && *w != *wy) throw DomainError("derivation images have different weights");
    w = wy;
  }
  return Derivation{std::move(dx), std::move(dy), w ? *w + 2 : 0};
}

namespace detail {

inline const LieElement& derive_basis(const Derivation& d, const FreeLieAlgebra& alg,
                                      const std::shared_ptr<const FreeLieAlgebra>& handle,
                                      BasisKey key, std::map<BasisKey, LieElement>& memo) {
  const auto hit = memo.find(key);
  if (hit != memo.end()) return hit->second;
  const Word& w = alg.word(key);
  LieElement result;
  if (w.size() == 1) {
    result = w[0] == 0 ? d.image_x : d.image_y;
  } else {
    const std::size_t split = alg.split_of(key);
    const Word left(w.begin(), w.begin() + split);
    const Word right(w.begin() + split, w.end());
    const BasisKey kl = alg.find(left);
    const BasisKey kr = alg.find(right);
    result = bracket(derive_basis(d, alg, handle, kl, memo), LieElement::basis_element(handle, kr)) +
             bracket(LieElement::basis_element(handle, kl), derive_basis(d, alg, handle, kr, memo));
  }
  return memo.emplace(key, std::move(result)).first->second;
}

}  // namespace detail

// Leibniz extension of the generator images to the whole algebra.
inline LieElement apply(const Derivation& d, const LieElement& e) {
  const auto& alg = d.image_x.algebra() ? d.image_x.algebra() : d.image_y.algebra();
  detail::check_rank_two(alg);
  if (e.is_zero()) return LieElement::zero(alg);
  if (!(e.algebra() == alg || e.algebra()->spec() == alg->spec()))
    throw DomainError("element uses a different algebra");
  std::map<BasisKey, LieElement> memo;
  LieElement out = LieElement::zero(alg);
  for (const auto& [key, c] : e.terms())
    out += c * detail::derive_basis(d, *alg, alg, key, memo);
  return out;
}

inline Derivation derivation_bracket(const Derivation& a, const Derivation& b) {
  return Derivation{apply(a, b.image_x) - apply(b, a.image_x),
                    apply(a, b.image_y) - apply(b, a.image_y), a.weight + b.weight};
}

// ad(a): u -> [a, u].
inline Derivation inner(const LieElement& a) {
  detail::check_rank_two(a.algebra());
  if (!a.is_zero() && !a.weight()) throw DomainError("inner derivation needs a homogeneous element");
  const auto& alg = a.algebra();
  return Derivation{bracket(a, LieElement::generator(alg, "x")),
                    bracket(a, LieElement::generator(alg, "y")), a.is_zero() ? 0 : *a.weight()};
}

namespace detail {

// Coordinates of a weight -mag derivation: images of x and y stacked over
// the Lyndon basis of the slice the images land in.
inline Vector derivation_coords(const FreeLieAlgebra& alg, const Derivation& d, int mag) {
  const std::size_t half = alg.dim(mag + 2);
  Vector out(2 * half, Scalar(0));
  for (const auto& [k, c] : d.image_x.terms()) out[k.idx] = c;
  for (const auto& [k, c] : d.image_y.terms()) out[half + k.idx] = c;
  return out;
}

}  // namespace detail

// Derivations of the rank two algebra as a graded ambient for subalgebra
// saturation; slice m holds the derivations of weight -m.
class DerivationAmbient {
 public:
  explicit DerivationAmbient(std::shared_ptr<const FreeLieAlgebra> alg) : alg_(std::move(alg)) {
    detail::check_rank_two(alg_);
  }

  const std::shared_ptr<const FreeLieAlgebra>& algebra() const { return alg_; }
  int sign() const { return -1; }
  std::size_t slice_dim(int mag) const { return 2 * alg_->dim(mag + 2); }

  Vector bracket(int ma, const Vector& a, int mb, const Vector& b) const {
    const Derivation d = derivation_bracket(from_coords(ma, a), from_coords(mb, b));
    return detail::derivation_coords(*alg_, d, ma + mb);
  }

  Derivation from_coords(int mag, const Vector& v) const {
    const std::size_t half = alg_->dim(mag + 2);
    TermMap tx;
    TermMap ty;
    for (std::uint32_t i = 0; i < half; ++i) {
      if (v[i] != 0) tx.emplace(BasisKey{mag + 2, i}, v[i]);
      if (v[half + i] != 0) ty.emplace(BasisKey{mag + 2, i}, v[half + i]);
    }
    return Derivation{LieElement(alg_, std::move(tx)), LieElement(alg_, std::move(ty)), -mag};
  }

  Vector coords(const Derivation& d, int mag) const {
    return detail::derivation_coords(*alg_, d, mag);
  }

 private:
  std::shared_ptr<const FreeLieAlgebra> alg_;
};

// Outer dimension per weight: dim Der_w minus the exact rank of ad at w,
// with a hard audit that ad is injective (the algebra is centerless). The
// weights are independent of each other and are computed in parallel.
inline DimensionTable outder_dims(int weight_bound) {
  if (weight_bound >= 0 || weight_bound % 2 != 0)
    throw DomainError("weight bound must be even and negative");
  const auto& alg = rank_two_algebra();
  std::vector<int> weights;
  for (int w = 0; w >= weight_bound; w -= 2) weights.push_back(w);
  std::vector<Int> outer(weights.size());
  parallel_for_index(weights.size(), [&](std::size_t i) {
    const int mag = -weights[i];
    const std::size_t der = 2 * alg->dim(mag + 2);
    if (mag == 0) {
      outer[i] = Int(der);
      return;
    }
    EchelonSpan span(der);
    for (std::uint32_t j = 0; j < alg->dim(mag); ++j)
      span.insert(detail::derivation_coords(
          *alg, inner(LieElement::basis_element(alg, BasisKey{mag, j})), mag));
    if (span.rank() != alg->dim(mag))
      throw std::logic_error("inner derivations failed the injectivity audit");
    outer[i] = Int(der - span.rank());
  });
  DimensionTable out;
  for (std::size_t i = 0; i < weights.size(); ++i) out[weights[i]] = outer[i];
  return out;
}

// The derivation attached to f: x is killed, y moves by [y, f].
inline Derivation ihara_element(const LieElement& f) {
  detail::check_rank_two(f.algebra());
  if (!f.is_zero() && !f.weight()) throw DomainError("element is not homogeneous");
  const auto& alg = f.algebra();
  return Derivation{LieElement::zero(alg), bracket(LieElement::generator(alg, "y"), f),
                    f.is_zero() ? 0 : *f.weight()};
}

// {f, g} = D_f(g) - D_g(f) + [f, g]; the derivations killing x are closed
// under bracket and [D_f, D_g] = D_{{f,g}} exactly.
inline LieElement ihara_bracket(const LieElement& f, const LieElement& g) {
  const Derivation df = ihara_element(f);
  const Derivation dg = ihara_element(g);
  return apply(df, g) - apply(dg, f) + bracket(f, g);
}

// Depth one stand-in for the weight -2(2m+1) Galois generator: ad(x)^2m (y).
// A model only; any better approximation can be fed to the report directly.
inline LieElement model_sigma(int m) {
  if (m < 1) throw DomainError("model index must be positive");
  const auto& alg = rank_two_algebra();
  const LieElement x = LieElement::generator(alg, "x");
  LieElement f = LieElement::generator(alg, "y");
  for (int i = 0; i < 2 * m; ++i) f = bracket(x, f);
  return f;
}

struct IharaDegree {
  int m = 1;
};

struct IndependenceCertificate {
  int weight = 0;
  std::vector<std::string> witnesses;
};

struct GenerationReport {
  bool modulo_inner = true;
  FreenessReport freeness;
  std::vector<IndependenceCertificate> certificates;
};

// Dimensions of the Lie subalgebra generated by the derivations attached to
// the given elements, inside Der (or Der modulo inner), compared against the
// free bound on the declared degrees. Two independent saturations must agree
// and observed dimensions must never exceed the bound; either failure is a
// hard error. Certificates list nonzero bracket witnesses wherever the bound
// is met.
inline GenerationReport galois_image_report(
    const std::vector<std::pair<LieElement, IharaDegree>>& elements, int weight_bound,
    bool modulo_inner = true) {
  if (elements.empty()) throw DomainError("no elements given");
  if (weight_bound > -2) throw DomainError("weight bound must be at most -2");
  const int bound = -weight_bound;

  struct Gen {
    std::string name;
    Derivation d;
    int mag = 0;
    Vector coords;
  };

  const auto& alg = rank_two_algebra();
  const DerivationAmbient ambient(alg);
  std::vector<Gen> gens;
  std::vector<int> declared;
  std::map<int, int> per_degree;
  int lightest = 0;
  for (const auto& [e, degree] : elements) {
    if (degree.m < 1) throw DomainError("degree must be positive");
    detail::check_rank_two(e.algebra());
    const std::optional<int> w = e.weight();
    if (!w) throw DomainError("element is zero or not homogeneous");
    if (*w != -2 * degree.m)
      throw DomainError("element weight does not match the declared degree");
    const int count = ++per_degree[degree.m];
    std::string name = "f" + std::to_string(degree.m);
    if (count > 1) name += "_" + std::to_string(count);
    const Derivation d = ihara_element(e);
    const int mag = 2 * degree.m;
    Vector coords = ambient.coords(d, mag);
    gens.push_back({std::move(name), d, mag, std::move(coords)});
    declared.push_back(-mag);
    if (lightest == 0 || mag < lightest) lightest = mag;
  }
  if (lightest > bound) throw DomainError("weight bound is lighter than the lightest element");

  struct Kept {
    std::string expr;
    Derivation d;
  };

  DimensionTable observed;
  for (int m = 1; m <= bound; ++m) observed[-m] = 0;
  std::map<int, std::vector<Kept>> kept;
  std::map<int, EchelonSpan> inner_spans;

  for (int m = 2; m <= bound; m += 2) {
    EchelonSpan span(ambient.slice_dim(m));
    std::size_t base = 0;
    if (modulo_inner) {
      for (std::uint32_t i = 0; i < alg->dim(m); ++i)
        span.insert(detail::derivation_coords(
            *alg, inner(LieElement::basis_element(alg, BasisKey{m, i})), m));
      base = span.rank();
      if (base != alg->dim(m))
        throw std::logic_error("inner derivations failed the injectivity audit");
      inner_spans.emplace(m, span);
    }
    std::vector<Kept>& slot = kept[m];
    for (const Gen& g : gens)
      if (g.mag == m && span.insert(g.coords)) slot.push_back({g.name, g.d});
    std::vector<std::pair<const Gen*, const Kept*>> pairs;
    for (const Gen& g : gens) {
      if (g.mag >= m) continue;
      const auto it = kept.find(m - g.mag);
      if (it == kept.end()) continue;
      for (const Kept& k : it->second) pairs.push_back({&g, &k});
    }
    struct Candidate {
      std::string expr;
      Derivation d;
      Vector coords;
    };
    std::vector<Candidate> candidates(pairs.size());
    parallel_for_index(pairs.size(), [&](std::size_t i) {
      const auto& [g, k] = pairs[i];
      Derivation cand = derivation_bracket(g->d, k->d);
      Vector coords = ambient.coords(cand, m);
      candidates[i] = {"{" + g->name + "," + k->expr + "}", std::move(cand), std::move(coords)};
    });
    for (Candidate& c : candidates)
      if (span.insert(std::move(c.coords))) slot.push_back({std::move(c.expr), std::move(c.d)});
    observed[-m] = Int(span.rank() - base);
  }

  // Full pair saturation over the same ambient must land on the same table.
  std::vector<GradedElement> graded;
  for (const Gen& g : gens) graded.push_back({-g.mag, g.coords});
  const SubalgebraResult sub = generated_subalgebra_dims(ambient, graded, weight_bound);
  for (int m = 1; m <= bound; ++m) {
    Int expect(0);
    if (!modulo_inner) {
      expect = sub.dims.at(-m);
    } else if (m % 2 == 0) {
      EchelonSpan span = inner_spans.at(m);
      for (const Vector& row : sub.bases.at(-m)) span.insert(row);
      expect = Int(span.rank() - alg->dim(m));
    }
    if (observed.at(-m) != expect) throw std::logic_error("generated dimension audit failed");
  }

  GenerationReport report;
  report.modulo_inner = modulo_inner;
  report.freeness = free_bound_report(declared, observed);
  for (int m = 2; m <= bound; m += 2) {
    const Int& expected = report.freeness.expected.at(-m);
    if (expected == 0 || observed.at(-m) != expected) continue;
    IndependenceCertificate cert{-m, {}};
    for (const Kept& k : kept[m]) cert.witnesses.push_back(k.expr);
    report.certificates.push_back(std::move(cert));
  }
  return report;
}

}  // namespace gradedlie

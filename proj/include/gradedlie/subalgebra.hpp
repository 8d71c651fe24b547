#pragma once
// Dimensions of generated Lie subalgebras inside a generic graded ambient
// space, by breadth-first weight saturation with exact rank bookkeeping, and
// comparison of observed dimensions against the free Lie (Witt) bound.

#include <concepts>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gradedlie/errors.hpp"
#include "gradedlie/lie_element.hpp"
#include "gradedlie/linalg.hpp"
#include "gradedlie/witt.hpp"

namespace gradedlie {

// An ambient graded Lie space: per-magnitude slice dimensions and a weight
// additive bilinear bracket on slice coordinates.
template <typename A>
concept GradedAmbient = requires(const A& a, int mag, const Vector& v) {
  { a.sign() } -> std::convertible_to<int>;
  { a.slice_dim(mag) } -> std::convertible_to<std::size_t>;
  { a.bracket(mag, v, mag, v) } -> std::convertible_to<Vector>;
};

struct GradedElement {
  int weight = 0;  // signed
  Vector coords;
};

struct SubalgebraResult {
  DimensionTable dims;                      // signed keys, every magnitude up to the bound
  std::map<int, std::vector<Vector>> bases;  // canonical echelon bases per signed weight
};

template <GradedAmbient A>
SubalgebraResult generated_subalgebra_dims(const A& ambient,
                                           const std::vector<GradedElement>& elements,
                                           int weight_bound) {
  if (weight_bound == 0) throw DomainError("weight bound must be nonzero");
  const int sign = ambient.sign();
  if ((weight_bound > 0) != (sign > 0))
    throw DomainError("weight bound sign does not match the ambient grading");
  const int bound = weight_bound * sign;

  std::map<int, EchelonSpan> spans;
  for (int m = 1; m <= bound; ++m) spans.emplace(m, EchelonSpan(ambient.slice_dim(m)));

  for (const GradedElement& e : elements) {
    if (e.weight == 0 || (e.weight > 0) != (sign > 0))
      throw DomainError("element weight sign does not match the ambient grading");
    const int mag = e.weight * sign;
    if (mag > bound) continue;
    if (e.coords.size() != ambient.slice_dim(mag))
      throw DomainError("element coordinate size does not match its weight slice");
    spans.at(mag).insert(e.coords);
  }

  // Lighter spans are final before they feed heavier ones, so each slice of
  // the generated subalgebra is saturated in one pass.
  for (int m = 2; m <= bound; ++m) {
    EchelonSpan& target = spans.at(m);
    for (int m1 = 1; m1 * 2 <= m; ++m1) {
      const int m2 = m - m1;
      const auto& rows1 = spans.at(m1).rows();
      const auto& rows2 = spans.at(m2).rows();
      for (std::size_t i = 0; i < rows1.size(); ++i) {
        const std::size_t jstart = (m1 == m2) ? i + 1 : 0;
        for (std::size_t j = jstart; j < rows2.size(); ++j)
          target.insert(ambient.bracket(m1, rows1[i].second, m2, rows2[j].second));
      }
    }
  }

  SubalgebraResult result;
  for (int m = 1; m <= bound; ++m) {
    result.dims[sign * m] = spans.at(m).rank();
    std::vector<Vector>& basis = result.bases[sign * m];
    for (const auto& [pivot, row] : spans.at(m).rows()) basis.push_back(row);
  }
  return result;
}

// Free Lie algebra as an ambient, coordinates over the Lyndon slices.
class FreeLieAmbient {
 public:
  explicit FreeLieAmbient(std::shared_ptr<const FreeLieAlgebra> alg) : alg_(std::move(alg)) {}

  const std::shared_ptr<const FreeLieAlgebra>& algebra() const { return alg_; }
  int sign() const { return alg_->sign(); }
  std::size_t slice_dim(int mag) const { return alg_->dim(mag); }

  Vector bracket(int ma, const Vector& a, int mb, const Vector& b) const {
    Vector out(alg_->dim(ma + mb), Scalar(0));
    for (std::uint32_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::uint32_t j = 0; j < b.size(); ++j) {
        if (b[j] == 0) continue;
        const Scalar scale = a[i] * b[j];
        for (const auto& [k, c] : alg_->pair_bracket(BasisKey{ma, i}, BasisKey{mb, j}))
          out[k.idx] += scale * c;
      }
    }
    return out;
  }

  GradedElement to_graded(const LieElement& e) const {
    const auto w = e.weight();
    if (!w) throw DomainError("element is zero or not homogeneous");
    const int mag = *w * sign();
    Vector coords(alg_->dim(mag), Scalar(0));
    for (const auto& [k, c] : e.terms()) coords[k.idx] = c;
    return GradedElement{*w, std::move(coords)};
  }

  LieElement from_coords(int mag, const Vector& coords) const {
    TermMap terms;
    for (std::uint32_t i = 0; i < coords.size(); ++i)
      if (coords[i] != 0) terms.emplace(BasisKey{mag, i}, coords[i]);
    return LieElement(alg_, std::move(terms));
  }

 private:
  std::shared_ptr<const FreeLieAlgebra> alg_;
};

inline SubalgebraResult generated_subalgebra_dims(const std::vector<LieElement>& elements,
                                                  int weight_bound) {
  if (elements.empty()) throw DomainError("no elements given");
  const auto& alg = elements.front().algebra();
  if (!alg) throw DomainError("zero elements do not determine an algebra");
  const FreeLieAmbient ambient(alg);
  std::vector<GradedElement> graded;
  for (const LieElement& e : elements) graded.push_back(ambient.to_graded(e));
  return generated_subalgebra_dims(ambient, graded, weight_bound);
}

enum class FreenessVerdict { kFreeSoFar, kRelationAtWeight };

struct FreenessReport {
  DimensionTable expected;  // Witt bound on the declared element weights
  DimensionTable observed;
  FreenessVerdict verdict = FreenessVerdict::kFreeSoFar;
  std::optional<int> relation_weight;  // first signed weight with observed < expected

  std::string verdict_string() const {
    if (verdict == FreenessVerdict::kFreeSoFar) return "FREE-SO-FAR";
    return "RELATION-AT-WEIGHT " + std::to_string(*relation_weight);
  }
};

inline FreenessReport free_bound_report(const std::vector<int>& element_weights,
                                        const DimensionTable& observed) {
  if (element_weights.empty()) throw DomainError("no element weights given");
  const int sign = element_weights.front() > 0 ? 1 : -1;
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < element_weights.size(); ++i)
    gens.push_back({"g" + std::to_string(i + 1), element_weights[i]});
  int bound_mag = 0;
  for (const auto& [w, d] : observed) {
    const int mag = w < 0 ? -w : w;
    if ((w > 0) != (sign > 0)) throw DomainError("observed weights do not match element weight sign");
    if (mag > bound_mag) bound_mag = mag;
  }
  if (bound_mag == 0) throw DomainError("observed table is empty");

  FreenessReport report;
  report.expected = witt_dims(GeneratorSpec(std::move(gens)), sign * bound_mag);
  for (int m = 1; m <= bound_mag; ++m) {
    const int w = sign * m;
    const auto it = observed.find(w);
    report.observed[w] = it == observed.end() ? Int(0) : it->second;
    if (report.observed[w] > report.expected[w])
      throw DomainError("observed dimension exceeds the free bound at weight " + std::to_string(w));
    if (!report.relation_weight && report.observed[w] < report.expected[w]) {
      report.verdict = FreenessVerdict::kRelationAtWeight;
      report.relation_weight = w;
    }
  }
  return report;
}

}  // namespace gradedlie

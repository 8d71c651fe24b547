#pragma once
// Presentations of weight graded Lie algebras: a free algebra on weighted
// generators, homogeneous relations expressed in its Lyndon basis, and a
// signed weight bound for truncated computations.

#include <memory>
#include <utility>
#include <vector>

#include "gradedlie/errors.hpp"
#include "gradedlie/lie_element.hpp"
#include "gradedlie/lyndon.hpp"
#include "gradedlie/witt.hpp"

namespace gradedlie {

class GradedLiePresentation {
 public:
  GradedLiePresentation(std::shared_ptr<const FreeLieAlgebra> algebra,
                        std::vector<LieElement> relations, int weight_bound)
      : alg_(std::move(algebra)), relations_(std::move(relations)), weight_bound_(weight_bound) {
    if (!alg_) throw DomainError("presentation requires an algebra");
    bound_ = detail::checked_magnitude_bound(alg_->spec(), weight_bound_);
    for (const LieElement& r : relations_) {
      if (r.is_zero() || !r.is_homogeneous())
        throw DomainError("relation is zero or not homogeneous");
      if (!(r.algebra() == alg_ || r.algebra()->spec() == alg_->spec()))
        throw DomainError("relation uses generators from a different algebra");
      const int mag = r.terms().begin()->first.mag;
      if (mag < 2 * alg_->spec().min_magnitude())
        throw DomainError("relation is lighter than twice the lightest generator");
    }
  }

  const std::shared_ptr<const FreeLieAlgebra>& algebra() const { return alg_; }
  const GeneratorSpec& spec() const { return alg_->spec(); }
  const std::vector<LieElement>& relations() const { return relations_; }
  bool is_free() const { return relations_.empty(); }

  int weight_bound() const { return weight_bound_; }
  int bound_magnitude() const { return bound_; }
  int sign() const { return spec().empty() ? (weight_bound_ > 0 ? 1 : -1) : alg_->sign(); }

 private:
  std::shared_ptr<const FreeLieAlgebra> alg_;
  std::vector<LieElement> relations_;
  int weight_bound_;
  int bound_ = 0;
};

}  // namespace gradedlie

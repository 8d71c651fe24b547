#pragma once
// Weight graded modules over quotient algebras and the degree one
// extension/cocycle correspondence: an extension 0 -> A -> E -> K -> 0 with
// trivial rank one quotient determines the cocycle f(u) = u.e for a lift e of
// 1, a cocycle determines the extension u.(a, k) = (u.a + k f(u), 0), and the
// extension splits exactly when f(u) = u.a is solvable.

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gradedlie/errors.hpp"
#include "gradedlie/linalg.hpp"
#include "gradedlie/lyndon.hpp"
#include "gradedlie/quotient.hpp"

namespace gradedlie {

using Matrix = std::vector<Vector>;  // dense rows

namespace detail {

inline Matrix zero_matrix(std::size_t n) { return Matrix(n, Vector(n, Scalar(0))); }

inline Matrix commutator(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix out = zero_matrix(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
      if (b[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) out[i][j] -= b[i][k] * a[k][j];
    }
  return out;
}

inline bool matrix_is_zero(const Matrix& m) {
  for (const Vector& row : m)
    for (const Scalar& v : row)
      if (v != 0) return false;
  return true;
}

inline Vector matrix_apply(const Matrix& m, const Vector& v) {
  Vector out(m.size(), Scalar(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (m[i][j] != 0 && v[j] != 0) out[i] += m[i][j] * v[j];
  return out;
}

}  // namespace detail

// A finite dimensional weight graded module over a quotient algebra, given by
// one action matrix per generator. Matrices must respect the grading and the
// saturated ideal of the quotient must act by zero; the action of every
// Lyndon basis element up to the bound is precomputed by commutators.
class GradedModule {
 public:
  GradedModule(std::shared_ptr<const GradedQuotientAlgebra> algebra, std::vector<int> weights,
               std::vector<Matrix> generator_actions)
      : alg_(std::move(algebra)),
        weights_(std::move(weights)),
        gen_actions_(std::move(generator_actions)) {
    if (!alg_) throw DomainError("module requires an algebra");
    const GeneratorSpec& s = alg_->spec();
    if (gen_actions_.size() != s.size())
      throw DomainError("one action matrix per generator required");
    for (std::size_t g = 0; g < gen_actions_.size(); ++g) validate_generator(g);
    build_actions();
    validate_ideal();
  }

  const std::shared_ptr<const GradedQuotientAlgebra>& algebra() const { return alg_; }
  std::size_t dim() const { return weights_.size(); }
  const std::vector<int>& weights() const { return weights_; }
  const Matrix& generator_action(std::size_t g) const { return gen_actions_.at(g); }

  const Matrix& action(BasisKey key) const {
    const auto it = actions_.find(key);
    if (it == actions_.end())
      throw DomainError("weight magnitude outside the truncation bound");
    return it->second;
  }

  const Matrix& coset_action(int mag, std::size_t i) const {
    return action(alg_->coset_key(mag, i));
  }

  bool operator==(const GradedModule& other) const {
    return alg_ == other.alg_ && weights_ == other.weights_ && gen_actions_ == other.gen_actions_;
  }

 private:
  void validate_generator(std::size_t g) {
    const Matrix& m = gen_actions_[g];
    const std::size_t n = weights_.size();
    if (m.size() != n) throw DomainError("action matrix size disagrees with the module");
    const int gw = alg_->spec().at(g).weight;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i].size() != n) throw DomainError("action matrix size disagrees with the module");
      for (std::size_t j = 0; j < n; ++j)
        if (m[i][j] != 0 && weights_[i] != weights_[j] + gw)
          throw DomainError("action matrix violates the weight grading");
    }
  }

  void build_actions() {
    const auto& free = *alg_->algebra();
    for (int m = 1; m <= alg_->bound_magnitude(); ++m) {
      const auto& words = free.words(m);
      for (std::uint32_t i = 0; i < words.size(); ++i) {
        const BasisKey key{m, i};
        if (words[i].size() == 1) {
          actions_.emplace(key, gen_actions_.at(words[i][0]));
          continue;
        }
        const std::size_t split = free.split_of(key);
        const Word left(words[i].begin(), words[i].begin() + split);
        const Word right(words[i].begin() + split, words[i].end());
        actions_.emplace(key, detail::commutator(actions_.at(free.find(left)),
                                                 actions_.at(free.find(right))));
      }
    }
  }

  void validate_ideal() {
    for (int m = 1; m <= alg_->bound_magnitude(); ++m) {
      for (const auto& [pivot, row] : alg_->ideal(m).rows()) {
        Matrix acc = detail::zero_matrix(weights_.size());
        for (std::size_t j = 0; j < row.size(); ++j) {
          if (row[j] == 0) continue;
          const Matrix& b = actions_.at(BasisKey{m, static_cast<std::uint32_t>(j)});
          for (std::size_t r = 0; r < acc.size(); ++r)
            for (std::size_t c = 0; c < acc.size(); ++c) acc[r][c] += row[j] * b[r][c];
        }
        if (!detail::matrix_is_zero(acc))
          throw DomainError("action matrices violate the defining relations");
      }
    }
  }

  std::shared_ptr<const GradedQuotientAlgebra> alg_;
  std::vector<int> weights_;
  std::vector<Matrix> gen_actions_;
  std::map<BasisKey, Matrix> actions_;
};

// Extension 0 -> A -> E -> K -> 0 with K the trivial rank one module; the
// total space carries basis (A basis, e) with e of weight zero.
class ModuleExtensionDatum {
 public:
  ModuleExtensionDatum(GradedModule sub, std::vector<Matrix> extension_actions)
      : sub_(std::move(sub)), total_(make_total(sub_, std::move(extension_actions))) {
    const std::size_t d = sub_.dim();
    for (std::size_t g = 0; g < sub_.algebra()->spec().size(); ++g) {
      const Matrix& m = total_.generator_action(g);
      for (std::size_t j = 0; j <= d; ++j)
        if (m[d][j] != 0) throw DomainError("extension does not kill the quotient line");
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          if (m[i][j] != sub_.generator_action(g)[i][j])
            throw DomainError("extension does not restrict to the submodule action");
    }
  }

  const GradedModule& sub() const { return sub_; }
  const GradedModule& total() const { return total_; }

 private:
  static GradedModule make_total(const GradedModule& sub, std::vector<Matrix> actions) {
    std::vector<int> weights = sub.weights();
    weights.push_back(0);
    return GradedModule(sub.algebra(), std::move(weights), std::move(actions));
  }

  GradedModule sub_;
  GradedModule total_;
};

// Degree one cochain on the quotient with values in the module, given per
// weight slice on the coset basis; construction checks the grading and the
// cocycle identity f([u, v]) = u.f(v) - v.f(u) for all pairs within bound.
class Cocycle {
 public:
  Cocycle(GradedModule module, std::map<int, std::vector<Vector>> values)
      : module_(std::move(module)), values_(std::move(values)) {
    const auto& q = *module_.algebra();
    for (const auto& [m, slot] : values_)
      if (m < 1 || m > q.bound_magnitude())
        throw DomainError("cocycle weight magnitude outside the truncation bound");
    for (int m = 1; m <= q.bound_magnitude(); ++m) {
      auto& slot = values_[m];
      if (slot.empty()) slot.assign(q.coset_dim(m), Vector(module_.dim(), Scalar(0)));
      if (slot.size() != q.coset_dim(m))
        throw DomainError("cocycle value count disagrees with the coset basis");
      for (std::size_t i = 0; i < slot.size(); ++i) {
        if (slot[i].size() != module_.dim())
          throw DomainError("cocycle value size disagrees with the module");
        for (std::size_t r = 0; r < slot[i].size(); ++r)
          if (slot[i][r] != 0 && module_.weights()[r] != q.sign() * m)
            throw DomainError("cocycle value violates the weight grading");
      }
    }
    verify_identity();
  }

  const GradedModule& module() const { return module_; }

  const Vector& value(int mag, std::size_t i) const { return values_.at(mag).at(i); }

  // Linear extension to arbitrary coset coordinates of one weight slice.
  Vector evaluate(int mag, const Vector& coset_coords) const {
    const auto& slot = values_.at(mag);
    if (coset_coords.size() != slot.size())
      throw DomainError("coset coordinate size mismatch");
    Vector out(module_.dim(), Scalar(0));
    for (std::size_t i = 0; i < slot.size(); ++i)
      if (coset_coords[i] != 0)
        for (std::size_t r = 0; r < out.size(); ++r) out[r] += coset_coords[i] * slot[i][r];
    return out;
  }

  bool is_zero() const {
    for (const auto& [m, slot] : values_)
      for (const Vector& v : slot)
        for (const Scalar& c : v)
          if (c != 0) return false;
    return true;
  }

 private:
  void verify_identity() const {
    const auto& q = *module_.algebra();
    for (int m1 = 1; m1 <= q.bound_magnitude(); ++m1) {
      for (int m2 = m1; m1 + m2 <= q.bound_magnitude(); ++m2) {
        for (std::size_t i1 = 0; i1 < q.coset_dim(m1); ++i1) {
          for (std::size_t i2 = (m1 == m2 ? i1 + 1 : 0); i2 < q.coset_dim(m2); ++i2) {
            Vector lhs(module_.dim(), Scalar(0));
            for (const auto& [k, c] : q.coset_bracket(m1, i1, m2, i2)) {
              const Vector& fv = value(m1 + m2, k);
              for (std::size_t r = 0; r < lhs.size(); ++r) lhs[r] += c * fv[r];
            }
            Vector rhs = detail::matrix_apply(module_.coset_action(m1, i1), value(m2, i2));
            const Vector vu = detail::matrix_apply(module_.coset_action(m2, i2), value(m1, i1));
            for (std::size_t r = 0; r < rhs.size(); ++r) rhs[r] -= vu[r];
            if (lhs != rhs) throw DomainError("cocycle identity violated");
          }
        }
      }
    }
  }

  GradedModule module_;
  std::map<int, std::vector<Vector>> values_;
};

// Cocycle of the lift e + shift; the default lift is the distinguished basis
// vector e, and shifting the lift by a in A adds the coboundary u -> u.a.
inline Cocycle cocycle_from_extension(const ModuleExtensionDatum& ext, const Vector& lift_shift) {
  const auto& q = *ext.sub().algebra();
  const std::size_t d = ext.sub().dim();
  if (lift_shift.size() != d) throw DomainError("lift shift size disagrees with the module");
  std::map<int, std::vector<Vector>> values;
  for (int m = 1; m <= q.bound_magnitude(); ++m) {
    auto& slot = values[m];
    for (std::size_t i = 0; i < q.coset_dim(m); ++i) {
      const Matrix& me = ext.total().coset_action(m, i);
      Vector f(d, Scalar(0));
      for (std::size_t r = 0; r < d; ++r) f[r] = me[r][d];
      const Vector shift = detail::matrix_apply(ext.sub().coset_action(m, i), lift_shift);
      for (std::size_t r = 0; r < d; ++r) f[r] += shift[r];
      slot.push_back(std::move(f));
    }
  }
  return Cocycle(ext.sub(), std::move(values));
}

inline Cocycle cocycle_from_extension(const ModuleExtensionDatum& ext) {
  return cocycle_from_extension(ext, Vector(ext.sub().dim(), Scalar(0)));
}

inline ModuleExtensionDatum extension_from_cocycle(const GradedModule& a, const Cocycle& f) {
  if (!(f.module() == a)) throw DomainError("cocycle is not valued in the given module");
  const auto& q = *a.algebra();
  const auto& free = *q.algebra();
  const std::size_t d = a.dim();
  std::vector<Matrix> actions;
  for (std::size_t g = 0; g < q.spec().size(); ++g) {
    Matrix m(d + 1, Vector(d + 1, Scalar(0)));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m[i][j] = a.generator_action(g)[i][j];
    const int mag = q.spec().magnitude(g);
    const BasisKey key = free.find(Word{static_cast<Letter>(g)});
    Vector unit(free.dim(mag), Scalar(0));
    unit[key.idx] = 1;
    const Vector fg = f.evaluate(mag, q.reduce(mag, std::move(unit)));
    for (std::size_t i = 0; i < d; ++i) m[i][d] = fg[i];
    actions.push_back(std::move(m));
  }
  return ModuleExtensionDatum(a, std::move(actions));
}

// The extension splits exactly when its cocycle is a coboundary, a single
// exact linear solve f(u) = u.a over all coset basis elements u.
inline bool is_trivial_extension(const ModuleExtensionDatum& ext) {
  const Cocycle f = cocycle_from_extension(ext);
  const auto& q = *ext.sub().algebra();
  const std::size_t d = ext.sub().dim();
  std::size_t rows = 0;
  for (int m = 1; m <= q.bound_magnitude(); ++m) rows += d * q.coset_dim(m);
  SparseMatrix system(rows, d);
  Vector rhs(rows, Scalar(0));
  std::size_t at = 0;
  for (int m = 1; m <= q.bound_magnitude(); ++m) {
    for (std::size_t i = 0; i < q.coset_dim(m); ++i) {
      const Matrix& act = ext.sub().coset_action(m, i);
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) system.set(at, c, act[r][c]);
        rhs[at] = f.value(m, i)[r];
        ++at;
      }
    }
  }
  return solve(system, rhs).has_value();
}

}  // namespace gradedlie

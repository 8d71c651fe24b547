#pragma once
// Finite weight truncations of presented graded Lie algebras. The graded
// ideal generated by the relations is saturated weight by weight; bracketing
// with the generators alone suffices because iterated adjoints of generators
// span the adjoint action of the whole algebra. Cosets of Lyndon basis
// elements form the quotient basis, and the structure constants are checked
// antisymmetric and Jacobi consistent on construction.

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gradedlie/errors.hpp"
#include "gradedlie/lie_element.hpp"
#include "gradedlie/linalg.hpp"
#include "gradedlie/lyndon.hpp"
#include "gradedlie/presentation.hpp"
#include "gradedlie/witt.hpp"

namespace gradedlie {

class GradedQuotientAlgebra;

std::shared_ptr<const GradedQuotientAlgebra> build_quotient(const GradedLiePresentation& pres);

class GradedQuotientAlgebra {
 public:
  // Sparse vector in coset coordinates of one weight slice.
  using CosetVec = std::map<std::uint32_t, Scalar>;

  const std::shared_ptr<const FreeLieAlgebra>& algebra() const { return alg_; }
  const GeneratorSpec& spec() const { return alg_->spec(); }
  int weight_bound() const { return weight_bound_; }
  int bound_magnitude() const { return bound_; }
  int sign() const { return spec().empty() ? (weight_bound_ > 0 ? 1 : -1) : alg_->sign(); }

  std::size_t coset_dim(int mag) const { return slice(mag).cosets.size(); }

  std::size_t total_dim() const {
    std::size_t n = 0;
    for (const auto& [m, s] : slices_) n += s.cosets.size();
    return n;
  }

  DimensionTable dims() const {
    DimensionTable t;
    for (const auto& [m, s] : slices_) t[sign() * m] = Int(s.cosets.size());
    return t;
  }

  DimensionTable ideal_dims() const {
    DimensionTable t;
    for (const auto& [m, s] : slices_) t[sign() * m] = Int(s.ideal.rank());
    return t;
  }

  BasisKey coset_key(int mag, std::size_t i) const {
    return BasisKey{mag, slice(mag).cosets.at(i)};
  }

  // Echelon basis of the saturated ideal slice.
  const EchelonSpan& ideal(int mag) const { return slice(mag).ideal; }

  LieElement coset_representative(int mag, std::size_t i) const {
    return LieElement::basis_element(alg_, coset_key(mag, i));
  }

  // Coset coordinates of a dense vector over the free Lyndon slice.
  Vector reduce(int mag, Vector free_coords) const {
    const Slice& s = slice(mag);
    free_coords = s.ideal.reduce(std::move(free_coords));
    Vector out;
    out.reserve(s.cosets.size());
    for (std::uint32_t c : s.cosets) out.push_back(free_coords[c]);
    return out;
  }

  Vector coset_coordinates(const LieElement& e) const {
    if (e.is_zero() || !e.is_homogeneous())
      throw DomainError("element is zero or not homogeneous");
    if (!(e.algebra() == alg_ || e.algebra()->spec() == alg_->spec()))
      throw DomainError("element belongs to a different algebra");
    const int mag = e.terms().begin()->first.mag;
    if (mag > bound_) throw DomainError("element weight exceeds the truncation bound");
    return reduce(mag, dense_of(mag, e.terms()));
  }

  LieElement lift(int mag, const Vector& coset_coords) const {
    const Slice& s = slice(mag);
    if (coset_coords.size() != s.cosets.size())
      throw DomainError("coset coordinate size mismatch");
    LieElement out = LieElement::zero(alg_);
    for (std::size_t i = 0; i < coset_coords.size(); ++i)
      out += coset_coords[i] * coset_representative(mag, i);
    return out;
  }

  // Bracket of two coset basis elements in coset coordinates of the target
  // slice; weights must stay within the truncation bound.
  CosetVec coset_bracket(int m1, std::size_t i1, int m2, std::size_t i2) const {
    if (m1 < 1 || m2 < 1 || m1 + m2 > bound_)
      throw DomainError("bracket weight exceeds the truncation bound");
    const bool flip = m2 < m1 || (m1 == m2 && i2 < i1);
    if (flip) {
      std::swap(m1, m2);
      std::swap(i1, i2);
    }
    if (m1 == m2 && i1 == i2) return {};
    const auto& cell = table_.at({m1, m2});
    CosetVec v = cell.at(i1 * coset_dim(m2) + i2);
    if (flip)
      for (auto& [k, c] : v) c = -c;
    return v;
  }

 private:
  struct Slice {
    EchelonSpan ideal;
    std::vector<std::uint32_t> cosets;
  };

  friend std::shared_ptr<const GradedQuotientAlgebra> build_quotient(
      const GradedLiePresentation& pres);

  explicit GradedQuotientAlgebra(const GradedLiePresentation& pres)
      : alg_(pres.algebra()), weight_bound_(pres.weight_bound()), bound_(pres.bound_magnitude()) {
    for (int m = 1; m <= bound_; ++m)
      slices_.emplace(m, Slice{EchelonSpan(alg_->dim(m)), {}});
    for (const LieElement& r : pres.relations()) {
      const int mag = r.terms().begin()->first.mag;
      if (mag > bound_) continue;
      slices_.at(mag).ideal.insert(dense_of(mag, r.terms()));
    }
    saturate();
    build_table();
    verify_jacobi();
  }

  const Slice& slice(int mag) const {
    const auto it = slices_.find(mag);
    if (it == slices_.end()) throw DomainError("weight magnitude outside the truncation bound");
    return it->second;
  }

  Vector dense_of(int mag, const TermMap& terms) const {
    Vector v(alg_->dim(mag), Scalar(0));
    for (const auto& [k, c] : terms) {
      if (k.mag != mag) throw std::logic_error("term weight disagrees with the slice");
      v[k.idx] = c;
    }
    return v;
  }

  void saturate() {
    for (int m = 1; m <= bound_; ++m) {
      Slice& s = slices_.at(m);
      for (std::size_t g = 0; g < spec().size(); ++g) {
        const int k = m - spec().magnitude(g);
        if (k < 1) continue;
        const Slice& src = slices_.at(k);
        if (src.ideal.rank() == 0) continue;
        const BasisKey gkey = alg_->find(Word{static_cast<Letter>(g)});
        for (const auto& [pivot, row] : src.ideal.rows()) {
          TermMap acc;
          for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0)
              detail::accumulate(
                  acc, alg_->pair_bracket(gkey, BasisKey{k, static_cast<std::uint32_t>(j)}),
                  row[j]);
          s.ideal.insert(dense_of(m, acc));
        }
      }
      std::vector<bool> is_pivot(s.ideal.dimension(), false);
      for (const auto& [pivot, row] : s.ideal.rows()) is_pivot[pivot] = true;
      for (std::uint32_t c = 0; c < is_pivot.size(); ++c)
        if (!is_pivot[c]) s.cosets.push_back(c);
    }
  }

  CosetVec sparse_reduce(int mag, const TermMap& terms) const {
    const Vector coords = reduce(mag, dense_of(mag, terms));
    CosetVec out;
    for (std::uint32_t i = 0; i < coords.size(); ++i)
      if (coords[i] != 0) out.emplace(i, coords[i]);
    return out;
  }

  void build_table() {
    for (int m1 = 1; m1 + m1 <= bound_; ++m1) {
      for (int m2 = m1; m1 + m2 <= bound_; ++m2) {
        const std::size_t n1 = coset_dim(m1);
        const std::size_t n2 = coset_dim(m2);
        std::vector<CosetVec> cell(n1 * n2);
        for (std::size_t i1 = 0; i1 < n1; ++i1) {
          for (std::size_t i2 = (m1 == m2 ? i1 + 1 : 0); i2 < n2; ++i2) {
            const BasisKey a = coset_key(m1, i1);
            const BasisKey b = coset_key(m2, i2);
            CosetVec forward = sparse_reduce(m1 + m2, alg_->pair_bracket(a, b));
            CosetVec backward = sparse_reduce(m1 + m2, alg_->pair_bracket(b, a));
            for (auto& [k, c] : backward) c = -c;
            if (forward != backward)
              throw std::logic_error("quotient structure constants are not antisymmetric");
            cell[i1 * n2 + i2] = std::move(forward);
          }
        }
        table_.emplace(std::make_pair(m1, m2), std::move(cell));
      }
    }
  }

  void add_scaled_bracket(CosetVec& acc, int mag_uv, const CosetVec& uv, int m3,
                          std::size_t i3) const {
    for (const auto& [k, c] : uv) {
      for (const auto& [t, d] : coset_bracket(mag_uv, k, m3, i3)) {
        auto it = acc.find(t);
        if (it == acc.end()) {
          acc.emplace(t, c * d);
        } else {
          it->second += c * d;
          if (it->second == 0) acc.erase(it);
        }
      }
    }
  }

  void verify_jacobi() const {
    std::vector<std::pair<int, std::size_t>> basis;
    for (const auto& [m, s] : slices_)
      for (std::size_t i = 0; i < s.cosets.size(); ++i) basis.push_back({m, i});
    for (std::size_t a = 0; a < basis.size(); ++a) {
      for (std::size_t b = a + 1; b < basis.size(); ++b) {
        if (basis[a].first + basis[b].first >= bound_) break;
        for (std::size_t c = b + 1; c < basis.size(); ++c) {
          const auto [ma, ia] = basis[a];
          const auto [mb, ib] = basis[b];
          const auto [mc, ic] = basis[c];
          if (ma + mb + mc > bound_) break;
          CosetVec acc;
          add_scaled_bracket(acc, ma + mb, coset_bracket(ma, ia, mb, ib), mc, ic);
          add_scaled_bracket(acc, mb + mc, coset_bracket(mb, ib, mc, ic), ma, ia);
          add_scaled_bracket(acc, mc + ma, coset_bracket(mc, ic, ma, ia), mb, ib);
          if (!acc.empty())
            throw std::logic_error("quotient structure constants violate the Jacobi identity");
        }
      }
    }
  }

  std::shared_ptr<const FreeLieAlgebra> alg_;
  int weight_bound_;
  int bound_;
  std::map<int, Slice> slices_;
  std::map<std::pair<int, int>, std::vector<CosetVec>> table_;
};

inline std::shared_ptr<const GradedQuotientAlgebra> build_quotient(
    const GradedLiePresentation& pres) {
  return std::shared_ptr<const GradedQuotientAlgebra>(new GradedQuotientAlgebra(pres));
}

}  // namespace gradedlie

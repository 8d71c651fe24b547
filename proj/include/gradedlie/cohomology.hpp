#pragma once
// Chevalley-Eilenberg cohomology of presented graded Lie algebras with trivial
// coefficients, computed exactly one weight slice at a time. Cochain slices
// are dual to wedge powers of the quotient basis, so the differential is the
// transpose of the wedge boundary and dim H^m = dim C^m - rank d_m - rank
// d_{m+1}. Cochain weights carry the sign opposite to the algebra weights;
// report tables are keyed by weight magnitude with the sign kept as one flag.
// The degree one convention is (df)(u, v) = -f([u, v]).

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gradedlie/errors.hpp"
#include "gradedlie/linalg.hpp"
#include "gradedlie/presentation.hpp"
#include "gradedlie/quotient.hpp"
#include "gradedlie/witt.hpp"

namespace gradedlie {

struct CohomologyReport {
  int max_degree = 0;
  int cochain_sign = 1;
  int bound_magnitude = 0;
  std::map<int, DimensionTable> h;        // degree -> dims keyed by weight magnitude
  std::map<int, DimensionTable> cochain;  // degree -> cochain dims, same keys

  Int h_dim(int degree, int magnitude) const { return lookup(h, degree, magnitude); }
  Int cochain_dim(int degree, int magnitude) const { return lookup(cochain, degree, magnitude); }

 private:
  Int lookup(const std::map<int, DimensionTable>& tables, int degree, int magnitude) const {
    const auto it = tables.find(degree);
    if (it == tables.end()) throw DomainError("unsupported degree");
    const auto jt = it->second.find(magnitude);
    if (jt == it->second.end()) throw DomainError("weight magnitude outside the truncation bound");
    return jt->second;
  }
};

namespace detail {

// One weight slice of the full wedge complex of a quotient algebra: basis
// tuples per degree, boundary columns, boundary ranks and d^2 = 0 audit.
class WedgeSlice {
 public:
  WedgeSlice(const GradedQuotientAlgebra& q, const std::vector<int>& gmag,
             const std::vector<std::uint32_t>& gidx, const std::vector<std::size_t>& offset,
             int magnitude)
      : q_(q), gmag_(gmag), gidx_(gidx), offset_(offset) {
    std::vector<std::uint32_t> stack;
    enumerate(0, magnitude, stack);
    build_boundaries();
  }

  std::size_t degrees() const { return wedges_.size(); }

  std::size_t cochain_dim(std::size_t m) const {
    return m < wedges_.size() ? wedges_[m].size() : 0;
  }

  // Rank of the wedge boundary from degree m to degree m - 1.
  std::size_t boundary_rank(std::size_t m) const {
    return m < ranks_.size() ? ranks_[m] : 0;
  }

  std::size_t h_dim(std::size_t m) const {
    const std::size_t c = cochain_dim(m);
    const std::size_t cut = boundary_rank(m) + boundary_rank(m + 1);
    if (cut > c) throw std::logic_error("negative cohomology dimension");
    return c - cut;
  }

 private:
  using Column = std::map<std::size_t, Scalar>;

  void enumerate(std::size_t start, int mag_left, std::vector<std::uint32_t>& stack) {
    if (mag_left == 0) {
      if (wedges_.size() <= stack.size()) wedges_.resize(stack.size() + 1);
      wedge_index_[stack] = wedges_[stack.size()].size();
      wedges_[stack.size()].push_back(stack);
      return;
    }
    for (std::size_t i = start; i < gmag_.size(); ++i) {
      if (gmag_[i] > mag_left) break;
      stack.push_back(static_cast<std::uint32_t>(i));
      enumerate(i + 1, mag_left - gmag_[i], stack);
      stack.pop_back();
    }
  }

  void build_boundaries() {
    boundaries_.resize(wedges_.size());
    ranks_.assign(wedges_.size(), 0);
    for (std::size_t m = 2; m < wedges_.size(); ++m) {
      boundaries_[m].resize(wedges_[m].size());
      for (std::size_t col = 0; col < wedges_[m].size(); ++col)
        boundaries_[m][col] = boundary_of(wedges_[m][col]);
      SparseMatrix mat(wedges_[m - 1].size(), wedges_[m].size());
      for (std::size_t col = 0; col < boundaries_[m].size(); ++col)
        for (const auto& [row, v] : boundaries_[m][col]) mat.set(row, col, v);
      ranks_[m] = rank(mat);
    }
    for (std::size_t m = 2; m + 1 < wedges_.size(); ++m) verify_square_zero(m);
  }

  Column boundary_of(const std::vector<std::uint32_t>& wedge) const {
    Column out;
    const std::size_t n = wedge.size();
    std::vector<std::uint32_t> rest(n - 2);
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        std::size_t r = 0;
        for (std::size_t t = 0; t < n; ++t)
          if (t != p && t != q) rest[r++] = wedge[t];
        const int pair_sign = (p + q) % 2 == 0 ? 1 : -1;
        const std::uint32_t gp = wedge[p];
        const std::uint32_t gq = wedge[q];
        const auto cb = q_.coset_bracket(gmag_[gp], gidx_[gp], gmag_[gq], gidx_[gq]);
        for (const auto& [k, c] : cb) {
          const std::uint32_t target =
              static_cast<std::uint32_t>(offset_.at(gmag_[gp] + gmag_[gq]) + k);
          accumulate_wedge(out, rest, target, pair_sign, c);
        }
      }
    }
    return out;
  }

  void accumulate_wedge(Column& out, const std::vector<std::uint32_t>& rest,
                        std::uint32_t target, int pair_sign, const Scalar& coef) const {
    std::size_t pos = 0;
    for (std::uint32_t r : rest) {
      if (r == target) return;
      if (r < target) ++pos;
    }
    std::vector<std::uint32_t> key(rest);
    key.insert(key.begin() + pos, target);
    const int sign = ((pos % 2 == 0) == (pair_sign > 0)) ? 1 : -1;
    const std::size_t row = wedge_index_.at(key);
    auto it = out.find(row);
    if (it == out.end()) {
      out.emplace(row, sign * coef);
    } else {
      it->second += sign * coef;
      if (it->second == 0) out.erase(it);
    }
  }

  void verify_square_zero(std::size_t m) const {
    for (const Column& col : boundaries_[m + 1]) {
      Column acc;
      for (const auto& [mid, c] : col) {
        for (const auto& [row, v] : boundaries_[m][mid]) {
          auto it = acc.find(row);
          if (it == acc.end()) {
            acc.emplace(row, c * v);
          } else {
            it->second += c * v;
            if (it->second == 0) acc.erase(it);
          }
        }
      }
      if (!acc.empty())
        throw std::logic_error("wedge boundary does not square to zero");
    }
  }

  const GradedQuotientAlgebra& q_;
  const std::vector<int>& gmag_;
  const std::vector<std::uint32_t>& gidx_;
  const std::vector<std::size_t>& offset_;
  std::vector<std::vector<std::vector<std::uint32_t>>> wedges_;  // degree -> tuples
  std::map<std::vector<std::uint32_t>, std::size_t> wedge_index_;
  std::vector<std::vector<Column>> boundaries_;
  std::vector<std::size_t> ranks_;
};

}  // namespace detail

inline CohomologyReport ce_cohomology(const GradedLiePresentation& pres, int max_degree,
                                      int weight_bound) {
  if (max_degree < 0 || max_degree > 3) throw DomainError("unsupported degree");
  const GradedLiePresentation scoped(pres.algebra(), pres.relations(), weight_bound);
  const auto q = build_quotient(scoped);
  const int bound = scoped.bound_magnitude();

  std::vector<int> gmag;
  std::vector<std::uint32_t> gidx;
  std::vector<std::size_t> offset(bound + 1, 0);
  for (int m = 1; m <= bound; ++m) {
    offset[m] = gmag.size();
    for (std::size_t i = 0; i < q->coset_dim(m); ++i) {
      gmag.push_back(m);
      gidx.push_back(static_cast<std::uint32_t>(i));
    }
  }

  CohomologyReport report;
  report.max_degree = max_degree;
  report.cochain_sign = -q->sign();
  report.bound_magnitude = bound;
  for (int m = 0; m <= max_degree; ++m) {
    for (int w = 0; w <= bound; ++w) {
      report.h[m][w] = 0;
      report.cochain[m][w] = 0;
    }
  }
  report.h[0][0] = 1;
  report.cochain[0][0] = 1;

  const int min_mag = pres.spec().empty() ? 0 : pres.spec().min_magnitude();
  for (int w = 1; w <= bound; ++w) {
    detail::WedgeSlice slice(*q, gmag, gidx, offset, w);
    long long euler_cochain = 0;
    long long euler_h = 0;
    for (std::size_t m = 0; m < slice.degrees(); ++m) {
      const long long parity = m % 2 == 0 ? 1 : -1;
      euler_cochain += parity * static_cast<long long>(slice.cochain_dim(m));
      euler_h += parity * static_cast<long long>(slice.h_dim(m));
      if (min_mag > 0 && w < min_mag * static_cast<int>(m) && slice.h_dim(m) != 0)
        throw std::logic_error("weight vanishing audit failed");
    }
    if (euler_cochain != euler_h)
      throw std::logic_error("Euler characteristic audit failed");
    for (int m = 0; m <= max_degree; ++m) {
      report.h[m][w] = Int(slice.h_dim(m));
      report.cochain[m][w] = Int(slice.cochain_dim(m));
    }
  }
  return report;
}

// Dimension of H^m with coefficients in the one dimensional module of the
// given even weight; the value is the cochain slice of weight -module_weight.
inline Int completed_group_cohomology(const GradedLiePresentation& pres, int module_weight,
                                      int m) {
  if (module_weight % 2 != 0) throw DomainError("module weight must be even");
  if (m < 0 || m > 3) throw DomainError("unsupported degree");
  const CohomologyReport report = ce_cohomology(pres, m, pres.weight_bound());
  const int target = -module_weight;
  if (target == 0) return report.h_dim(m, 0);
  if ((target > 0) != (report.cochain_sign > 0)) return 0;
  const int magnitude = target < 0 ? -target : target;
  if (magnitude > report.bound_magnitude)
    throw DomainError("module weight beyond the presentation bound");
  return report.h_dim(m, magnitude);
}

}  // namespace gradedlie

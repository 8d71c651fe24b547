#pragma once
// Exact sparse linear algebra over rationals: fraction free Bareiss elimination
// with sparsity based partial pivoting and a dense fallback, canonical reduced
// echelon forms, kernel bases and linear solves.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gradedlie/errors.hpp"
#include "gradedlie/rational.hpp"

namespace gradedlie {

using Vector = std::vector<Scalar>;

constexpr double kDenseFillThreshold = 0.30;

class SparseMatrix {
 public:
  using Row = std::map<std::size_t, Scalar>;

  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void set(std::size_t r, std::size_t c, const Scalar& value) {
    check(r, c);
    if (value == 0)
      data_[r].erase(c);
    else
      data_[r][c] = value;
  }

  void add(std::size_t r, std::size_t c, const Scalar& value) {
    check(r, c);
    auto it = data_[r].find(c);
    if (it == data_[r].end()) {
      if (value != 0) data_[r].emplace(c, value);
      return;
    }
    it->second += value;
    if (it->second == 0) data_[r].erase(it);
  }

  Scalar at(std::size_t r, std::size_t c) const {
    check(r, c);
    auto it = data_[r].find(c);
    return it == data_[r].end() ? Scalar(0) : it->second;
  }

  const Row& row(std::size_t r) const { return data_[r]; }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const Row& r : data_) n += r.size();
    return n;
  }

  double fill_ratio() const {
    if (rows_ == 0 || cols_ == 0) return 0.0;
    return static_cast<double>(nonzeros()) / (static_cast<double>(rows_) * static_cast<double>(cols_));
  }

  SparseMatrix transposed() const {
    SparseMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (const auto& [c, v] : data_[r]) t.data_[c].emplace(r, v);
    return t;
  }

  Vector multiply(const Vector& v) const {
    if (v.size() != cols_) throw DomainError("matrix-vector size mismatch");
    Vector out(rows_, Scalar(0));
    for (std::size_t r = 0; r < rows_; ++r)
      for (const auto& [c, val] : data_[r]) out[r] += val * v[c];
    return out;
  }

  static SparseMatrix from_rows(const std::vector<Vector>& rows) {
    const std::size_t nc = rows.empty() ? 0 : rows.front().size();
    SparseMatrix m(rows.size(), nc);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != nc) throw DomainError("ragged row list");
      for (std::size_t c = 0; c < nc; ++c)
        if (rows[r][c] != 0) m.data_[r].emplace(c, rows[r][c]);
    }
    return m;
  }

 private:
  void check(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw DomainError("matrix index out of range");
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<Row> data_;
};

namespace detail {

inline Int exact_div(const Int& a, const Int& b) {
  Int q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0) throw std::logic_error("inexact division in fraction free elimination");
  return q;
}

// Fraction free row echelon engine. Rows are scaled to integers up front; every
// Bareiss step applies the one step formula to each active row, so all divisions
// by the previous pivot stay exact.
class Eliminator {
 public:
  Eliminator(const SparseMatrix& m, double dense_threshold)
      : cols_(m.cols()), threshold_(dense_threshold) {
    srows_.resize(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      Int lcm = 1;
      for (const auto& [c, v] : m.row(r)) lcm = boost::multiprecision::lcm(lcm, scalar_den(v));
      for (const auto& [c, v] : m.row(r)) {
        Int entry = scalar_num(v) * exact_div(lcm, scalar_den(v));
        srows_[r].emplace(c, std::move(entry));
      }
      nnz_ += srows_[r].size();
    }
    maybe_go_dense();
  }

  void run() {
    const std::size_t nrows = row_count();
    std::size_t k = 0;
    Int prev = 1;
    for (std::size_t c = 0; c < cols_ && k < nrows; ++c) {
      const std::size_t pick = choose_pivot(k, c);
      if (pick == npos) continue;
      swap_rows(k, pick);
      const Int p = entry(k, c);
      for (std::size_t i = k + 1; i < nrows; ++i) combine(i, k, c, p, prev);
      prev = p;
      pivots_.push_back(c);
      ++k;
      maybe_go_dense();
    }
  }

  std::size_t rank() const { return pivots_.size(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Echelon row i as rationals, i < rank().
  std::map<std::size_t, Scalar> rational_row(std::size_t i) const {
    std::map<std::size_t, Scalar> out;
    if (dense_) {
      for (std::size_t c = 0; c < cols_; ++c)
        if (drows_[i][c] != 0) out.emplace(c, Scalar(drows_[i][c]));
    } else {
      for (const auto& [c, v] : srows_[i]) out.emplace(c, Scalar(v));
    }
    return out;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t row_count() const { return dense_ ? drows_.size() : srows_.size(); }

  Int entry(std::size_t r, std::size_t c) const {
    if (dense_) return drows_[r][c];
    auto it = srows_[r].find(c);
    return it == srows_[r].end() ? Int(0) : it->second;
  }

  std::size_t choose_pivot(std::size_t k, std::size_t c) const {
    std::size_t best = npos;
    std::size_t best_nnz = 0;
    for (std::size_t i = k; i < row_count(); ++i) {
      if (entry(i, c) == 0) continue;
      if (dense_) return i;
      const std::size_t n = srows_[i].size();
      if (best == npos || n < best_nnz) {
        best = i;
        best_nnz = n;
      }
    }
    return best;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    if (dense_)
      std::swap(drows_[a], drows_[b]);
    else
      std::swap(srows_[a], srows_[b]);
  }

  // row_i <- (p * row_i - row_i[c] * row_k) / prev
  void combine(std::size_t i, std::size_t k, std::size_t c, const Int& p, const Int& prev) {
    if (dense_) {
      const Int a = drows_[i][c];
      for (std::size_t j = 0; j < cols_; ++j)
        drows_[i][j] = exact_div(p * drows_[i][j] - a * drows_[k][j], prev);
      return;
    }
    auto ait = srows_[i].find(c);
    const Int a = ait == srows_[i].end() ? Int(0) : ait->second;
    std::map<std::size_t, Int> out;
    auto ii = srows_[i].cbegin();
    auto ki = srows_[k].cbegin();
    const auto iend = srows_[i].cend();
    const auto kend = srows_[k].cend();
    while (ii != iend || ki != kend) {
      std::size_t col;
      Int value;
      if (ki == kend || (ii != iend && ii->first < ki->first)) {
        col = ii->first;
        value = p * ii->second;
        ++ii;
      } else if (ii == iend || ki->first < ii->first) {
        col = ki->first;
        value = -a * ki->second;
        ++ki;
      } else {
        col = ii->first;
        value = p * ii->second - a * ki->second;
        ++ii;
        ++ki;
      }
      if (value == 0) continue;
      out.emplace_hint(out.end(), col, exact_div(value, prev));
    }
    nnz_ -= srows_[i].size();
    srows_[i] = std::move(out);
    nnz_ += srows_[i].size();
  }

  void maybe_go_dense() {
    if (dense_ || cols_ == 0 || srows_.empty()) return;
    const double fill =
        static_cast<double>(nnz_) / (static_cast<double>(srows_.size()) * static_cast<double>(cols_));
    if (fill <= threshold_) return;
    drows_.assign(srows_.size(), std::vector<Int>(cols_, Int(0)));
    for (std::size_t r = 0; r < srows_.size(); ++r)
      for (const auto& [c, v] : srows_[r]) drows_[r][c] = v;
    srows_.clear();
    srows_.shrink_to_fit();
    dense_ = true;
  }

  std::size_t cols_;
  double threshold_;
  bool dense_ = false;
  std::size_t nnz_ = 0;
  std::vector<std::map<std::size_t, Int>> srows_;
  std::vector<std::vector<Int>> drows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace detail

struct Rref {
  std::size_t cols = 0;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;                   // ascending
  std::vector<std::map<std::size_t, Scalar>> rows;   // row i has unit pivot at pivots[i]
};

inline Rref rref(const SparseMatrix& m, double dense_threshold = kDenseFillThreshold) {
  detail::Eliminator e(m, dense_threshold);
  e.run();
  Rref out;
  out.cols = m.cols();
  out.rank = e.rank();
  out.pivots = e.pivots();
  out.rows.resize(out.rank);
  for (std::size_t i = 0; i < out.rank; ++i) {
    auto row = e.rational_row(i);
    const Scalar lead = row.at(out.pivots[i]);
    for (auto& [c, v] : row) v /= lead;
    out.rows[i] = std::move(row);
  }
  for (std::size_t i = out.rank; i-- > 0;) {
    for (std::size_t j = 0; j < i; ++j) {
      auto it = out.rows[j].find(out.pivots[i]);
      if (it == out.rows[j].end()) continue;
      const Scalar c = it->second;
      for (const auto& [col, v] : out.rows[i]) {
        auto jt = out.rows[j].find(col);
        if (jt == out.rows[j].end()) {
          out.rows[j].emplace(col, -c * v);
        } else {
          jt->second -= c * v;
          if (jt->second == 0) out.rows[j].erase(jt);
        }
      }
    }
  }
  return out;
}

inline std::size_t rank(const SparseMatrix& m, double dense_threshold = kDenseFillThreshold) {
  detail::Eliminator e(m, dense_threshold);
  e.run();
  return e.rank();
}

// Canonical kernel basis: one vector per free column of the reduced row echelon
// form, unit at its free column, zero at the other free columns, listed with
// free columns ascending.
inline std::vector<Vector> kernel_basis(const SparseMatrix& m,
                                        double dense_threshold = kDenseFillThreshold) {
  const Rref r = rref(m, dense_threshold);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols(), Scalar(0));
    v[f] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) {
      auto it = r.rows[i].find(f);
      if (it != r.rows[i].end()) v[r.pivots[i]] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Particular solution of m x = rhs with all free variables set to zero.
inline std::optional<Vector> solve(const SparseMatrix& m, const Vector& rhs,
                                   double dense_threshold = kDenseFillThreshold) {
  if (rhs.size() != m.rows()) throw DomainError("solve: rhs size mismatch");
  SparseMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& [c, v] : m.row(r)) aug.set(r, c, v);
    aug.set(r, m.cols(), rhs[r]);
  }
  const Rref r = rref(aug, dense_threshold);
  for (std::size_t p : r.pivots)
    if (p == m.cols()) return std::nullopt;
  Vector x(m.cols(), Scalar(0));
  for (std::size_t i = 0; i < r.rank; ++i) {
    auto it = r.rows[i].find(m.cols());
    if (it != r.rows[i].end()) x[r.pivots[i]] = it->second;
  }
  return x;
}

// Incrementally maintained reduced row echelon basis of a span of dense vectors.
// The stored rows are the unique reduced echelon basis of the span, so the final
// state does not depend on insertion order.
class EchelonSpan {
 public:
  explicit EchelonSpan(std::size_t dimension) : dim_(dimension) {}

  std::size_t dimension() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  // (pivot, row) pairs with pivots strictly ascending.
  const std::vector<std::pair<std::size_t, Vector>>& rows() const { return rows_; }

  Vector reduce(Vector v) const {
    if (v.size() != dim_) throw DomainError("echelon span: vector size mismatch");
    for (const auto& [p, row] : rows_) {
      if (v[p] == 0) continue;
      const Scalar c = v[p];
      for (std::size_t j = p; j < dim_; ++j)
        if (row[j] != 0) v[j] -= c * row[j];
    }
    return v;
  }

  bool contains(const Vector& v) const {
    Vector r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Scalar& s) { return s == 0; });
  }

  bool insert(Vector v) {
    v = reduce(std::move(v));
    std::size_t pivot = dim_;
    for (std::size_t j = 0; j < dim_; ++j)
      if (v[j] != 0) {
        pivot = j;
        break;
      }
    if (pivot == dim_) return false;
    const Scalar lead = v[pivot];
    for (std::size_t j = pivot; j < dim_; ++j)
      if (v[j] != 0) v[j] /= lead;
    for (auto& [p, row] : rows_) {
      if (row[pivot] == 0) continue;
      const Scalar c = row[pivot];
      for (std::size_t j = pivot; j < dim_; ++j)
        if (v[j] != 0) row[j] -= c * v[j];
    }
    const auto pos = std::lower_bound(
        rows_.begin(), rows_.end(), pivot,
        [](const std::pair<std::size_t, Vector>& row, std::size_t p) { return row.first < p; });
    rows_.insert(pos, {pivot, std::move(v)});
    return true;
  }

 private:
  std::size_t dim_;
  std::vector<std::pair<std::size_t, Vector>> rows_;
};

}  // namespace gradedlie

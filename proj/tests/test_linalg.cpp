#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gradedlie/linalg.hpp"
#include "test_util.hpp"

using namespace gradedlie;
using testutil::mat;
using testutil::matq;
using testutil::vec;
using testutil::vecq;

namespace {

void check_canonical_scalars(const Vector& v) {
  for (const Scalar& s : v) {
    REQUIRE(scalar_den(s) > 0);
    REQUIRE(boost::multiprecision::gcd(scalar_num(s), scalar_den(s)) == 1);
  }
}

SparseMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> keep(0, 99);
  SparseMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (keep(rng) < 35) m.set(r, c, Scalar(entry(rng)));
  return m;
}

}  // namespace

TEST_CASE("rank one matrix with dependent rows") {
  const SparseMatrix m = mat({{1, 2, 3}, {2, 4, 6}});
  REQUIRE(rank(m) == 1);

  const auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 2);
  REQUIRE(ker[0] == vec({-2, 1, 0}));
  REQUIRE(ker[1] == vec({-3, 0, 1}));

  const auto x = solve(m, vec({3, 6}));
  REQUIRE(x.has_value());
  REQUIRE(*x == vec({3, 0, 0}));
  REQUIRE_FALSE(solve(m, vec({3, 5})).has_value());
}

TEST_CASE("rational entries stay exact") {
  const SparseMatrix m = matq({{"1/2", "1/3"}, {"1/4", "1/6"}});
  REQUIRE(rank(m) == 1);
  const auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 1);
  REQUIRE(ker[0] == vecq({"-2/3", "1"}));
  REQUIRE(testutil::is_zero(m.multiply(ker[0])));
}

TEST_CASE("Hilbert 4x4 is nonsingular with known inverse column") {
  SparseMatrix h(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) h.set(i, j, Scalar(1, Int(i + j + 1)));
  REQUIRE(rank(h) == 4);
  REQUIRE(kernel_basis(h).empty());

  const auto x = solve(h, vec({1, 0, 0, 0}));
  REQUIRE(x.has_value());
  REQUIRE(*x == vec({16, -120, 240, -140}));
}

TEST_CASE("tridiagonal solve with rational result") {
  const SparseMatrix a = mat({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
  const auto x = solve(a, vec({1, 0, 0}));
  REQUIRE(x.has_value());
  REQUIRE(*x == vecq({"11/18", "-2/9", "1/18"}));
  check_canonical_scalars(*x);
}

TEST_CASE("degenerate shapes") {
  const SparseMatrix zero_rows(0, 3);
  REQUIRE(rank(zero_rows) == 0);
  const auto ker = kernel_basis(zero_rows);
  REQUIRE(ker.size() == 3);
  REQUIRE(ker[0] == vec({1, 0, 0}));
  REQUIRE(ker[2] == vec({0, 0, 1}));
  const auto x = solve(zero_rows, Vector{});
  REQUIRE(x.has_value());
  REQUIRE(*x == vec({0, 0, 0}));

  const SparseMatrix zero_cols(3, 0);
  REQUIRE(rank(zero_cols) == 0);
  REQUIRE(kernel_basis(zero_cols).empty());

  const SparseMatrix z = mat({{0, 0}, {0, 0}});
  REQUIRE(rank(z) == 0);
  REQUIRE(solve(z, vec({0, 0})).has_value());
  REQUIRE_FALSE(solve(z, vec({1, 0})).has_value());
}

TEST_CASE("kernel basis is canonical under row permutation") {
  const SparseMatrix a = mat({{1, 2, 0, 3}, {0, 0, 1, 4}, {2, 4, 1, 10}});
  const SparseMatrix b = mat({{2, 4, 1, 10}, {0, 0, 1, 4}, {1, 2, 0, 3}});
  REQUIRE(kernel_basis(a) == kernel_basis(b));
}

TEST_CASE("dense fallback path agrees with sparse path") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 20; ++trial) {
    const SparseMatrix m = random_matrix(rng, 6, 8);
    REQUIRE(rank(m, 0.0) == rank(m, 1.1));
    REQUIRE(kernel_basis(m, 0.0) == kernel_basis(m, 1.1));
  }
}

TEST_CASE("randomized algebraic identities") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const SparseMatrix m = random_matrix(rng, 6, 8);
    const auto ker = kernel_basis(m);
    REQUIRE(rank(m) + ker.size() == m.cols());
    REQUIRE(rank(m) == rank(m.transposed()));
    for (const auto& v : ker) {
      REQUIRE(testutil::is_zero(m.multiply(v)));
      check_canonical_scalars(v);
    }

    std::uniform_int_distribution<int> entry(-2, 2);
    Vector x0(m.cols());
    for (auto& s : x0) s = entry(rng);
    const Vector rhs = m.multiply(x0);
    const auto x = solve(m, rhs);
    REQUIRE(x.has_value());
    REQUIRE(m.multiply(*x) == rhs);
  }
}

TEST_CASE("echelon span is insertion order independent") {
  const std::vector<Vector> vs = {vec({1, 2, 0, 1}), vec({0, 1, 1, 0}), vec({1, 3, 1, 1}),
                                  vec({2, 0, 1, 5})};
  EchelonSpan forward(4);
  for (const auto& v : vs) forward.insert(v);
  EchelonSpan backward(4);
  for (auto it = vs.rbegin(); it != vs.rend(); ++it) backward.insert(*it);

  REQUIRE(forward.rank() == 3);
  REQUIRE(backward.rank() == 3);
  REQUIRE(forward.rows() == backward.rows());

  REQUIRE(forward.contains(vec({1, 3, 1, 1})));
  REQUIRE_FALSE(forward.contains(vec({0, 0, 0, 1})));
  REQUIRE(forward.reduce(vec({1, 2, 0, 1})) == vec({0, 0, 0, 0}));

  EchelonSpan span(4);
  REQUIRE(span.insert(vec({0, 1, 1, 0})));
  REQUIRE_FALSE(span.insert(vec({0, 2, 2, 0})));
  REQUIRE(span.rank() == 1);
}

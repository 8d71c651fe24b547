#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <memory>
#include <vector>

#include "gradedlie/lie_element.hpp"
#include "gradedlie/presentation.hpp"
#include "gradedlie/quotient.hpp"
#include "gradedlie/witt.hpp"
#include "test_util.hpp"

namespace {

using namespace gradedlie;

std::shared_ptr<const FreeLieAlgebra> rank2() {
  return FreeLieAlgebra::make(GeneratorSpec({{"x", 1}, {"y", 1}}));
}

// Reference saturation that brackets ideal slices against every Lyndon basis
// element of the complementary weight, not only the generators.
DimensionTable brute_quotient_dims(const std::shared_ptr<const FreeLieAlgebra>& alg,
                                   const std::vector<LieElement>& relations, int bound_mag) {
  std::map<int, EchelonSpan> ideal;
  for (int m = 1; m <= bound_mag; ++m) ideal.emplace(m, EchelonSpan(alg->dim(m)));
  const auto dense = [&](int mag, const TermMap& t) {
    Vector v(alg->dim(mag), Scalar(0));
    for (const auto& [k, c] : t) v[k.idx] = c;
    return v;
  };
  for (const LieElement& r : relations) {
    const int mag = r.terms().begin()->first.mag;
    if (mag <= bound_mag) ideal.at(mag).insert(dense(mag, r.terms()));
  }
  for (int m = 2; m <= bound_mag; ++m) {
    for (int k = 1; k < m; ++k) {
      const auto& src = ideal.at(k);
      if (src.rank() == 0) continue;
      const int bm = m - k;
      for (std::uint32_t bi = 0; bi < alg->dim(bm); ++bi) {
        for (const auto& [pivot, row] : src.rows()) {
          TermMap acc;
          for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0)
              detail::accumulate(
                  acc,
                  alg->pair_bracket(BasisKey{bm, bi}, BasisKey{k, static_cast<std::uint32_t>(j)}),
                  row[j]);
          ideal.at(m).insert(dense(m, acc));
        }
      }
    }
  }
  DimensionTable out;
  const int sign = alg->spec().empty() ? 1 : alg->sign();
  for (int m = 1; m <= bound_mag; ++m) out[sign * m] = Int(alg->dim(m)) - Int(ideal.at(m).rank());
  return out;
}

TEST_CASE("free presentation matches the Witt dimensions") {
  const auto alg = rank2();
  const GradedLiePresentation pres(alg, {}, 6);
  const auto q = build_quotient(pres);
  CHECK(q->dims() == witt_dims(alg->spec(), 6));
  for (const auto& [w, d] : q->ideal_dims()) CHECK(d == 0);

  const auto neg = FreeLieAlgebra::make(GeneratorSpec({{"a", -2}, {"b", -4}}));
  const auto qn = build_quotient(GradedLiePresentation(neg, {}, -12));
  CHECK(qn->dims() == witt_dims(neg->spec(), -12));
}

TEST_CASE("bracket relation abelianizes the rank two algebra") {
  const auto alg = rank2();
  const LieElement r = bracket(LieElement::generator(alg, "x"), LieElement::generator(alg, "y"));
  const auto q = build_quotient(GradedLiePresentation(alg, {r}, 4));
  const DimensionTable expected{{1, 2}, {2, 0}, {3, 0}, {4, 0}};
  CHECK(q->dims() == expected);
  const DimensionTable ideal{{1, 0}, {2, 1}, {3, 2}, {4, 3}};
  CHECK(q->ideal_dims() == ideal);
  CHECK(q->total_dim() == 2);
  CHECK(q->coset_bracket(1, 0, 1, 1).empty());
}

TEST_CASE("single deeper relation removes one weight three class") {
  const auto alg = rank2();
  const LieElement x = LieElement::generator(alg, "x");
  const LieElement y = LieElement::generator(alg, "y");
  const auto q = build_quotient(GradedLiePresentation(alg, {bracket(x, bracket(x, y))}, 3));
  const DimensionTable expected{{1, 2}, {2, 1}, {3, 1}};
  CHECK(q->dims() == expected);

  // The surviving weight three coset is [[x,y],y]; [x,[x,y]] reduces to zero
  // and [y,[x,y]] = -[[x,y],y].
  const auto zero = q->coset_bracket(1, 0, 2, 0);
  CHECK(zero.empty());
  const auto yz = q->coset_bracket(1, 1, 2, 0);
  REQUIRE(yz.size() == 1);
  CHECK(yz.at(0) == Scalar(-1));

  CHECK(q->coset_coordinates(bracket(x, bracket(x, y))) == testutil::vec({0}));
  CHECK(q->coset_coordinates(bracket(bracket(x, y), y)) == testutil::vec({1}));
}

TEST_CASE("generator saturation agrees with full basis saturation") {
  const auto alg = rank2();
  const LieElement x = LieElement::generator(alg, "x");
  const LieElement y = LieElement::generator(alg, "y");

  SECTION("rational relation") {
    const LieElement r =
        bracket(x, bracket(x, y)) - Scalar(3, 2) * bracket(bracket(x, y), y);
    const std::vector<LieElement> rels{r};
    const auto q = build_quotient(GradedLiePresentation(alg, rels, 6));
    CHECK(q->dims() == brute_quotient_dims(alg, rels, 6));
  }

  SECTION("two relations on three mixed weight generators") {
    const auto alg3 = FreeLieAlgebra::make(GeneratorSpec({{"x", 1}, {"y", 1}, {"z", 2}}));
    const LieElement a = LieElement::generator(alg3, "x");
    const LieElement b = LieElement::generator(alg3, "y");
    const LieElement c = LieElement::generator(alg3, "z");
    const std::vector<LieElement> rels{bracket(a, b), bracket(a, c) + bracket(b, c)};
    const auto q = build_quotient(GradedLiePresentation(alg3, rels, 6));
    CHECK(q->dims() == brute_quotient_dims(alg3, rels, 6));
    CHECK(q->dims() != witt_dims(alg3->spec(), 6));
  }
}

TEST_CASE("coset coordinates and lifts invert each other") {
  const auto alg = rank2();
  const LieElement x = LieElement::generator(alg, "x");
  const LieElement y = LieElement::generator(alg, "y");
  const auto q = build_quotient(GradedLiePresentation(alg, {bracket(x, bracket(x, y))}, 4));
  for (int m = 1; m <= 4; ++m) {
    for (std::size_t i = 0; i < q->coset_dim(m); ++i) {
      Vector unit(q->coset_dim(m), Scalar(0));
      unit[i] = 1;
      CHECK(q->coset_coordinates(q->lift(m, unit)) == unit);
    }
  }
  CHECK(q->coset_coordinates(bracket(x, bracket(x, y)) + bracket(bracket(x, y), y)) ==
        testutil::vec({1}));
}

TEST_CASE("relations heavier than the bound are ignored") {
  const auto alg = rank2();
  const LieElement x = LieElement::generator(alg, "x");
  const LieElement y = LieElement::generator(alg, "y");
  const LieElement deep = bracket(x, bracket(x, bracket(x, bracket(x, y))));
  const auto q = build_quotient(GradedLiePresentation(alg, {deep}, 4));
  CHECK(q->dims() == witt_dims(alg->spec(), 4));
}

TEST_CASE("presentation validation rejects malformed relations") {
  const auto alg = rank2();
  const LieElement x = LieElement::generator(alg, "x");
  const LieElement y = LieElement::generator(alg, "y");
  CHECK_THROWS_AS(GradedLiePresentation(alg, {LieElement::zero(alg)}, 4), DomainError);
  CHECK_THROWS_AS(GradedLiePresentation(alg, {x + bracket(x, y)}, 4), DomainError);
  CHECK_THROWS_AS(GradedLiePresentation(alg, {x}, 4), DomainError);
  CHECK_THROWS_AS(GradedLiePresentation(alg, {bracket(x, y)}, -4), DomainError);

  const auto other = FreeLieAlgebra::make(GeneratorSpec({{"u", 1}, {"v", 1}}));
  const LieElement foreign = bracket(LieElement::generator(other, "u"),
                                     LieElement::generator(other, "v"));
  CHECK_THROWS_AS(GradedLiePresentation(alg, {foreign}, 4), DomainError);
}

TEST_CASE("empty presentation quotient is zero") {
  const auto alg = FreeLieAlgebra::make(GeneratorSpec{});
  const auto q = build_quotient(GradedLiePresentation(alg, {}, 3));
  CHECK(q->total_dim() == 0);
  const DimensionTable expected{{1, 0}, {2, 0}, {3, 0}};
  CHECK(q->dims() == expected);
}

}  // namespace

#include <doctest.h>

#include <random>

#include "nilfields/catalog.hpp"
#include "nilfields/errors.hpp"
#include "nilfields/forms.hpp"
#include "support/helpers.hpp"

using namespace nilfields;
using testsupport::random_two_step_algebra;
using testsupport::solvable2;

namespace {

std::size_t binomial(std::size_t n, std::size_t p) {
  if (p > n) return 0;
  std::size_t out = 1;
  for (std::size_t i = 0; i < p; ++i) out = out * (n - i) / (i + 1);
  return out;
}

}  // namespace

TEST_CASE("form bases enumerate increasing tuples in lexicographic order") {
  for (std::size_t p = 0; p <= 5; ++p)
    CHECK(FormBasis(5, p).size() == binomial(5, p));
  const FormBasis two_forms(4, 2);
  CHECK(two_forms.multi_indices().front() == std::vector<std::size_t>{0, 1});
  CHECK(two_forms.multi_indices().back() == std::vector<std::size_t>{2, 3});
  CHECK(two_forms.index_of({1, 3}) == 4);
  CHECK(FormBasis(5, 0).size() == 1);
  CHECK(two_forms.label(0) == "e1^e2");
}

TEST_CASE("flat is the identity on coordinates") {
  CHECK(flat(unit_vector(5, 0)).coords == unit_vector(5, 0));
  CHECK(flat(RationalVector(5, Rational(0))).coords ==
        RationalVector(5, Rational(0)));
  const RationalVector x{Rational(0), Rational(0), Rational(2), Rational(0),
                         Rational(-1)};
  const auto form = flat(x);
  CHECK(form.degree == 1);
  CHECK(form.coords == x);
}

TEST_CASE("exterior derivative on the three-dimensional-center family") {
  const auto alg = family_center3(Rational(1));
  const auto d1 = d_matrix(alg, 1);
  REQUIRE(d1.rows() == 10);
  REQUIRE(d1.cols() == 5);
  const FormBasis two_forms(5, 2);
  const std::size_t row12 = two_forms.index_of({0, 1});
  // d e^3 = -e^1^e^2, all other degree-1 images vanish.
  for (std::size_t col = 0; col < 5; ++col)
    for (std::size_t row = 0; row < 10; ++row) {
      const Rational expected =
          (col == 2 && row == row12) ? Rational(-1) : Rational(0);
      CHECK(d1.at(row, col) == expected);
    }
}

TEST_CASE("exterior derivative vanishes identically on the abelian algebra") {
  const auto alg = abelian(5);
  for (std::size_t p = 0; p <= 5; ++p) CHECK(d_matrix(alg, p).is_zero());
}

TEST_CASE("d e^5 on the one-dimensional-center family") {
  const auto alg = family_center1(Rational(1), Rational(1));
  const auto d1 = d_matrix(alg, 1);
  const FormBasis two_forms(5, 2);
  for (std::size_t row = 0; row < two_forms.size(); ++row) {
    Rational expected(0);
    if (row == two_forms.index_of({0, 1})) expected = -1;
    if (row == two_forms.index_of({2, 3})) expected = -1;
    CHECK(d1.at(row, 4) == expected);
  }
  CHECK_THROWS_AS(d_matrix(alg, 6), DegreeOutOfRange);
}

TEST_CASE("d compose d vanishes in every degree") {
  std::mt19937 rng(53);
  std::vector<MetricLieAlgebra> algebras;
  algebras.push_back(family_center1(Rational(3), Rational(2)));
  algebras.push_back(family_center2(Rational(2), Rational(1, 2)));
  algebras.push_back(family_center3(Rational(3, 2)));
  algebras.push_back(heisenberg3(Rational(2)));
  for (int t = 0; t < 30; ++t) algebras.push_back(random_two_step_algebra(rng));
  // d^2 = 0 is equivalent to Jacobi, so it must hold on the non-nilpotent
  // fixture as well.
  algebras.push_back(solvable2());

  for (const auto& alg : algebras)
    for (std::size_t p = 0; p + 1 <= alg.dim(); ++p)
      CHECK((d_matrix(alg, p + 1) * d_matrix(alg, p)).is_zero());
}

TEST_CASE("codifferential is the transpose; abelian case is zero") {
  const auto alg = abelian(4);
  for (std::size_t p = 1; p <= 4; ++p)
    CHECK(codifferential_matrix(alg, p).is_zero());

  const auto case1 = family_center1(Rational(1), Rational(1));
  const auto delta2 = codifferential_matrix(case1, 2);
  REQUIRE(delta2.rows() == 5);
  REQUIRE(delta2.cols() == 10);
  const FormBasis two_forms(5, 2);
  // delta(e^1^e^2) = -e^5.
  const std::size_t col12 = two_forms.index_of({0, 1});
  for (std::size_t row = 0; row < 5; ++row)
    CHECK(delta2.at(row, col12) == (row == 4 ? Rational(-1) : Rational(0)));

  // delta on 1-forms is the zero functional, matching div = 0.
  CHECK(codifferential_matrix(case1, 1).is_zero());
}

TEST_CASE("codifferential refuses non-unimodular algebras") {
  CHECK_THROWS_AS(codifferential_matrix(solvable2(), 1), NotUnimodular);
  CHECK_THROWS_AS(laplacian_matrix(solvable2(), 1), NotUnimodular);
}

TEST_CASE("degree-1 Laplacian kernels of the catalog families") {
  const auto case1 = family_center1(Rational(1), Rational(1));
  CHECK(nullspace(laplacian_matrix(case1, 1)) ==
        SolutionSpace::from_generators(5, {unit_vector(5, 0), unit_vector(5, 1),
                                           unit_vector(5, 2), unit_vector(5, 3)}));

  const auto case3 = family_center3(Rational(1));
  CHECK(nullspace(laplacian_matrix(case3, 1)) ==
        SolutionSpace::from_generators(5, {unit_vector(5, 0), unit_vector(5, 1),
                                           unit_vector(5, 3), unit_vector(5, 4)}));

  const auto flat_case = abelian(3);
  for (std::size_t p = 0; p <= 3; ++p) {
    const auto laplacian = laplacian_matrix(flat_case, p);
    CHECK(laplacian.is_zero());
    CHECK(nullspace(laplacian).dimension() == binomial(3, p));
  }
}

TEST_CASE("Laplacian is symmetric and positive semidefinite") {
  std::mt19937 rng(59);
  std::vector<MetricLieAlgebra> algebras;
  algebras.push_back(family_center1(Rational(2), Rational(1)));
  algebras.push_back(family_center2(Rational(3), Rational(1, 2)));
  algebras.push_back(family_center3(Rational(1)));
  for (int t = 0; t < 20; ++t) algebras.push_back(random_two_step_algebra(rng));

  for (const auto& alg : algebras) {
    for (std::size_t p = 0; p <= alg.dim(); ++p) {
      const auto laplacian = laplacian_matrix(alg, p);
      CHECK(laplacian.is_symmetric());
      const std::size_t size = laplacian.rows();
      for (int t = 0; t < 8; ++t) {
        const auto x = testsupport::random_vector(rng, size);
        CHECK(dot(x, laplacian.apply(x)) >= 0);
      }
    }
  }
}

TEST_CASE("degree-1 Laplacian kernel is ker d intersect ker delta") {
  std::mt19937 rng(61);
  std::vector<MetricLieAlgebra> algebras;
  algebras.push_back(family_center1(Rational(3, 2), Rational(1)));
  algebras.push_back(family_center2(Rational(1), Rational(1)));
  algebras.push_back(family_center3(Rational(2)));
  for (int t = 0; t < 15; ++t) algebras.push_back(random_two_step_algebra(rng));

  for (const auto& alg : algebras) {
    const auto d1 = d_matrix(alg, 1);
    const auto delta1 = codifferential_matrix(alg, 1);
    RationalMatrix stacked(d1.rows() + delta1.rows(), d1.cols());
    for (std::size_t r = 0; r < d1.rows(); ++r)
      for (std::size_t c = 0; c < d1.cols(); ++c)
        stacked.at(r, c) = d1.at(r, c);
    for (std::size_t r = 0; r < delta1.rows(); ++r)
      for (std::size_t c = 0; c < delta1.cols(); ++c)
        stacked.at(d1.rows() + r, c) = delta1.at(r, c);
    CHECK(nullspace(laplacian_matrix(alg, 1)) == nullspace(stacked));
  }
}

TEST_CASE("scaling the constants by t scales the Laplacian by t^2") {
  const Rational t(3, 2);
  const auto base = family_center2(Rational(2), Rational(1));
  const auto scaled_alg = family_center2(Rational(2) * t, Rational(1) * t);
  for (std::size_t p = 0; p <= 5; ++p) {
    const auto lap = laplacian_matrix(base, p);
    const auto lap_scaled = laplacian_matrix(scaled_alg, p);
    CHECK(lap_scaled == lap.scaled(t * t));
    CHECK(nullspace(lap_scaled) == nullspace(lap));
  }
}

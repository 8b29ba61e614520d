#include <doctest.h>

#include "errors.hpp"
#include "matrix.hpp"
#include "support.hpp"

using namespace prl;

namespace {

Matrix from_rows(std::size_t rows, std::size_t cols, std::vector<std::vector<long>> data) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Rational(data[i][j]);
  return m;
}

}  // namespace

TEST_CASE("solve_linear: identity, permutation, inconsistent") {
  Vec b{Rational(3), Rational(-1, 2)};
  auto x = solve_linear(Matrix::identity(2), b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  auto y = solve_linear(from_rows(2, 2, {{0, 1}, {1, 0}}), {Rational(1), Rational(0)});
  REQUIRE(y.has_value());
  CHECK(*y == Vec{Rational(0), Rational(1)});

  auto z = solve_linear(from_rows(2, 2, {{1, 1}, {2, 2}}), {Rational(1), Rational(3)});
  CHECK(!z.has_value());

  CHECK_THROWS_AS(solve_linear(Matrix::identity(2), Vec{Rational(1)}), ContractError);
}

TEST_CASE("solve_linear: exact residual on random consistent systems") {
  testsupport::Rng rng(7001);
  for (int iter = 0; iter < 50; ++iter) {
    const std::size_t n = 2 + rng() % 4;
    const std::size_t m = 2 + rng() % 4;
    Matrix a = testsupport::random_matrix(rng, m, n);
    // manufacture a consistent rhs
    Vec x0(n);
    for (auto& v : x0) v = testsupport::random_rational(rng);
    Vec b = a * x0;
    auto x = solve_linear(a, b);
    REQUIRE(x.has_value());
    CHECK(vec_is_zero(vec_sub(a * *x, b)));
  }
}

TEST_CASE("kernel_basis: zero, identity, single relation") {
  CHECK(kernel_basis(Matrix::zero(2, 2)).cols() == 2);
  CHECK(kernel_basis(Matrix::identity(3)).cols() == 0);

  Matrix a = from_rows(1, 3, {{1, 2, 3}});
  Matrix k = kernel_basis(a);
  REQUIRE(k.cols() == 2);
  for (std::size_t j = 0; j < k.cols(); ++j) {
    Vec v = k.col(j);
    CHECK((v[0] + Rational(2) * v[1] + Rational(3) * v[2]).is_zero());
  }
}

TEST_CASE("kernel columns always satisfy A v = 0") {
  testsupport::Rng rng(7002);
  for (int iter = 0; iter < 50; ++iter) {
    const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    Matrix a = testsupport::random_matrix(rng, rows, cols);
    Matrix k = kernel_basis(a);
    CHECK(rank(a) + k.cols() == cols);
    for (std::size_t j = 0; j < k.cols(); ++j) CHECK(vec_is_zero(a * k.col(j)));
  }
}

TEST_CASE("rank examples") {
  CHECK(rank(Matrix::identity(4)) == 4);
  CHECK(rank(Matrix::zero(3, 5)) == 0);
  CHECK(rank(from_rows(2, 2, {{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("inverse") {
  Matrix a = from_rows(2, 2, {{1, 2}, {3, 4}});
  auto inv = inverse(a);
  REQUIRE(inv.has_value());
  CHECK(a * *inv == Matrix::identity(2));
  CHECK(!inverse(from_rows(2, 2, {{1, 2}, {2, 4}})).has_value());
}

TEST_CASE("congruence_diagonalize: diagonal input is returned as-is") {
  Matrix g(2, 2);
  g.at(0, 0) = Rational(2);
  g.at(1, 1) = Rational(-3);
  Congruence c = congruence_diagonalize(g);
  CHECK(c.p == Matrix::identity(2));
  CHECK(c.d == Vec{Rational(2), Rational(-3)});
}

TEST_CASE("congruence_diagonalize: hyperbolic plane has split signature") {
  Matrix g = from_rows(2, 2, {{0, 1}, {1, 0}});
  Congruence c = congruence_diagonalize(g);
  int pos = 0, neg = 0;
  for (const auto& d : c.d) {
    if (d.sign() > 0) ++pos;
    if (d.sign() < 0) ++neg;
  }
  CHECK(pos == 1);
  CHECK(neg == 1);
  // exact reconstruction
  Matrix diag(2, 2);
  diag.at(0, 0) = c.d[0];
  diag.at(1, 1) = c.d[1];
  CHECK(c.p.transpose() * g * c.p == diag);
}

TEST_CASE("congruence_diagonalize rejects non-symmetric input") {
  CHECK_THROWS_AS(congruence_diagonalize(from_rows(2, 2, {{0, 1}, {2, 0}})), ContractError);
}

TEST_CASE("congruence reconstruction and Sylvester invariance under random congruence") {
  testsupport::Rng rng(7003);
  for (int iter = 0; iter < 40; ++iter) {
    const std::size_t n = 1 + rng() % 5;
    Matrix g = testsupport::random_symmetric(rng, n);
    Congruence c = congruence_diagonalize(g);

    Matrix diag(n, n);
    for (std::size_t i = 0; i < n; ++i) diag.at(i, i) = c.d[i];
    REQUIRE(c.p.transpose() * g * c.p == diag);
    REQUIRE(inverse(c.p).has_value());

    auto counts = [](const Vec& d) {
      std::array<int, 3> sg{0, 0, 0};
      for (const auto& v : d) ++sg[static_cast<std::size_t>(1 - v.sign())];
      return sg;  // {pos, zero, neg}
    };
    // congruence by a random invertible matrix preserves the inertia counts
    Matrix q = testsupport::random_invertible(rng, n);
    Congruence c2 = congruence_diagonalize(q.transpose() * g * q);
    CHECK(counts(c.d) == counts(c2.d));
  }
}

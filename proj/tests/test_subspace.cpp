#include <doctest.h>

#include "subspace.hpp"
#include "support.hpp"

using namespace prl;

TEST_CASE("span canonicalizes: redundant generators collapse") {
  Matrix cols(3, 3);
  // (1,0,0), (2,0,0), (1,1,0)
  cols.at(0, 0) = 1;
  cols.at(0, 1) = 2;
  cols.at(0, 2) = 1;
  cols.at(1, 2) = 1;
  Subspace s = Subspace::span(3, cols);
  CHECK(s.dim() == 2);
  CHECK(s.contains(Vec{Rational(5), Rational(-7), Rational(0)}));
  CHECK(!s.contains(Vec{Rational(0), Rational(0), Rational(1)}));
}

TEST_CASE("equality is representation independent") {
  testsupport::Rng rng(7010);
  for (int iter = 0; iter < 30; ++iter) {
    const std::size_t n = 2 + rng() % 4;
    Matrix cols = testsupport::random_matrix(rng, n, 1 + rng() % n);
    Subspace a = Subspace::span(n, cols);
    // shuffle/scale the generators: same span, same canonical basis
    Matrix mixed = cols * testsupport::random_invertible(rng, cols.cols());
    Subspace b = Subspace::span(n, mixed);
    CHECK(a == b);
    CHECK(a.basis() == b.basis());
  }
}

TEST_CASE("zero and full") {
  CHECK(Subspace::zero(4).dim() == 0);
  CHECK(Subspace::full(4).dim() == 4);
  CHECK(Subspace::full(4).contains(Subspace::zero(4)));
  CHECK(Subspace::span(3, Matrix::identity(3)) == Subspace::full(3));
}

TEST_CASE("sum") {
  Subspace a = Subspace::span_of(3, {Vec{Rational(1), Rational(0), Rational(0)}});
  Subspace b = Subspace::span_of(3, {Vec{Rational(1), Rational(1), Rational(0)}});
  Subspace s = Subspace::sum(a, b);
  CHECK(s.dim() == 2);
  CHECK(s.contains(Vec{Rational(0), Rational(3), Rational(0)}));
}

#include <doctest.h>

#include "construct.hpp"
#include "errors.hpp"
#include "product.hpp"
#include "support.hpp"

using namespace prl;

namespace {

Vec unit(std::size_t n, std::size_t k) {
  Vec v(n);
  v[k] = 1;
  return v;
}

ProductTable half_bracket_table(const LieAlgebra& l) {
  ProductTable t(l.dim());
  const Rational half(1, 2);
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = 0; j < l.dim(); ++j)
      for (std::size_t k = 0; k < l.dim(); ++k) t.p(i, j, k) = half * l.c(i, j, k);
  return t;
}

}  // namespace

TEST_CASE("compute_product: abelian gives the zero table") {
  testsupport::Rng rng(7041);
  for (std::size_t n = 1; n <= 4; ++n) {
    LieAlgebra a = LieAlgebra::abelian(n);
    BilinearForm f{testsupport::random_nondegenerate_symmetric(rng, n)};
    CHECK(compute_product(a, f) == ProductTable(n));
  }
}

TEST_CASE("compute_product: Heisenberg with the Prop 5.2 form") {
  for (const Rational& b : {Rational(1), Rational(-1), Rational(2), Rational(1, 2)}) {
    auto entry = catalog_heisenberg3(b);
    ProductTable t = compute_product(entry.algebra, entry.form);
    CHECK(t == entry.expected_product);
    // spot-read: xx = -(1/b) y, xy = z, yx = 0
    CHECK(t.entry(0, 0) == vec_scale(-b.reciprocal(), unit(3, 1)));
    CHECK(t.entry(0, 1) == unit(3, 2));
    CHECK(vec_is_zero(t.entry(1, 0)));
  }
}

TEST_CASE("compute_product: sl2 with the Killing form is half the bracket") {
  LieAlgebra l = sl2();
  BilinearForm k = killing_form(l);
  ProductTable t = compute_product(l, k);
  CHECK(t == half_bracket_table(l));
  // independent evaluation of the defining equation on all 27 triples
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t w = 0; w < 3; ++w) {
        Rational lhs = Rational(2) * k.evaluate(t.entry(i, j), unit(3, w));
        Rational rhs = k.evaluate(l.bracket_basis(i, j), unit(3, w)) +
                       k.evaluate(l.bracket_basis(w, i), unit(3, j)) +
                       k.evaluate(l.bracket_basis(w, j), unit(3, i));
        CHECK(lhs == rhs);
      }
}

TEST_CASE("compute_product refuses degenerate forms") {
  CHECK_THROWS_AS(compute_product(LieAlgebra::abelian(2), BilinearForm{Matrix::zero(2, 2)}),
                  InvalidInput);
}

TEST_CASE("left_mult and right_mult") {
  auto cor = catalog_cor411(Rational(1));
  ProductTable t = compute_product(cor.algebra, cor.form);
  Matrix ls = t.left_mult(unit(3, 0));
  CHECK(ls * unit(3, 1) == unit(3, 2));                         // s*x = y
  CHECK(ls * unit(3, 2) == vec_scale(Rational(-1), unit(3, 1)));  // s*y = -x
  CHECK(vec_is_zero(ls * unit(3, 0)));                          // s*s = 0

  auto heis = catalog_heisenberg3(Rational(1));
  ProductTable th = compute_product(heis.algebra, heis.form);
  Matrix rx = th.right_mult(unit(3, 0));
  CHECK(rx * unit(3, 0) == vec_scale(Rational(-1), unit(3, 1)));  // x*x = -y (b=1)
  CHECK(vec_is_zero(rx * unit(3, 1)));                            // y*x = 0
  CHECK(vec_is_zero(rx * unit(3, 2)));                            // z*x = 0

  CHECK(ProductTable(3).left_mult(unit(3, 0)).is_zero());

  // linearity in u
  testsupport::Rng rng(7042);
  for (int iter = 0; iter < 10; ++iter) {
    Vec u(3), v(3);
    for (auto& q : u) q = testsupport::random_rational(rng);
    for (auto& q : v) q = testsupport::random_rational(rng);
    CHECK(th.left_mult(u) * v == th.apply(u, v));
    CHECK(th.right_mult(u) * v == th.apply(v, u));
  }
}

TEST_CASE("check_pr1") {
  auto heis = catalog_heisenberg3(Rational(1));
  ProductTable good = compute_product(heis.algebra, heis.form);
  CHECK(check_pr1(good, heis.algebra).ok);

  // hand-built bad table: xy = z AND yx = z (commutator 0 != z)
  ProductTable bad(3);
  bad.p(0, 1, 2) = 1;
  bad.p(1, 0, 2) = 1;
  ConditionReport rep = check_pr1(bad, heis.algebra);
  CHECK(!rep.ok);
  CHECK(rep.witness().index[0] == 0);
  CHECK(rep.witness().index[1] == 1);
  CHECK(rep.witness().arity == 2);

  CHECK(check_pr1(half_bracket_table(sl2()), sl2()).ok);
}

TEST_CASE("check_pr2") {
  auto heis = catalog_heisenberg3(Rational(-3));
  CHECK(check_pr2(compute_product(heis.algebra, heis.form), heis.form).ok);

  // Cor 4.11 with the orthonormal form: (sx,y) + (x,sy) = a + (-a) = 0
  auto cor = catalog_cor411(Rational(2));
  CHECK(check_pr2(cor.expected_product, cor.form).ok);

  // hand-built failure: xy = y on a 2-dim algebra with the identity form
  ProductTable bad(2);
  bad.p(0, 1, 1) = 1;
  ConditionReport rep = check_pr2(bad, BilinearForm::identity(2));
  CHECK(!rep.ok);
  CHECK(rep.witness().index == std::array<std::size_t, 3>{0, 1, 1});
  // (xy,y) + (y,xy) = (y,y) + (y,y) = 2
  CHECK(rep.witness().defect == Vec{Rational(2)});
  CHECK(rep.witness().defect == Vec{pr2_defect(bad, BilinearForm::identity(2), 0, 1, 1)});
}

TEST_CASE("check_pr3: Heisenberg passes, sl2 fails with defect h at (h,e,f)") {
  auto heis = catalog_heisenberg3(Rational(1));
  CHECK(check_pr3(compute_product(heis.algebra, heis.form), heis.algebra).ok);

  LieAlgebra l = sl2();
  ProductTable t = compute_product(l, killing_form(l));
  ConditionReport rep = check_pr3(t, l);
  CHECK(!rep.ok);
  // the defect at the triple (h,e,f) is exactly h
  CHECK(pr3_defect(t, l, 0, 1, 2) == unit(3, 0));
  // and the report contains that violating triple
  bool found = false;
  for (const auto& v : rep.violations)
    if (v.index == std::array<std::size_t, 3>{0, 1, 2}) {
      found = true;
      CHECK(v.defect == unit(3, 0));
    }
  CHECK(found);
  // witness is the lexicographically first violating triple
  CHECK(rep.witness().index <= rep.violations.back().index);

  CHECK(check_pr3(ProductTable(3), l).ok);  // zero table trivially passes
}

TEST_CASE("check_pr3_prime agrees with check_pr3 whenever PR1 holds") {
  auto heis = catalog_heisenberg3(Rational(2));
  ProductTable t = compute_product(heis.algebra, heis.form);
  CHECK(check_pr3_prime(t).ok);

  // sl2 half-bracket: PR1 holds, PR3 fails, so PR3' must fail too
  LieAlgebra l = sl2();
  ProductTable ts = half_bracket_table(l);
  CHECK(!check_pr3_prime(ts).ok);
  CHECK(check_pr3_prime(ProductTable(3)).ok);

  // triple-by-triple agreement under PR1
  testsupport::Rng rng(7043);
  auto lib = testsupport::template_library();
  for (int iter = 0; iter < 15; ++iter) {
    auto [alg, form] = testsupport::random_instance(rng, lib);
    ProductTable p = compute_product(alg, form);
    REQUIRE(check_pr1(p, alg).ok);
    for (std::size_t i = 0; i < alg.dim(); ++i)
      for (std::size_t j = 0; j < alg.dim(); ++j)
        for (std::size_t k = 0; k < alg.dim(); ++k)
          CHECK(vec_is_zero(pr3_defect(p, alg, i, j, k)) ==
                vec_is_zero(pr3_prime_defect(p, i, j, k)));
  }
}

TEST_CASE("EQUIVALENCE: the Eq.-(1) product always satisfies PR1 and PR2") {
  testsupport::Rng rng(7044);
  auto lib = testsupport::template_library();
  for (int iter = 0; iter < 100; ++iter) {
    auto [alg, form] = testsupport::random_instance(rng, lib);
    ProductTable p = compute_product(alg, form);
    CHECK(check_pr1(p, alg).ok);
    CHECK(check_pr2(p, form).ok);
  }
}

TEST_CASE("UNIQUENESS: recompute under a permuted basis and transport back") {
  testsupport::Rng rng(7045);
  auto lib = testsupport::template_library();
  for (int iter = 0; iter < 20; ++iter) {
    auto [alg, form] = testsupport::random_instance(rng, lib);
    const std::size_t n = alg.dim();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
    Matrix q(n, n);
    for (std::size_t i = 0; i < n; ++i) q.at(perm[i], i) = 1;

    LieAlgebra alg_p = alg.change_basis(q);
    BilinearForm form_p{q.transpose() * form.gram() * q};
    ProductTable p_direct = compute_product(alg, form);
    ProductTable p_permuted = compute_product(alg_p, form_p);
    // transport the permuted table back to the original basis
    CHECK(p_permuted.change_basis(*inverse(q)) == p_direct);
  }
}

TEST_CASE("SKEWNESS: left multiplication is skew-adjoint for Eq.-(1) products") {
  testsupport::Rng rng(7046);
  auto lib = testsupport::template_library();
  for (int iter = 0; iter < 25; ++iter) {
    auto [alg, form] = testsupport::random_instance(rng, lib);
    ProductTable p = compute_product(alg, form);
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      Matrix l_u = p.left_mult(unit(alg.dim(), i));
      CHECK(form.adjoint(l_u) == l_u.scaled(Rational(-1)));
    }
  }
}

TEST_CASE("is_pseudo_riemannian / is_riemann_lie") {
  auto heis = catalog_heisenberg3(Rational(1));
  PRCheck chk = is_pseudo_riemannian(heis.algebra, heis.form);
  CHECK(chk.pass());
  CHECK(chk.report.pr3_prime.ok);
  CHECK(!is_riemann_lie(heis.algebra, heis.form));  // indefinite form

  LieAlgebra l = sl2();
  CHECK(!is_pseudo_riemannian(l, killing_form(l)).pass());

  auto aff = catalog_dim2_nonabelian();
  CHECK(!is_pseudo_riemannian(aff.algebra, BilinearForm::identity(2)).pass());

  CHECK(is_riemann_lie(LieAlgebra::abelian(3), BilinearForm::identity(3)));
  auto cor = catalog_cor411(Rational(1));
  CHECK(is_riemann_lie(cor.algebra, cor.form));
}

TEST_CASE("product change_basis composes with scaling (rescaling remark)") {
  // rate-a instance in basis s/a, x/a, y/a equals the rate-1 table
  const Rational a(3);
  auto cor_a = catalog_cor411(a);
  auto cor_1 = catalog_cor411(Rational(1));
  ProductTable t_a = compute_product(cor_a.algebra, cor_a.form);
  Matrix q = Matrix::identity(3).scaled(a.reciprocal());
  CHECK(t_a.change_basis(q) == compute_product(cor_1.algebra, cor_1.form));
}

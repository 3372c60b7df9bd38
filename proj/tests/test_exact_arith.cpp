#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "urs/families.hpp"
#include "urs/poly.hpp"
#include "urs/text_format.hpp"

using namespace urs;
using urs::test::random_nonzero_poly;
using urs::test::z_poly;

namespace {
Poly P(const char* lit) { return parse_poly(lit); }
}

TEST_CASE("gauss rat field axioms on samples") {
  GaussRat i = GaussRat::imaginary_unit();
  CHECK(i * i == GaussRat(-1));
  GaussRat a = parse_gauss_rat("1/2-3/4i");
  CHECK(a * a.inverse() == GaussRat(1));
  CHECK(a.norm() == mpq_class(13, 16));
  CHECK((a + a.conj()).im == 0);
}

TEST_CASE("poly gcd shared factor") {
  CHECK(poly_gcd(P("[-1,0,1]"), P("[-1,1]")) == P("[-1,1]"));
}

TEST_CASE("poly gcd of monomials") {
  CHECK(poly_gcd(P("[0,0,1]"), P("[0,0,0,1]")) == P("[0,0,1]"));
}

TEST_CASE("gcd rejects two zero inputs") {
  CHECK_THROWS_AS(poly_gcd(Poly::zero(), Poly::zero()), std::domain_error);
}

TEST_CASE("frank-reinders polynomial has simple zeros") {
  Poly p = construct_frank_reinders(11, GaussRat(3)).poly;
  CHECK(poly_gcd(p, derivative(p)).degree() == 0);
}

TEST_CASE("squarefree decomposition z^3 (z-1)^2") {
  Poly p = P("[0,0,0,1]") * P("[-1,1]") * P("[-1,1]");
  auto sfd = squarefree_decomposition(p);
  REQUIRE(sfd.size() == 2);
  CHECK(sfd[0].first == P("[-1,1]"));
  CHECK(sfd[0].second == 2);
  CHECK(sfd[1].first == P("[0,1]"));
  CHECK(sfd[1].second == 3);
}

TEST_CASE("squarefree decomposition of frank-reinders derivative") {
  // P' = (n(n-1)(n-2)/2) z^(n-3) (z-1)^2 for n = 11
  Poly dp = derivative(construct_frank_reinders(11, GaussRat(3)).poly);
  auto sfd = squarefree_decomposition(dp);
  REQUIRE(sfd.size() == 2);
  CHECK(sfd[0] == std::pair<Poly, int>(P("[-1,1]"), 2));
  CHECK(sfd[1] == std::pair<Poly, int>(P("[0,1]"), 8));
  Poly expected = GaussRat::rational(11L * 10 * 9, 2) *
                  (Poly::monomial(8) * P("[-1,1]").pow(2));
  CHECK(dp == expected);
}

TEST_CASE("squarefree input is its own decomposition") {
  Poly p = P("[2, 0, 3, 1]");
  auto sfd = squarefree_decomposition(p);
  REQUIRE(sfd.size() == 1);
  CHECK(sfd[0].first == p.monic());
  CHECK(sfd[0].second == 1);
}

TEST_CASE("derivative of constant is zero") {
  CHECK(derivative(P("[7]")).is_zero());
  CHECK(derivative(Poly::zero()).is_zero());
}

TEST_CASE("derivative of the double-binomial antiderivative") {
  for (auto [m, n] : {std::pair{2, 3}, std::pair{3, 4}}) {
    GaussRat a = GaussRat::rational(1, 2), b(2);
    Poly q = bc_base_polynomial(m, n, a, b);
    CHECK(derivative(q) == Poly::linear_root(a).pow(n) * Poly::linear_root(b).pow(m));
  }
}

TEST_CASE("derivative of z^n + a z^(n-m) + b factors") {
  int n = 9, m = 3;
  GaussRat a(5), b(7);
  Poly p = Poly::monomial(n) + Poly::monomial(n - m, a) + Poly::constant(b);
  Poly expected = GaussRat(n) * (Poly::monomial(n - m - 1) *
                                 (Poly::monomial(m) +
                                  Poly::constant(a * GaussRat(n - m) / GaussRat(n))));
  CHECK(derivative(p) == expected);
}

TEST_CASE("critical value resultant of z^2 is proportional to w") {
  Poly r = critical_value_resultant(P("[0,0,1]"));
  CHECK(r.degree() == 1);
  CHECK(r[0].is_zero());
}

TEST_CASE("critical value resultant rejects low degree") {
  CHECK_THROWS_AS(critical_value_resultant(P("[1,1]")), std::domain_error);
}

TEST_CASE("frank-reinders critical values are -c and 1-c") {
  Poly p = construct_frank_reinders(11, GaussRat(3)).poly;
  Poly r = critical_value_resultant(p);
  // distinct roots {-3, -2}
  Poly expected = Poly::linear_root(GaussRat(-3)) * Poly::linear_root(GaussRat(-2));
  CHECK(squarefree_part(r) == expected);
  CHECK(p.eval(GaussRat(0)) == GaussRat(-3));
  CHECK(p.eval(GaussRat(1)) == GaussRat(-2));
}

TEST_CASE("critical values of z^3 - 3z") {
  Poly r = critical_value_resultant(P("[0,-3,0,1]"));
  CHECK(squarefree_part(r) == P("[-4,0,1]"));  // w^2 - 4
}

TEST_CASE("resultant agrees with product over roots on a small case") {
  // res(f, g) = lc(f)^deg g * prod g(root of f): f = (z-1)(z-2), g = z^2 + 1
  Poly f = P("[2,-3,1]");
  Poly g = P("[1,0,1]");
  CHECK(resultant(f, g) == g.eval(GaussRat(1)) * g.eval(GaussRat(2)));
  CHECK(resultant(f, g) == resultant(g, f));  // even degrees: sign +
}

TEST_CASE("affine substitute identity and shift") {
  Poly p = P("[-1,0,1]");
  CHECK(affine_substitute(p, GaussRat(1), GaussRat(0)) == p);
  CHECK(affine_substitute(p, GaussRat(1), GaussRat(1)) == P("[0,2,1]"));
  CHECK_THROWS_AS(affine_substitute(p, GaussRat(0), GaussRat(1)), std::invalid_argument);
}

TEST_CASE("li-yang shape under translation") {
  int n = 7, m = 2;
  GaussRat a(2), b(5), beta(3);
  Poly p = Poly::monomial(n) + Poly::monomial(n - m, a) + Poly::constant(b);
  Poly shifted = affine_substitute(p, GaussRat(1), -beta);
  Poly direct = compose(Poly::monomial(n), Poly::linear_root(beta)) +
                a * compose(Poly::monomial(n - m), Poly::linear_root(beta)) +
                Poly::constant(b);
  CHECK(shifted == direct);
}

TEST_CASE("reversal moves the near-leading term") {
  int n = 9;
  Poly p = Poly::monomial(n) + Poly::monomial(n - 1) + Poly::constant(GaussRat(1));
  Poly rev = reversal(p);
  CHECK(rev == Poly::monomial(n) + Poly({GaussRat(1), GaussRat(1)}));
}

TEST_CASE("reversal of the half-constant frank-reinders variant") {
  int n = 11;
  GaussRat c(3);
  GaussRat half = GaussRat::rational(1, 2);
  Poly p = Poly::monomial(n, GaussRat::rational(1L * (n - 1) * (n - 2), 2)) +
           Poly::monomial(n - 1, GaussRat(-1L * n * (n - 2))) +
           Poly::monomial(n - 2, GaussRat::rational(1L * n * (n - 1), 2)) -
           Poly::constant(c * half);
  Poly rev = reversal(p, n);
  Poly alz = construct_alzahary(n, c, GaussRat(1)).poly;
  CHECK(rev == (-half) * alz);
}

TEST_CASE("reversal is an involution away from zero constant term") {
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    Poly p = random_nonzero_poly(rng, 6);
    if (p.constant_term().is_zero() || p.degree() < 1) continue;
    CHECK(reversal(reversal(p)) == p);
  }
  CHECK_THROWS_AS(reversal(P("[1,2,3]"), 1), std::invalid_argument);
}

TEST_CASE("gcd divides both inputs exactly") {
  std::mt19937 rng(11);
  for (int t = 0; t < 60; ++t) {
    Poly p = random_nonzero_poly(rng, 5);
    Poly q = random_nonzero_poly(rng, 5);
    Poly g = poly_gcd(p, q);
    CHECK(divmod(p, g).rem.is_zero());
    CHECK(divmod(q, g).rem.is_zero());
  }
}

TEST_CASE("squarefree decomposition reconstructs and is pairwise coprime") {
  std::mt19937 rng(13);
  for (int t = 0; t < 40; ++t) {
    // build with deliberate repeated factors
    Poly p = random_nonzero_poly(rng, 2);
    Poly q = random_nonzero_poly(rng, 2);
    Poly prod = p * q.pow(2);
    if (prod.degree() < 1) continue;
    auto sfd = squarefree_decomposition(prod);
    Poly rebuilt = Poly::constant(GaussRat(1));
    for (const auto& [f, m] : sfd) {
      rebuilt = rebuilt * f.pow(m);
      CHECK(f == f.monic());
    }
    CHECK(rebuilt == prod.monic());
    for (size_t i = 0; i < sfd.size(); ++i)
      for (size_t j = i + 1; j < sfd.size(); ++j)
        CHECK(poly_gcd(sfd[i].first, sfd[j].first).degree() == 0);
    for (size_t i = 0; i + 1 < sfd.size(); ++i)
      CHECK(sfd[i].second < sfd[i + 1].second);
  }
}

TEST_CASE("derivative degree and multiplicity mass") {
  std::mt19937 rng(17);
  for (int t = 0; t < 40; ++t) {
    Poly p = random_nonzero_poly(rng, 6);
    if (p.degree() < 1) continue;
    Poly dp = derivative(p);
    CHECK(dp.degree() == p.degree() - 1);
    if (dp.degree() >= 1) {
      int mass = 0;
      for (const auto& [f, m] : squarefree_decomposition(dp)) mass += m * f.degree();
      CHECK(mass == p.degree() - 1);
    }
  }
}

TEST_CASE("affine substitution round trip") {
  std::mt19937 rng(19);
  for (int t = 0; t < 40; ++t) {
    Poly p = random_nonzero_poly(rng, 6);
    GaussRat alpha = urs::test::random_small_gauss(rng);
    if (alpha.is_zero()) alpha = GaussRat(1, 2);
    GaussRat beta = urs::test::random_small_gauss(rng);
    Poly q = affine_substitute(p, alpha, beta);
    CHECK(affine_substitute(q, alpha.inverse(), -beta / alpha) == p);
  }
}

TEST_CASE("distinct critical values never exceed distinct critical points") {
  std::mt19937 rng(23);
  for (int t = 0; t < 25; ++t) {
    Poly p = random_nonzero_poly(rng, 6);
    if (p.degree() < 2) continue;
    int k = squarefree_degree(derivative(p));
    int values = squarefree_degree(critical_value_resultant(p));
    CHECK(values <= k);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "test_support.hpp"
#include "urs/certifier.hpp"
#include "urs/families.hpp"
#include "urs/text_format.hpp"

using namespace urs;

namespace {

bool has_failure(const FamilyValidationError& e, const std::string& name) {
  const auto& cs = e.conditions();
  return std::find(cs.begin(), cs.end(), name) != cs.end();
}

template <typename F>
std::vector<std::string> capture_failures(F&& f) {
  try {
    f();
  } catch (const FamilyValidationError& e) {
    return e.conditions();
  }
  return {};
}

}  // namespace

TEST_CASE("li-yang valid instance carries k = m+1 and the cardinality") {
  auto inst = construct_li_yang(13, 2, GaussRat(1), GaussRat(2), Mode::Meromorphic,
                                LiYangThreshold::Yi13);
  CHECK(inst.ok());
  CHECK(inst.poly.degree() == 13);
  CHECK(inst.published_k == 3);
  CHECK(inst.cardinality_claim == 13);
  CHECK(poly_gcd(inst.poly, derivative(inst.poly)).degree() == 0);
  CHECK(critical_structure(inst.poly).k == 3);
}

TEST_CASE("li-yang exponent coprimality is enforced") {
  // gcd(13, 11) = 1 passes; gcd(12, 9) = 3 fails
  CHECK_NOTHROW(construct_li_yang(13, 2, GaussRat(1), GaussRat(2), Mode::Meromorphic,
                                  LiYangThreshold::Yi13));
  try {
    construct_li_yang(12, 3, GaussRat(1), GaussRat(2), Mode::Meromorphic,
                      LiYangThreshold::Yi13);
    FAIL("expected validation error");
  } catch (const FamilyValidationError& e) {
    CHECK(has_failure(e, "coprime_exponents"));
  }
}

TEST_CASE("li-yang thresholds differ by rule") {
  // n = 15, m = 2: 15 > 14 passes the stricter rule
  CHECK(construct_li_yang(15, 2, GaussRat(1), GaussRat(2), Mode::Meromorphic,
                          LiYangThreshold::LiYang15)
            .ok());
  // n = 13, m = 2 passes Yi13 (13 > 12) but not LiYang15 (13 <= 14)
  auto fails = capture_failures([] {
    construct_li_yang(13, 2, GaussRat(1), GaussRat(2), Mode::Meromorphic,
                      LiYangThreshold::LiYang15);
  });
  CHECK(std::find(fails.begin(), fails.end(), "degree_threshold") != fails.end());
}

TEST_CASE("li-yang entire mode admits m = 1 and lower degree") {
  auto inst = construct_li_yang(7, 1, GaussRat(1), GaussRat(2), Mode::Entire,
                                LiYangThreshold::Yi13);
  CHECK(inst.ok());
  CHECK(inst.mode == Mode::Entire);
}

TEST_CASE("an family valid instance") {
  auto inst = construct_an(13, 1, GaussRat(1), GaussRat(2), GaussRat(1));
  CHECK(inst.ok());
  CHECK(inst.poly.degree() == 13);
  CHECK(poly_gcd(inst.poly, derivative(inst.poly)).degree() == 0);
}

TEST_CASE("an family rejects a^2 = 4b and even gcd") {
  try {
    construct_an(13, 1, GaussRat(2), GaussRat(1), GaussRat(1));
    FAIL("expected validation error");
  } catch (const FamilyValidationError& e) {
    CHECK(has_failure(e, "discriminant_excluded"));
  }
  try {
    construct_an(14, 1, GaussRat(1), GaussRat(2), GaussRat(1));
    FAIL("expected validation error");
  } catch (const FamilyValidationError& e) {
    CHECK(has_failure(e, "coprime_exponents"));
  }
}

TEST_CASE("frank-reinders valid instance") {
  auto inst = construct_frank_reinders(11, GaussRat(3));
  CHECK(inst.ok());
  CHECK(inst.published_k == 2);
  CHECK(inst.cardinality_claim == 11);
  // leading block: 45 z^11 - 99 z^10 + 55 z^9 - 3
  CHECK(inst.poly[11] == GaussRat(45));
  CHECK(inst.poly[10] == GaussRat(-99));
  CHECK(inst.poly[9] == GaussRat(55));
  CHECK(inst.poly[0] == GaussRat(-3));
  // P(1) - P(0) = 1 exactly
  CHECK(inst.poly.eval(GaussRat(1)) - inst.poly.eval(GaussRat(0)) == GaussRat(1));
}

TEST_CASE("frank-reinders exclusions") {
  try {
    construct_frank_reinders(11, GaussRat(1));
    FAIL("expected validation error");
  } catch (const FamilyValidationError& e) {
    CHECK(has_failure(e, "c_excluded"));
  }
  try {
    construct_frank_reinders(10, GaussRat(3));
    FAIL("expected validation error");
  } catch (const FamilyValidationError& e) {
    CHECK(has_failure(e, "degree_threshold"));
  }
}

TEST_CASE("alzahary valid and excluded instances") {
  // a*b^9 = 3 with b = 1, a = 3
  auto inst = construct_alzahary(11, GaussRat(3), GaussRat(1));
  CHECK(inst.ok());
  CHECK(poly_gcd(inst.poly, derivative(inst.poly)).degree() == 0);
  try {
    construct_alzahary(11, GaussRat(2), GaussRat(1));  // a*b^9 = 2
    FAIL("expected validation error");
  } catch (const FamilyValidationError& e) {
    CHECK(has_failure(e, "ab_power_excluded"));
  }
  CHECK_THROWS_AS(construct_alzahary(10, GaussRat(3), GaussRat(1)),
                  FamilyValidationError);
}

TEST_CASE("bcj valid instance factors its derivative") {
  auto inst = construct_bcj(11, 1, GaussRat(5));
  CHECK(inst.ok());
  CHECK(inst.published_k == 2);
  // P' = 11 z^8 (z - 1)^2
  Poly expected = GaussRat(11) * (Poly::monomial(8) * parse_poly("[1,-2,1]"));
  CHECK(derivative(inst.poly) == expected);
}

TEST_CASE("bcj modulus and degree conditions") {
  // |c| = 2m^2/((n-m)(n-2m)) = 2/90 = 1/45 for (n,m) = (11,1)
  try {
    construct_bcj(11, 1, GaussRat::rational(1, 45));
    FAIL("expected validation error");
  } catch (const FamilyValidationError& e) {
    CHECK(has_failure(e, "modulus_excluded"));
  }
  CHECK_THROWS_AS(construct_bcj(9, 1, GaussRat(5)), FamilyValidationError);
}

TEST_CASE("bc valid instance and derivative identity") {
  auto inst = construct_bc(3, 7, GaussRat(0), GaussRat(1), GaussRat(1));
  CHECK(inst.ok());
  CHECK(inst.poly.degree() == 11);
  Poly expected = Poly::monomial(7) * Poly::linear_root(GaussRat(1)).pow(3);
  CHECK(derivative(inst.poly) == expected);
}

TEST_CASE("bc exclusions") {
  try {
    construct_bc(3, 7, GaussRat(1), GaussRat(1), GaussRat(1));  // a = b
    FAIL("expected validation error");
  } catch (const FamilyValidationError& e) {
    CHECK(has_failure(e, "a_ne_b"));
  }
  // c = -Q(a): with a = 0, Q(0) = 0 so c = 0 hits both exclusions
  try {
    construct_bc(3, 7, GaussRat(0), GaussRat(1), GaussRat(0));
    FAIL("expected validation error");
  } catch (const FamilyValidationError& e) {
    CHECK(!e.conditions().empty());
  }
}

TEST_CASE("an-hoa valid instance has full degree") {
  auto inst = construct_an_hoa(25, GaussRat(1), GaussRat(1), GaussRat(5));
  CHECK(inst.ok());
  CHECK(inst.poly.degree() == 25);
  CHECK(inst.cardinality_claim == 25);
  // the d-indexed exclusions are surfaced but not evaluated
  bool saw_unevaluated = false;
  for (const auto& c : inst.checked_conditions)
    if (c.status == CheckStatus::Unevaluated) saw_unevaluated = true;
  CHECK(saw_unevaluated);
}

TEST_CASE("an-hoa rejections") {
  CHECK_THROWS_AS(construct_an_hoa(24, GaussRat(1), GaussRat(1), GaussRat(5)),
                  FamilyValidationError);
  try {
    construct_an_hoa(25, GaussRat(1), GaussRat(0), GaussRat(5));
    FAIL("expected validation error");
  } catch (const FamilyValidationError& e) {
    CHECK(has_failure(e, "b_nonzero"));
  }
}

TEST_CASE("shift by the identity preserves the polynomial up to scale") {
  auto inst = construct_frank_reinders(11, GaussRat(3));
  auto shifted = shift_family(inst, GaussRat(1), GaussRat(0));
  CHECK(shifted.poly.monic() == inst.poly.monic());
  CHECK(shifted.cardinality_claim == inst.cardinality_claim);
  CHECK(shifted.ok());
}

TEST_CASE("shifted li-yang matches the direct substitution form") {
  auto inst = construct_li_yang(13, 2, GaussRat(1), GaussRat(2), Mode::Meromorphic,
                                LiYangThreshold::Yi13);
  GaussRat beta(5);
  // zero set S + beta corresponds to P(z - beta) = (z-b)^n + a(z-b)^{n-m} + b
  auto shifted = shift_family(inst, GaussRat(1), beta);
  Poly direct = affine_substitute(inst.poly, GaussRat(1), -beta);
  CHECK(shifted.poly.monic() == direct.monic());
  CHECK(shifted.ok());
}

TEST_CASE("shift preserves critical geometry") {
  auto inst = construct_bcj(11, 1, GaussRat(5));
  auto base = critical_structure(inst.poly);
  auto shifted = shift_family(inst, GaussRat(2, 3), GaussRat(-1, 2));
  auto after = critical_structure(shifted.poly);
  CHECK(base.k == after.k);
  CHECK(base.separation == after.separation);
  CHECK(base.no_simple_critical_zero == after.no_simple_critical_zero);
  std::vector<int> m1, m2;
  for (const auto& c : base.clusters) m1.push_back(c.multiplicity);
  for (const auto& c : after.clusters) m2.push_back(c.multiplicity);
  std::sort(m1.begin(), m1.end());
  std::sort(m2.begin(), m2.end());
  CHECK(m1 == m2);
  CHECK_THROWS_AS(shift_family(inst, GaussRat(0), GaussRat(1)), FamilyValidationError);
}

TEST_CASE("every constructor output has simple zeros") {
  std::vector<Poly> polys = {
      construct_li_yang(13, 2, GaussRat(1), GaussRat(2), Mode::Meromorphic,
                        LiYangThreshold::Yi13)
          .poly,
      construct_an(13, 1, GaussRat(1), GaussRat(2), GaussRat(1)).poly,
      construct_frank_reinders(11, GaussRat(3)).poly,
      construct_alzahary(11, GaussRat(3), GaussRat(1)).poly,
      construct_bcj(11, 1, GaussRat(5)).poly,
      construct_bc(3, 7, GaussRat(0), GaussRat(1), GaussRat(1)).poly,
      construct_an_hoa(25, GaussRat(1), GaussRat(1), GaussRat(5)).poly,
  };
  for (const auto& p : polys) CHECK(poly_gcd(p, derivative(p)).degree() == 0);
}

TEST_CASE("family ids round-trip") {
  for (FamilyId id : {FamilyId::LiYang, FamilyId::An, FamilyId::FrankReinders,
                      FamilyId::Alzahary, FamilyId::BCJ, FamilyId::BC, FamilyId::AnHoa})
    CHECK(family_id_from_str(family_id_str(id)) == id);
  CHECK(family_id_str(FamilyId::LiYang) == "li-yang");
  CHECK(family_id_str(FamilyId::FrankReinders) == "frank-reinders");
  CHECK_THROWS(family_id_from_str("nope"));
}

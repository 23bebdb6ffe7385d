#include <doctest.h>

#include "qsing/reports.hpp"
#include "support.hpp"

using namespace qsing;
using namespace qsing::testing;

namespace {

BFunctionFamily e6_family() {
  Preset p = make_preset("e6-ex1", 2, 2);
  return run_bfunction(AnalysisRequest{p.quiver, p.alpha, p.selected}).family;
}

BFunctionFamily e8_pos_family() {
  Preset p = make_preset("e8-pos", 1, 0);
  return run_bfunction(AnalysisRequest{p.quiver, p.alpha, p.selected}).family;
}

}  // namespace

TEST_CASE("generator b_c is zero exactly where a factor vanishes") {
  BFunctionFamily f = e8_pos_family();
  for (int c0 = -4; c0 <= 5; ++c0)
    for (int c1 : {1 - c0})
      for (int z0 = -4; z0 <= 2; ++z0)
        for (int z1 = -4; z1 <= 2; ++z1) {
          std::vector<int> c{c0, c1};
          std::vector<Rational> z{Rational(z0), Rational(z1)};
          CHECK(generator_vanishes(f, c, z) == (evaluate_generator(generator_bc(f, c), z) == 0));
        }
}

TEST_CASE("r = 1 membership and roots") {
  BFunctionFamily f(1, {BracketTerm{{1}, 0, 2, 1}});
  CHECK(membership_in_ztilde(f, {Rational(-1)}).kind == Membership::Kind::Member);
  CHECK(membership_in_ztilde(f, {Rational(-3)}).kind == Membership::Kind::NonMember);
  auto roots = bfunction_roots(f);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].first == -1);
}

TEST_CASE("E8 point (9,-7) is not good and not in the zero set") {
  BFunctionFamily f = e8_pos_family();
  std::vector<Rational> z{Rational(9), Rational(-7)};
  CHECK_FALSE(is_good(z, 2));
  Membership m = membership_in_ztilde(f, z);
  CHECK(m.exact);
  REQUIRE(m.kind == Membership::Kind::NonMember);
  CHECK(m.witness_c == std::vector<int>{4, -3});
  CHECK(evaluate_generator(generator_bc(f, m.witness_c), z) != 0);
}

TEST_CASE("E8 point (7,-6) is a non-good member") {
  BFunctionFamily f = e8_pos_family();
  std::vector<Rational> z{Rational(7), Rational(-6)};
  CHECK_FALSE(is_good(z, 2));
  Membership m = membership_in_ztilde(f, z);
  CHECK(m.exact);
  CHECK(m.kind == Membership::Kind::Member);
  CertifyResult c = certify_all_good(f);
  CHECK(c.kind == CertifyResult::Kind::Refuted);
}

TEST_CASE("E6 case split certificate is accepted and survives tampering checks") {
  BFunctionFamily f = e6_family();
  CHECK(check_form_assumption(f));
  CertifyResult c = certify_all_good(f);
  REQUIRE(c.kind == CertifyResult::Kind::Certificate);
  CHECK(verify_certificate(c.certificate).ok);
  CHECK(c.certificate.root.open_leaves() == 0);

  CaseCertificate bad = c.certificate;
  bad.root.rule = CaseRule::Inconclusive;
  bad.root.children.clear();
  CHECK_FALSE(verify_certificate(bad).ok);

  CaseCertificate dropped = c.certificate;
  REQUIRE(dropped.root.children.size() > 1);
  dropped.root.children.pop_back();
  CHECK_FALSE(verify_certificate(dropped).ok);

  CaseCertificate wrong_family = c.certificate;
  auto terms = wrong_family.family.terms();
  terms[0].b += 1;
  wrong_family.family = BFunctionFamily(wrong_family.family.r(), terms);
  CHECK_FALSE(verify_certificate(wrong_family).ok);
}

TEST_CASE("single-variable reduction") {
  BFunctionFamily f = e6_family();
  CHECK(reduc_a(f, {1, 3}).applies);
  auto pos = e8_pos_family();
  CHECK_FALSE(reduc_a(pos, {1}).applies);
}

TEST_CASE("verdicts") {
  Quiver a2 = a_linear(2);
  Verdict v = rational_singularities_verdict(a2, DimVector{1, 1}, {});
  CHECK(v.kind == VerdictKind::RationalSingularities);
  REQUIRE(v.largest_root);
  CHECK(*v.largest_root == -1);
  CHECK(v.largest_root_multiplicity == 1);

  Preset p = make_preset("e8-pos", 1, 0);
  Verdict w = rational_singularities_verdict(p.quiver, p.alpha, p.selected, {});
  CHECK(w.kind == VerdictKind::NotCertified);
  REQUIRE(w.witness);
  CHECK(*w.witness == std::vector<Rational>{Rational(7), Rational(-6)});
}

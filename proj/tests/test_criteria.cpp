#include "oracles.hpp"
#include "qreider/criteria.hpp"
#include "qreider/errors.hpp"
#include "qreider/hirzebruch.hpp"

#include <doctest.h>

using namespace qreider;

namespace {

const Rational eps(1, 10);

bool all_hold(const CriterionVerdict& v) {
  for (const auto& t : v.trace)
    if (!t.holds) return false;
  return true;
}

const TraceEntry* find_entry(const CriterionVerdict& v, const std::string& text) {
  for (const auto& t : v.trace)
    if (t.text == text) return &t;
  return nullptr;
}

LocalConfig config(std::vector<LocalCurve> curves) { return LocalConfig{std::move(curves)}; }

}  // namespace

TEST_CASE("adjoint systems on curves") {
  CHECK(curve_adjoint_check(3) == CurveAdjoint::very_ample);
  CHECK(curve_adjoint_check(2) == CurveAdjoint::base_point_free);
  CHECK(curve_adjoint_check(Rational(5, 2)) == CurveAdjoint::base_point_free);
  CHECK(curve_adjoint_check(1) == CurveAdjoint::none);
}

TEST_CASE("jets at high multiplicity") {
  CHECK(jet_separation(2, 0).established());
  CHECK_FALSE(jet_separation(0, 0).established());
  CHECK(jet_separation(Rational(7, 2), 1).established());
  CHECK_FALSE(jet_separation(Rational(5, 2), 1).established());
  CHECK(jet_separation(2, 0).rule == rules::jet);
}

TEST_CASE("min formula") {
  CHECK(min_formula(0, 3) == Rational(3, 2));
  for (int b = 1; b <= 5; ++b) CHECK(min_formula(1, b) == 1);
  CHECK(min_formula(Rational(1, 2), 2) == Rational(4, 3));
  CHECK(min_formula(Rational(1, 2), 2) == std::min(Rational(3, 2), Rational(2) / Rational(3, 2)));
  CHECK_THROWS_AS(min_formula(0, 1), DomainError);
  CHECK_THROWS_AS(min_formula(2, 3), DomainError);
}

TEST_CASE("freeness") {
  SUBCASE("worked example with the stated witness") {
    const auto v = freeness_at(0, Rational(1239, 100), Rational(19, 10), BetaWitness::global(3, Rational(3, 2)));
    CHECK(v.established());
    CHECK(v.rule == rules::free_beta);
    CHECK(v.witness->flat() == std::vector<Rational>{3, Rational(3, 2)});
  }
  SUBCASE("high multiplicity") {
    const auto v = freeness_at(2, 0, 0);
    CHECK(v.established());
    CHECK(v.rule == rules::free_high);
  }
  SUBCASE("M^2 too small for beta2 >= 2") {
    const auto v = freeness_at(0, 4, 100);
    CHECK_FALSE(v.established());
    CHECK(v.trace.back().text == "M^2 > (2-mu)^2");
    CHECK_FALSE(freeness_witness(0, 4, 100).has_value());
  }
  SUBCASE("witness search (0, 12, 4)") {
    const auto w = freeness_witness(0, 12, 4);
    REQUIRE(w);
    const Rational b2 = *w->find_beta2(WitnessRole::at_p);
    const Rational b1 = *w->find_beta1(WitnessRole::at_p);
    CHECK(b2 >= 2);
    CHECK(b2 * b2 < 12);
    CHECK(b1 <= 4);
    CHECK(b1 >= b2 / (b2 - 1));
    CHECK(freeness_at(0, 12, 4, w).established());
    // the spec's sample witness also verifies
    CHECK(freeness_at(0, 12, 4, BetaWitness::global(Rational(12, 5), 2)).established());
  }
  SUBCASE("witness search (1, 9, 1)") {
    const auto w = freeness_witness(1, 9, 1);
    REQUIRE(w);
    CHECK(*w->find_beta2(WitnessRole::at_p) < 3);
    CHECK(*w->find_beta1(WitnessRole::at_p) == 1);
  }
  SUBCASE("a rejected witness leaves a failing trace entry") {
    const auto v = freeness_at(0, 9, 4, BetaWitness::global(3, Rational(3, 2)));
    CHECK_FALSE(v.established());
    CHECK_FALSE(find_entry(v, "M^2 > beta2^2")->holds);
  }
  SUBCASE("established verdicts have every trace entry holding") {
    for (int m2 = 1; m2 <= 30; ++m2)
      for (int d = 0; d <= 6; ++d) {
        const auto v = freeness_at(Rational(1, 3), m2, d);
        CHECK(v.established() == all_hold(v));
      }
  }
  CHECK_THROWS_AS(freeness_at(-1, 1, 1), DomainError);
}

TEST_CASE("separation") {
  CHECK(separation(2, 2, 0, 0, 0, 0).established());
  CHECK(separation(2, 2, 0, 0, 0, 0).rule == rules::sep_both_high);

  SUBCASE("two points on a fiber off the section") {
    const Rational alpha(1, 20);
    const Rational mu = 1 - alpha;
    const Rational b1 = 1 + eps / 2;
    // n = 1 on the family B' = (1-e)G + (1-a)F
    const Rational m2 = oracle::hirz_dot(1, 2 + eps, 3 + alpha, 2 + eps, 3 + alpha);
    CHECK(m2 > 2 * Rational(9, 4));
    const Rational mf = 2 + eps;
    const auto v = separation(mu, mu, m2, mf, mf, mf, BetaWitness::pair(Rational(3, 2), b1, Rational(3, 2), b1));
    CHECK(v.established());
    CHECK(v.rule == rules::sep_beta);
  }
  SUBCASE("M^2 = 8 cannot carry two budgets of 2") {
    const auto v = separation(0, 0, 8, 100, 100, 100);
    CHECK_FALSE(v.established());
    CHECK(v.trace.front().text == "M^2 > (2-mu_p)^2 + (2-mu_q)^2");
  }
  SUBCASE("one high point reports the low point's witness") {
    const auto v = separation(3, 0, 12, 100, 4, 100);
    CHECK(v.established());
    CHECK(v.rule == rules::sep_one_high);
    REQUIRE(v.witness);
    CHECK(v.witness->find_beta2(WitnessRole::at_q).has_value());
    CHECK(separation(3, 0, 12, 100, 4, 100, v.witness).established());
    const auto w = separation(0, 3, 12, 4, 100, 100);
    CHECK(w.established());
    CHECK(w.witness->find_beta2(WitnessRole::at_p).has_value());
  }
  SUBCASE("searched witness verifies") {
    const auto w = separation_witness(Rational(1, 2), 0, 20, 3, 3, 5);
    REQUIRE(w);
    CHECK(separation(Rational(1, 2), 0, 20, 3, 3, 5, w).established());
  }
}

TEST_CASE("tangent separation") {
  SUBCASE("along the section at G.F, n = 1, m = 2") {
    const int n = 1;
    const Rational mu = 1 - eps;
    const Rational m2 = (2 + eps) * (2 * n + 6 - eps * n);
    const auto v = tangent_separation(mu, mu, m2, 2 + eps, 3 - eps * n,
                                      BetaWitness::tangent(2, 2, Rational(2) / (2 - eps)));
    CHECK(v.established());
    CHECK(v.rule == rules::tan_beta);
    CHECK(v.witness->flat() == std::vector<Rational>{2, 2, Rational(2) / (2 - eps)});
  }
  CHECK(tangent_separation(3, 0, 0, 0, 0).established());
  CHECK(tangent_separation(3, 0, 0, 0, 0).rule == rules::tan_high);
  CHECK(tangent_separation(2, 2, 0, 0, 0).established());
  SUBCASE("mid range") {
    const auto v = tangent_separation(2, 1, 2, 1, 1);  // mu_v = 3, gap 1
    CHECK(v.rule == rules::tan_mid);
    CHECK(v.established());
    CHECK_FALSE(tangent_separation(2, 1, 1, 1, 1).established());
  }
  SUBCASE("bound on beta1") {
    CHECK(tangent_beta1_bound(0, 2, 2) == 2);
    CHECK(tangent_beta1_bound(0, 3, 3) == Rational(3, 2));
    CHECK(tangent_beta1_bound(2 * (1 - eps), 2, 2) == Rational(2) / (2 - eps));
    CHECK(tangent_beta1_bound(Rational(5, 2), 2, 2) == Rational(3, 4));
  }
  SUBCASE("searched witness verifies") {
    const auto w = tangent_witness(Rational(1, 2), Rational(1, 4), 20, 3, 5);
    REQUIRE(w);
    CHECK(tangent_separation(Rational(1, 2), Rational(1, 4), 20, 3, 5, w).established());
  }
  CHECK_THROWS_AS(tangent_separation(1, 2, 10, 1, 1), DomainError);
  CHECK_THROWS_AS(tangent_separation(-1, 0, 10, 1, 1), DomainError);
}

TEST_CASE("global very ampleness") {
  CHECK(very_ampleness(9, 4, BetaWitness::global(2, 2)).established());
  SUBCASE("M^2 = 8 fails for every witness") {
    const auto v = very_ampleness(8, 100);
    CHECK_FALSE(v.established());
    CHECK(v.trace.back().text == "M^2 > 2*2^2");
    CHECK(v.trace.back().lhs == 8);
    CHECK_FALSE(very_ampleness(8, 100, BetaWitness::global(2, 2)).established());
  }
  SUBCASE("(12, 4)") {
    CHECK(very_ampleness(12, 4, BetaWitness::global(Rational(12, 5), Rational(12, 7))).established());
    const auto w = very_ampleness_witness(12, 4);
    REQUIRE(w);
    CHECK(very_ampleness(12, 4, w).established());
  }
}

TEST_CASE("the 2 + sqrt2 criterion") {
  CHECK_FALSE(very_ampleness_sqrt2(12, Rational(341, 100)).established());
  const auto v = very_ampleness_sqrt2(12, Rational(342, 100));
  CHECK(v.established());
  REQUIRE(v.witness);
  CHECK(very_ampleness(12, Rational(342, 100), v.witness).established());
  CHECK(very_ampleness_sqrt2(12, Rational(7, 2)).established());
  CHECK(find_entry(v, "(M^2 - 6)^2 > 32")->lhs == 36);
  CHECK(find_entry(v, "(mindeg - 2)^2 > 2")->lhs == Rational(20164, 10000));
  CHECK_FALSE(very_ampleness_sqrt2(Rational(23, 2), 100).established());  // 11.5 < 6 + 4 sqrt2
  CHECK(exceeds_two_plus_sqrt2(Rational(342, 100)));
  CHECK_FALSE(exceeds_two_plus_sqrt2(Rational(341, 100)));
  CHECK_FALSE(exceeds_two_plus_sqrt2(-10));
  CHECK(exceeds_two_plus_sqrt2_squared(Rational(1166, 100)));
  CHECK_FALSE(exceeds_two_plus_sqrt2_squared(Rational(1165, 100)));
}

TEST_CASE("PLC threshold") {
  SUBCASE("single smooth curve") {
    const auto r = plc_threshold(config({{"C", 0, 2}}));
    CHECK_FALSE(r.plc);
    CHECK(r.c == Rational(1, 2));
    CHECK(r.critical == std::vector<std::size_t>{0});
  }
  SUBCASE("critical curve among several") {
    const auto r = plc_threshold(config({{"A", Rational(1, 4), Rational(1, 2)},
                                         {"C0", Rational(1, 2), Rational(3, 4)},
                                         {"B", Rational(1, 3), Rational(1, 3)}}));
    CHECK(r.c == Rational(2, 3));
    CHECK(r.critical == std::vector<std::size_t>{1});
    CHECK(r.critical_terms == std::vector<std::string>{"(1-b)/d:C0"});
  }
  SUBCASE("already PLC") {
    const auto r = plc_threshold(config({{"A", Rational(1, 2), Rational(1, 2)}, {"B", 0, 1}}));
    CHECK(r.plc);
  }
  SUBCASE("ties list every achiever") {
    const auto r = plc_threshold(config({{"A", 0, 2}, {"B", 0, 2}}));
    CHECK(r.critical == std::vector<std::size_t>{0, 1});
  }
  SUBCASE("basic mode warns when ord_p(D) != 2 - mu") {
    CHECK(plc_threshold(config({{"C", 0, 2}})).warnings.empty());
    CHECK_FALSE(plc_threshold(config({{"C", 0, 3}})).warnings.empty());
  }
  SUBCASE("cap3 mode adds (3 - mu)/m_p") {
    const auto r = plc_threshold(config({{"C", 0, 2, 2}}), {PlcMode::cap3});
    // terms: (3-0)/4 and (1-0)/2
    CHECK(r.c == Rational(1, 2));
    const auto s = plc_threshold(config({{"C", Rational(1, 2), 1, 3}, {"D", 0, Rational(3, 2)}}), {PlcMode::cap3});
    // mu = 3/2, m_p = 9/2 -> 1/3; (1-1/2)/1 = 1/2; (1-0)/(3/2) = 2/3
    CHECK(s.c == Rational(1, 3));
    CHECK(s.critical.empty());
    CHECK(s.critical_terms == std::vector<std::string>{"(3-mu_p)/m_p"});
  }
  SUBCASE("prime mode, strict and inclusive") {
    const auto cfg = config({{"C0", Rational(1, 2), 1}, {"A", Rational(1, 2), Rational(1, 2)}});
    // terms: 1, (3 - 1)/(3/2) = 4/3, (2 - 1/2)/1 = 3/2; A has b + d = 1
    const auto strict = plc_threshold(cfg, {PlcMode::prime, 0, false});
    CHECK(strict.c == 1);
    CHECK(strict.critical_terms == std::vector<std::string>{"1"});
    const auto incl = plc_threshold(config({{"C0", Rational(1, 2), 1}, {"A", Rational(1, 4), Rational(3, 4)}}),
                                    {PlcMode::prime, 0, true});
    // A enters: (1 - 1/4)/(3/4) = 1, ties with the constant term
    CHECK(incl.c == 1);
    CHECK(incl.critical == std::vector<std::size_t>{1});
    const auto excl = plc_threshold(config({{"C0", Rational(1, 2), 1}, {"A", Rational(1, 4), Rational(3, 4)}}),
                                    {PlcMode::prime, 0, false});
    CHECK(excl.critical.empty());
    CHECK_THROWS_AS(plc_threshold(cfg, {PlcMode::prime, 5, false}), DomainError);
  }
  CHECK_THROWS_AS(plc_threshold(config({{"C", 1, 1}})), InvariantError);
  CHECK_THROWS_AS(plc_threshold(config({{"C", 0, -1}})), InvariantError);
  CHECK_THROWS_AS(plc_threshold(config({{"C", 0, 1, 0}})), InvariantError);
}

TEST_CASE("local configuration from a surface") {
  const auto model = hirzebruch_model(1);
  const auto& s = model.surface;
  const QDivisor b(s, {{"G", 1 - eps}});
  const QDivisor d(s, {{"G", Rational(1, 2)}, {"F", 1}, {"F2", 3}});
  const auto cfg = make_local_config(b, d, "p_on", "along_G");
  REQUIRE(cfg.curves.size() == 2);
  CHECK(cfg.mu() == 1 - eps);
  CHECK(cfg.m_p() == Rational(3, 2));
  CHECK(cfg.mu_V() == 1 - eps);
  CHECK(cfg.mu_v() == 2 * (1 - eps));
  CHECK(cfg.curves[0].contains_Z);
  CHECK_FALSE(cfg.curves[1].contains_Z);
  CHECK_THROWS_AS(make_local_config(b, d, "p_off", "along_G"), DomainError);
}

TEST_CASE("Riemann-Roch") {
  for (int n = 1; n <= 6; ++n) {
    const auto l = IntersectionLattice::hirzebruch(n);
    const DivisorClass k(l, {-2, -(n + 2)});
    const DivisorClass h(l, {1, n});
    CHECK(riemann_roch_chi(h, k, 1) == n + 2);
    // brute-force pairing expansion
    const DivisorClass hk = h - k;
    CHECK(riemann_roch_chi(h, k, 1) == oracle::pairing(l->gram_matrix(), h.coeffs(), hk.coeffs()) / 2 + 1);
    CHECK(riemann_roch_chi(DivisorClass::zero(l), k, 1) == 1);
  }
  const auto l1 = IntersectionLattice::hirzebruch(1);
  CHECK(intersect(DivisorClass(l1, {1, 1}), DivisorClass(l1, {3, 4})) == 4);
  CHECK(riemann_roch_chi(DivisorClass(l1, {1, 1}), DivisorClass(l1, {-2, -3}), 1) == 3);
  CHECK_THROWS_AS(riemann_roch_chi(DivisorClass(l1, {1, 1}), DivisorClass(IntersectionLattice::hirzebruch(1), {-2, -3}), 1),
                  LatticeMismatchError);
}

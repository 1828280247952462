#include "oracles.hpp"
#include "qreider/errors.hpp"
#include "qreider/hirzebruch.hpp"
#include "qreider/surface_model.hpp"

#include <doctest.h>

using namespace qreider;

namespace {

const Rational eps(1, 10);

QDivisor qd(const SurfacePtr& s, std::map<std::string, Rational> c) { return QDivisor(s, std::move(c)); }

// two curves C1, C2 through p with multiplicities 2 and 1, C3 elsewhere
std::shared_ptr<SurfaceModel> node_surface() {
  auto lat = std::make_shared<const IntersectionLattice>(
      std::vector<std::string>{"A", "B"}, std::vector<std::vector<Rational>>{{1, 0}, {0, -1}});
  auto s = std::make_shared<SurfaceModel>(lat, DivisorClass(lat, {-3, 1}), Rational(1));
  s->add_curve("C1", DivisorClass(lat, {3, 0}));
  s->add_curve("C2", DivisorClass(lat, {1, -1}));
  s->add_curve("C3", DivisorClass(lat, {0, 1}));
  s->add_point({"p", {{"C1", 2}, {"C2", 1}}});
  s->add_tangent({"v", "p", {{"C1", 0}, {"C2", 1}}, {"C2"}});
  s->add_tangent({"w", "p", {{"C1", 1}}, {"C1"}});
  return s;
}

}  // namespace

TEST_CASE("classes of Q-divisors") {
  const auto model = hirzebruch_model(1);
  const auto& s = model.surface;
  const auto g = DivisorClass::basis(s->lattice(), 0);
  CHECK(class_of(qd(s, {{"G", 1 - eps}})) == Rational(9, 10) * g);
  CHECK(class_of(QDivisor(s)) == DivisorClass::zero(s->lattice()));
  CHECK(class_of(qd(s, {{"G", Rational(1, 2) + Rational(1, 2)}})) == g);
  CHECK(class_of(qd(s, {{"F", 1}, {"F2", 1}})) == Rational(2) * DivisorClass::basis(s->lattice(), 1));
  CHECK(qd(s, {{"G", 0}}) == QDivisor(s));
  CHECK_THROWS_AS(qd(s, {{"H", 1}}), UnknownNameError);
}

TEST_CASE("rounding") {
  const auto model = hirzebruch_model(1);
  const auto& s = model.surface;
  const QDivisor m = qd(s, {{"G", 2 + eps}, {"F", 4}});
  CHECK(round_up(m) == qd(s, {{"G", 3}, {"F", 4}}));
  CHECK(round_down(m) == qd(s, {{"G", 2}, {"F", 4}}));
  CHECK(frac_part(m) == qd(s, {{"G", eps}}));
  const QDivisor l = qd(s, {{"G", 3}, {"F", -4}});
  CHECK(round_up(l) == l);
  CHECK(round_down(l) == l);
  CHECK(frac_part(l) == QDivisor(s));
  const QDivisor h = qd(s, {{"G", Rational(-3, 2)}});
  CHECK(round_up(h).coefficient("G") == -1);
  CHECK(round_down(h).coefficient("G") == -2);
  CHECK(frac_part(h).coefficient("G") == Rational(1, 2));
  CHECK(is_integral(l));
  CHECK_FALSE(is_integral(m));
  CHECK(is_boundary(qd(s, {{"G", 1 - eps}})));
  CHECK_FALSE(is_boundary(qd(s, {{"G", 1}})));
  CHECK_FALSE(is_boundary(qd(s, {{"G", -eps}})));
}

TEST_CASE("multiplicity at a point") {
  const auto model = hirzebruch_model(1);
  const auto& s = model.surface;
  CHECK(ord_at(qd(s, {{"G", 1 - eps}}), "p_on") == Rational(9, 10));
  CHECK(ord_at(qd(s, {{"G", 1 - eps}}), "p_off") == 0);
  const auto ns = node_surface();
  CHECK(ord_at(qd(ns, {{"C1", Rational(1, 2)}, {"C2", Rational(1, 3)}}), "p") == Rational(4, 3));
  CHECK(ord_at(qd(ns, {{"C3", Rational(1, 2)}}), "p") == 0);
  CHECK_THROWS_AS(ord_at(QDivisor(ns), "q"), UnknownNameError);
}

TEST_CASE("tangential orders") {
  const auto model = hirzebruch_model(1);
  const auto& s = model.surface;
  const auto o = ord_tangential(qd(s, {{"G", 1 - eps}}), "along_G");
  CHECK(o.at_point == 1 - eps);
  CHECK(o.at_infinitely_near == 1 - eps);
  CHECK(o.along_direction == 2 * (1 - eps));
  const auto z = ord_tangential(QDivisor(s), "along_G");
  CHECK(z.at_point == 0);
  CHECK(z.along_direction == 0);

  const auto ns = node_surface();
  const auto node = ord_tangential(qd(ns, {{"C1", 1}}), "v");
  CHECK(node.at_point == 2);
  CHECK(node.at_infinitely_near == 0);
  CHECK(node.along_direction == 2);
  const auto branch = ord_tangential(qd(ns, {{"C1", 1}}), "w");
  CHECK(branch.along_direction == 3);
}

TEST_CASE("point and tangent validation") {
  const auto ns = node_surface();
  CHECK_THROWS_AS(ns->add_point({"p", {}}), InvariantError);
  CHECK_THROWS_AS(ns->add_point({"q", {{"X", 1}}}), UnknownNameError);
  CHECK_THROWS_AS(ns->add_point({"q", {{"C1", -1}}}), InvariantError);
  CHECK_THROWS_AS(ns->add_tangent({"u", "p", {{"C2", 2}}, {}}), InvariantError);
  CHECK_THROWS_AS(ns->add_tangent({"u", "p", {}, {"C3"}}), InvariantError);
  CHECK_THROWS_AS(ns->add_tangent({"u", "nowhere", {}, {}}), UnknownNameError);
  CHECK_THROWS_AS(ns->add_tangent({"v", "p", {}, {}}), InvariantError);
  CHECK_THROWS_AS(ns->add_curve("C1", DivisorClass::zero(ns->lattice())), InvariantError);
}

TEST_CASE("divisors on different surfaces do not mix") {
  const auto a = hirzebruch_model(2).surface;
  const auto b = hirzebruch_model(2).surface;
  CHECK_THROWS_AS(qd(a, {{"G", 1}}) + qd(b, {{"G", 1}}), LatticeMismatchError);
}

TEST_CASE("blow-up at a point") {
  const auto model = hirzebruch_model(1);
  const auto& s = model.surface;
  const Blowup bl = blowup(s, "p_on");
  CHECK(bl.exceptional == "E_p_on");
  CHECK(bl.surface->lattice()->rank() == 3);
  const auto e = bl.exceptional_class();
  CHECK(self_intersection(e) == -1);
  CHECK(bl.surface->canonical() == bl.pullback(s->canonical()) + e);

  // strict transforms
  const auto& g1 = bl.surface->curve("G").cls;
  CHECK(self_intersection(g1) == self_intersection(s->curve("G").cls) - 1);
  CHECK(self_intersection(bl.surface->curve("F2").cls) == 0);

  const QDivisor m = qd(s, {{"G", 2}, {"F", 4}});
  const QDivisor b = qd(s, {{"F2", 3}});
  CHECK(bl.pullback(b).coefficient(bl.exceptional) == 0);
  CHECK(bl.pullback(b).coefficient("F2") == 3);
  CHECK(bl.pullback(qd(s, {{"G", Rational(9, 10)}})).coefficient(bl.exceptional) == Rational(9, 10));
  CHECK(self_intersection(class_of(bl.pullback(m))) == self_intersection(class_of(m)));
  CHECK(intersect(bl.pullback(class_of(m)), e) == 0);
  CHECK(class_of(bl.pullback(m)) == bl.pullback(class_of(m)));
}

TEST_CASE("adjoint identity on the blow-up") {
  const auto model = hirzebruch_model(1);
  const auto& s = model.surface;
  CHECK(verify_adjoint_blowup_identity(s, QDivisor(s), qd(s, {{"G", 3}, {"F", 4}}), "p_on"));
  CHECK(verify_adjoint_blowup_identity(s, qd(s, {{"G", 1 - eps}}), qd(s, {{"G", 2 + eps}, {"F", 4}}), "p_on"));
  CHECK(verify_adjoint_blowup_identity(s, qd(s, {{"G", 1 - eps}}), qd(s, {{"G", 2 + eps}, {"F", 4}}), "p_off"));
  CHECK_THROWS_AS(verify_adjoint_blowup_identity(s, qd(s, {{"G", eps}}), qd(s, {{"G", 2}}), "p_on"), DomainError);
  CHECK_THROWS_AS(verify_adjoint_blowup_identity(s, qd(s, {{"G", 1}}), qd(s, {{"G", 2}}), "p_on"), DomainError);
}

TEST_CASE("repeated blow-ups get distinct exceptional names") {
  auto lat = IntersectionLattice::hirzebruch(1);
  auto s = std::make_shared<SurfaceModel>(lat, DivisorClass(lat, {-2, -3}), Rational(1));
  s->add_curve("G", DivisorClass::basis(lat, 0));
  s->add_curve("E_p", DivisorClass::basis(lat, 1));
  s->add_point({"p", {{"G", 1}}});
  const Blowup bl = blowup(s, "p");
  CHECK(bl.exceptional == "E_p'");
  CHECK(bl.surface->has_curve("E_p'"));
}

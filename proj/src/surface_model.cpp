#include "qreider/surface_model.hpp"

#include "qreider/errors.hpp"

namespace qreider {

int PointSpec::mult(const std::string& curve) const {
  const auto it = mults.find(curve);
  return it == mults.end() ? 0 : it->second;
}

int TangentSpec::mult_V(const std::string& curve) const {
  const auto it = mults_V.find(curve);
  return it == mults_V.end() ? 0 : it->second;
}

SurfaceModel::SurfaceModel(LatticePtr lattice, DivisorClass canonical, Rational chi_structure_sheaf)
    : lattice_(std::move(lattice)), canonical_(std::move(canonical)), chi_(std::move(chi_structure_sheaf)) {
  require_same_lattice(lattice_, canonical_.lattice(), "canonical class");
}

void SurfaceModel::add_curve(const std::string& name, DivisorClass cls) {
  if (name.empty()) throw InvariantError("empty curve name");
  require_same_lattice(lattice_, cls.lattice(), "curve class");
  if (curve_index_.count(name)) throw InvariantError("duplicate curve '" + name + "'");
  curve_index_.emplace(name, curves_.size());
  curves_.push_back(Curve{name, std::move(cls)});
}

void SurfaceModel::add_point(PointSpec point) {
  if (points_.count(point.name)) throw InvariantError("duplicate point '" + point.name + "'");
  for (const auto& [curve, mult] : point.mults) {
    if (!has_curve(curve)) throw UnknownNameError("point '" + point.name + "' references unknown curve '" + curve + "'");
    if (mult < 0) throw InvariantError("negative multiplicity of '" + curve + "' at '" + point.name + "'");
  }
  std::erase_if(point.mults, [](const auto& kv) { return kv.second == 0; });
  points_.emplace(point.name, std::move(point));
}

void SurfaceModel::add_tangent(TangentSpec tangent) {
  if (tangents_.count(tangent.name)) throw InvariantError("duplicate tangent '" + tangent.name + "'");
  const auto& base = point(tangent.at);
  for (const auto& [curve, mult] : tangent.mults_V) {
    if (!has_curve(curve))
      throw UnknownNameError("tangent '" + tangent.name + "' references unknown curve '" + curve + "'");
    if (mult < 0 || mult > base.mult(curve))
      throw InvariantError("tangent '" + tangent.name + "': order of '" + curve +
                           "' at V must lie in [0, mult_p]");
  }
  for (const auto& curve : tangent.contains_Z) {
    if (!has_curve(curve))
      throw UnknownNameError("tangent '" + tangent.name + "' references unknown curve '" + curve + "'");
    if (base.mult(curve) < 1)
      throw InvariantError("tangent '" + tangent.name + "': '" + curve + "' does not pass through '" +
                           tangent.at + "'");
  }
  std::erase_if(tangent.mults_V, [](const auto& kv) { return kv.second == 0; });
  tangents_.emplace(tangent.name, std::move(tangent));
}

const Curve& SurfaceModel::curve(const std::string& name) const {
  const auto it = curve_index_.find(name);
  if (it == curve_index_.end()) throw UnknownNameError("unknown curve '" + name + "'");
  return curves_[it->second];
}

const PointSpec& SurfaceModel::point(const std::string& name) const {
  const auto it = points_.find(name);
  if (it == points_.end()) throw UnknownNameError("unknown point '" + name + "'");
  return it->second;
}

const TangentSpec& SurfaceModel::tangent(const std::string& name) const {
  const auto it = tangents_.find(name);
  if (it == tangents_.end()) throw UnknownNameError("unknown tangent '" + name + "'");
  return it->second;
}

QDivisor::QDivisor(SurfacePtr surface, std::map<std::string, Rational> coeffs)
    : surface_(std::move(surface)), coeffs_(std::move(coeffs)) {
  if (!surface_) throw InvariantError("Q-divisor without surface");
  for (const auto& [curve, coeff] : coeffs_)
    if (!surface_->has_curve(curve)) throw UnknownNameError("unknown curve '" + curve + "'");
  std::erase_if(coeffs_, [](const auto& kv) { return kv.second == 0; });
}

Rational QDivisor::coefficient(const std::string& curve) const {
  const auto it = coeffs_.find(curve);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

static void require_same_surface(const SurfacePtr& a, const SurfacePtr& b) {
  if (a.get() != b.get()) throw LatticeMismatchError("Q-divisors live on different surfaces");
}

QDivisor QDivisor::operator+(const QDivisor& other) const {
  require_same_surface(surface_, other.surface_);
  auto coeffs = coeffs_;
  for (const auto& [curve, c] : other.coeffs_) coeffs[curve] += c;
  return QDivisor(surface_, std::move(coeffs));
}

QDivisor QDivisor::operator-(const QDivisor& other) const { return *this + Rational(-1) * other; }

QDivisor operator*(const Rational& scalar, const QDivisor& d) {
  auto coeffs = d.coeffs_;
  for (auto& [curve, c] : coeffs) c *= scalar;
  return QDivisor(d.surface_, std::move(coeffs));
}

bool QDivisor::operator==(const QDivisor& other) const {
  return surface_.get() == other.surface_.get() && coeffs_ == other.coeffs_;
}

DivisorClass class_of(const QDivisor& d) {
  auto total = DivisorClass::zero(d.surface()->lattice());
  for (const auto& [curve, coeff] : d.coeffs()) total = total + coeff * d.surface()->curve(curve).cls;
  return total;
}

namespace {

template <typename Fn>
QDivisor map_coefficients(const QDivisor& d, Fn fn) {
  std::map<std::string, Rational> out;
  for (const auto& [curve, c] : d.coeffs()) out.emplace(curve, fn(c));
  return QDivisor(d.surface(), std::move(out));
}

}  // namespace

QDivisor round_up(const QDivisor& d) {
  return map_coefficients(d, [](const Rational& c) { return Rational(ceil_of(c)); });
}

QDivisor round_down(const QDivisor& d) {
  return map_coefficients(d, [](const Rational& c) { return Rational(floor_of(c)); });
}

QDivisor frac_part(const QDivisor& d) {
  return map_coefficients(d, [](const Rational& c) { return frac_of(c); });
}

bool is_integral(const QDivisor& d) {
  for (const auto& [curve, c] : d.coeffs())
    if (!is_integer(c)) return false;
  return true;
}

bool is_boundary(const QDivisor& d) {
  for (const auto& [curve, c] : d.coeffs())
    if (c < 0 || c >= 1) return false;
  return true;
}

Rational ord_at(const QDivisor& d, const std::string& point) {
  const auto& spec = d.surface()->point(point);
  Rational total = 0;
  for (const auto& [curve, c] : d.coeffs()) total += c * spec.mult(curve);
  return total;
}

TangentialOrders ord_tangential(const QDivisor& d, const std::string& tangent) {
  const auto& spec = d.surface()->tangent(tangent);
  TangentialOrders out;
  out.at_point = ord_at(d, spec.at);
  for (const auto& [curve, c] : d.coeffs()) out.at_infinitely_near += c * spec.mult_V(curve);
  out.along_direction = out.at_point + out.at_infinitely_near;
  return out;
}

DivisorClass Blowup::pullback(const DivisorClass& cls) const {
  require_same_lattice(cls.lattice(), base->lattice(), "pullback");
  auto coeffs = cls.coeffs();
  coeffs.emplace_back(0);
  return DivisorClass(surface->lattice(), std::move(coeffs));
}

QDivisor Blowup::pullback(const QDivisor& d) const {
  require_same_surface(d.surface(), base);
  auto coeffs = d.coeffs();
  coeffs[exceptional] = ord_at(d, point);
  return QDivisor(surface, std::move(coeffs));
}

DivisorClass Blowup::exceptional_class() const {
  return DivisorClass::basis(surface->lattice(), surface->lattice()->rank() - 1);
}

Blowup blowup(const SurfacePtr& surface, const std::string& point) {
  const auto& spec = surface->point(point);
  const auto& old = *surface->lattice();

  std::string label = "E_" + point;
  auto taken = [&](const std::string& name) { return old.index_of(name) || surface->has_curve(name); };
  while (taken(label)) label += "'";

  auto labels = old.basis_labels();
  labels.push_back(label);
  auto gram = old.gram_matrix();
  for (auto& row : gram) row.emplace_back(0);
  gram.emplace_back(old.rank() + 1, Rational(0));
  gram.back().back() = -1;
  auto lattice = std::make_shared<const IntersectionLattice>(std::move(labels), std::move(gram));

  auto lift = [&](const DivisorClass& cls) {
    auto coeffs = cls.coeffs();
    coeffs.emplace_back(0);
    return DivisorClass(lattice, std::move(coeffs));
  };
  const auto e = DivisorClass::basis(lattice, lattice->rank() - 1);

  auto blown = std::make_shared<SurfaceModel>(lattice, lift(surface->canonical()) + e,
                                              surface->chi_structure_sheaf());
  for (const auto& curve : surface->curves())
    blown->add_curve(curve.name, lift(curve.cls) - Rational(spec.mult(curve.name)) * e);
  blown->add_curve(label, e);

  return Blowup{surface, blown, point, label};
}

bool verify_adjoint_blowup_identity(const SurfacePtr& surface, const QDivisor& boundary,
                                    const QDivisor& positive, const std::string& point) {
  if (boundary.surface().get() != surface.get() || positive.surface().get() != surface.get())
    throw LatticeMismatchError("divisors do not live on the given surface");
  const QDivisor total = boundary + positive;
  if (!is_integral(total)) throw DomainError("B + M must have integer coefficients");
  if (!is_boundary(boundary)) throw DomainError("B must have coefficients in [0, 1)");

  const Blowup up = blowup(surface, point);
  const Rational mu = ord_at(boundary, point);
  const Rational shift = Rational(floor_of(mu)) - 1;

  const QDivisor pulled_total = up.pullback(total);
  const QDivisor pulled_positive = pulled_total - up.pullback(boundary);
  const QDivisor e(up.surface, {{up.exceptional, Rational(1)}});

  // Divisor-level part of the identity once K' = f*K + E is substituted.
  const bool divisors_agree = round_up(pulled_positive) + e == pulled_total - shift * e;

  const DivisorClass lhs = up.surface->canonical() + class_of(round_up(pulled_positive));
  const DivisorClass rhs = up.pullback(surface->canonical()) + class_of(pulled_total) - shift * up.exceptional_class();
  return divisors_agree && lhs == rhs;
}

std::string to_string(const QDivisor& d) {
  std::vector<std::pair<std::string, Rational>> terms;
  for (const auto& curve : d.surface()->curves()) {
    const auto c = d.coefficient(curve.name);
    if (c != 0) terms.emplace_back(curve.name, c);
  }
  return format_linear(terms);
}

}  // namespace qreider

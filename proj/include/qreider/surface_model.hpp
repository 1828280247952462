#pragma once

#include "qreider/qlattice.hpp"

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace qreider {

struct Curve {
  std::string name;
  DivisorClass cls;
};

/// Declared local data at a marked point: mult_p(C) per curve (absent = 0).
struct PointSpec {
  std::string name;
  std::map<std::string, int> mults;

  int mult(const std::string& curve) const;
};

/// A tangent direction v at a marked point p, described through the
/// infinitely near point V on the exceptional curve of the blow-up at p.
///
/// mults_V[C] is the multiplicity of the strict transform of C at V, and
/// contains_Z lists the curves through p whose tangent cone contains v. The
/// latter is declared rather than derived because for singular curves it is
/// not determined by the two multiplicities.
struct TangentSpec {
  std::string name;
  std::string at;
  std::map<std::string, int> mults_V;
  std::set<std::string> contains_Z;

  int mult_V(const std::string& curve) const;
  bool contains(const std::string& curve) const { return contains_Z.count(curve) != 0; }
};

/// Smooth projective surface described numerically: lattice, canonical class,
/// chi(O_S), named irreducible curves and declared marked points/tangents.
///
/// Built incrementally, then frozen behind a SurfacePtr; Q-divisors refer to
/// their surface by identity.
class SurfaceModel {
 public:
  SurfaceModel(LatticePtr lattice, DivisorClass canonical, Rational chi_structure_sheaf);

  void add_curve(const std::string& name, DivisorClass cls);
  void add_point(PointSpec point);
  void add_tangent(TangentSpec tangent);

  const LatticePtr& lattice() const { return lattice_; }
  const DivisorClass& canonical() const { return canonical_; }
  const Rational& chi_structure_sheaf() const { return chi_; }

  const std::vector<Curve>& curves() const { return curves_; }
  const Curve& curve(const std::string& name) const;
  bool has_curve(const std::string& name) const { return curve_index_.count(name) != 0; }

  const std::map<std::string, PointSpec>& points() const { return points_; }
  const PointSpec& point(const std::string& name) const;
  const std::map<std::string, TangentSpec>& tangents() const { return tangents_; }
  const TangentSpec& tangent(const std::string& name) const;

 private:
  LatticePtr lattice_;
  DivisorClass canonical_;
  Rational chi_;
  std::vector<Curve> curves_;
  std::map<std::string, std::size_t> curve_index_;
  std::map<std::string, PointSpec> points_;
  std::map<std::string, TangentSpec> tangents_;
};

using SurfacePtr = std::shared_ptr<const SurfaceModel>;

/// Formal Q-linear combination of named curves of one surface.
/// Coefficients may be negative; zero coefficients are not stored.
class QDivisor {
 public:
  explicit QDivisor(SurfacePtr surface, std::map<std::string, Rational> coeffs = {});

  const SurfacePtr& surface() const { return surface_; }
  const std::map<std::string, Rational>& coeffs() const { return coeffs_; }
  Rational coefficient(const std::string& curve) const;

  QDivisor operator+(const QDivisor& other) const;
  QDivisor operator-(const QDivisor& other) const;
  friend QDivisor operator*(const Rational& scalar, const QDivisor& d);

  bool operator==(const QDivisor& other) const;

 private:
  SurfacePtr surface_;
  std::map<std::string, Rational> coeffs_;
};

DivisorClass class_of(const QDivisor& d);

QDivisor round_up(const QDivisor& d);
QDivisor round_down(const QDivisor& d);
QDivisor frac_part(const QDivisor& d);

bool is_integral(const QDivisor& d);
/// Every coefficient in [0, 1).
bool is_boundary(const QDivisor& d);

/// sum_i b_i * mult_p(C_i)
Rational ord_at(const QDivisor& d, const std::string& point);

struct TangentialOrders {
  Rational at_point;     // ord_p
  Rational at_infinitely_near;  // o_V
  Rational along_direction;     // o_v = ord_p + o_V
};

TangentialOrders ord_tangential(const QDivisor& d, const std::string& tangent);

/// Result of blowing up one marked point.
struct Blowup {
  SurfacePtr base;
  SurfacePtr surface;
  std::string point;
  std::string exceptional;  // name of E as a curve and as a basis label

  DivisorClass pullback(const DivisorClass& cls) const;
  /// sum b_i f^-1 C_i + ord_p(d) E
  QDivisor pullback(const QDivisor& d) const;
  DivisorClass exceptional_class() const;
};

/// New lattice = old lattice + <E>, E^2 = -1, E orthogonal to pullbacks.
/// Curves become strict transforms f*C - mult_p(C) E; E is added as a curve.
/// K' = f*K + E. Marked points and tangents are not transported.
Blowup blowup(const SurfacePtr& surface, const std::string& point);

/// Checks, on the blow-up at p,
///   K' + round_up(f*M) == f*(K + B + M) - (floor(mu) - 1) E
/// with f*M taken as f*(B+M) - f*B. Requires B+M integral and B a boundary.
bool verify_adjoint_blowup_identity(const SurfacePtr& surface, const QDivisor& boundary,
                                    const QDivisor& positive, const std::string& point);

std::string to_string(const QDivisor& d);

}  // namespace qreider

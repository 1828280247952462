#pragma once

#include "qreider/rational.hpp"

#include <map>
#include <memory>
#include <set>
#include <string>

namespace qreider {

using ParamValues = std::map<std::string, Rational>;

/// Immutable rational expression over named symbols. Constant subtrees fold
/// as they are built, so `2/3` and `-2` are single constants.
class ParamExpr {
 public:
  enum class Op { constant, symbol, add, sub, mul, div, neg };

  ParamExpr();  // the constant 0
  static ParamExpr constant(Rational value);
  static ParamExpr symbol(std::string name);

  friend ParamExpr operator+(const ParamExpr& a, const ParamExpr& b);
  friend ParamExpr operator-(const ParamExpr& a, const ParamExpr& b);
  friend ParamExpr operator*(const ParamExpr& a, const ParamExpr& b);
  friend ParamExpr operator/(const ParamExpr& a, const ParamExpr& b);
  ParamExpr operator-() const;

  Op op() const;
  const Rational& value() const;      // constant only
  const std::string& name() const;    // symbol only
  const ParamExpr& lhs() const;       // binary ops and neg
  const ParamExpr& rhs() const;       // binary ops
  bool is_constant() const { return op() == Op::constant; }

  /// Throws UnknownNameError for unbound symbols, DomainError on division by zero.
  Rational evaluate(const ParamValues& values) const;
  std::set<std::string> symbols() const;

  bool operator==(const ParamExpr& other) const;

 private:
  struct Node;
  explicit ParamExpr(std::shared_ptr<const Node> node);
  static ParamExpr make(Op op, const ParamExpr& a, const ParamExpr& b);
  std::shared_ptr<const Node> node_;
};

/// Text that parses back to an equal tree.
std::string to_string(const ParamExpr& e);

/// constant + sum coeff_i * param_i
struct AffineForm {
  Rational constant;
  std::map<std::string, Rational> coeffs;  // no zero entries

  static AffineForm of(Rational c) { return AffineForm{std::move(c), {}}; }
  static AffineForm param(const std::string& name);

  bool is_constant() const { return coeffs.empty(); }
  Rational evaluate(const ParamValues& values) const;

  AffineForm operator+(const AffineForm& o) const;
  AffineForm operator-(const AffineForm& o) const;
  AffineForm operator-() const;
  friend AffineForm operator*(const Rational& s, const AffineForm& a);

  bool operator==(const AffineForm&) const = default;
};

std::string to_string(const AffineForm& a);

/// Curve name -> affine coefficient; zero coefficients are dropped.
using DivisorForm = std::map<std::string, AffineForm>;

DivisorForm add(const DivisorForm& a, const DivisorForm& b, const Rational& scale_b = 1);
DivisorForm scale(const DivisorForm& a, const AffineForm& s);

/// Interprets an expression as a Q-linear combination of curves with affine
/// coefficients. `kind` says whether a symbol is a parameter, a curve, or a
/// previously bound divisor (resolved through `divisor`). Products must keep
/// at least one side constant, and divisors may only be divided by constants.
struct SymbolTable {
  std::set<std::string> params;
  std::set<std::string> curves;
  std::map<std::string, DivisorForm> divisors;
};

DivisorForm linearize_divisor(const ParamExpr& e, const SymbolTable& table);
/// Same rules, but the result must carry no curve.
AffineForm linearize_scalar(const ParamExpr& e, const SymbolTable& table);

}  // namespace qreider

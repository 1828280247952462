#include "qreider/param_expr.hpp"

#include "qreider/errors.hpp"

namespace qreider {

struct ParamExpr::Node {
  Op op = Op::constant;
  Rational value;
  std::string name;
  ParamExpr a;
  ParamExpr b;
};

ParamExpr::ParamExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

ParamExpr::ParamExpr() : node_(nullptr) {}

ParamExpr ParamExpr::constant(Rational value) {
  auto n = std::make_shared<Node>();
  n->op = Op::constant;
  n->value = std::move(value);
  return ParamExpr(std::move(n));
}

ParamExpr ParamExpr::symbol(std::string name) {
  auto n = std::make_shared<Node>();
  n->op = Op::symbol;
  n->name = std::move(name);
  return ParamExpr(std::move(n));
}

namespace {

const Rational kZero = 0;

}  // namespace

ParamExpr::Op ParamExpr::op() const { return node_ ? node_->op : Op::constant; }
const Rational& ParamExpr::value() const { return node_ ? node_->value : kZero; }
const std::string& ParamExpr::name() const { return node_->name; }
const ParamExpr& ParamExpr::lhs() const { return node_->a; }
const ParamExpr& ParamExpr::rhs() const { return node_->b; }

ParamExpr ParamExpr::make(Op op, const ParamExpr& a, const ParamExpr& b) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->a = a;
  n->b = b;
  return ParamExpr(std::move(n));
}

ParamExpr operator+(const ParamExpr& a, const ParamExpr& b) {
  if (a.is_constant() && b.is_constant()) return ParamExpr::constant(a.value() + b.value());
  return ParamExpr::make(ParamExpr::Op::add, a, b);
}

ParamExpr operator-(const ParamExpr& a, const ParamExpr& b) {
  if (a.is_constant() && b.is_constant()) return ParamExpr::constant(a.value() - b.value());
  return ParamExpr::make(ParamExpr::Op::sub, a, b);
}

ParamExpr operator*(const ParamExpr& a, const ParamExpr& b) {
  if (a.is_constant() && b.is_constant()) return ParamExpr::constant(a.value() * b.value());
  return ParamExpr::make(ParamExpr::Op::mul, a, b);
}

ParamExpr operator/(const ParamExpr& a, const ParamExpr& b) {
  if (b.is_constant() && b.value() == 0) throw DomainError("division by zero");
  if (a.is_constant() && b.is_constant()) return ParamExpr::constant(a.value() / b.value());
  return ParamExpr::make(ParamExpr::Op::div, a, b);
}

ParamExpr ParamExpr::operator-() const {
  if (is_constant()) return constant(-value());
  return make(Op::neg, *this, ParamExpr());
}

Rational ParamExpr::evaluate(const ParamValues& values) const {
  switch (op()) {
    case Op::constant:
      return value();
    case Op::symbol: {
      const auto it = values.find(name());
      if (it == values.end()) throw UnknownNameError("unbound parameter '" + name() + "'");
      return it->second;
    }
    case Op::add: return lhs().evaluate(values) + rhs().evaluate(values);
    case Op::sub: return lhs().evaluate(values) - rhs().evaluate(values);
    case Op::mul: return lhs().evaluate(values) * rhs().evaluate(values);
    case Op::div: {
      const Rational den = rhs().evaluate(values);
      if (den == 0) throw DomainError("division by zero while evaluating " + to_string(*this));
      return lhs().evaluate(values) / den;
    }
    case Op::neg: return -lhs().evaluate(values);
  }
  return 0;
}

std::set<std::string> ParamExpr::symbols() const {
  std::set<std::string> out;
  switch (op()) {
    case Op::constant: break;
    case Op::symbol: out.insert(name()); break;
    case Op::neg: out = lhs().symbols(); break;
    default: {
      out = lhs().symbols();
      auto r = rhs().symbols();
      out.insert(r.begin(), r.end());
    }
  }
  return out;
}

bool ParamExpr::operator==(const ParamExpr& other) const {
  if (op() != other.op()) return false;
  switch (op()) {
    case Op::constant: return value() == other.value();
    case Op::symbol: return name() == other.name();
    case Op::neg: return lhs() == other.lhs();
    default: return lhs() == other.lhs() && rhs() == other.rhs();
  }
}

namespace {

int precedence(const ParamExpr& e) {
  switch (e.op()) {
    case ParamExpr::Op::constant:
      if (!is_integer(e.value())) return 2;
      return e.value() < 0 ? 3 : 4;
    case ParamExpr::Op::symbol: return 4;
    case ParamExpr::Op::add:
    case ParamExpr::Op::sub: return 1;
    case ParamExpr::Op::mul:
    case ParamExpr::Op::div: return 2;
    case ParamExpr::Op::neg: return 3;
  }
  return 4;
}

std::string print(const ParamExpr& e, int min_prec);

std::string raw(const ParamExpr& e) {
  using Op = ParamExpr::Op;
  switch (e.op()) {
    case Op::constant: return to_string(e.value());
    case Op::symbol: return e.name();
    case Op::add: return print(e.lhs(), 1) + " + " + print(e.rhs(), 2);
    case Op::sub: return print(e.lhs(), 1) + " - " + print(e.rhs(), 2);
    case Op::mul: {
      const std::string left = print(e.lhs(), 2);
      const bool literal = e.lhs().is_constant() && is_integer(e.lhs().value());
      const bool wrapped = precedence(e.lhs()) < 2;
      if (e.rhs().op() == Op::symbol && (literal || wrapped)) return left + e.rhs().name();
      return left + "*" + print(e.rhs(), 3);
    }
    case Op::div: return print(e.lhs(), 2) + "/" + print(e.rhs(), 3);
    case Op::neg: return "-" + print(e.lhs(), 3);
  }
  return {};
}

std::string print(const ParamExpr& e, int min_prec) {
  const std::string s = raw(e);
  return precedence(e) < min_prec ? "(" + s + ")" : s;
}

}  // namespace

std::string to_string(const ParamExpr& e) { return print(e, 0); }

AffineForm AffineForm::param(const std::string& name) { return AffineForm{0, {{name, Rational(1)}}}; }

Rational AffineForm::evaluate(const ParamValues& values) const {
  Rational total = constant;
  for (const auto& [name, c] : coeffs) {
    const auto it = values.find(name);
    if (it == values.end()) throw UnknownNameError("unbound parameter '" + name + "'");
    total += c * it->second;
  }
  return total;
}

AffineForm AffineForm::operator+(const AffineForm& o) const {
  AffineForm out = *this;
  out.constant += o.constant;
  for (const auto& [name, c] : o.coeffs) {
    auto& slot = out.coeffs[name];
    slot += c;
    if (slot == 0) out.coeffs.erase(name);
  }
  return out;
}

AffineForm AffineForm::operator-(const AffineForm& o) const { return *this + (-o); }

AffineForm AffineForm::operator-() const { return Rational(-1) * *this; }

AffineForm operator*(const Rational& s, const AffineForm& a) {
  if (s == 0) return AffineForm{};
  AffineForm out = a;
  out.constant *= s;
  for (auto& [name, c] : out.coeffs) c *= s;
  return out;
}

std::string to_string(const AffineForm& a) {
  std::string out;
  auto append = [&](const Rational& c, const std::string& name) {
    const Rational mag = c < 0 ? Rational(-c) : c;
    if (out.empty())
      out = c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (name.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += is_integer(mag) ? to_string(mag) : "(" + to_string(mag) + ")";
      out += name;
    }
  };
  if (a.constant != 0) append(a.constant, "");
  for (const auto& [name, c] : a.coeffs) append(c, name);
  return out.empty() ? "0" : out;
}

namespace {

bool is_zero(const AffineForm& a) { return a.constant == 0 && a.coeffs.empty(); }

void prune(DivisorForm& d) { std::erase_if(d, [](const auto& kv) { return is_zero(kv.second); }); }

AffineForm multiply(const AffineForm& a, const AffineForm& b) {
  if (a.is_constant()) return a.constant * b;
  if (b.is_constant()) return b.constant * a;
  throw DomainError("product of two parameter-dependent terms is not affine");
}

// Key "" holds the scalar part.
using Lin = std::map<std::string, AffineForm>;

bool has_curves(const Lin& v) {
  for (const auto& [k, _] : v)
    if (!k.empty()) return true;
  return false;
}

AffineForm scalar_of(const Lin& v) {
  const auto it = v.find("");
  return it == v.end() ? AffineForm{} : it->second;
}

Lin combine(const Lin& a, const Lin& b, const Rational& sign) {
  const bool a_scalar = !a.empty() && !has_curves(a);
  const bool b_scalar = !b.empty() && !has_curves(b);
  if ((a_scalar && has_curves(b)) || (b_scalar && has_curves(a)))
    throw DomainError("cannot add a number and a divisor");
  Lin out = a;
  for (const auto& [k, c] : b) out[k] = out[k] + sign * c;
  prune(out);
  return out;
}

Lin scale_lin(const Lin& v, const AffineForm& s) {
  Lin out;
  for (const auto& [k, c] : v) out[k] = multiply(s, c);
  prune(out);
  return out;
}

Lin linearize(const ParamExpr& e, const SymbolTable& table) {
  using Op = ParamExpr::Op;
  switch (e.op()) {
    case Op::constant: {
      Lin out{{"", AffineForm::of(e.value())}};
      prune(out);
      return out;
    }
    case Op::symbol: {
      const auto& n = e.name();
      if (table.params.count(n)) return Lin{{"", AffineForm::param(n)}};
      if (table.curves.count(n)) return Lin{{n, AffineForm::of(1)}};
      if (const auto it = table.divisors.find(n); it != table.divisors.end()) return it->second;
      throw UnknownNameError("undefined name '" + n + "'");
    }
    case Op::add: return combine(linearize(e.lhs(), table), linearize(e.rhs(), table), 1);
    case Op::sub: return combine(linearize(e.lhs(), table), linearize(e.rhs(), table), -1);
    case Op::neg: return scale_lin(linearize(e.lhs(), table), AffineForm::of(-1));
    case Op::mul: {
      const Lin a = linearize(e.lhs(), table);
      const Lin b = linearize(e.rhs(), table);
      if (has_curves(a) && has_curves(b)) throw DomainError("product of two divisors");
      return has_curves(a) ? scale_lin(a, scalar_of(b)) : scale_lin(b, scalar_of(a));
    }
    case Op::div: {
      const Lin b = linearize(e.rhs(), table);
      if (has_curves(b)) throw DomainError("division by a divisor");
      const AffineForm den = scalar_of(b);
      if (!den.is_constant()) throw DomainError("division by a parameter is not affine");
      if (den.constant == 0) throw DomainError("division by zero");
      return scale_lin(linearize(e.lhs(), table), AffineForm::of(1 / den.constant));
    }
  }
  return {};
}

}  // namespace

DivisorForm add(const DivisorForm& a, const DivisorForm& b, const Rational& scale_b) {
  DivisorForm out = a;
  for (const auto& [k, c] : b) out[k] = out[k] + scale_b * c;
  prune(out);
  return out;
}

DivisorForm scale(const DivisorForm& a, const AffineForm& s) { return scale_lin(a, s); }

DivisorForm linearize_divisor(const ParamExpr& e, const SymbolTable& table) {
  Lin v = linearize(e, table);
  if (const auto it = v.find(""); it != v.end()) {
    throw DomainError("expression " + to_string(e) + " is a number, not a divisor");
  }
  return v;
}

AffineForm linearize_scalar(const ParamExpr& e, const SymbolTable& table) {
  const Lin v = linearize(e, table);
  if (has_curves(v)) throw DomainError("expression " + to_string(e) + " is a divisor, not a number");
  return scalar_of(v);
}

}  // namespace qreider

#include "qreider/qlattice.hpp"

#include "qreider/errors.hpp"

#include <set>

namespace qreider {

IntersectionLattice::IntersectionLattice(std::vector<std::string> basis_labels,
                                         std::vector<std::vector<Rational>> gram)
    : labels_(std::move(basis_labels)), gram_(std::move(gram)) {
  if (labels_.empty()) throw InvariantError("lattice rank must be positive");
  std::set<std::string> seen;
  for (const auto& label : labels_) {
    if (label.empty()) throw InvariantError("empty basis label");
    if (!seen.insert(label).second) throw InvariantError("duplicate basis label '" + label + "'");
  }
  if (gram_.size() != labels_.size()) throw InvariantError("gram matrix row count differs from rank");
  for (const auto& row : gram_)
    if (row.size() != labels_.size()) throw InvariantError("gram matrix is not square");
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = i + 1; j < rank(); ++j)
      if (gram_[i][j] != gram_[j][i])
        throw InvariantError("gram matrix is not symmetric at (" + labels_[i] + ", " + labels_[j] + ")");
}

std::shared_ptr<const IntersectionLattice> IntersectionLattice::hirzebruch(int n) {
  if (n < 1) throw DomainError("Hirzebruch index must be >= 1");
  return std::make_shared<const IntersectionLattice>(
      std::vector<std::string>{"G", "F"},
      std::vector<std::vector<Rational>>{{Rational(-n), Rational(1)}, {Rational(1), Rational(0)}});
}

std::optional<std::size_t> IntersectionLattice::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

Rational IntersectionLattice::pairing(std::span<const Rational> a, std::span<const Rational> b) const {
  Rational total = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < rank(); ++j)
      if (b[j] != 0) row += gram_[i][j] * b[j];
    total += a[i] * row;
  }
  return total;
}

Rational IntersectionLattice::determinant() const {
  auto m = gram_;
  const std::size_t r = rank();
  Rational det = 1;
  for (std::size_t col = 0; col < r; ++col) {
    std::size_t pivot = col;
    while (pivot < r && m[pivot][col] == 0) ++pivot;
    if (pivot == r) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t row = col + 1; row < r; ++row) {
      if (m[row][col] == 0) continue;
      const Rational factor = m[row][col] / m[col][col];
      for (std::size_t k = col; k < r; ++k) m[row][k] -= factor * m[col][k];
    }
  }
  return det;
}

void require_same_lattice(const LatticePtr& a, const LatticePtr& b, const char* context) {
  if (a.get() != b.get()) throw LatticeMismatchError(std::string(context) + ": classes belong to different lattices");
}

DivisorClass::DivisorClass(LatticePtr lattice, std::vector<Rational> coeffs)
    : lattice_(std::move(lattice)), coeffs_(std::move(coeffs)) {
  if (!lattice_) throw InvariantError("divisor class without lattice");
  if (coeffs_.size() != lattice_->rank()) throw InvariantError("coefficient count differs from lattice rank");
}

DivisorClass DivisorClass::zero(LatticePtr lattice) {
  const auto r = lattice->rank();
  return DivisorClass(std::move(lattice), std::vector<Rational>(r));
}

DivisorClass DivisorClass::basis(LatticePtr lattice, std::size_t index) {
  auto cls = zero(std::move(lattice));
  cls.coeffs_.at(index) = 1;
  return cls;
}

DivisorClass DivisorClass::operator+(const DivisorClass& other) const {
  require_same_lattice(lattice_, other.lattice_, "class addition");
  auto out = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += other.coeffs_[i];
  return out;
}

DivisorClass DivisorClass::operator-(const DivisorClass& other) const {
  require_same_lattice(lattice_, other.lattice_, "class subtraction");
  auto out = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] -= other.coeffs_[i];
  return out;
}

DivisorClass DivisorClass::operator-() const { return Rational(-1) * *this; }

DivisorClass operator*(const Rational& scalar, const DivisorClass& cls) {
  auto out = cls;
  for (auto& c : out.coeffs_) c *= scalar;
  return out;
}

bool DivisorClass::operator==(const DivisorClass& other) const {
  return lattice_.get() == other.lattice_.get() && coeffs_ == other.coeffs_;
}

Rational intersect(const DivisorClass& a, const DivisorClass& b) {
  require_same_lattice(a.lattice(), b.lattice(), "intersect");
  return a.lattice()->pairing(a.coeffs(), b.coeffs());
}

Rational self_intersection(const DivisorClass& a) { return intersect(a, a); }

bool is_integral(const DivisorClass& a) {
  for (const auto& c : a.coeffs())
    if (!is_integer(c)) return false;
  return true;
}

std::string format_linear(const std::vector<std::pair<std::string, Rational>>& terms) {
  std::string out;
  for (const auto& [name, coeff] : terms) {
    if (coeff == 0) continue;
    const bool negative = coeff < 0;
    const Rational magnitude = negative ? Rational(-coeff) : coeff;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (magnitude != 1) {
      const bool fraction = !is_integer(magnitude);
      out += fraction ? "(" + to_string(magnitude) + ")" : to_string(magnitude);
    }
    out += name;
  }
  return out.empty() ? "0" : out;
}

std::string to_string(const DivisorClass& cls) {
  std::vector<std::pair<std::string, Rational>> terms;
  for (std::size_t i = 0; i < cls.coeffs().size(); ++i)
    terms.emplace_back(cls.lattice()->basis_labels()[i], cls.coeffs()[i]);
  return format_linear(terms);
}

}  // namespace qreider

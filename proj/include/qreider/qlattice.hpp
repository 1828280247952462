#pragma once

#include "qreider/rational.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qreider {

/// Symmetric bilinear form over Q on a free module with named basis.
///
/// Gram entries may be arbitrary rationals. Instances are immutable and are
/// shared through LatticePtr; classes refer to their lattice by identity.
class IntersectionLattice {
 public:
  IntersectionLattice(std::vector<std::string> basis_labels, std::vector<std::vector<Rational>> gram);

  /// Rank-2 lattice of the n-th Hirzebruch surface in the basis (G, F):
  /// G^2 = -n, F^2 = 0, G.F = 1.
  static std::shared_ptr<const IntersectionLattice> hirzebruch(int n);

  std::size_t rank() const { return labels_.size(); }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  const Rational& gram(std::size_t i, std::size_t j) const { return gram_[i][j]; }
  const std::vector<std::vector<Rational>>& gram_matrix() const { return gram_; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  Rational pairing(std::span<const Rational> a, std::span<const Rational> b) const;
  Rational determinant() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Rational>> gram_;
};

using LatticePtr = std::shared_ptr<const IntersectionLattice>;

class DivisorClass {
 public:
  DivisorClass(LatticePtr lattice, std::vector<Rational> coeffs);

  static DivisorClass zero(LatticePtr lattice);
  static DivisorClass basis(LatticePtr lattice, std::size_t index);

  const LatticePtr& lattice() const { return lattice_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& coeff(std::size_t i) const { return coeffs_[i]; }

  DivisorClass operator+(const DivisorClass& other) const;
  DivisorClass operator-(const DivisorClass& other) const;
  DivisorClass operator-() const;
  friend DivisorClass operator*(const Rational& scalar, const DivisorClass& cls);

  // Same lattice (by identity) and equal coordinates.
  bool operator==(const DivisorClass& other) const;

 private:
  LatticePtr lattice_;
  std::vector<Rational> coeffs_;
};

/// coeffs(a)^T * gram * coeffs(b). Throws LatticeMismatchError across lattices.
Rational intersect(const DivisorClass& a, const DivisorClass& b);
Rational self_intersection(const DivisorClass& a);
bool is_integral(const DivisorClass& a);

void require_same_lattice(const LatticePtr& a, const LatticePtr& b, const char* context);

/// "2G - 5F", "0" for the zero class.
std::string to_string(const DivisorClass& cls);

/// Linear-combination rendering shared by classes and Q-divisors.
std::string format_linear(const std::vector<std::pair<std::string, Rational>>& terms);

}  // namespace qreider

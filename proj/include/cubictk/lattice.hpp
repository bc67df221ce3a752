// Divisor-class arithmetic on the Picard lattices of the three rational
// surfaces used throughout the toolkit: the cubic surface (P^2 blown up in six
// points), the cubic scroll F1 and the smooth quadric P^1 x P^1.
//
// Basis order is fixed:
//   cubic surface  (l, e1, ..., e6)   gram diag(1,-1,...,-1)
//   cubic scroll   (D, F)             gram [[-1,1],[1,0]]
//   quadric        (A, B)             gram [[0,1],[1,0]]
//
// All arithmetic is exact (arbitrary precision integers).
#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cubictk {

using Integer = boost::multiprecision::cpp_int;

enum class SurfaceKind { CubicSurface, Scroll, Quadric };

std::string_view to_string(SurfaceKind kind);

/// Two classes from different lattices were combined.
class LatticeMismatch : public std::invalid_argument {
 public:
  LatticeMismatch() : std::invalid_argument("lattice mismatch") {}
};

/// A residual or query produced a class outside the effective-candidate cone.
class NotEffective : public std::invalid_argument {
 public:
  explicit NotEffective(const std::string& what)
      : std::invalid_argument("not effective: " + what) {}
};

class SurfaceLattice;

class DivisorClass {
 public:
  DivisorClass(const SurfaceLattice& lattice, std::vector<Integer> coeffs);
  DivisorClass(const SurfaceLattice& lattice, std::initializer_list<long> coeffs);

  /// The zero class of a lattice.
  static DivisorClass zero(const SurfaceLattice& lattice);

  const SurfaceLattice& lattice() const { return *lattice_; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& operator[](std::size_t i) const { return coeffs_[i]; }
  std::size_t rank() const { return coeffs_.size(); }
  bool is_zero() const;

  DivisorClass operator-() const;
  DivisorClass& operator+=(const DivisorClass& other);
  DivisorClass& operator-=(const DivisorClass& other);
  DivisorClass& operator*=(const Integer& k);

  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Integer& k, DivisorClass a) { return a *= k; }
  friend DivisorClass operator*(DivisorClass a, const Integer& k) { return a *= k; }

  /// Equality requires the same lattice; ordering is lexicographic on the
  /// coefficient vector (and throws on mismatched lattices).
  friend bool operator==(const DivisorClass& a, const DivisorClass& b);
  friend std::strong_ordering operator<=>(const DivisorClass& a, const DivisorClass& b);

 private:
  const SurfaceLattice* lattice_;
  std::vector<Integer> coeffs_;
};

class SurfaceLattice {
 public:
  static const SurfaceLattice& cubic_surface();
  static const SurfaceLattice& scroll();
  static const SurfaceLattice& quadric();
  static const SurfaceLattice& of(SurfaceKind kind);

  SurfaceLattice(const SurfaceLattice&) = delete;
  SurfaceLattice& operator=(const SurfaceLattice&) = delete;

  SurfaceKind kind() const { return kind_; }
  std::string_view name() const { return to_string(kind_); }
  std::size_t rank() const { return basis_names_.size(); }
  const Integer& gram(std::size_t i, std::size_t j) const { return gram_[i * rank() + j]; }
  const std::vector<std::string>& basis_names() const { return basis_names_; }

  DivisorClass basis(std::size_t i) const;
  const DivisorClass& canonical() const { return canonical_; }
  const DivisorClass& hyperplane() const { return hyperplane_; }
  const Integer& chi_structure() const { return chi_structure_; }

  /// Exact determinant of the Gram matrix.
  Integer gram_determinant() const;

 private:
  SurfaceLattice(SurfaceKind kind, std::vector<std::string> names, std::vector<Integer> gram,
                 std::vector<Integer> canonical, std::vector<Integer> hyperplane);

  SurfaceKind kind_;
  std::vector<std::string> basis_names_;
  std::vector<Integer> gram_;
  DivisorClass canonical_;
  DivisorClass hyperplane_;
  Integer chi_structure_;
};

/// Intersection pairing c1^T G c2.
Integer pair(const DivisorClass& c1, const DivisorClass& c2);

/// Degree with respect to the hyperplane class.
Integer degree(const DivisorClass& c);

/// Arithmetic genus by adjunction: 1 + (C.C + C.K)/2.
Integer arith_genus(const DivisorClass& c);

/// Riemann-Roch on the surface: (L.L - L.K)/2 + chi(O).
Integer chi_rr(const DivisorClass& c);

/// ambient - sum(parts).
DivisorClass residual(const DivisorClass& ambient, std::span<const DivisorClass> parts);
DivisorClass residual(const DivisorClass& ambient, std::initializer_list<DivisorClass> parts);

// Symbolic notation shared by the CLI and JSON output.
//   scroll         2D+3F, D+2F, -F, 0
//   quadric        (2,2)  (also accepts 2A+2B)
//   cubic surface  2l-e1-e2-e3  (also accepts a raw tuple (a,c1,...,c6))
// Every lattice accepts the raw coefficient tuple "(c0,c1,...)".
std::string format_class(const DivisorClass& c);
DivisorClass parse_class(const SurfaceLattice& lattice, std::string_view text);

/// Thrown by parse_class.
class ClassSyntaxError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace cubictk

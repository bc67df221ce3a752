// Chow rings (mod algebraic equivalence) of C x C for a curve C of degree d and
// genus g, the P^1-bundle P(S) over it, and the Grothendieck-Riemann-Roch
// computation of c2 of the secant bundle E.
//
// Two realizations of the base ring share one engine:
//   symbolic  basis {1, w1, w2, Delta, w1.w2, Delta_*w, Delta.Delta}, relations
//             w_i^2 = 0 and w_i.Delta = Delta_*w; independent of (d, g).
//   numeric   basis {1, f1, f2, delta, pt}, w_i = d f_i, f1 f2 = pt,
//             delta f_i = pt, delta^2 = (2-2g) pt.
// evaluate() is the ring map symbolic -> numeric(d, g).
#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cubictk/lattice.hpp"

namespace cubictk {

using Rational = boost::multiprecision::cpp_rational;

class GradedAlgebra;
using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

class ChowElement {
 public:
  ChowElement(AlgebraPtr alg, std::vector<Rational> coeffs);

  const GradedAlgebra& algebra() const { return *alg_; }
  const AlgebraPtr& algebra_ptr() const { return alg_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  bool is_zero() const;
  bool is_integral() const;

  /// Component of the given degree.
  ChowElement part(int degree) const;

  ChowElement operator-() const;
  ChowElement& operator+=(const ChowElement& o);
  ChowElement& operator-=(const ChowElement& o);
  ChowElement& operator*=(const Rational& k);

  friend ChowElement operator+(ChowElement a, const ChowElement& b) { return a += b; }
  friend ChowElement operator-(ChowElement a, const ChowElement& b) { return a -= b; }
  friend ChowElement operator*(const Rational& k, ChowElement a) { return a *= k; }
  friend ChowElement operator*(const ChowElement& a, const ChowElement& b);
  friend bool operator==(const ChowElement& a, const ChowElement& b);

  /// "5 w1.w2 - 15 Delta_*w + 6 Delta.Delta"; "0" for zero.
  std::string to_string() const;

 private:
  AlgebraPtr alg_;
  std::vector<Rational> coeffs_;
};

/// Commutative graded algebra with a finite basis (basis element 0 is the unit)
/// and rational structure constants. Products landing above the top degree
/// are zero because the table simply has no such basis element.
class GradedAlgebra : public std::enable_shared_from_this<GradedAlgebra> {
 public:
  using Table = std::vector<std::vector<std::vector<Rational>>>;  // [i][j] -> coeffs

  static AlgebraPtr create(std::vector<std::string> names, std::vector<int> degrees, Table table);

  std::size_t dim() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  int degree_of(std::size_t i) const { return degrees_[i]; }
  int top_degree() const;
  const std::vector<Rational>& product(std::size_t i, std::size_t j) const { return table_[i][j]; }

  ChowElement zero() const;
  ChowElement one() const;
  ChowElement basis(std::size_t i) const;
  ChowElement element(std::vector<Rational> coeffs) const;

 private:
  GradedAlgebra(std::vector<std::string> names, std::vector<int> degrees, Table table);
  std::vector<std::string> names_;
  std::vector<int> degrees_;
  Table table_;
};

/// x^0 + x + ... truncated where powers vanish (x must have no degree-0 part).
ChowElement exp_nilpotent(const ChowElement& x);

/// The base ring C x C with its named generators.
struct CxCRing {
  AlgebraPtr algebra;
  bool symbolic;
  Integer d;  // unused when symbolic
  Integer g;
  ChowElement omega1;
  ChowElement omega2;
  ChowElement delta;

  static CxCRing make_symbolic();
  static CxCRing make_numeric(const Integer& d, const Integer& g);

  /// Coefficient of the point class (numeric ring only).
  Rational degree(const ChowElement& top) const;
};

/// Ring map from the symbolic ring to numeric(d, g).
ChowElement evaluate(const ChowElement& symbolic, const CxCRing& numeric);

/// Total Chern class c0 + c1 + c2 (+ c3), c0 = 1.
template <class E>
struct TotalChern {
  std::vector<E> parts;
};

/// c(S) = 1 - w1 - w2 + Delta + w1.w2 - Delta.w1.
TotalChern<ChowElement> chern_S(const CxCRing& ring);
TotalChern<ChowElement> chern_S(long d, long g);

/// P(S) over C x C: elements a + b*eta with eta^2 = -c1(S) eta - c2(S).
class ProjectiveBundle;

class BundleElement {
 public:
  BundleElement(const ProjectiveBundle* bundle, ChowElement a, ChowElement b);

  const ChowElement& base() const { return a_; }
  const ChowElement& eta_coeff() const { return b_; }
  const ProjectiveBundle& bundle() const { return *bundle_; }

  BundleElement operator-() const;
  BundleElement& operator+=(const BundleElement& o);
  BundleElement& operator-=(const BundleElement& o);
  BundleElement& operator*=(const Rational& k);
  friend BundleElement operator+(BundleElement a, const BundleElement& b) { return a += b; }
  friend BundleElement operator-(BundleElement a, const BundleElement& b) { return a -= b; }
  friend BundleElement operator*(const Rational& k, BundleElement a) { return a *= k; }
  friend BundleElement operator*(const BundleElement& x, const BundleElement& y);
  friend bool operator==(const BundleElement& x, const BundleElement& y);

  /// Degree-k part on P (base degree k plus eta-coefficient degree k-1).
  BundleElement part(int k) const;
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  std::string to_string() const;

 private:
  const ProjectiveBundle* bundle_;
  ChowElement a_;
  ChowElement b_;
};

class ProjectiveBundle {
 public:
  explicit ProjectiveBundle(const CxCRing& ring);

  const CxCRing& ring() const { return ring_; }
  const ChowElement& c1S() const { return c1S_; }
  const ChowElement& c2S() const { return c2S_; }

  BundleElement eta() const;
  BundleElement pullback(const ChowElement& a) const;
  BundleElement one() const { return pullback(ring_.algebra->one()); }
  /// pi_*(a + b eta) = b.
  ChowElement pushforward(const BundleElement& x) const { return x.eta_coeff(); }
  /// c1 of the relative tangent bundle: 2 eta + c1(S).
  BundleElement c1_relative_tangent() const;

  ProjectiveBundle(const ProjectiveBundle&) = delete;
  ProjectiveBundle& operator=(const ProjectiveBundle&) = delete;

 private:
  CxCRing ring_;
  ChowElement c1S_;
  ChowElement c2S_;
};

BundleElement exp_nilpotent(const BundleElement& x);
/// Todd class of a line bundle with first Chern class x: 1 + x/2 + x^2/12 - x^4/720.
BundleElement todd_line(const BundleElement& x);

struct IdealClasses {
  TotalChern<BundleElement> cI1;  // 1 - eta + w2 - Delta
  TotalChern<BundleElement> cI2;  // 1 - eta + w1 - Delta
  TotalChern<BundleElement> cID;  // 1 - 3 eta
};
IdealClasses chern_ideals(const ProjectiveBundle& p);

struct GrrResult {
  ChowElement ch0;  // rank
  ChowElement c1;
  ChowElement ch2;
  ChowElement c2;
};

/// ch(E) = pi_*(ch(I_D^v (x) I_1 (x) I_2) td(T_pi)), then c2 = (c1^2 - 2 ch2)/2.
GrrResult grr_pushforward(const CxCRing& ring);
ChowElement grr_c2E(const CxCRing& ring);

/// 5 w1.w2 - 15 Delta_*w + 6 Delta.Delta in the symbolic ring.
ChowElement expected_c2E_symbolic();

struct BValue {
  Integer value;     // c2(E)/2 from the GRR pipeline
  Integer closed;    // 5d(d-3)/2 + 6 - 6g
  bool in_regime;    // value >= 0
};

/// Runs the numeric GRR pipeline and the closed form; throws std::logic_error
/// if they disagree or c2(E) is odd.
BValue b_of_C(long d, long g);
Integer b_closed_form(long d, long g);

}  // namespace cubictk

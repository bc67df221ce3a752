// Lines, cubic forms and rational curves in P^n over a finite field.
//
// Binary forms of degree d are coefficient vectors of length d+1; entry m is
// the coefficient of s^m t^(d-m).
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cubictk/ff/field.hpp"
#include "cubictk/graph.hpp"
#include "cubictk/ff/linalg.hpp"

namespace cubictk::ff {

using BinaryForm = Vec;

BinaryForm form_mul(const FqField& f, const BinaryForm& a, const BinaryForm& b);
Elem form_eval(const FqField& f, const BinaryForm& a, Elem s, Elem t);
bool form_is_zero(const BinaryForm& a);

/// Applies an embedding table to every entry.
Vec map_vec(const std::vector<Elem>& table, const Vec& v);

/// A line of P^n stored as its 2 x (n+1) reduced row echelon basis.
class FqLine {
 public:
  /// Throws std::invalid_argument unless the rows span a 2-dimensional space.
  FqLine(FieldPtr field, Matrix rows);

  const FqField& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  int n() const { return static_cast<int>(rows_[0].size()) - 1; }
  const Matrix& rows() const { return rows_; }
  /// s * row0 + t * row1.
  Vec point(Elem s, Elem t) const;
  bool contains(const Vec& point) const;

  friend bool operator==(const FqLine& a, const FqLine& b) { return a.rows_ == b.rows_; }
  friend auto operator<=>(const FqLine& a, const FqLine& b) { return a.rows_ <=> b.rows_; }

 private:
  FieldPtr field_;
  Matrix rows_;
};

class RncCurve;

/// Cubic form in n+1 variables; monomials x_i x_j x_k with i <= j <= k in
/// lexicographic order of (i, j, k).
class CubicForm {
 public:
  CubicForm(FieldPtr field, int n, Vec coeffs);

  static const std::vector<std::array<int, 3>>& monomials(int n);
  static CubicForm fermat(FieldPtr field, int n);
  /// Text format: one monomial per line, "<e_0> ... <e_n> <coefficient>",
  /// exponents summing to 3, integer coefficient; '#' comments.
  static CubicForm parse(FieldPtr field, std::string_view text);
  static CubicForm load(FieldPtr field, const std::string& path);
  std::string to_text() const;

  const FqField& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  int n() const { return n_; }
  const Vec& coeffs() const { return coeffs_; }
  bool is_zero() const { return form_is_zero(coeffs_); }

  Elem evaluate(const Vec& x) const;
  /// The binary cubic obtained by substituting s*row0 + t*row1.
  BinaryForm restrict_to_line(const FqLine& line) const;
  BinaryForm restrict_to_curve(const RncCurve& c) const;
  bool contains_line(const FqLine& line) const { return form_is_zero(restrict_to_line(line)); }
  /// Independent check: evaluation at four distinct points of the line,
  /// moving to a quadratic extension when the field has fewer than 4 points
  /// on P^1.
  bool contains_line_by_points(const FqLine& line) const;

  /// Partial derivatives at x.
  Vec gradient(const Vec& x) const;

  CubicForm base_change(const FieldPtr& super, const std::vector<Elem>& table) const;

  friend bool operator==(const CubicForm& a, const CubicForm& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }

 private:
  FieldPtr field_;
  int n_;
  Vec coeffs_;
};

/// Rational curve t -> (f_0(s,t) : ... : f_n(s,t)), each f_i of degree d.
class RncCurve {
 public:
  RncCurve(FieldPtr field, Matrix components);

  /// x_i = s^i t^(d-i) in P^d.
  static RncCurve standard(FieldPtr field, int d);
  /// The standard curve of degree d mapped to P^n by a seeded random
  /// (n+1) x (d+1) matrix of full rank n+1.
  static RncCurve seeded_projection(FieldPtr field, int n, int d, std::uint64_t seed);

  const FqField& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  int n() const { return static_cast<int>(comps_.size()) - 1; }
  int degree() const { return static_cast<int>(comps_[0].size()) - 1; }
  const Matrix& components() const { return comps_; }
  bool nondegenerate() const;
  Vec point(Elem s, Elem t) const;

  RncCurve base_change(const FieldPtr& super, const std::vector<Elem>& table) const;

 private:
  FieldPtr field_;
  Matrix comps_;
};

/// Linear span of the divisor {div = 0} on the curve, as RREF rows.
Matrix divisor_span(const RncCurve& c, const BinaryForm& div);

/// The line spanned by the length-2 divisor {q = 0}. Throws if the span is not a line.
FqLine chord_line(const RncCurve& c, const BinaryForm& q);

/// A singular point of {form = 0} found over F_{q^e}.
struct SingularPoint {
  int extension_degree;
  Vec point;  // codes in the field of size q^extension_degree
};

/// Brute-force search over P^n(F_{q^e}) for e = 1..e_max. Finding nothing
/// does not prove smoothness; singular points may live in larger fields.
std::optional<SingularPoint> find_singular_point(const CubicForm& form, int e_max);

/// Number of lines in P^n(F_q).
std::uint64_t grassmannian_line_count(std::uint64_t q, int n);
constexpr std::uint64_t kMaxLineCandidates = 10'000'000;

/// All lines of P^n(F_q) on {form = 0}, sorted. Threads only affect speed.
std::vector<FqLine> lines_in_hypersurface(const CubicForm& form, unsigned threads = 1);

/// Lines as vertices, joined when two distinct lines meet.
Graph line_incidence_graph(const std::vector<FqLine>& lines);

/// Dimension of the space of cubics vanishing on the curve.
std::size_t cubics_through_curve_dim(const RncCurve& c);
/// A seeded nonzero element of that space.
CubicForm cubic_through_curve(const RncCurve& c, std::uint64_t seed);

}  // namespace cubictk::ff

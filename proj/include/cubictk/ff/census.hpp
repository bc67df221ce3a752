// Secant-line censuses of rational curves over finite fields.
//
// For each extension degree e <= k_max the divisors of the relevant degree
// defined over F_{q^e} are enumerated (binary forms up to scale). Geometric
// points of exact degree e come from Moebius inversion of those counts, and
// the reported total is their sum. Multiplicities are invisible, so a total
// equal to the expected length certifies only that all points were found and
// are reduced at this instance.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cubictk/ff/geometry.hpp"

namespace cubictk::ff {

struct Census {
  int k_max = 0;
  std::vector<std::uint64_t> rational;  // [e-1]: qualifying divisors over F_{q^e}
  std::vector<std::uint64_t> exact;     // [e-1]: geometric points of exact degree e
  std::vector<std::uint64_t> closed;    // [e-1]: closed points of degree e (exact / e)
  std::uint64_t geometric_total = 0;
  bool rechecked = false;  // every hit passed an independent re-substitution
};

/// Moebius inversion: exact[e] = sum over d | e of mu(e/d) rational[d].
std::vector<std::uint64_t> exact_degree_counts(const std::vector<std::uint64_t>& rational);

/// Chord lines of a degree-4 curve in P^4 lying on the cubic; k_max <= 4.
/// Throws std::invalid_argument if the curve is not on the cubic.
Census two_secant_census(const RncCurve& c, const CubicForm& x, int k_max, unsigned threads = 1);

/// Degree-3 divisors on a nondegenerate degree-5 curve in P^4 spanning only
/// a line; k <= 2. Throws std::invalid_argument("curve is degenerate") or on
/// wrong degree or dimension.
Census three_secant_census(const RncCurve& c, int k, unsigned threads = 1);

/// A qualifying divisor found over the base field, with its span.
struct SecantWitness {
  BinaryForm divisor;
  FqLine line;
};

/// Base-field three-secant divisors (for inspection and re-checks).
std::vector<SecantWitness> three_secant_witnesses(const RncCurve& c);

/// True iff every root of the binary form (over F_{q^6}) maps to a point of the line.
bool divisor_points_on_line(const RncCurve& c, const BinaryForm& div, const FqLine& line);

}  // namespace cubictk::ff

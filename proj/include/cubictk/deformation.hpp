// Dimension arithmetic for curves on a threefold and cohomology of split
// bundles on P^1 and on P^1 x P^1.
#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace cubictk {

enum class SplitBase { P1, Quadric };

/// Direct sum of line bundles. On P1 only `degrees` is used; on the quadric
/// each summand is a bidegree in `bidegrees`. Storage is sorted descending.
class SplitBundle {
 public:
  static SplitBundle on_p1(std::vector<long> degrees);
  static SplitBundle on_quadric(std::vector<std::pair<long, long>> bidegrees);

  SplitBase base() const { return base_; }
  std::size_t rank() const;
  const std::vector<long>& degrees() const { return degrees_; }
  const std::vector<std::pair<long, long>>& bidegrees() const { return bidegrees_; }
  long total_degree() const;  // P1 only

  friend bool operator==(const SplitBundle&, const SplitBundle&) = default;

 private:
  SplitBase base_ = SplitBase::P1;
  std::vector<long> degrees_;
  std::vector<std::pair<long, long>> bidegrees_;
};

struct CurveOnThreefold {
  long degree;
  long genus;  // arithmetic
  long ambient_dim = 3;
  long minus_K_dot_C;

  /// A curve on a cubic threefold, where -K = 2H.
  static CurveOnThreefold on_cubic_threefold(long d, long g) { return {d, g, 3, 2 * d}; }
};

/// -K.C + (1 - p_a)(dim - 3).
long chi_normal(const CurveOnThreefold& c);

struct ExpectedDim {
  long degree;
  long genus;
  long dim;
};

/// The (d, g) pairs with d <= d_max among (1,0),(2,0),(3,0),(3,1),(4,0),(4,1),
/// (5,0),(5,1),(5,2), each with dimension chi_normal = 2d.
std::vector<ExpectedDim> expected_dims(long d_max);

struct Cohomology {
  long h0;
  long h1;
  long h2;  // always 0 on P1
  friend bool operator==(const Cohomology&, const Cohomology&) = default;
};

/// P1: h0(O(k)) = max(k+1, 0), h1(O(k)) = max(-k-1, 0).
/// Quadric, O(a,b) by Kunneth: h^i = sum over p+q=i of h^p(O(a)) h^q(O(b)).
/// The twist is applied to every degree (on the quadric as (t,t)).
Cohomology h0_h1(const SplitBundle& b, long twist);

/// Multisets of `rank` integers in [min_summand, max_summand] summing to
/// total_deg, each sorted descending; list sorted descending lexicographically.
std::vector<SplitBundle> feasible_splittings(long rank, long total_deg, long min_summand,
                                             long max_summand);

/// pi_* L for a double cover of P^1 by an elliptic curve and L of degree deg:
/// odd 2e+1 -> {e, e-1}; even 2e pulled back -> {e, e-2}; even not -> {e-1, e-1}.
SplitBundle pushforward_split(long deg, bool is_pullback);

}  // namespace cubictk

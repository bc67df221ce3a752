#include "cubictk/deformation.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace cubictk {

SplitBundle SplitBundle::on_p1(std::vector<long> degrees) {
  SplitBundle b;
  b.base_ = SplitBase::P1;
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  b.degrees_ = std::move(degrees);
  return b;
}

SplitBundle SplitBundle::on_quadric(std::vector<std::pair<long, long>> bidegrees) {
  SplitBundle b;
  b.base_ = SplitBase::Quadric;
  std::sort(bidegrees.begin(), bidegrees.end(), std::greater<>());
  b.bidegrees_ = std::move(bidegrees);
  return b;
}

std::size_t SplitBundle::rank() const {
  return base_ == SplitBase::P1 ? degrees_.size() : bidegrees_.size();
}

long SplitBundle::total_degree() const {
  if (base_ != SplitBase::P1) throw std::logic_error("total degree is defined on P1 only");
  long s = 0;
  for (long k : degrees_) s += k;
  return s;
}

long chi_normal(const CurveOnThreefold& c) {
  return c.minus_K_dot_C + (1 - c.genus) * (c.ambient_dim - 3);
}

std::vector<ExpectedDim> expected_dims(long d_max) {
  if (d_max < 1) throw std::invalid_argument("d_max must be >= 1");
  static const std::pair<long, long> kTreated[] = {{1, 0}, {2, 0}, {3, 0}, {3, 1}, {4, 0},
                                                   {4, 1}, {5, 0}, {5, 1}, {5, 2}};
  std::vector<ExpectedDim> out;
  for (auto [d, g] : kTreated)
    if (d <= d_max) out.push_back({d, g, chi_normal(CurveOnThreefold::on_cubic_threefold(d, g))});
  return out;
}

namespace {

long h0_p1(long k) { return std::max(k + 1, 0L); }
long h1_p1(long k) { return std::max(-k - 1, 0L); }

}  // namespace

Cohomology h0_h1(const SplitBundle& b, long twist) {
  Cohomology c{0, 0, 0};
  if (b.base() == SplitBase::P1) {
    for (long k : b.degrees()) {
      c.h0 += h0_p1(k + twist);
      c.h1 += h1_p1(k + twist);
    }
    return c;
  }
  for (auto [a0, b0] : b.bidegrees()) {
    const long a = a0 + twist, bb = b0 + twist;
    c.h0 += h0_p1(a) * h0_p1(bb);
    c.h1 += h0_p1(a) * h1_p1(bb) + h1_p1(a) * h0_p1(bb);
    c.h2 += h1_p1(a) * h1_p1(bb);
  }
  return c;
}

std::vector<SplitBundle> feasible_splittings(long rank, long total_deg, long min_summand,
                                             long max_summand) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  std::vector<SplitBundle> out;
  if (min_summand > max_summand) return out;
  std::vector<long> cur;
  // Non-increasing sequences: each next summand is at most the previous one.
  std::function<void(long, long)> rec = [&](long remaining, long cap) {
    const long slots = rank - static_cast<long>(cur.size());
    if (slots == 0) {
      if (remaining == 0) out.push_back(SplitBundle::on_p1(cur));
      return;
    }
    for (long k = cap; k >= min_summand; --k) {
      const long rest = remaining - k;
      if (rest > k * (slots - 1) || rest < min_summand * (slots - 1)) continue;
      cur.push_back(k);
      rec(rest, k);
      cur.pop_back();
    }
  };
  rec(total_deg, max_summand);
  return out;
}

SplitBundle pushforward_split(long deg, bool is_pullback) {
  const bool odd = (deg % 2) != 0;
  if (odd) {
    if (is_pullback) throw std::invalid_argument("pullback bundles have even degree");
    const long e = (deg - 1) / 2;
    return SplitBundle::on_p1({e, e - 1});
  }
  const long e = deg / 2;
  return is_pullback ? SplitBundle::on_p1({e, e - 2}) : SplitBundle::on_p1({e - 1, e - 1});
}

}  // namespace cubictk

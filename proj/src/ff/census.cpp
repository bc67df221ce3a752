#include "cubictk/ff/census.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace cubictk::ff {

namespace {

constexpr std::uint64_t kMaxDivisors = 20'000'000;

int moebius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::uint64_t projective_size(std::uint64_t Q, int m) {
  std::uint64_t s = 0;
  for (int i = 0; i <= m; ++i) s += ipow(Q, i);
  return s;
}

// Decodes global index g into a normalized point of P^m(F_Q): the block with
// leading 1 at position j has Q^(m-j) points.
void decode_point(std::uint64_t g, std::uint64_t Q, int m, Vec& out) {
  std::fill(out.begin(), out.end(), 0);
  for (int j = 0; j <= m; ++j) {
    const std::uint64_t block = ipow(Q, m - j);
    if (g < block) {
      out[j] = FqField::one();
      for (int c = j + 1; c <= m; ++c) {
        out[c] = static_cast<Elem>(g % Q);
        g /= Q;
      }
      return;
    }
    g -= block;
  }
  throw std::out_of_range("projective index");
}

struct Tally {
  std::uint64_t hits = 0;
  bool rechecked = true;
};

// Runs pred over every point of P^m(F_Q), split across threads.
Tally sweep(std::uint64_t Q, int m, unsigned threads,
            const std::function<void(const Vec&, Tally&)>& pred) {
  const std::uint64_t total = projective_size(Q, m);
  threads = std::max(1u, threads);
  std::vector<Tally> parts(threads);
  auto work = [&](unsigned t) {
    const std::uint64_t chunk = (total + threads - 1) / threads;
    const std::uint64_t lo = std::min(total, t * chunk), hi = std::min(total, lo + chunk);
    Vec pt(m + 1);
    for (std::uint64_t g = lo; g < hi; ++g) {
      decode_point(g, Q, m, pt);
      pred(pt, parts[t]);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t + 1 < threads; ++t) pool.emplace_back(work, t);
  work(threads - 1);
  for (auto& th : pool) th.join();
  Tally sum;
  for (const auto& p : parts) {
    sum.hits += p.hits;
    sum.rechecked = sum.rechecked && p.rechecked;
  }
  return sum;
}

struct Extension {
  FieldPtr field;
  std::vector<Elem> table;
};

Extension extend(const FqField& base, int e) {
  if (e == 1) {
    std::vector<Elem> id(base.q());
    std::iota(id.begin(), id.end(), 0);
    return {FqField::make(base.p(), base.k()), std::move(id)};
  }
  FieldPtr super = FqField::make(base.p(), base.k() * e);
  return {super, embedding(base, *super)};
}

void finish(Census& c) {
  c.exact = exact_degree_counts(c.rational);
  c.closed.clear();
  c.geometric_total = 0;
  for (std::size_t i = 0; i < c.exact.size(); ++i) {
    c.closed.push_back(c.exact[i] / (i + 1));
    c.geometric_total += c.exact[i];
  }
}

void check_budget(const FqField& base, int k_max, int m) {
  std::uint64_t total = 0;
  for (int e = 1; e <= k_max; ++e) {
    std::uint64_t Q = 1;
    for (int i = 0; i < base.k() * e; ++i) {
      Q *= base.p();
      if (Q > kMaxFieldSize) throw BudgetExceeded("extension field exceeds the table budget");
    }
    total += projective_size(Q, m);
  }
  if (total > kMaxDivisors) throw BudgetExceeded("census exceeds the enumeration budget");
}

}  // namespace

std::vector<std::uint64_t> exact_degree_counts(const std::vector<std::uint64_t>& rational) {
  std::vector<std::uint64_t> out;
  for (int e = 1; e <= static_cast<int>(rational.size()); ++e) {
    long long s = 0;
    for (int d = 1; d <= e; ++d)
      if (e % d == 0) s += moebius(e / d) * static_cast<long long>(rational[d - 1]);
    if (s < 0) throw std::logic_error("negative exact-degree count");
    out.push_back(static_cast<std::uint64_t>(s));
  }
  return out;
}

Census two_secant_census(const RncCurve& c, const CubicForm& x, int k_max, unsigned threads) {
  if (c.degree() != 4 || c.n() != 4) throw std::invalid_argument("need a degree-4 curve in P^4");
  if (x.n() != 4) throw std::invalid_argument("need a cubic in P^4");
  if (&c.field() != &x.field()) throw std::invalid_argument("curve and cubic over different fields");
  if (k_max < 1 || k_max > 4) throw std::invalid_argument("k_max must be in 1..4");
  if (!form_is_zero(x.restrict_to_curve(c))) throw std::invalid_argument("curve is not on the cubic");
  check_budget(c.field(), k_max, 2);

  Census out;
  out.k_max = k_max;
  out.rechecked = true;
  for (int e = 1; e <= k_max; ++e) {
    Extension ext = extend(c.field(), e);
    const RncCurve ce = c.base_change(ext.field, ext.table);
    const CubicForm xe = x.base_change(ext.field, ext.table);
    Tally t = sweep(ext.field->q(), 2, threads, [&](const Vec& q, Tally& tally) {
      FqLine line = chord_line(ce, q);
      if (!xe.contains_line(line)) return;
      ++tally.hits;
      if (!xe.contains_line_by_points(line)) tally.rechecked = false;
    });
    out.rational.push_back(t.hits);
    out.rechecked = out.rechecked && t.rechecked;
  }
  finish(out);
  return out;
}

namespace {

void require_quintic(const RncCurve& c) {
  if (c.degree() != 5 || c.n() != 4) throw std::invalid_argument("need a degree-5 curve in P^4");
  if (!c.nondegenerate()) throw std::invalid_argument("curve is degenerate");
}

}  // namespace

Census three_secant_census(const RncCurve& c, int k, unsigned threads) {
  require_quintic(c);
  if (k < 1 || k > 2) throw std::invalid_argument("k must be 1 or 2");
  check_budget(c.field(), k, 3);
  Census out;
  out.k_max = k;
  for (int e = 1; e <= k; ++e) {
    Extension ext = extend(c.field(), e);
    const RncCurve ce = c.base_change(ext.field, ext.table);
    Tally t = sweep(ext.field->q(), 3, threads, [&](const Vec& div, Tally& tally) {
      if (divisor_span(ce, div).size() == 2) ++tally.hits;
    });
    out.rational.push_back(t.hits);
  }
  out.rechecked = true;
  for (const auto& w : three_secant_witnesses(c))
    if (!divisor_points_on_line(c, w.divisor, w.line)) out.rechecked = false;
  finish(out);
  return out;
}

std::vector<SecantWitness> three_secant_witnesses(const RncCurve& c) {
  require_quintic(c);
  const FqField& f = c.field();
  std::vector<SecantWitness> out;
  const std::uint64_t total = projective_size(f.q(), 3);
  Vec div(4);
  for (std::uint64_t g = 0; g < total; ++g) {
    decode_point(g, f.q(), 3, div);
    Matrix span = divisor_span(c, div);
    if (span.size() == 2) out.push_back({div, FqLine(c.field_ptr(), std::move(span))});
  }
  return out;
}

bool divisor_points_on_line(const RncCurve& c, const BinaryForm& div, const FqLine& line) {
  const FqField& base = c.field();
  const std::size_t deg = div.size() - 1;
  std::size_t roots = 0;
  // (1:0) is a root iff the s^deg coefficient vanishes.
  if (div[deg] == 0) {
    if (!line.contains(c.point(FqField::one(), 0))) return false;
    ++roots;
  }
  // Affine roots (s:1) lie in F_{q^e} for some e <= deg; a root seen in
  // several fields is simply checked again.
  for (int e = 1; e <= static_cast<int>(deg); ++e) {
    Extension ext = extend(base, e);
    const FqField& F = *ext.field;
    const RncCurve ce = c.base_change(ext.field, ext.table);
    const BinaryForm de = map_vec(ext.table, div);
    Matrix rows;
    for (const auto& r : line.rows()) rows.push_back(map_vec(ext.table, r));
    const FqLine le(ext.field, rows);
    for (Elem s = 0; s < F.q(); ++s) {
      if (form_eval(F, de, s, FqField::one()) != 0) continue;
      if (!le.contains(ce.point(s, FqField::one()))) return false;
      ++roots;
    }
  }
  return roots > 0;
}

}  // namespace cubictk::ff

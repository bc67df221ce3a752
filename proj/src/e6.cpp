#include "cubictk/e6.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

namespace cubictk {

namespace {

using i64 = std::int64_t;

i64 isqrt_floor(i64 x) {
  if (x < 0) return -1;
  i64 r = 0;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

const SurfaceLattice& cubic() { return SurfaceLattice::cubic_surface(); }

DivisorClass from_ab(i64 a, const std::array<i64, 6>& b) {
  std::vector<Integer> v{Integer(a)};
  for (i64 bi : b) v.emplace_back(-bi);
  return DivisorClass(cubic(), std::move(v));
}

struct BSearch {
  i64 sum_target;
  i64 sq_target;
  i64 bound;
  std::array<i64, 6> b{};
  std::vector<std::array<i64, 6>> out;

  void run(int idx, i64 sum, i64 sq) {
    const i64 rem_sum = sum_target - sum;
    const i64 rem_sq = sq_target - sq;
    const i64 slots = 6 - idx;
    if (rem_sq < 0) return;
    if (rem_sum * rem_sum > slots * rem_sq) return;
    if (idx == 5) {
      if (rem_sum * rem_sum == rem_sq && std::abs(rem_sum) <= bound) {
        b[5] = rem_sum;
        out.push_back(b);
      }
      return;
    }
    for (i64 v = -bound; v <= bound; ++v) {
      if (v * v > rem_sq) continue;
      b[idx] = v;
      run(idx + 1, sum + v, sq + v * v);
    }
  }
};

}  // namespace

ClassSet enumerate_classes(long degree, long self_int) {
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");
  if (degree > 100000 || std::abs(self_int) > 1000000000L)
    throw std::invalid_argument("degree/self-intersection outside supported range");
  const i64 d = degree, s = self_int;
  // Sum b = 3a - d and sum b^2 = a^2 - s with (sum b)^2 <= 6 sum b^2 give
  // 3a^2 - 6ad + d^2 + 6s <= 0.
  const i64 disc = 6 * d * d - 18 * s;
  ClassSet result;
  if (disc < 0) return result;
  const i64 r = isqrt_floor(disc) / 3 + 1;
  for (i64 a = d - r; a <= d + r; ++a) {
    if (3 * a * a - 6 * a * d + d * d + 6 * s > 0) continue;
    const i64 sq = a * a - s;
    if (sq < 0) continue;
    BSearch bs{3 * a - d, sq, isqrt_floor(sq), {}, {}};
    bs.run(0, 0, 0);
    for (const auto& b : bs.out) result.push_back(from_ab(a, b));
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

std::vector<Orbit> s6_orbits(const ClassSet& cs) {
  std::map<std::vector<Integer>, std::size_t> sizes;
  for (const auto& c : cs) {
    if (c.lattice().kind() != SurfaceKind::CubicSurface)
      throw std::invalid_argument("s6_orbits needs cubic-surface classes");
    // Coefficients of e_i are -b_i; b descending means coefficients ascending.
    std::vector<Integer> key = c.coeffs();
    std::sort(key.begin() + 1, key.end());
    ++sizes[key];
  }
  std::vector<Orbit> out;
  for (auto& [key, n] : sizes) out.push_back({DivisorClass(cubic(), key), n});
  return out;
}

DivisorClass swap_exceptional(const DivisorClass& c, std::size_t i, std::size_t j) {
  if (i < 1 || i > 6 || j < 1 || j > 6) throw std::out_of_range("exceptional index");
  std::vector<Integer> v = c.coeffs();
  std::swap(v[i], v[j]);
  return DivisorClass(c.lattice(), std::move(v));
}

DivisorClass apply_weyl_generator(std::size_t index, const DivisorClass& c) {
  if (c.lattice().kind() != SurfaceKind::CubicSurface)
    throw std::invalid_argument("Weyl action needs a cubic-surface class");
  if (index < 5) return swap_exceptional(c, index + 1, index + 2);
  if (index == 5) {
    static const DivisorClass root(cubic(), {1, -1, -1, -1, 0, 0, 0});
    return c + pair(c, root) * root;
  }
  throw std::out_of_range("Weyl generator index");
}

ClassSet weyl_orbit(const DivisorClass& seed, std::size_t cap) {
  if (seed.lattice().kind() != SurfaceKind::CubicSurface)
    throw std::invalid_argument("Weyl action needs a cubic-surface class");
  std::set<DivisorClass> seen{seed};
  std::set<DivisorClass> frontier{seed};
  while (!frontier.empty()) {
    std::set<DivisorClass> next;
    for (const auto& c : frontier) {
      for (std::size_t g = 0; g < kWeylGeneratorCount; ++g) {
        DivisorClass img = apply_weyl_generator(g, c);
        if (seen.insert(img).second) {
          if (seen.size() > cap) throw OrbitTooLarge();
          next.insert(std::move(img));
        }
      }
    }
    frontier = std::move(next);
  }
  return ClassSet(seen.begin(), seen.end());
}

bool is_line_class(const DivisorClass& c) {
  return c.lattice().kind() == SurfaceKind::CubicSurface && degree(c) == 1 && pair(c, c) == -1;
}

namespace {

const ClassSet& lines() {
  static const ClassSet ls = enumerate_classes(1, -1);
  return ls;
}

void skew_sixes(const ClassSet& ls, std::vector<std::size_t>& cur, std::size_t start,
                std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == 6) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < ls.size(); ++i) {
    bool ok = true;
    for (std::size_t j : cur)
      if (pair(ls[i], ls[j]) != 0) {
        ok = false;
        break;
      }
    if (!ok) continue;
    cur.push_back(i);
    skew_sixes(ls, cur, i + 1, out);
    cur.pop_back();
  }
}

}  // namespace

bool is_double_six(const DoubleSix& ds) {
  if (ds.e_lines.size() != 6 || ds.g_lines.size() != 6) return false;
  for (std::size_t i = 0; i < 6; ++i) {
    if (!is_line_class(ds.e_lines[i]) || !is_line_class(ds.g_lines[i])) return false;
    for (std::size_t j = 0; j < 6; ++j) {
      if (i != j) {
        if (pair(ds.e_lines[i], ds.e_lines[j]) != 0) return false;
        if (pair(ds.g_lines[i], ds.g_lines[j]) != 0) return false;
        if (pair(ds.e_lines[i], ds.g_lines[j]) != 1) return false;
      } else if (pair(ds.e_lines[i], ds.g_lines[i]) != 0) {
        return false;
      }
    }
  }
  return true;
}

std::vector<DoubleSix> double_sixes() {
  const ClassSet& ls = lines();
  std::vector<std::vector<std::size_t>> sixes;
  std::vector<std::size_t> cur;
  skew_sixes(ls, cur, 0, sixes);

  std::set<std::pair<std::vector<DivisorClass>, std::vector<DivisorClass>>> canon;
  for (const auto& six : sixes) {
    std::vector<std::pair<DivisorClass, DivisorClass>> rows;
    for (std::size_t i : six) {
      std::vector<std::size_t> partners;
      for (std::size_t k = 0; k < ls.size(); ++k) {
        if (std::find(six.begin(), six.end(), k) != six.end()) continue;
        bool ok = true;
        for (std::size_t j : six) {
          if (pair(ls[k], ls[j]) != (j == i ? 0 : 1)) {
            ok = false;
            break;
          }
        }
        if (ok) partners.push_back(k);
      }
      if (partners.size() != 1) break;
      rows.emplace_back(ls[i], ls[partners[0]]);
    }
    if (rows.size() != 6) continue;
    // Canonical: the side whose sorted list is smaller is the E side; rows in E order.
    std::vector<DivisorClass> es, gs;
    for (auto& [e, g] : rows) {
      es.push_back(e);
      gs.push_back(g);
    }
    std::sort(es.begin(), es.end());
    std::sort(gs.begin(), gs.end());
    if (gs < es)
      for (auto& row : rows) std::swap(row.first, row.second);
    std::sort(rows.begin(), rows.end());
    std::vector<DivisorClass> e_side, g_side;
    for (auto& [e, g] : rows) {
      e_side.push_back(e);
      g_side.push_back(g);
    }
    canon.emplace(std::move(e_side), std::move(g_side));
  }
  std::vector<DoubleSix> out;
  for (const auto& [e, g] : canon) out.push_back({e, g});
  return out;
}

std::size_t count_lines_meeting(std::span<const DivisorClass> targets) {
  for (const auto& t : targets)
    if (!is_line_class(t)) throw std::invalid_argument("not a line class");
  std::size_t n = 0;
  for (const auto& l : lines()) {
    if (std::find(targets.begin(), targets.end(), l) != targets.end()) continue;
    bool all = true;
    for (const auto& t : targets)
      if (pair(l, t) != 1) {
        all = false;
        break;
      }
    if (all) ++n;
  }
  return n;
}

Graph incidence_graph() {
  const ClassSet& ls = lines();
  Graph g(ls.size());
  for (std::size_t i = 0; i < ls.size(); ++i)
    for (std::size_t j = i + 1; j < ls.size(); ++j)
      if (pair(ls[i], ls[j]) == 1) g.add_edge(i, j);
  return g;
}

}  // namespace cubictk

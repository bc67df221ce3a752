// Prints one PASS/FAIL line per acceptance criterion; exits 1 on any failure.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>

#include "cubictk/audit.hpp"
#include "cubictk/chow.hpp"
#include "cubictk/deformation.hpp"
#include "cubictk/e6.hpp"
#include "cubictk/ff/census.hpp"
#include "cubictk/scroll.hpp"

using namespace cubictk;

namespace {

struct Check {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

DivisorClass cubic(long a, std::initializer_list<long> b) {
  std::vector<Integer> v{a};
  for (long x : b) v.emplace_back(-x);
  return DivisorClass(SurfaceLattice::cubic_surface(), std::move(v));
}

Check ac1() {
  Check c;
  ClassSet cs = enumerate_classes(3, 1);
  c.require(cs.size() == 72, "expected 72 classes, got " + std::to_string(cs.size()));
  std::set<std::pair<DivisorClass, std::size_t>> want = {{cubic(1, {0, 0, 0, 0, 0, 0}), 1},
                                                         {cubic(2, {1, 1, 1, 0, 0, 0}), 20},
                                                         {cubic(3, {2, 1, 1, 1, 1, 0}), 30},
                                                         {cubic(4, {2, 2, 2, 1, 1, 1}), 20},
                                                         {cubic(5, {2, 2, 2, 2, 2, 2}), 1}};
  std::set<std::pair<DivisorClass, std::size_t>> got;
  for (const auto& o : s6_orbits(cs)) got.insert({o.representative, o.size});
  c.require(got == want, "orbit representatives or sizes differ");
  c.detail = c.ok ? "72 classes, orbits 1/20/30/20/1" : c.detail;
  return c;
}

Check ac2() {
  Check c;
  c.require(weyl_orbit(cubic(1, {0, 0, 0, 0, 0, 0})) == enumerate_classes(3, 1), "Weyl orbit of l is not the 72-set");
  c.detail = c.ok ? "W(E6) orbit of l equals the 72-set" : c.detail;
  return c;
}

Check ac3() {
  Check c;
  const auto& lat = SurfaceLattice::cubic_surface();
  c.require(enumerate_classes(1, -1).size() == 27, "line count");
  Graph g = incidence_graph();
  c.require(g.regular_degree() == std::optional<std::size_t>(10) && g.edge_count() == 135, "incidence graph");
  c.require(double_sixes().size() == 36, "double-six count");
  std::vector<DivisorClass> t = {lat.basis(1), lat.basis(2)};
  c.require(count_lines_meeting(t) == 5, "lines meeting e1 and e2");
  c.detail = c.ok ? "27 lines, 10-regular 135 edges, 36 double-sixes, 5 lines meet e1,e2" : c.detail;
  return c;
}

Check ac4() {
  Check c;
  CxCRing r = CxCRing::make_symbolic();
  auto c2 = grr_c2E(r);
  c.require(c2 == expected_c2E_symbolic(), "symbolic c2(E)");
  c.require(c2.to_string() == "5 w1.w2 - 15 Delta_*w + 6 Delta.Delta", "c2 text: " + c2.to_string());
  for (long d = 1; d <= 8; ++d)
    for (long g = 0; g <= 3; ++g) {
      BValue b = b_of_C(d, g);
      c.require(2 * b.value == 5 * d * (d - 3) + 12 - 12 * g && b.value == b.closed,
                "b(" + std::to_string(d) + "," + std::to_string(g) + ")");
    }
  c.require(b_of_C(4, 0).value == 16 && b_of_C(3, 1).value == 0 && b_of_C(5, 1).value == 25, "b anchors");
  c.detail = c.ok ? "c2(E) = " + c2.to_string() + "; b(4,0)=16 b(3,1)=0 b(5,1)=25" : c.detail;
  return c;
}

Check ac5() {
  Check c;
  const auto& S = SurfaceLattice::scroll();
  const auto& Q = SurfaceLattice::quadric();
  auto s = [&](const char* t) { return parse_class(S, t); };
  auto solve = [](const SurfaceLattice& lat, long d, long g, bool irr) { return solve_classes({&lat, d, g, irr}); };
  c.require(solve(S, 4, 0, false) == std::vector<DivisorClass>{s("D+3F"), s("2D+2F")}, "degree 4 genus 0");
  c.require(solve(S, 5, 1, false) == std::vector<DivisorClass>{s("2D+3F")}, "degree 5 genus 1");
  c.require(solve(S, 5, 0, true) == std::vector<DivisorClass>{s("D+4F")}, "degree 5 genus 0 irreducible");
  c.require(residual(s("3D+6F"), {s("2D+2F"), s("2F")}) == s("D+2F"), "scroll residual");
  c.require(residual(DivisorClass(Q, {3, 3}), {DivisorClass(Q, {1, 1})}) == DivisorClass(Q, {2, 2}), "quadric residual");
  c.detail = c.ok ? "scroll and quadric classes and residuals" : c.detail;
  return c;
}

Check ac6() {
  Check c;
  for (long d = 1; d <= 5; ++d)
    for (long g = -2; g <= 6; ++g)
      c.require(chi_normal(CurveOnThreefold::on_cubic_threefold(d, g)) == 2 * d, "chi_normal != 2d");
  c.require(chi_normal(CurveOnThreefold::on_cubic_threefold(3, 0)) == 6, "(3,0)");
  c.require(chi_normal(CurveOnThreefold::on_cubic_threefold(5, 2)) == 10, "(5,2)");
  c.detail = c.ok ? "chi(N) = 2d for d = 1..5, all genera" : c.detail;
  return c;
}

Check ac7() {
  Check c;
  auto sheets = bundled_sheets();
  auto rep = audit(sheets);
  c.require(sheets.size() >= 20, "fewer than 20 sheets");
  c.require(rep.all_pass(), std::to_string(rep.failed) + " sheets fail");
  for (const auto& s : sheets)
    for (const auto& k : s.contributions) c.require(k.ref && !k.ref->empty(), "missing ref in " + s.name);
  c.detail = c.ok ? std::to_string(rep.passed) + "/" + std::to_string(sheets.size()) + " sheets pass" : c.detail;
  return c;
}

Check ac8() {
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  auto f = ff::FqField::make(7, 1);
  auto lines = ff::lines_in_hypersurface(ff::CubicForm::fermat(f, 3));
  double t = seconds_since(t0);
  c.require(lines.size() == 27, "got " + std::to_string(lines.size()) + " lines");
  c.require(find_isomorphism(ff::line_incidence_graph(lines), incidence_graph()).has_value(), "graphs differ");
  c.require(t < 1.0, "took " + std::to_string(t) + " s");
  char buf[96];
  std::snprintf(buf, sizeof buf, "27 lines over F_7, graph isomorphic, %.2f s", t);
  if (c.ok) c.detail = buf;
  return c;
}

Check ac9() {
  Check c;
  auto f = ff::FqField::make(5, 1);
  auto curve = ff::RncCurve::standard(f, 4);
  auto t0 = std::chrono::steady_clock::now();
  auto frozen = ff::two_secant_census(curve, ff::cubic_through_curve(curve, 396), 4);
  double t = seconds_since(t0);
  c.require(frozen.geometric_total == 16 && frozen.rechecked, "frozen instance gave " + std::to_string(frozen.geometric_total));
  c.require(t < 10.0, "took " + std::to_string(t) + " s");
  std::uint64_t worst = 0;
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    auto cs = ff::two_secant_census(curve, ff::cubic_through_curve(curve, seed), 4);
    worst = std::max(worst, cs.geometric_total);
    c.require(cs.geometric_total <= 16, "seed " + std::to_string(seed) + " exceeds 16");
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "p=5 seed=396: 16 chords (%.2f s); seeds 0-7 max %llu", t,
                static_cast<unsigned long long>(worst));
  if (c.ok) c.detail = buf;
  return c;
}

Check ac10() {
  Check c;
  auto f = ff::FqField::make(7, 1);
  auto t0 = std::chrono::steady_clock::now();
  auto cs = ff::three_secant_census(ff::RncCurve::seeded_projection(f, 4, 5, 0), 2);
  double t = seconds_since(t0);
  c.require(cs.geometric_total == 1 && cs.rechecked, "got " + std::to_string(cs.geometric_total));
  c.require(t < 10.0, "took " + std::to_string(t) + " s");
  char buf[96];
  std::snprintf(buf, sizeof buf, "unique 3-secant for p=7 seed=0 (%.2f s)", t);
  if (c.ok) c.detail = buf;
  return c;
}

Check ac11() {
  Check c;
  constexpr int kCases = 100;
  std::mt19937_64 rng(0xacc11);
  auto uni = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  const SurfaceLattice* lats[] = {&SurfaceLattice::cubic_surface(), &SurfaceLattice::scroll(),
                                  &SurfaceLattice::quadric()};
  auto rand_class = [&](const SurfaceLattice& lat) {
    std::vector<Integer> v;
    for (std::size_t i = 0; i < lat.rank(); ++i) v.emplace_back(uni(-9, 9));
    return DivisorClass(lat, std::move(v));
  };
  for (const auto* lat : lats) c.require(abs(lat->gram_determinant()) == 1, "unimodularity");
  for (int i = 0; i < kCases; ++i) {
    const auto& lat = *lats[uni(0, 2)];
    auto a = rand_class(lat), b = rand_class(lat), x = rand_class(lat);
    Integer m = uni(-9, 9);
    c.require(pair(a, b) == pair(b, a), "symmetry");
    c.require(pair(m * a + b, x) == m * pair(a, x) + pair(b, x), "bilinearity");
    c.require((pair(a, a) + pair(a, lat.canonical())) % 2 == 0, "adjunction parity");
    c.require(residual(x, {residual(x, {a})}) == a, "residual involution");
    c.require(degree(residual(x, {a, b})) == degree(x) - degree(a) - degree(b), "degree additivity");
  }
  for (int i = 0; i < kCases; ++i) {
    CxCRing r = CxCRing::make_numeric(uni(1, 9), uni(0, 4));
    ProjectiveBundle p(r);
    auto el = [&] {
      std::vector<Rational> v;
      for (std::size_t j = 0; j < r.algebra->dim(); ++j) v.emplace_back(uni(-9, 9), uni(1, 3));
      return r.algebra->element(std::move(v));
    };
    auto a = el(), b = el(), d = el(), u = el(), v = el();
    c.require(a * b == b * a && (a * b) * d == a * (b * d) && a * (b + d) == a * b + a * d, "ring laws");
    c.require(p.pushforward(p.pullback(a) * (p.pullback(u) + p.pullback(v) * p.eta())) == a * v, "projection formula");
  }
  for (int i = 0; i < kCases; ++i) {
    std::vector<long> degs;
    long sum = 0;
    for (long k = uni(1, 4); k > 0; --k) sum += degs.emplace_back(uni(-6, 6));
    auto h = h0_h1(SplitBundle::on_p1(degs), 0);
    c.require(h.h0 - h.h1 == sum + static_cast<long>(degs.size()), "P1 Riemann-Roch");
    long dd = uni(-40, 40);
    c.require(pushforward_split(dd, false).total_degree() == dd - 2, "pushforward degree");
  }
  for (int i = 0; i < kCases; ++i) {
    CountSheet s{"s" + std::to_string(i), uni(0, 1) ? Relation::Equals : Relation::AtMost, uni(0, 99), {}};
    for (long k = uni(1, 5); k > 0; --k)
      s.contributions.push_back({uni(0, 1) ? 1 : -1, uni(0, 50), "d \"" + std::to_string(k) + "\\", std::nullopt});
    c.require(parse_sheets(print_sheets({s})) == std::vector<CountSheet>{s}, "parser round-trip");
  }
  auto f = ff::FqField::make(5, 1);
  auto x = ff::CubicForm::fermat(f, 4);
  auto one = ff::lines_in_hypersurface(x, 1);
  for (unsigned t : {2u, 4u, 8u}) c.require(ff::lines_in_hypersurface(x, t) == one, "line oracle varies with threads");
  auto curve = ff::RncCurve::standard(f, 4);
  auto cub = ff::cubic_through_curve(curve, 396);
  c.require(ff::two_secant_census(curve, cub, 4, 1).rational == ff::two_secant_census(curve, cub, 4, 4).rational,
            "census varies with threads");
  c.detail = c.ok ? "lattice, chow, splitting, parser and oracle properties (100 cases each)" : c.detail;
  return c;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Check()>> criteria[] = {
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4},   {"AC5", ac5},   {"AC6", ac6},
      {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}, {"AC10", ac10}, {"AC11", ac11},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Check c;
    try {
      c = fn();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    std::cout << name << " " << (c.ok ? "PASS" : "FAIL") << " " << c.detail << std::endl;
    if (!c.ok) ++failed;
  }
  return failed ? 1 : 0;
}

#include "cubictk/scroll.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubictk {

namespace {

void require_scroll_or_quadric(const SurfaceLattice& lat) {
  if (lat.kind() == SurfaceKind::CubicSurface)
    throw std::invalid_argument("operation needs the scroll or the quadric lattice");
}

}  // namespace

bool is_effective_candidate(const DivisorClass& c) {
  const auto& lat = c.lattice();
  switch (lat.kind()) {
    case SurfaceKind::Scroll: {
      const DivisorClass F(lat, {0, 1});
      const DivisorClass DF(lat, {1, 1});
      return pair(c, F) >= 0 && pair(c, DF) >= 0;
    }
    case SurfaceKind::Quadric:
      return c[0] >= 0 && c[1] >= 0;
    case SurfaceKind::CubicSurface:
      break;
  }
  throw std::invalid_argument("effective candidates are defined on the scroll and quadric only");
}

std::vector<DivisorClass> solve_classes(const ClassQuery& q) {
  if (q.lattice == nullptr) throw std::invalid_argument("query has no lattice");
  const SurfaceLattice& lat = *q.lattice;
  require_scroll_or_quadric(lat);
  if (q.degree < 1) throw std::invalid_argument("degree must be >= 1");

  // On both surfaces degree(aX+bY) = a+b, and effective candidates have
  // a, b >= 0, so the box 0 <= a <= degree is exhaustive.
  std::vector<DivisorClass> out;
  const DivisorClass directrix(lat, {1, 0});
  for (long a = 0; a <= q.degree; ++a) {
    DivisorClass c(lat, {a, q.degree - a});
    if (degree(c) != q.degree || arith_genus(c) != q.genus) continue;
    if (!is_effective_candidate(c)) continue;
    if (q.require_irreducible_candidate && lat.kind() == SurfaceKind::Scroll &&
        pair(c, directrix) < 0 && c != directrix)
      continue;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

DivisorClass x_cut_class(const SurfaceLattice& lat) {
  require_scroll_or_quadric(lat);
  return Integer(3) * lat.hyperplane();
}

ResidualProfile residual_profile(const SurfaceLattice& lat, const DivisorClass& curve,
                                 const DivisorClass& secants) {
  if (&curve.lattice() != &lat || &secants.lattice() != &lat) throw LatticeMismatch();
  DivisorClass r = residual(x_cut_class(lat), {curve, secants});
  for (const auto& c : r.coeffs())
    if (c < 0) throw NotEffective(format_class(r));
  return {r, degree(r), arith_genus(r)};
}

bool secant_plane_guarantee(const SecantQuery& q) {
  if (q.r < 0 || q.r >= q.n || q.k < 1) throw std::invalid_argument("invalid secant query");
  return (q.r + 2) * q.k >= (q.r + 1) * (q.n + 1);
}

}  // namespace cubictk

#include "cubictk/lattice.hpp"

#include <cassert>

namespace cubictk {

std::string_view to_string(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::CubicSurface:
      return "cubic-surface";
    case SurfaceKind::Scroll:
      return "scroll";
    case SurfaceKind::Quadric:
      return "quadric";
  }
  return "?";
}

namespace {

std::vector<Integer> to_integers(std::initializer_list<long> xs) {
  return std::vector<Integer>(xs.begin(), xs.end());
}

void require_same(const DivisorClass& a, const DivisorClass& b) {
  if (&a.lattice() != &b.lattice()) throw LatticeMismatch();
}

}  // namespace

// ---- DivisorClass ----

DivisorClass::DivisorClass(const SurfaceLattice& lattice, std::vector<Integer> coeffs)
    : lattice_(&lattice), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != lattice.rank())
    throw std::invalid_argument("coefficient vector has wrong length for " +
                                std::string(lattice.name()));
}

DivisorClass::DivisorClass(const SurfaceLattice& lattice, std::initializer_list<long> coeffs)
    : DivisorClass(lattice, to_integers(coeffs)) {}

DivisorClass DivisorClass::zero(const SurfaceLattice& lattice) {
  return DivisorClass(lattice, std::vector<Integer>(lattice.rank()));
}

bool DivisorClass::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

DivisorClass DivisorClass::operator-() const {
  DivisorClass r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  require_same(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
  require_same(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Integer& k) {
  for (auto& c : coeffs_) c *= k;
  return *this;
}

bool operator==(const DivisorClass& a, const DivisorClass& b) {
  return a.lattice_ == b.lattice_ && a.coeffs_ == b.coeffs_;
}

std::strong_ordering operator<=>(const DivisorClass& a, const DivisorClass& b) {
  require_same(a, b);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] < b.coeffs_[i]) return std::strong_ordering::less;
    if (a.coeffs_[i] > b.coeffs_[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

// ---- SurfaceLattice ----

SurfaceLattice::SurfaceLattice(SurfaceKind kind, std::vector<std::string> names,
                               std::vector<Integer> gram, std::vector<Integer> canonical,
                               std::vector<Integer> hyperplane)
    : kind_(kind),
      basis_names_(std::move(names)),
      gram_(std::move(gram)),
      canonical_(*this, std::move(canonical)),
      hyperplane_(*this, std::move(hyperplane)),
      chi_structure_(1) {
  assert(gram_.size() == rank() * rank());
}

const SurfaceLattice& SurfaceLattice::cubic_surface() {
  static const SurfaceLattice lat = [] {
    std::vector<Integer> gram(49);
    gram[0] = 1;
    for (std::size_t i = 1; i < 7; ++i) gram[i * 7 + i] = -1;
    return SurfaceLattice(SurfaceKind::CubicSurface, {"l", "e1", "e2", "e3", "e4", "e5", "e6"},
                          std::move(gram), to_integers({-3, 1, 1, 1, 1, 1, 1}),
                          to_integers({3, -1, -1, -1, -1, -1, -1}));
  }();
  return lat;
}

const SurfaceLattice& SurfaceLattice::scroll() {
  static const SurfaceLattice lat(SurfaceKind::Scroll, {"D", "F"}, to_integers({-1, 1, 1, 0}),
                                  to_integers({-2, -3}), to_integers({1, 2}));
  return lat;
}

const SurfaceLattice& SurfaceLattice::quadric() {
  static const SurfaceLattice lat(SurfaceKind::Quadric, {"A", "B"}, to_integers({0, 1, 1, 0}),
                                  to_integers({-2, -2}), to_integers({1, 1}));
  return lat;
}

const SurfaceLattice& SurfaceLattice::of(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::CubicSurface:
      return cubic_surface();
    case SurfaceKind::Scroll:
      return scroll();
    case SurfaceKind::Quadric:
      return quadric();
  }
  throw std::invalid_argument("unknown surface kind");
}

DivisorClass SurfaceLattice::basis(std::size_t i) const {
  std::vector<Integer> v(rank());
  v.at(i) = 1;
  return DivisorClass(*this, std::move(v));
}

Integer SurfaceLattice::gram_determinant() const {
  // Bareiss fraction-free elimination.
  const std::size_t n = rank();
  std::vector<Integer> m = gram_;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k * n + k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r * n + k] == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[r * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
    }
    prev = m[k * n + k];
  }
  return sign * m[n * n - 1];
}

// ---- operations ----

Integer pair(const DivisorClass& c1, const DivisorClass& c2) {
  require_same(c1, c2);
  const auto& lat = c1.lattice();
  Integer s = 0;
  for (std::size_t i = 0; i < lat.rank(); ++i) {
    if (c1[i] == 0) continue;
    for (std::size_t j = 0; j < lat.rank(); ++j) {
      const Integer& g = lat.gram(i, j);
      if (g != 0) s += c1[i] * g * c2[j];
    }
  }
  return s;
}

Integer degree(const DivisorClass& c) { return pair(c, c.lattice().hyperplane()); }

Integer arith_genus(const DivisorClass& c) {
  Integer twice = pair(c, c) + pair(c, c.lattice().canonical());
  assert(twice % 2 == 0);
  return 1 + twice / 2;
}

Integer chi_rr(const DivisorClass& c) {
  Integer twice = pair(c, c) - pair(c, c.lattice().canonical());
  assert(twice % 2 == 0);
  return twice / 2 + c.lattice().chi_structure();
}

DivisorClass residual(const DivisorClass& ambient, std::span<const DivisorClass> parts) {
  DivisorClass r = ambient;
  for (const auto& p : parts) r -= p;
  return r;
}

DivisorClass residual(const DivisorClass& ambient, std::initializer_list<DivisorClass> parts) {
  return residual(ambient, std::span<const DivisorClass>(parts.begin(), parts.size()));
}

}  // namespace cubictk

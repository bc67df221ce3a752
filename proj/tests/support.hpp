// Shared helpers for the seeded property loops.
#pragma once

#include <cstdint>
#include <ostream>
#include <random>

#include "cubictk/lattice.hpp"

namespace cubictk {

inline void PrintTo(const DivisorClass& c, std::ostream* os) { *os << format_class(c); }

}  // namespace cubictk

namespace cubictk::testing {

constexpr int kCases = 200;

inline std::mt19937_64 rng_for(std::uint64_t salt) { return std::mt19937_64(0x5eed0000ULL + salt); }

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline DivisorClass random_class(std::mt19937_64& rng, const SurfaceLattice& lat, long bound = 9) {
  std::vector<Integer> v;
  for (std::size_t i = 0; i < lat.rank(); ++i) v.emplace_back(uniform(rng, -bound, bound));
  return DivisorClass(lat, std::move(v));
}

inline const SurfaceLattice& random_lattice(std::mt19937_64& rng) {
  static const SurfaceKind kinds[] = {SurfaceKind::CubicSurface, SurfaceKind::Scroll,
                                      SurfaceKind::Quadric};
  return SurfaceLattice::of(kinds[uniform(rng, 0, 2)]);
}

}  // namespace cubictk::testing

// Distinguished classes on the cubic-surface lattice: lines, twisted-cubic
// classes, W(E6) orbits, double-sixes and line incidence.
//
// A class is written (a; b1..b6) for a*l - sum b_i e_i, so its coefficient
// vector is (a, -b1, ..., -b6).
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cubictk/graph.hpp"
#include "cubictk/lattice.hpp"

namespace cubictk {

/// Sorted (lexicographic on coefficients), duplicate-free list of classes.
using ClassSet = std::vector<DivisorClass>;

/// All classes C on the cubic surface with C.(-K) = degree and C.C = self_int.
/// The search window comes from (sum b)^2 <= 6 sum b^2, so it is exhaustive.
ClassSet enumerate_classes(long degree, long self_int);

struct Orbit {
  DivisorClass representative;  // b_i sorted descending
  std::size_t size;
};

/// Partition under permutations of e1..e6, ordered by representative.
std::vector<Orbit> s6_orbits(const ClassSet& cs);

/// Generators: index 0..4 swap e_{i+1} and e_{i+2}; index 5 is the reflection
/// in r = l-e1-e2-e3, C -> C + (C.r) r.
constexpr std::size_t kWeylGeneratorCount = 6;
DivisorClass apply_weyl_generator(std::size_t index, const DivisorClass& c);
/// Swap e_i and e_j (1-based indices).
DivisorClass swap_exceptional(const DivisorClass& c, std::size_t i, std::size_t j);

class OrbitTooLarge : public std::runtime_error {
 public:
  OrbitTooLarge() : std::runtime_error("orbit exceeds size cap") {}
};

ClassSet weyl_orbit(const DivisorClass& seed, std::size_t cap = 1'000'000);

struct DoubleSix {
  std::vector<DivisorClass> e_lines;
  std::vector<DivisorClass> g_lines;
};

bool is_double_six(const DoubleSix& ds);
std::vector<DoubleSix> double_sixes();

bool is_line_class(const DivisorClass& c);
/// Lines outside targets meeting every target once.
std::size_t count_lines_meeting(std::span<const DivisorClass> targets);

/// The 27 lines in enumerate_classes(1,-1) order, joined when L.L' = 1.
Graph incidence_graph();

}  // namespace cubictk

// Class problems on the cubic scroll and the quadric: which classes have a
// given degree and arithmetic genus, residuals inside the cut by a cubic, and
// the k-secant linear-space inequality for rational normal curves.
#pragma once

#include "cubictk/lattice.hpp"

namespace cubictk {

struct ClassQuery {
  const SurfaceLattice* lattice;
  long degree;
  long genus;
  bool require_irreducible_candidate = false;
};

/// Scroll: C.F >= 0 and C.(D+F) >= 0. Quadric: both coordinates >= 0.
/// Purely numerical; geometric effectivity is not decided here.
bool is_effective_candidate(const DivisorClass& c);

/// Effective candidates of the requested degree and genus, sorted. With the
/// irreducibility flag, scroll classes with C.D < 0 other than D itself are
/// dropped (they must contain the directrix).
std::vector<DivisorClass> solve_classes(const ClassQuery& q);

/// 3H: the class cut on the surface by a cubic hypersurface.
DivisorClass x_cut_class(const SurfaceLattice& lat);

struct ResidualProfile {
  DivisorClass cls;
  Integer degree;
  Integer genus;
};

/// x_cut_class - curve - secants. Throws NotEffective if a coordinate is negative.
ResidualProfile residual_profile(const SurfaceLattice& lat, const DivisorClass& curve,
                                 const DivisorClass& secants);

struct SecantQuery {
  long n;  // ambient P^n
  long r;  // dimension of the linear space
  long k;  // number of secant points
};

/// (r+2)k >= (r+1)(n+1).
bool secant_plane_guarantee(const SecantQuery& q);

}  // namespace cubictk

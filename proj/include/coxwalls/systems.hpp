#pragma once

// Named Coxeter systems used by the experiments and tests.

#include "coxwalls/core.hpp"

namespace coxwalls::systems {

/// Rank two, generators s,t with m(s,t) = m (kInfinity for the infinite dihedral group).
CoxeterSystem dihedral(int m);

/// D-infinity: s,t with no relation.
CoxeterSystem infinite_dihedral();

/// D-infinity x D-infinity: a,b | c,d, commuting across factors. The Cayley
/// graph is the square grid.
CoxeterSystem grid();

/// Affine A~2: s,t,u with every m = 3.
CoxeterSystem affine_a2();

/// Finite A3: s,t,u with m(s,t) = m(t,u) = 3, m(s,u) = 2.
CoxeterSystem a3();

/// Finite A1 x A2: s,t,u with m(s,t) = m(s,u) = 2, m(t,u) = 3.
CoxeterSystem a1_x_a2();

/// (Z/2)^rank, every m = 2.
CoxeterSystem right_angled_finite(std::size_t rank);

}  // namespace coxwalls::systems

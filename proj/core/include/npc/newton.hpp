#pragma once

// Newton polyhedron NP(I) = conv(generators) + R^d_{>=0} of a monomial ideal,
// decided by exact linear programming, and the two ideals it determines:
// the integral closure (lattice points of NP) and the adjoint, i.e. the
// multiplier ideal with exponent 1 (v with v + (1,...,1) interior to NP).

#include <optional>

#include "npc/monomial.hpp"
#include "npc/numeric.hpp"

namespace npc {

/// v in NP(I): a convex combination of generators lies below v.
bool np_member(const Monomial& v, const MonomialIdeal& ideal);

/// sup{delta : v - delta (1,...,1) in NP(I)}, or nullopt when v is not in NP(I).
std::optional<BigRational> np_depth(const Monomial& v, const MonomialIdeal& ideal);

/// v in the interior of NP(I), i.e. np_depth(v) > 0.
bool np_interior(const Monomial& v, const MonomialIdeal& ideal);

MonomialIdeal integral_closure(const MonomialIdeal& ideal);
bool is_integrally_closed(const MonomialIdeal& ideal);

/// Adjoint by the interior-point formula. The unit ideal maps to itself; any
/// other input must be m-primary (std::invalid_argument otherwise).
MonomialIdeal adjoint_howald(const MonomialIdeal& ideal);

}  // namespace npc

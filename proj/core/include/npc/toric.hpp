#pragma once

// Torus-invariant divisors on the principalization fan and their global sections.
// A divisor is a coefficient a_rho per ray; the weight m contributes a section of
// O_X(sum a_rho D_rho) exactly when <m, v_rho> >= -a_rho for every ray.

#include <cstdint>
#include <vector>

#include "npc/constellation.hpp"
#include "npc/fan.hpp"
#include "npc/monomial.hpp"
#include "npc/principalize.hpp"

namespace npc {

/// Coefficient of a divisor on every ray of a fan, in ray order.
struct RayDivisor {
  std::vector<std::int64_t> coeffs;
  friend bool operator==(const RayDivisor&, const RayDivisor&) = default;
};

RayDivisor operator+(const RayDivisor& a, const RayDivisor& b);
RayDivisor operator-(const RayDivisor& a);
RayDivisor operator*(std::int64_t k, const RayDivisor& a);

/// Exceptional divisor sum n_i E_i placed on the rays E_i; axis rays get 0.
RayDivisor ray_divisor(const PrincipalizationTree& tree, const DivisorE& divisor);

/// D_I with O_X(-D_I) = I O_X, including the principal monomial factor on the axis rays.
RayDivisor ideal_divisor(const PrincipalizationTree& tree, std::size_t ideal = 0);

/// Global sections H^0(X, O_X(D)) as a monomial ideal. Requires every axis
/// coefficient to be <= 0 so that the weight set lies in Z^d_{>=0};
/// throws std::invalid_argument otherwise.
MonomialIdeal sections_ideal(const Fan& fan, const RayDivisor& divisor);

/// H^0(X, I omega_f): sections of K_f - D_I.
MonomialIdeal adjoint_via_sections(const PrincipalizationTree& tree, std::size_t ideal = 0);

/// Integrally closed ideal cut out by the valuations of a point basis on the
/// tree: sections of -sum r_i E_i^*.
MonomialIdeal ideal_from_basis(const PrincipalizationTree& tree, const PointBasis& basis);

/// Checks |v_rho| - 1 = coefficient of K_f at every exceptional ray.
bool discrepancy_bridge_holds(const PrincipalizationTree& tree);

}  // namespace npc

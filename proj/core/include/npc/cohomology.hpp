#pragma once

// Weight-graded cohomology H^i(X, O_X(D)) on the principalization fan.
//
// For a weight m call a ray rho negative when <m, v_rho> < -a_rho. The Čech
// complex of the max-cone cover in weight m has one summand per set S of max
// cones whose common face has no negative ray. That complex computes the
// cohomology of the full simplex on the cones relative to the complex K_m of
// sets whose common face does contain a negative ray, and K_m has the same
// cohomology as its nerve Δ_m: subsets of negative rays lying in one max cone.
// Hence H^i(X, O_X(D))_m = H~^{i-1}(Δ_m), which is what `weight_cohomology`
// evaluates. `weight_cohomology_cech` builds the Čech complex literally and is
// kept for cross-checking on small fans.
//
// All ranks are exact over Q. Totals are taken over a finite window of
// weights [-N, N]^d and certified only when every weight on the boundary
// shell of the window contributes nothing in the requested degrees.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "npc/fan.hpp"
#include "npc/toric.hpp"

namespace npc {

/// dim H^i(X, O_X(D))_m for i = 0..d (nerve route).
std::vector<std::size_t> weight_cohomology(const Fan& fan, const RayDivisor& divisor, const Monomial& weight);

/// dim H^i(X, O_X(D))_m for i = 0..d from the literal Čech complex of the max-cone cover.
/// Exponential in the number of cones; intended for fans with at most ~14 cones.
std::vector<std::size_t> weight_cohomology_cech(const Fan& fan, const RayDivisor& divisor, const Monomial& weight);

struct CohomOptions {
  int max_degree = 2;
  int window = 8;       // initial half-width N
  int window_cap = 64;  // doubling stops here
};

/// Default window cap, overridden by the NPC_WINDOW_CAP environment variable.
int window_cap_from_env(int fallback = 64);

struct CohomReport {
  RayDivisor divisor;
  int window = 0;                              // final half-width N
  std::map<int, std::size_t> dims;             // degree i >= 1 -> sum over the window
  std::map<int, std::vector<Monomial>> support;  // weights with nonzero contribution (capped list)
  bool certified = false;
  std::string field = "Q";
  std::size_t weights_examined = 0;

  [[nodiscard]] std::size_t dim(int degree) const;
  [[nodiscard]] std::string status() const { return certified ? "certified" : "window inconclusive"; }
};

CohomReport cech_dims(const Fan& fan, const RayDivisor& divisor, const CohomOptions& options);

struct InjectivityReport {
  bool injective = true;
  bool certified = false;
  int window = 0;
  std::size_t weights_checked = 0;        // weights with H^{d-1}(O(D))_m != 0
  std::optional<Monomial> witness;        // first weight where the map has a kernel

  [[nodiscard]] bool passed() const { return injective && certified; }
};

/// Checks that H^{d-1}(O_X(D)) -> H^{d-1}(O_X(D + n E)) is injective weight by
/// weight, where `fiber` is the closed fiber E as a ray divisor.
InjectivityReport injectivity_check(const Fan& fan, const RayDivisor& divisor, const RayDivisor& fiber, int n,
                                    int window, int window_cap);

/// Injectivity at a single weight, via the literal Čech complexes (cross-check).
bool injective_at_weight_cech(const Fan& fan, const RayDivisor& source, const RayDivisor& target,
                              const Monomial& weight, int degree);
/// Injectivity at a single weight, via the nerve complexes.
bool injective_at_weight(const Fan& fan, const RayDivisor& source, const RayDivisor& target, const Monomial& weight,
                         int degree);

}  // namespace npc

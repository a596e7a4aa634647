#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "npc/monomial.hpp"
#include "npc/numeric.hpp"

namespace npc {

struct Ray {
  enum class Kind { kAxis, kExceptional };

  Monomial vector;  // primitive, nonnegative
  Kind kind = Kind::kAxis;
  std::size_t index = 0;  // coordinate k for an axis ray, point i for E_i

  [[nodiscard]] std::string label() const;  // "x", "E3", ...
  friend bool operator==(const Ray&, const Ray&) = default;
};

/// Smooth fan obtained from the positive orthant by iterated star subdivisions.
/// Each maximal cone lists the ray ids of its d generators, in chart-coordinate order.
struct Fan {
  int dim = 0;
  std::vector<Ray> rays;
  std::vector<std::vector<std::size_t>> cones;

  [[nodiscard]] std::optional<std::size_t> exceptional_ray(std::size_t point) const;
  [[nodiscard]] std::size_t axis_ray(int k) const;

  /// Throws std::logic_error unless every cone is unimodular, rays are
  /// nonnegative and each exceptional label occurs once.
  void validate() const;
};

/// Determinant of a square integer matrix (exact).
Integer determinant(const std::vector<Monomial>& rows);

/// <u, w>
Exponent pairing(const Monomial& u, const Monomial& w);

/// min over generators of <u, w>: the monomial valuation of the ideal along w.
Exponent ray_valuation(const MonomialIdeal& ideal, const Monomial& w);

}  // namespace npc

#pragma once

// Principalization of monomial ideals by iterated blowups of closed points.
//
// Every chart is an affine d-space whose coordinates carry rays of the fan;
// blowing up the chart origin adds the ray w = sum of the chart's rays, and
// chart i of the blowup substitutes y_j -> y_j y_i (j != i), with coordinate i
// now carrying w. Each tracked ideal is divided by its monomial gcd (its
// transform). A chart origin becomes a new infinitely near point when some
// transform there is not the unit ideal. Because the non-invertibility locus of
// a monomial ideal is torus invariant, a transform whose zero set is larger
// than the origin means a curve (or more) of base points, so the ideal is not
// finitely supported.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "npc/constellation.hpp"
#include "npc/fan.hpp"
#include "npc/monomial.hpp"

namespace npc {

/// Chart in which a constellation point is the origin.
struct ChartRecord {
  std::vector<int> path;                     // chart choices from the root blowup
  std::vector<std::size_t> coordinate_rays;  // fan ray carried by each chart coordinate
  std::vector<MonomialIdeal> transforms;     // transform of each tracked ideal at the point
};

class PrincipalizationTree {
 public:
  PrincipalizationTree(Constellation constellation, std::vector<MonomialIdeal> ideals,
                       std::vector<Monomial> root_factors, std::vector<PointBasis> bases, Fan fan,
                       std::vector<std::size_t> point_rays, std::vector<ChartRecord> charts);

  [[nodiscard]] int dim() const { return constellation_.dim(); }
  [[nodiscard]] const Constellation& constellation() const { return constellation_; }
  [[nodiscard]] const std::vector<MonomialIdeal>& ideals() const { return ideals_; }
  [[nodiscard]] const std::vector<Monomial>& root_factors() const { return root_factors_; }
  [[nodiscard]] const std::vector<PointBasis>& bases() const { return bases_; }
  [[nodiscard]] const PointBasis& basis(std::size_t ideal = 0) const { return bases_.at(ideal); }
  [[nodiscard]] const Fan& fan() const { return fan_; }
  [[nodiscard]] std::size_t point_ray(std::size_t point) const { return point_rays_.at(point); }
  [[nodiscard]] const std::vector<std::size_t>& point_rays() const { return point_rays_; }
  [[nodiscard]] const std::vector<ChartRecord>& charts() const { return charts_; }

  /// Valuations v_i of the tracked ideal (gcd part removed) at every E_i, derived
  /// from the point basis through p^{-1}.
  [[nodiscard]] DivisorE valuations(std::size_t ideal = 0) const;

  /// Compares every fan valuation min_u <u, w_i> with valuations(); throws
  /// std::logic_error on mismatch. Also validates the fan.
  void verify() const;

 private:
  Constellation constellation_;
  std::vector<MonomialIdeal> ideals_;
  std::vector<Monomial> root_factors_;
  std::vector<PointBasis> bases_;
  Fan fan_;
  std::vector<std::size_t> point_rays_;
  std::vector<ChartRecord> charts_;
};

struct NotFinitelySupported {
  std::vector<int> chart_path;       // chart choices leading to the offending chart
  std::size_t ideal_index = 0;       // which tracked ideal
  MonomialIdeal transform;           // its transform there
  std::vector<int> free_coordinates; // coordinates spanning a component of the zero set

  [[nodiscard]] std::size_t depth() const { return chart_path.size(); }
  [[nodiscard]] std::string describe() const;
};

class PrincipalizationDepthError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using PrincipalizeResult = std::variant<PrincipalizationTree, NotFinitelySupported>;

inline constexpr int kDefaultMaxDepth = 64;

/// Principalize all `ideals` on one shared tree (canonical chart order 1..d,
/// points numbered depth-first). The root is always blown up, so the
/// constellation has at least one point.
PrincipalizeResult principalize(std::span<const MonomialIdeal> ideals, int max_depth = kDefaultMaxDepth);
PrincipalizeResult principalize(const MonomialIdeal& ideal, int max_depth = kDefaultMaxDepth);

/// Chart substitution y_j -> y_j y_i (j != i) applied to an exponent vector.
Monomial chart_substitute(const Monomial& u, int i);
/// Transform of `ideal` in chart i of the blowup of the origin: substitute, then divide by the gcd.
MonomialIdeal chart_transform(const MonomialIdeal& ideal, int i);

bool is_finitely_supported(const MonomialIdeal& ideal);

}  // namespace npc

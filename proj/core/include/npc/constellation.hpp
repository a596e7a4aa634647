#pragma once

// Constellations of infinitely near points and the integer calculus on them:
// proximity matrices, divisors in the E and E* bases, fullness, point bases.
//
// Conventions used throughout:
//   * points are indexed 0..r-1 in topological order (every parent precedes its
//     children); index 0 is the root. JSON uses 1-based ids.
//   * the proximity matrix p has p(i,i) = 1 and p(j,i) = -1 when point i is
//     proximate to point j (j is in prox(i)); it is upper unitriangular.
//   * divisors are row vectors: E* coordinates are m = n p, and n = m p^{-1}.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "npc/numeric.hpp"

namespace npc {

using IntegerVector = std::vector<Integer>;
using IntegerMatrix = std::vector<IntegerVector>;

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Constellation {
 public:
  struct Point {
    std::optional<std::size_t> parent;  // empty only for the root
    std::vector<std::size_t> prox;      // points this one is proximate to
  };

  /// Validates the invariants (topological order, parent in prox, prox among
  /// strict ancestors, |prox| <= d) and throws ValidationError naming the first
  /// one that fails.
  Constellation(int dim, std::vector<Point> points);

  /// Chain of `length` free points (each proximate to its parent only).
  static Constellation free_chain(int dim, std::size_t length);

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] std::size_t size() const { return points_.size(); }
  [[nodiscard]] const Point& point(std::size_t i) const { return points_.at(i); }
  [[nodiscard]] const std::vector<Point>& points() const { return points_; }

  /// True when point i is proximate to point j.
  [[nodiscard]] bool proximate(std::size_t i, std::size_t j) const;
  [[nodiscard]] bool is_ancestor(std::size_t ancestor, std::size_t i) const;
  [[nodiscard]] std::size_t depth(std::size_t i) const;

  [[nodiscard]] const IntegerMatrix& proximity() const { return p_; }
  [[nodiscard]] const IntegerMatrix& proximity_inverse() const { return p_inv_; }

  friend bool operator==(const Constellation& a, const Constellation& b);

 private:
  int dim_;
  std::vector<Point> points_;
  IntegerMatrix p_;
  IntegerMatrix p_inv_;
};

bool operator==(const Constellation::Point& a, const Constellation::Point& b);

/// Exceptional divisor sum n_i E_i. Coefficients may be negative.
struct DivisorE {
  IntegerVector coeffs;
  friend bool operator==(const DivisorE&, const DivisorE&) = default;
};

/// The same divisor written in the E* basis.
struct DivisorStar {
  IntegerVector coords;
  friend bool operator==(const DivisorStar&, const DivisorStar&) = default;
};

/// Point basis (ord_beta of the transform at each point); entries are >= 0.
class PointBasis {
 public:
  PointBasis() = default;
  explicit PointBasis(IntegerVector values);
  [[nodiscard]] const IntegerVector& values() const { return values_; }
  [[nodiscard]] std::size_t size() const { return values_.size(); }
  [[nodiscard]] const Integer& operator[](std::size_t i) const { return values_[i]; }
  [[nodiscard]] bool is_zero() const;
  friend bool operator==(const PointBasis&, const PointBasis&) = default;

 private:
  IntegerVector values_;
};

struct ProximityMatrices {
  IntegerMatrix p;
  IntegerMatrix p_inv;
};

ProximityMatrices proximity_matrix(const Constellation& c);

DivisorStar to_star(const Constellation& c, const DivisorE& divisor);
DivisorE from_star(const Constellation& c, const DivisorStar& star);

/// Fullness through the E* coordinates: true iff to_star(D) >= 0.
bool is_full(const Constellation& c, const DivisorE& divisor);
/// The literal test n_i >= 0 and n_i >= sum over points i is proximate to.
bool is_full_by_definition(const Constellation& c, const DivisorE& divisor);

/// Divisor whose E* coordinates are the point basis.
DivisorE divisor_of_basis(const Constellation& c, const PointBasis& basis);
PointBasis basis_of_divisor(const Constellation& c, const DivisorE& divisor);

/// Componentwise max(r + 1 - d, 0).
PointBasis adjoint_basis(const PointBasis& basis, int dim);
PointBasis product_basis(const PointBasis& a, const PointBasis& b);

/// K_f = (d-1)(E_1* + ... + E_r*), in the E basis.
DivisorE canonical_divisor(const Constellation& c);
/// The closed fiber E = E_1*, so that m O_X = O_X(-E).
DivisorE fiber_divisor(const Constellation& c);

DivisorE operator+(const DivisorE& a, const DivisorE& b);
DivisorE operator*(const Integer& k, const DivisorE& d);
/// floor(c D) computed coefficientwise, for rational c.
DivisorE floor_scale(const DivisorE& d, const BigRational& c);

}  // namespace npc

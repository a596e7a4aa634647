#pragma once

// Executable checks tying the three computation routes together: the point
// basis calculus on constellations, the Newton polyhedron oracle, and
// sections / weight-graded cohomology on the principalization fan.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "npc/cohomology.hpp"
#include "npc/constellation.hpp"
#include "npc/monomial.hpp"
#include "npc/principalize.hpp"

namespace npc {

enum class Verdict { kPass, kFail, kSkipped, kInconclusive };

std::string to_string(Verdict v);

struct CheckReport {
  CheckReport() = default;
  CheckReport(std::string check, std::vector<std::pair<std::string, std::string>> in)
      : name(std::move(check)), inputs(std::move(in)) {}

  std::string name;
  std::vector<std::pair<std::string, std::string>> inputs;
  Verdict verdict = Verdict::kPass;
  std::string witness;  // non-empty whenever verdict is kFail
  std::string detail;   // skip reason, certificate or summary
  std::optional<std::uint64_t> seed;
  double seconds = 0;
  std::size_t cases = 0;  // sub-cases examined (property suites, sweeps)

  [[nodiscard]] bool passed() const { return verdict == Verdict::kPass; }
};

/// Exit status for a batch: 1 on any failure, 2 when nothing passed or
/// something was inconclusive, 0 otherwise.
int exit_code(const std::vector<CheckReport>& reports);

/// Some generator of exactly one of the ideals, for reporting a mismatch.
std::optional<Monomial> difference_witness(const MonomialIdeal& a, const MonomialIdeal& b);

// --- theorem-level checks -------------------------------------------------

/// Fixed values for I = (x^2, y^3): point basis, proximity matrices, K_f, ray
/// valuations and the adjoint (x, y) by the basis formula, sections and Howald.
CheckReport check_cusp_golden();

/// Adjoint point basis: Howald vs sections vs basis formula, basis law on a
/// joint tree, order law at the root, integral closedness, finite support.
CheckReport check_adjoint_theorem(const MonomialIdeal& ideal);

/// adjoint(I^beta) = (adjoint I)^beta at every non-root point of the joint tree
/// of I and its adjoint (compared up to integral closure).
CheckReport check_transform_commutes(const MonomialIdeal& ideal);

/// ord(J^b) >= (d-1) ord(I^b) everywhere implies adjoint(IJ) = I adjoint(J).
CheckReport check_prop_3_3(const MonomialIdeal& i, const MonomialIdeal& j);
/// ord(J) >= d-1 implies adjoint(mJ) = m adjoint(J).
CheckReport check_pullout(const MonomialIdeal& j);
/// closure(adj(I) adj(J)) contains adj(IJ).
CheckReport check_subadditivity(const MonomialIdeal& i, const MonomialIdeal& j);
/// adj(IJ) contains closure(I adj(J)), with equality iff ord(J^b) >= d-1 at
/// every base point b of I.
CheckReport check_product_cor(const MonomialIdeal& i, const MonomialIdeal& j);

/// Colon, length and threshold identities for J = (x_1^{a_1}, ..., x_d^{a_d}),
/// with J^t the unit ideal for t <= 0, over s in [s_min, s_max].
CheckReport check_section4(const std::vector<Exponent>& exponents, int s_min, int s_max);

/// H^i(O(D)) = 0 for 0 < i < d-1 and injectivity of H^{d-1}(O(D)) -> H^{d-1}(O(D + nE)).
CheckReport check_vanishing(const PrincipalizationTree& tree, const DivisorE& divisor,
                            const std::vector<int>& twists, const CohomOptions& options);
/// D = 0: H^i(O_X) = 0 for every i > 0.
CheckReport check_gr_vanishing(const PrincipalizationTree& tree, const CohomOptions& options);
/// dim H^{d-1}(O(D_I)) = colength(adj I) and dim H^{d-1}(O(D_I + K_f)) = colength(closure I).
CheckReport check_duality(const MonomialIdeal& ideal, const CohomOptions& options);
/// A non-full D with H^1(O(D)) != 0: the vanishing checker is not vacuous.
CheckReport check_nonfull_control(const PrincipalizationTree& tree, const DivisorE& divisor,
                                  const CohomOptions& options);

/// Search for a non-full divisor with nonzero H^1 among coefficient vectors in
/// [lo, hi]^r, in lexicographic order.
std::optional<DivisorE> find_nonfull_control(const PrincipalizationTree& tree, int lo, int hi,
                                             const CohomOptions& options);

// --- random inputs ---------------------------------------------------------

class RandomIdeals {
 public:
  explicit RandomIdeals(std::uint64_t seed) : rng_(seed) {}

  /// m-primary ideal in two variables with exponents <= max_exponent.
  MonomialIdeal plane(int max_exponent = 8);
  /// Finitely supported ideal in three variables: m^a times factors
  /// (x_i, x_j, x_k^c), kept only if principalize succeeds with at most
  /// `max_points` points and depth <= max_depth.
  MonomialIdeal spatial(std::size_t max_points = 16, std::size_t max_depth = 3);
  /// Constellation satisfying the weak validation rules (not necessarily realizable).
  Constellation constellation(int dim, std::size_t max_points);
  /// Random integer vector with entries in [lo, hi].
  IntegerVector vector(std::size_t length, int lo, int hi);

  std::mt19937_64& engine() { return rng_; }
  int uniform(int lo, int hi);

 private:
  std::mt19937_64 rng_;
};

/// Largest depth of a point in the constellation (the root has depth 0).
std::size_t tree_depth(const PrincipalizationTree& tree);

// --- property suites (one report per property, `cases` randomized inputs) --

CheckReport property_proximity(std::uint64_t seed, std::size_t cases);
CheckReport property_fullness(std::uint64_t seed, std::size_t cases);
CheckReport property_basis_subadditivity(std::uint64_t seed, std::size_t cases);
CheckReport property_closure(std::uint64_t seed, std::size_t cases);
CheckReport property_factor_pullout(std::uint64_t seed, std::size_t cases);
CheckReport property_product_basis(std::uint64_t seed, std::size_t cases);
CheckReport property_discrepancy(std::uint64_t seed, std::size_t cases);

/// check_adjoint_theorem over `count` random ideals of dimension 2 or 3.
std::vector<CheckReport> adjoint_sweep(int dim, std::size_t count, std::uint64_t seed);

}  // namespace npc

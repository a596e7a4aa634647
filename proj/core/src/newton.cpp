#include "npc/newton.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "npc/lp.hpp"

namespace npc {

namespace {

// Rows k < d:  sum_g lambda_g u_g[k] (+ delta) + s_k = v_k ;  last row: sum_g lambda_g = 1.
LinearProgram np_program(const Monomial& v, const MonomialIdeal& ideal, bool with_depth) {
  const auto& gens = ideal.generators();
  const std::size_t n = gens.size();
  const std::size_t d = static_cast<std::size_t>(ideal.dim());
  const std::size_t cols = n + d + (with_depth ? 1 : 0);
  LinearProgram lp;
  lp.a.assign(d + 1, std::vector<std::int64_t>(cols, 0));
  lp.b.assign(d + 1, 0);
  lp.c.assign(cols, 0);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t g = 0; g < n; ++g) lp.a[k][g] = gens[g][k];
    lp.a[k][n + k] = 1;
    if (with_depth) lp.a[k][n + d] = 1;
    lp.b[k] = v[k];
  }
  for (std::size_t g = 0; g < n; ++g) lp.a[d][g] = 1;
  lp.b[d] = 1;
  if (with_depth) lp.c[n + d] = 1;
  return lp;
}

bool has_negative(const Monomial& v) {
  return std::any_of(v.begin(), v.end(), [](Exponent e) { return e < 0; });
}

// Lexicographic walk over the box [0, bound] collecting the minimal elements of an
// upward-closed set given by `member`. Any w <= v precedes v in this order, so an
// undominated member is a minimal generator.
std::vector<Monomial> minimal_members(const Monomial& bound, const std::function<bool(const Monomial&)>& member) {
  const int d = static_cast<int>(bound.size());
  std::vector<Monomial> found;
  Monomial v(d, 0);
  while (true) {
    bool dominated = std::any_of(found.begin(), found.end(), [&](const Monomial& g) { return divides(g, v); });
    if (!dominated && member(v)) found.push_back(v);
    int k = d - 1;
    while (k >= 0 && v[k] == bound[k]) v[k--] = 0;
    if (k < 0) break;
    ++v[k];
  }
  return found;
}

}  // namespace

bool np_member(const Monomial& v, const MonomialIdeal& ideal) {
  if (has_negative(v)) return false;
  if (ideal.contains(v)) return true;
  if (total_degree(v) < ideal.order()) return false;
  return solve(np_program(v, ideal, false)).status == LpStatus::kOptimal;
}

std::optional<BigRational> np_depth(const Monomial& v, const MonomialIdeal& ideal) {
  if (has_negative(v)) return std::nullopt;
  const auto sol = solve(np_program(v, ideal, true));
  if (sol.status != LpStatus::kOptimal) return std::nullopt;
  return sol.objective;
}

bool np_interior(const Monomial& v, const MonomialIdeal& ideal) {
  if (has_negative(v)) return false;
  for (auto e : v)
    if (e <= 0) return false;
  // A generator strictly below v in every coordinate certifies an interior point.
  for (const auto& g : ideal.generators()) {
    bool strict = true;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (g[k] >= v[k]) strict = false;
    if (strict) return true;
  }
  if (total_degree(v) <= ideal.order()) return false;
  const auto depth = np_depth(v, ideal);
  return depth && depth->sign() > 0;
}

MonomialIdeal integral_closure(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) return ideal;
  // Clamping a coordinate of a member down to the generator box keeps it in NP,
  // so every minimal generator of the closure lies in the box.
  auto gens = minimal_members(ideal.generator_box(), [&](const Monomial& v) { return np_member(v, ideal); });
  return MonomialIdeal(ideal.dim(), std::move(gens));
}

bool is_integrally_closed(const MonomialIdeal& ideal) { return integral_closure(ideal) == ideal; }

MonomialIdeal adjoint_howald(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) return ideal;
  if (!ideal.is_m_primary())
    throw std::invalid_argument("adjoint_howald: ideal " + ideal.to_string() + " is not m-primary");
  const int d = ideal.dim();
  // v with v_k >= a_k (x_k^{a_k} in I) has v + 1 strictly above a point of NP,
  // so minimal generators have v_k <= a_k.
  Monomial bound(d);
  for (int k = 0; k < d; ++k) bound[k] = *ideal.pure_power(k);
  auto gens = minimal_members(bound, [&](const Monomial& v) {
    Monomial shifted(v);
    for (auto& e : shifted) ++e;
    return np_interior(shifted, ideal);
  });
  return MonomialIdeal(d, std::move(gens));
}

}  // namespace npc

#include "npc/toric.hpp"

#include <algorithm>
#include <stdexcept>

#include "npc/numeric.hpp"

namespace npc {

RayDivisor operator+(const RayDivisor& a, const RayDivisor& b) {
  if (a.coeffs.size() != b.coeffs.size()) throw std::invalid_argument("ray divisor sum: length mismatch");
  RayDivisor out = a;
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i] = checked_add(out.coeffs[i], b.coeffs[i]);
  return out;
}

RayDivisor operator-(const RayDivisor& a) {
  RayDivisor out = a;
  for (auto& c : out.coeffs) c = checked_sub(0, c);
  return out;
}

RayDivisor operator*(std::int64_t k, const RayDivisor& a) {
  RayDivisor out = a;
  for (auto& c : out.coeffs) c = checked_mul(k, c);
  return out;
}

RayDivisor ray_divisor(const PrincipalizationTree& tree, const DivisorE& divisor) {
  if (divisor.coeffs.size() != tree.constellation().size())
    throw std::invalid_argument("ray_divisor: divisor length does not match the constellation");
  RayDivisor out{std::vector<std::int64_t>(tree.fan().rays.size(), 0)};
  for (std::size_t i = 0; i < divisor.coeffs.size(); ++i) out.coeffs[tree.point_ray(i)] = to_int64(divisor.coeffs[i]);
  return out;
}

RayDivisor ideal_divisor(const PrincipalizationTree& tree, std::size_t ideal) {
  RayDivisor out = ray_divisor(tree, tree.valuations(ideal));
  const auto& factor = tree.root_factors().at(ideal);
  // The principal factor x^c contributes c_k along x_k = 0 and <c, v> along E_i.
  for (std::size_t r = 0; r < tree.fan().rays.size(); ++r)
    out.coeffs[r] = checked_add(out.coeffs[r], pairing(factor, tree.fan().rays[r].vector));
  return out;
}

MonomialIdeal sections_ideal(const Fan& fan, const RayDivisor& divisor) {
  if (divisor.coeffs.size() != fan.rays.size())
    throw std::invalid_argument("sections_ideal: one coefficient per ray is required");
  const int d = fan.dim;
  Monomial lower(d, 0);
  for (int k = 0; k < d; ++k) {
    const auto a = divisor.coeffs[fan.axis_ray(k)];
    if (a > 0)
      throw std::invalid_argument("sections_ideal: positive coefficient on the axis ray " +
                                  variable_name(d, k) + " allows negative weights");
    lower[k] = -a;
  }
  // With m >= lower, raising m_k never breaks an inequality (rays are nonnegative),
  // and m_k = t_k alone satisfies every exceptional inequality.
  Monomial bound(lower);
  for (std::size_t r = 0; r < fan.rays.size(); ++r) {
    const auto& ray = fan.rays[r];
    if (ray.kind != Ray::Kind::kExceptional) continue;
    for (int k = 0; k < d; ++k) {
      if (ray.vector[k] == 0) throw std::logic_error("sections_ideal: exceptional ray on a coordinate face");
      bound[k] = std::max(bound[k], ceil_div(-divisor.coeffs[r], ray.vector[k]));
    }
  }
  auto satisfies = [&](const Monomial& m) {
    for (std::size_t r = 0; r < fan.rays.size(); ++r)
      if (pairing(m, fan.rays[r].vector) < -divisor.coeffs[r]) return false;
    return true;
  };
  std::vector<Monomial> gens;
  Monomial m(lower);
  while (true) {
    const bool dominated = std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return divides(g, m); });
    if (!dominated && satisfies(m)) gens.push_back(m);
    int k = d - 1;
    while (k >= 0 && m[k] == bound[k]) {
      m[k] = lower[k];
      --k;
    }
    if (k < 0) break;
    ++m[k];
  }
  return MonomialIdeal(d, std::move(gens));
}

MonomialIdeal adjoint_via_sections(const PrincipalizationTree& tree, std::size_t ideal) {
  const auto k = ray_divisor(tree, canonical_divisor(tree.constellation()));
  return sections_ideal(tree.fan(), k + (-ideal_divisor(tree, ideal)));
}

MonomialIdeal ideal_from_basis(const PrincipalizationTree& tree, const PointBasis& basis) {
  return sections_ideal(tree.fan(), -ray_divisor(tree, divisor_of_basis(tree.constellation(), basis)));
}

bool discrepancy_bridge_holds(const PrincipalizationTree& tree) {
  const auto k = canonical_divisor(tree.constellation());
  for (std::size_t i = 0; i < tree.constellation().size(); ++i) {
    const auto& v = tree.fan().rays[tree.point_ray(i)].vector;
    if (Integer(total_degree(v) - 1) != k.coeffs[i]) return false;
  }
  return true;
}

}  // namespace npc

#include "npc/fan.hpp"

#include <set>
#include <stdexcept>

#include "npc/numeric.hpp"

namespace npc {

std::string Ray::label() const {
  if (kind == Kind::kExceptional) return "E" + std::to_string(index + 1);
  return variable_name(static_cast<int>(vector.size()), static_cast<int>(index));
}

std::optional<std::size_t> Fan::exceptional_ray(std::size_t point) const {
  for (std::size_t r = 0; r < rays.size(); ++r)
    if (rays[r].kind == Ray::Kind::kExceptional && rays[r].index == point) return r;
  return std::nullopt;
}

std::size_t Fan::axis_ray(int k) const {
  for (std::size_t r = 0; r < rays.size(); ++r)
    if (rays[r].kind == Ray::Kind::kAxis && rays[r].index == static_cast<std::size_t>(k)) return r;
  throw std::logic_error("fan: missing axis ray");
}

void Fan::validate() const {
  std::set<std::size_t> seen;
  for (const auto& ray : rays) {
    if (ray.vector.size() != static_cast<std::size_t>(dim)) throw std::logic_error("fan: ray of wrong dimension");
    for (auto e : ray.vector)
      if (e < 0) throw std::logic_error("fan: negative ray entry");
    if (ray.kind == Ray::Kind::kExceptional && !seen.insert(ray.index).second)
      throw std::logic_error("fan: exceptional label used twice");
  }
  for (const auto& cone : cones) {
    if (cone.size() != static_cast<std::size_t>(dim)) throw std::logic_error("fan: cone of wrong size");
    std::vector<Monomial> rows;
    for (auto id : cone) rows.push_back(rays.at(id).vector);
    const Integer det = determinant(rows);
    if (det != 1 && det != -1) throw std::logic_error("fan: cone is not unimodular");
  }
}

Integer determinant(const std::vector<Monomial>& rows) {
  // Bareiss fraction-free elimination.
  const std::size_t n = rows.size();
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = rows[i][j];
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Exponent pairing(const Monomial& u, const Monomial& w) {
  Exponent s = 0;
  for (std::size_t k = 0; k < u.size(); ++k) s = checked_add(s, checked_mul(u[k], w[k]));
  return s;
}

Exponent ray_valuation(const MonomialIdeal& ideal, const Monomial& w) {
  Exponent best = pairing(ideal.generators().front(), w);
  for (const auto& g : ideal.generators()) best = std::min(best, pairing(g, w));
  return best;
}

}  // namespace npc

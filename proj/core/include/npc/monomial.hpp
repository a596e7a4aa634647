#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace npc {

using Exponent = std::int64_t;
/// Exponent vector of a monomial in d variables.
using Monomial = std::vector<Exponent>;

bool divides(const Monomial& a, const Monomial& b);  // a <= b componentwise
Exponent total_degree(const Monomial& m);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial add(const Monomial& a, const Monomial& b);

/// Nonzero monomial ideal given by its minimal generators, kept in
/// lexicographic order so that equal ideals compare equal.
class MonomialIdeal {
 public:
  /// Minimalizes `generators`. Throws std::invalid_argument when the list is empty,
  /// a vector has the wrong length, or an exponent is negative.
  MonomialIdeal(int dim, std::vector<Monomial> generators);

  static MonomialIdeal unit(int dim);
  static MonomialIdeal maximal(int dim);
  /// (x_1^{a_1}, ..., x_d^{a_d})
  static MonomialIdeal pure_powers(const std::vector<Exponent>& exponents);

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] const std::vector<Monomial>& generators() const { return gens_; }

  [[nodiscard]] bool contains(const Monomial& v) const;
  /// Ideal inclusion: other ⊆ *this.
  [[nodiscard]] bool contains(const MonomialIdeal& other) const;
  [[nodiscard]] bool is_unit() const;
  /// Contains a pure power of every variable (the unit ideal is not m-primary).
  [[nodiscard]] bool is_m_primary() const;
  /// Exponent of the smallest pure power of x_k in the ideal, if any.
  [[nodiscard]] std::optional<Exponent> pure_power(int k) const;
  /// ord at the origin: least total degree of a generator.
  [[nodiscard]] Exponent order() const;
  /// Exponent of the gcd of the generators.
  [[nodiscard]] Monomial gcd() const;
  /// Componentwise max of the generators.
  [[nodiscard]] Monomial generator_box() const;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int dim_;
  std::vector<Monomial> gens_;
};

/// Sort and drop non-minimal generators.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
/// a^k for k >= 0 (a^0 is the unit ideal).
MonomialIdeal power(const MonomialIdeal& a, int k);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
/// a : x^u
MonomialIdeal colon(const MonomialIdeal& a, const Monomial& u);
/// a : b = {v : v + u in a for every generator u of b}
MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b);
/// Divide every generator by x^u; u must divide the gcd.
MonomialIdeal divide(const MonomialIdeal& a, const Monomial& u);
MonomialIdeal multiply(const MonomialIdeal& a, const Monomial& u);
bool equals(const MonomialIdeal& a, const MonomialIdeal& b);

/// Number of monomials outside the ideal. Requires an m-primary (or unit) ideal.
std::int64_t colength(const MonomialIdeal& a);

/// Variable names used for printing: x,y,z,w for d <= 4, x1..xd otherwise.
std::string variable_name(int dim, int k);
std::string monomial_to_string(const Monomial& m);

/// Parse "x^2, y^3", "x*y^2 + z" style generator lists. Variables are x,y,z,w or
/// x1,x2,...; `1` denotes the unit monomial. When `dim` is not given it is the
/// number of variables implied by the highest variable mentioned (at least 2).
MonomialIdeal parse_ideal(std::string_view text, std::optional<int> dim = std::nullopt);

}  // namespace npc

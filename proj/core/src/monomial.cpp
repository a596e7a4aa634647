#include "npc/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "npc/numeric.hpp"

namespace npc {

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent total_degree(const Monomial& m) {
  Exponent s = 0;
  for (auto e : m) s = checked_add(s, e);
  return s;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Monomial add(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_add(a[i], b[i]);
  return out;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::vector<std::pair<Exponent, Monomial>> keyed;
  keyed.reserve(gens.size());
  for (auto& g : gens) keyed.emplace_back(total_degree(g), std::move(g));
  std::sort(keyed.begin(), keyed.end());
  std::vector<Monomial> kept;
  for (auto& [deg, g] : keyed) {
    bool redundant = false;
    for (const auto& k : kept)
      if (divides(k, g)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

MonomialIdeal::MonomialIdeal(int dim, std::vector<Monomial> generators) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("monomial ideal: dimension must be positive");
  if (generators.empty()) throw std::invalid_argument("monomial ideal: the zero ideal is not supported");
  for (const auto& g : generators) {
    if (g.size() != static_cast<std::size_t>(dim))
      throw std::invalid_argument("monomial ideal: generator has wrong number of exponents");
    for (auto e : g)
      if (e < 0) throw std::invalid_argument("monomial ideal: negative exponent");
  }
  gens_ = minimalize(std::move(generators));
}

MonomialIdeal MonomialIdeal::unit(int dim) { return MonomialIdeal(dim, {Monomial(dim, 0)}); }

MonomialIdeal MonomialIdeal::maximal(int dim) { return pure_powers(std::vector<Exponent>(dim, 1)); }

MonomialIdeal MonomialIdeal::pure_powers(const std::vector<Exponent>& exponents) {
  const int d = static_cast<int>(exponents.size());
  std::vector<Monomial> gens;
  for (int k = 0; k < d; ++k) {
    Monomial m(d, 0);
    m[k] = exponents[k];
    gens.push_back(std::move(m));
  }
  return MonomialIdeal(d, std::move(gens));
}

bool MonomialIdeal::contains(const Monomial& v) const {
  for (auto e : v)
    if (e < 0) return false;
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, v); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Monomial& g) { return contains(g); });
}

bool MonomialIdeal::is_unit() const { return gens_.size() == 1 && total_degree(gens_[0]) == 0; }

std::optional<Exponent> MonomialIdeal::pure_power(int k) const {
  std::optional<Exponent> best;
  for (const auto& g : gens_) {
    bool pure = true;
    for (int j = 0; j < dim_; ++j)
      if (j != k && g[j] != 0) pure = false;
    if (pure && (!best || g[k] < *best)) best = g[k];
  }
  return best;
}

bool MonomialIdeal::is_m_primary() const {
  if (is_unit()) return false;
  for (int k = 0; k < dim_; ++k)
    if (!pure_power(k)) return false;
  return true;
}

Exponent MonomialIdeal::order() const {
  Exponent best = total_degree(gens_.front());
  for (const auto& g : gens_) best = std::min(best, total_degree(g));
  return best;
}

Monomial MonomialIdeal::gcd() const {
  Monomial out = gens_.front();
  for (const auto& g : gens_)
    for (int k = 0; k < dim_; ++k) out[k] = std::min(out[k], g[k]);
  return out;
}

Monomial MonomialIdeal::generator_box() const {
  Monomial out(dim_, 0);
  for (const auto& g : gens_)
    for (int k = 0; k < dim_; ++k) out[k] = std::max(out[k], g[k]);
  return out;
}

std::string variable_name(int dim, int k) {
  static const char* small[] = {"x", "y", "z", "w"};
  if (dim <= 4) return small[k];
  return "x" + std::to_string(k + 1);
}

std::string monomial_to_string(const Monomial& m) {
  const int d = static_cast<int>(m.size());
  std::string out;
  for (int k = 0; k < d; ++k) {
    if (m[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += variable_name(d, k);
    if (m[k] != 1) out += "^" + std::to_string(m[k]);
  }
  return out.empty() ? "1" : out;
}

std::string MonomialIdeal::to_string() const {
  std::string out;
  // Descending lex order reads as x^a, ..., y^b.
  for (auto it = gens_.rbegin(); it != gens_.rend(); ++it) {
    if (!out.empty()) out += ", ";
    out += monomial_to_string(*it);
  }
  return "(" + out + ")";
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("sum: dimension mismatch");
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.dim(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("product: dimension mismatch");
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& u : a.generators())
    for (const auto& v : b.generators()) gens.push_back(add(u, v));
  return MonomialIdeal(a.dim(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& a, int k) {
  if (k < 0) throw std::invalid_argument("power: negative exponent");
  MonomialIdeal out = MonomialIdeal::unit(a.dim());
  MonomialIdeal base = a;
  while (k > 0) {
    if (k & 1) out = product(out, base);
    k >>= 1;
    if (k > 0) base = product(base, base);
  }
  return out;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("intersect: dimension mismatch");
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& u : a.generators())
    for (const auto& v : b.generators()) gens.push_back(lcm(u, v));
  return MonomialIdeal(a.dim(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& a, const Monomial& u) {
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size());
  for (const auto& g : a.generators()) {
    Monomial q(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) q[k] = std::max<Exponent>(g[k] - u[k], 0);
    gens.push_back(std::move(q));
  }
  return MonomialIdeal(a.dim(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("colon: dimension mismatch");
  std::optional<MonomialIdeal> out;
  for (const auto& u : b.generators()) {
    auto part = colon(a, u);
    out = out ? intersect(*out, part) : part;
  }
  return *out;
}

MonomialIdeal divide(const MonomialIdeal& a, const Monomial& u) {
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size());
  for (const auto& g : a.generators()) {
    Monomial q(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) {
      q[k] = g[k] - u[k];
      if (q[k] < 0) throw std::invalid_argument("divide: monomial does not divide every generator");
    }
    gens.push_back(std::move(q));
  }
  return MonomialIdeal(a.dim(), std::move(gens));
}

MonomialIdeal multiply(const MonomialIdeal& a, const Monomial& u) {
  std::vector<Monomial> gens;
  for (const auto& g : a.generators()) gens.push_back(add(g, u));
  return MonomialIdeal(a.dim(), std::move(gens));
}

bool equals(const MonomialIdeal& a, const MonomialIdeal& b) { return a == b; }

std::int64_t colength(const MonomialIdeal& a) {
  if (a.is_unit()) return 0;
  if (!a.is_m_primary()) throw std::invalid_argument("colength: ideal " + a.to_string() + " is not m-primary");
  const int d = a.dim();
  Monomial bound(d);
  for (int k = 0; k < d; ++k) bound[k] = *a.pure_power(k);
  // Walk the box [0, bound) in lexicographic order like an odometer.
  std::int64_t count = 0;
  Monomial v(d, 0);
  while (true) {
    if (!a.contains(v)) ++count;
    int k = d - 1;
    while (k >= 0 && ++v[k] == bound[k]) v[k--] = 0;
    if (k < 0) break;
  }
  return count;
}

namespace {

int variable_index(std::string_view name) {
  if (name == "x") return 0;
  if (name == "y") return 1;
  if (name == "z") return 2;
  if (name == "w") return 3;
  if (name.size() >= 2 && name[0] == 'x') {
    int k = 0;
    for (char c : name.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return -1;
      k = 10 * k + (c - '0');
    }
    return k >= 1 ? k - 1 : -1;
  }
  return -1;
}

}  // namespace

MonomialIdeal parse_ideal(std::string_view text, std::optional<int> dim) {
  // Each generator is a product of factors var or var^e (or the literal 1).
  std::vector<std::vector<std::pair<int, Exponent>>> parsed;
  int max_var = -1;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cannot parse ideal '" + std::string(text) + "': " + why);
  };
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  if (pos < text.size() && text[pos] == '(') {
    ++pos;
    auto close = text.find_last_of(')');
    if (close == std::string_view::npos || close < pos) fail("unbalanced parenthesis");
    text = text.substr(0, close);
  }
  while (true) {
    skip_space();
    std::vector<std::pair<int, Exponent>> factors;
    bool any = false;
    auto separator = [&] { return text[pos] == ',' || text[pos] == '+'; };
    while (pos < text.size() && !separator()) {
      skip_space();
      if (pos >= text.size() || separator()) break;
      if (text[pos] == '*') {
        ++pos;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (text.substr(start, pos - start) != "1") fail("coefficients are not supported");
        any = true;
        continue;
      }
      std::size_t start = pos;
      while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
      const auto name = text.substr(start, pos - start);
      const int k = variable_index(name);
      if (k < 0) fail("unknown variable '" + std::string(name) + "'");
      Exponent e = 1;
      skip_space();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip_space();
        std::size_t es = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (es == pos) fail("missing exponent");
        e = std::stoll(std::string(text.substr(es, pos - es)));
      }
      factors.emplace_back(k, e);
      max_var = std::max(max_var, k);
      any = true;
    }
    if (!any) fail("empty generator");
    parsed.push_back(std::move(factors));
    if (pos >= text.size()) break;
    ++pos;  // ',' or '+'
  }
  const int d = dim.value_or(std::max(2, max_var + 1));
  if (max_var >= d) fail("variable index exceeds dimension " + std::to_string(d));
  std::vector<Monomial> gens;
  for (const auto& factors : parsed) {
    Monomial m(d, 0);
    for (auto [k, e] : factors) m[k] += e;
    gens.push_back(std::move(m));
  }
  return MonomialIdeal(d, std::move(gens));
}

}  // namespace npc

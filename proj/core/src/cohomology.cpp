#include "npc/cohomology.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "npc/linalg.hpp"

namespace npc {

namespace {

using Face = std::vector<std::size_t>;
using IntRows = std::vector<std::vector<std::int64_t>>;

using RayMask = std::vector<std::uint64_t>;

struct MaskHash {
  std::size_t operator()(const RayMask& m) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : m) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

bool test_bit(const RayMask& m, std::size_t i) { return (m[i / 64] >> (i % 64)) & 1u; }

RayMask negative_rays(const Fan& fan, const RayDivisor& divisor, const Monomial& weight) {
  RayMask mask((fan.rays.size() + 63) / 64, 0);
  for (std::size_t r = 0; r < fan.rays.size(); ++r)
    if (pairing(weight, fan.rays[r].vector) < -divisor.coeffs[r]) mask[r / 64] |= std::uint64_t{1} << (r % 64);
  return mask;
}

// Faces of the nerve complex indexed by dimension + 1 (index 0 holds the empty face).
struct Complex {
  std::vector<std::vector<Face>> faces;
  std::vector<std::map<Face, std::size_t>> index;

  std::size_t count(int k) const {
    const int slot = k + 1;
    return slot < 0 || slot >= static_cast<int>(faces.size()) ? 0 : faces[slot].size();
  }
};

Complex nerve(const Fan& fan, const RayMask& negative) {
  const std::size_t d = static_cast<std::size_t>(fan.dim);
  std::vector<std::set<Face>> sets(d + 1);
  sets[0].insert(Face{});
  for (const auto& cone : fan.cones) {
    Face neg;
    for (auto r : cone)
      if (test_bit(negative, r)) neg.push_back(r);
    std::sort(neg.begin(), neg.end());
    const std::size_t n = neg.size();
    for (std::size_t bits = 1; bits < (std::size_t{1} << n); ++bits) {
      Face f;
      for (std::size_t j = 0; j < n; ++j)
        if (bits >> j & 1u) f.push_back(neg[j]);
      sets[f.size()].insert(std::move(f));
    }
  }
  Complex c;
  c.faces.resize(d + 1);
  c.index.resize(d + 1);
  for (std::size_t s = 0; s <= d; ++s) {
    c.faces[s].assign(sets[s].begin(), sets[s].end());
    for (std::size_t i = 0; i < c.faces[s].size(); ++i) c.index[s][c.faces[s][i]] = i;
  }
  return c;
}

// Coboundary from k-faces to (k+1)-faces: rows are (k+1)-faces.
IntRows coboundary(const Complex& c, int k) {
  const int hi = k + 2;
  if (hi < 0 || hi >= static_cast<int>(c.faces.size()) || k + 1 < 0) return {};
  const std::size_t cols = c.count(k);
  IntRows rows;
  for (const auto& f : c.faces[hi]) {
    std::vector<std::int64_t> row(cols, 0);
    for (std::size_t j = 0; j < f.size(); ++j) {
      Face g = f;
      g.erase(g.begin() + static_cast<std::ptrdiff_t>(j));
      row[c.index[k + 1].at(g)] = (j % 2 == 0) ? 1 : -1;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

CochainDegree nerve_degree(const Complex& c, int k) {
  CochainDegree deg;
  deg.dim_prev = c.count(k - 1);
  deg.dim_cur = c.count(k);
  deg.dim_next = c.count(k + 1);
  deg.d_in = coboundary(c, k - 1);
  deg.d_out = coboundary(c, k);
  return deg;
}

// dim H^i(X, O(D))_m = dim H~^{i-1}(nerve), i = 0..d.
std::vector<std::size_t> nerve_cohomology(const Fan& fan, const RayMask& negative) {
  const Complex c = nerve(fan, negative);
  std::vector<std::size_t> out(static_cast<std::size_t>(fan.dim) + 1, 0);
  for (int i = 0; i <= fan.dim; ++i) out[i] = cohomology_dimension(nerve_degree(c, i - 1));
  return out;
}

// Literal Čech complex of the max-cone cover, restricted to weight m.
struct CechComplex {
  std::vector<std::vector<std::uint64_t>> sets;  // by degree p: cone subsets of size p+1
  std::vector<std::map<std::uint64_t, std::size_t>> index;
};

CechComplex cech_complex(const Fan& fan, const RayMask& negative, int top_degree) {
  const std::size_t n = fan.cones.size();
  if (n > 20) throw std::invalid_argument("literal Čech complex: too many cones for the cross-check");
  std::vector<std::set<std::size_t>> cone_rays(n);
  for (std::size_t i = 0; i < n; ++i) cone_rays[i].insert(fan.cones[i].begin(), fan.cones[i].end());
  CechComplex c;
  c.sets.resize(static_cast<std::size_t>(top_degree) + 1);
  c.index.resize(c.sets.size());
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    const int p = __builtin_popcountll(s) - 1;
    if (p > top_degree) continue;
    std::set<std::size_t> common;
    bool first = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(s >> i & 1u)) continue;
      if (first) {
        common = cone_rays[i];
        first = false;
      } else {
        std::set<std::size_t> next;
        std::set_intersection(common.begin(), common.end(), cone_rays[i].begin(), cone_rays[i].end(),
                              std::inserter(next, next.begin()));
        common = std::move(next);
      }
    }
    const bool contributes =
        std::none_of(common.begin(), common.end(), [&](std::size_t r) { return test_bit(negative, r); });
    if (contributes) c.sets[p].push_back(s);
  }
  for (std::size_t p = 0; p < c.sets.size(); ++p)
    for (std::size_t i = 0; i < c.sets[p].size(); ++i) c.index[p][c.sets[p][i]] = i;
  return c;
}

IntRows cech_coboundary(const CechComplex& c, int p, std::size_t cones) {
  if (p < 0 || p + 1 >= static_cast<int>(c.sets.size())) return {};
  IntRows rows;
  for (auto s : c.sets[p + 1]) {
    std::vector<std::int64_t> row(c.sets[p].size(), 0);
    int j = 0;
    for (std::size_t i = 0; i < cones; ++i) {
      if (!(s >> i & 1u)) continue;
      const std::uint64_t face = s & ~(std::uint64_t{1} << i);
      auto it = c.index[p].find(face);
      if (it != c.index[p].end()) row[it->second] = (j % 2 == 0) ? 1 : -1;
      ++j;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

CochainDegree cech_degree(const CechComplex& c, int p, std::size_t cones) {
  CochainDegree deg;
  auto count = [&](int q) { return q < 0 || q >= static_cast<int>(c.sets.size()) ? 0 : c.sets[q].size(); };
  deg.dim_prev = count(p - 1);
  deg.dim_cur = count(p);
  deg.dim_next = count(p + 1);
  deg.d_in = cech_coboundary(c, p - 1, cones);
  deg.d_out = cech_coboundary(c, p, cones);
  return deg;
}

class WeightCache {
 public:
  WeightCache(const Fan& fan) : fan_(fan) {}
  const std::vector<std::size_t>& get(const RayMask& mask) {
    auto it = cache_.find(mask);
    if (it == cache_.end()) it = cache_.emplace(mask, nerve_cohomology(fan_, mask)).first;
    return it->second;
  }

 private:
  const Fan& fan_;
  std::unordered_map<RayMask, std::vector<std::size_t>, MaskHash> cache_;
};

// Visit every weight of [-n, n]^d; `fn(m, on_shell)`.
template <class Fn>
void for_each_weight(int dim, int n, Fn&& fn) {
  Monomial m(dim, -n);
  while (true) {
    bool shell = false;
    for (auto e : m)
      if (e == n || e == -n) shell = true;
    fn(m, shell);
    int k = dim - 1;
    while (k >= 0 && m[k] == n) m[k--] = -n;
    if (k < 0) break;
    ++m[k];
  }
}

void check_divisor(const Fan& fan, const RayDivisor& divisor) {
  if (divisor.coeffs.size() != fan.rays.size())
    throw std::invalid_argument("cohomology: divisor needs one coefficient per ray");
}

bool injective_nerve(const Fan& fan, const RayMask& source, const RayMask& target, int degree) {
  const int k = degree - 1;
  const Complex a = nerve(fan, source);
  const Complex b = nerve(fan, target);
  const auto src = nerve_degree(a, k);
  const std::size_t h = cohomology_dimension(src);
  if (h == 0) return true;
  const auto tgt = nerve_degree(b, k);
  IntRows f(tgt.dim_cur, std::vector<std::int64_t>(src.dim_cur, 0));
  if (k + 1 >= 0 && k + 1 < static_cast<int>(b.faces.size()))
    for (std::size_t r = 0; r < b.faces[k + 1].size(); ++r) f[r][a.index[k + 1].at(b.faces[k + 1][r])] = 1;
  return induced_rank(src, tgt, f) == h;
}

}  // namespace

std::vector<std::size_t> weight_cohomology(const Fan& fan, const RayDivisor& divisor, const Monomial& weight) {
  check_divisor(fan, divisor);
  return nerve_cohomology(fan, negative_rays(fan, divisor, weight));
}

std::vector<std::size_t> weight_cohomology_cech(const Fan& fan, const RayDivisor& divisor, const Monomial& weight) {
  check_divisor(fan, divisor);
  const auto mask = negative_rays(fan, divisor, weight);
  const CechComplex c = cech_complex(fan, mask, fan.dim + 1);
  std::vector<std::size_t> out(static_cast<std::size_t>(fan.dim) + 1, 0);
  for (int p = 0; p <= fan.dim; ++p) out[p] = cohomology_dimension(cech_degree(c, p, fan.cones.size()));
  return out;
}

bool injective_at_weight(const Fan& fan, const RayDivisor& source, const RayDivisor& target, const Monomial& weight,
                         int degree) {
  check_divisor(fan, source);
  check_divisor(fan, target);
  return injective_nerve(fan, negative_rays(fan, source, weight), negative_rays(fan, target, weight), degree);
}

bool injective_at_weight_cech(const Fan& fan, const RayDivisor& source, const RayDivisor& target,
                              const Monomial& weight, int degree) {
  check_divisor(fan, source);
  check_divisor(fan, target);
  const std::size_t n = fan.cones.size();
  const CechComplex a = cech_complex(fan, negative_rays(fan, source, weight), degree + 1);
  const CechComplex b = cech_complex(fan, negative_rays(fan, target, weight), degree + 1);
  const auto src = cech_degree(a, degree, n);
  const std::size_t h = cohomology_dimension(src);
  if (h == 0) return true;
  const auto tgt = cech_degree(b, degree, n);
  IntRows f(tgt.dim_cur, std::vector<std::int64_t>(src.dim_cur, 0));
  for (std::size_t r = 0; r < b.sets[degree].size(); ++r) {
    auto it = a.index[degree].find(b.sets[degree][r]);
    if (it != a.index[degree].end()) f[r][it->second] = 1;
  }
  // Every source summand maps to the identical summand of the target.
  IntRows g(tgt.dim_cur, std::vector<std::int64_t>(src.dim_cur, 0));
  for (std::size_t c = 0; c < a.sets[degree].size(); ++c) g[b.index[degree].at(a.sets[degree][c])][c] = 1;
  return induced_rank(src, tgt, g) == h;
}

int window_cap_from_env(int fallback) {
  if (const char* env = std::getenv("NPC_WINDOW_CAP")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
  }
  return fallback;
}

std::size_t CohomReport::dim(int degree) const {
  auto it = dims.find(degree);
  return it == dims.end() ? 0 : it->second;
}

CohomReport cech_dims(const Fan& fan, const RayDivisor& divisor, const CohomOptions& options) {
  check_divisor(fan, divisor);
  if (options.window < 1) throw std::invalid_argument("cech_dims: window must be at least 1");
  if (options.max_degree < 1) throw std::invalid_argument("cech_dims: max degree must be at least 1");
  const int top = std::min(options.max_degree, fan.dim);
  WeightCache cache(fan);
  constexpr std::size_t kSupportLimit = 64;
  int n = std::min(options.window, std::max(options.window_cap, 1));
  while (true) {
    CohomReport report;
    report.divisor = divisor;
    report.window = n;
    for (int i = 1; i <= top; ++i) report.dims[i] = 0;
    bool shell_clean = true;
    for_each_weight(fan.dim, n, [&](const Monomial& m, bool shell) {
      ++report.weights_examined;
      const auto& h = cache.get(negative_rays(fan, divisor, m));
      for (int i = 1; i <= top; ++i) {
        if (h[i] == 0) continue;
        report.dims[i] += h[i];
        auto& sup = report.support[i];
        if (sup.size() < kSupportLimit) sup.push_back(m);
        if (shell) shell_clean = false;
      }
    });
    report.certified = shell_clean;
    if (shell_clean || n >= options.window_cap) return report;
    n = std::min(2 * n, options.window_cap);
  }
}

InjectivityReport injectivity_check(const Fan& fan, const RayDivisor& divisor, const RayDivisor& fiber, int n,
                                    int window, int window_cap) {
  check_divisor(fan, divisor);
  check_divisor(fan, fiber);
  if (n < 0) throw std::invalid_argument("injectivity_check: n must be nonnegative");
  const RayDivisor target = divisor + n * fiber;
  const int degree = fan.dim - 1;
  WeightCache cache(fan);
  std::map<std::pair<RayMask, RayMask>, bool> verdicts;
  int w = std::min(window, std::max(window_cap, 1));
  while (true) {
    InjectivityReport report;
    report.window = w;
    bool shell_clean = true;
    for_each_weight(fan.dim, w, [&](const Monomial& m, bool shell) {
      const auto src = negative_rays(fan, divisor, m);
      if (cache.get(src)[degree] == 0) return;
      if (shell) shell_clean = false;
      ++report.weights_checked;
      const auto tgt = negative_rays(fan, target, m);
      auto key = std::make_pair(src, tgt);
      auto it = verdicts.find(key);
      if (it == verdicts.end()) it = verdicts.emplace(key, injective_nerve(fan, src, tgt, degree)).first;
      if (!it->second && report.injective) {
        report.injective = false;
        report.witness = m;
      }
    });
    report.certified = shell_clean;
    if (shell_clean || w >= window_cap) return report;
    w = std::min(2 * w, window_cap);
  }
}

}  // namespace npc

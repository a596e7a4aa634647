#pragma once

// Brute-force helpers shared by the unit tests. They deliberately avoid the
// library's own algorithms so that agreement means something.

#include <functional>
#include <vector>

#include "npc/monomial.hpp"

namespace oracle {

using npc::Monomial;

inline bool le(const Monomial& a, const Monomial& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

inline bool in_gens(const Monomial& v, const std::vector<Monomial>& gens) {
  for (const auto& g : gens)
    if (le(g, v)) return true;
  return false;
}

// Calls fn on every exponent vector in [0, hi]^d.
inline void for_box(int d, int hi, const std::function<void(const Monomial&)>& fn) {
  Monomial v(d, 0);
  while (true) {
    fn(v);
    int k = 0;
    while (k < d && v[k] == hi) v[k++] = 0;
    if (k == d) return;
    ++v[k];
  }
}

inline std::int64_t count_outside(int d, int hi, const std::vector<Monomial>& gens) {
  std::int64_t n = 0;
  for_box(d, hi, [&](const Monomial& v) { n += in_gens(v, gens) ? 0 : 1; });
  return n;
}

// Pure powers (x_1^{a_1}, ..., x_d^{a_d}): closure is sum v_k/a_k >= 1 and the
// adjoint is sum (v_k+1)/a_k > 1. Compared with cross-multiplied integers.
inline bool pure_closure_member(const Monomial& v, const std::vector<long>& a) {
  long den = 1;
  for (auto x : a) den *= x;
  long num = 0;
  for (std::size_t k = 0; k < a.size(); ++k) num += v[k] * (den / a[k]);
  return num >= den;
}

inline bool pure_adjoint_member(const Monomial& v, const std::vector<long>& a) {
  long den = 1;
  for (auto x : a) den *= x;
  long num = 0;
  for (std::size_t k = 0; k < a.size(); ++k) num += (v[k] + 1) * (den / a[k]);
  return num > den;
}

// Plane Newton polygon membership: v dominates a generator or a point of a
// segment between two generators. t*g + (1-t)*h <= v with t in [0,1] is a pair
// of linear constraints on t, solved with fractions p/q (q > 0).
inline bool plane_np_member(const Monomial& v, const std::vector<Monomial>& gens) {
  if (in_gens(v, gens)) return true;
  for (const auto& g : gens)
    for (const auto& h : gens) {
      // h_k + t (g_k - h_k) <= v_k
      long lo_n = 0, lo_d = 1, hi_n = 1, hi_d = 1;
      bool ok = true;
      for (int k = 0; k < 2 && ok; ++k) {
        const long c = g[k] - h[k], r = v[k] - h[k];
        if (c == 0) {
          ok = r >= 0;
        } else if (c > 0) {  // t <= r/c
          if (r * hi_d < hi_n * c) hi_n = r, hi_d = c;
        } else {  // t >= r/c = (-r)/(-c)
          if ((-r) * lo_d > lo_n * (-c)) lo_n = -r, lo_d = -c;
        }
      }
      if (ok && lo_n * hi_d <= hi_n * lo_d) return true;
    }
  return false;
}

}  // namespace oracle

#include <doctest.h>

#include <limits>
#include <random>

#include "npc/linalg.hpp"
#include "npc/lp.hpp"
#include "npc/numeric.hpp"

using npc::BigRational;
using npc::Rational64;

TEST_CASE("rational64 agrees with gmp rationals") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> dist(-1000, 1000);
  for (int k = 0; k < 2000; ++k) {
    const auto an = dist(rng), bn = dist(rng);
    auto ad = dist(rng), bd = dist(rng);
    if (ad == 0) ad = 1;
    if (bd == 0) bd = 7;
    const Rational64 a(an, ad), b(bn, bd);
    const BigRational A{npc::Integer(an), npc::Integer(ad)}, B{npc::Integer(bn), npc::Integer(bd)};
    CHECK((a + b).to_big() == A + B);
    CHECK((a - b).to_big() == A - B);
    CHECK((a * b).to_big() == A * B);
    if (!b.is_zero()) CHECK((a / b).to_big() == A / B);
    CHECK((a < b) == (A < B));
    CHECK(a.den() > 0);
  }
}

TEST_CASE("rational64 overflow throws and with_exact_field falls back") {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max() / 2;
  CHECK_THROWS_AS(Rational64(big) * Rational64(3), npc::ArithmeticOverflow);
  CHECK_THROWS_AS(npc::checked_add(std::numeric_limits<std::int64_t>::max(), 1), npc::ArithmeticOverflow);
  CHECK_THROWS_AS(npc::to_int64(npc::Integer("100000000000000000000")), npc::ArithmeticOverflow);
  const auto r = npc::with_exact_field([&]<class Q>() { return npc::to_big(Q(big) * Q(3)); });
  CHECK(r == BigRational(npc::Integer(big) * 3));
}

TEST_CASE("floor and ceil division") {
  CHECK(npc::floor_div(-7, 2) == -4);
  CHECK(npc::ceil_div(-7, 2) == -3);
  CHECK(npc::floor_div(7, 2) == 3);
  CHECK(npc::ceil_div(7, 2) == 4);
  CHECK(npc::floor_div(-6, 3) == -2);
}

namespace {

// Determinant by cofactor expansion, for the rank oracle.
BigRational det(const std::vector<std::vector<BigRational>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  BigRational out = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<BigRational>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<BigRational> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    out += (c % 2 ? -1 : 1) * m[0][c] * det(minor);
  }
  return out;
}

// Largest k with a nonzero k x k minor.
std::size_t minor_rank(const std::vector<std::vector<std::int64_t>>& a, std::size_t cols) {
  const std::size_t rows = a.size();
  for (std::size_t k = std::min(rows, cols); k > 0; --k) {
    for (unsigned rm = 0; rm < (1u << rows); ++rm) {
      if (static_cast<std::size_t>(__builtin_popcount(rm)) != k) continue;
      for (unsigned cm = 0; cm < (1u << cols); ++cm) {
        if (static_cast<std::size_t>(__builtin_popcount(cm)) != k) continue;
        std::vector<std::vector<BigRational>> m;
        for (std::size_t r = 0; r < rows; ++r) {
          if (!(rm >> r & 1)) continue;
          std::vector<BigRational> row;
          for (std::size_t c = 0; c < cols; ++c)
            if (cm >> c & 1) row.push_back(a[r][c]);
          m.push_back(row);
        }
        if (det(m) != 0) return k;
      }
    }
  }
  return 0;
}

}  // namespace

TEST_CASE("exact rank matches the largest nonzero minor") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-2, 2), size(1, 4);
  for (int t = 0; t < 300; ++t) {
    const std::size_t rows = size(rng), cols = size(rng);
    std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols));
    for (auto& row : a)
      for (auto& x : row) x = entry(rng);
    if (t % 5 == 0 && rows > 1) a[1] = a[0];  // force dependencies now and then
    CHECK(npc::exact_rank(a, cols) == minor_rank(a, cols));
    auto m = npc::Matrix<BigRational>::from_integers(a, cols);
    const auto ker = npc::nullspace(m);
    CHECK(ker.cols() == cols - minor_rank(a, cols));
    const auto prod = npc::multiply(m, ker);
    for (std::size_t r = 0; r < prod.rows(); ++r)
      for (std::size_t c = 0; c < prod.cols(); ++c) CHECK(prod(r, c) == 0);
  }
}

TEST_CASE("cohomology of a two-term complex") {
  // Q --(1,1)--> Q^2 --(1,-1)--> Q: exact in the middle.
  npc::CochainDegree deg;
  deg.dim_prev = 1;
  deg.dim_cur = 2;
  deg.dim_next = 1;
  deg.d_in = {{1}, {1}};
  deg.d_out = {{1, -1}};
  CHECK(npc::cohomology_dimension(deg) == 0);
  deg.d_out = {{0, 0}};
  CHECK(npc::cohomology_dimension(deg) == 1);
}

namespace {

// Optimum of max c.x, A x = b, x >= 0 with two equality rows, by enumerating
// basic solutions (Cramer's rule on every column pair). The first row is all
// ones, so the region is bounded.
std::optional<BigRational> lp_by_vertices(const npc::LinearProgram& lp) {
  std::optional<BigRational> best;
  const std::size_t n = lp.c.size();
  auto consider = [&](std::vector<BigRational> x) {
    for (const auto& v : x)
      if (v < 0) return;
    for (std::size_t r = 0; r < 2; ++r) {
      BigRational s = 0;
      for (std::size_t k = 0; k < n; ++k) s += lp.a[r][k] * x[k];
      if (s != lp.b[r]) return;
    }
    BigRational obj = 0;
    for (std::size_t k = 0; k < n; ++k) obj += lp.c[k] * x[k];
    if (!best || obj > *best) best = obj;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const BigRational D = BigRational(lp.a[0][i] * lp.a[1][j] - lp.a[0][j] * lp.a[1][i]);
      if (D == 0) continue;
      std::vector<BigRational> x(n, 0);
      x[i] = BigRational(lp.b[0] * lp.a[1][j] - lp.a[0][j] * lp.b[1]) / D;
      x[j] = BigRational(lp.a[0][i] * lp.b[1] - lp.b[0] * lp.a[1][i]) / D;
      consider(x);
    }
    // degenerate vertices with a single nonzero entry
    std::vector<BigRational> x(n, 0);
    x[i] = BigRational(lp.b[0]) / lp.a[0][i];
    consider(x);
  }
  return best;
}

}  // namespace

TEST_CASE("simplex agrees with vertex enumeration") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> entry(-4, 4), cols(2, 5), rhs(1, 6);
  int feasible = 0, infeasible = 0;
  for (int t = 0; t < 400; ++t) {
    npc::LinearProgram lp;
    const int n = cols(rng);
    lp.a = {std::vector<std::int64_t>(n, 1), std::vector<std::int64_t>(n)};
    for (auto& x : lp.a[1]) x = entry(rng);
    lp.b = {rhs(rng), entry(rng)};
    lp.c.resize(n);
    for (auto& x : lp.c) x = entry(rng);
    const auto sol = npc::solve(lp);
    const auto expect = lp_by_vertices(lp);
    REQUIRE(sol.status != npc::LpStatus::kUnbounded);
    if (!expect) {
      CHECK(sol.status == npc::LpStatus::kInfeasible);
      ++infeasible;
    } else {
      REQUIRE(sol.status == npc::LpStatus::kOptimal);
      CHECK(sol.objective == *expect);
      ++feasible;
    }
  }
  CHECK(feasible > 50);
  CHECK(infeasible > 10);
}

TEST_CASE("simplex reports unbounded problems") {
  npc::LinearProgram lp;
  lp.a = {{1, -1}};
  lp.b = {0};
  lp.c = {1, 0};
  CHECK(npc::solve(lp).status == npc::LpStatus::kUnbounded);
}

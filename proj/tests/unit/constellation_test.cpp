#include <doctest.h>

#include <random>

#include "npc/constellation.hpp"
#include "npc/harness.hpp"

using npc::Constellation;
using npc::DivisorE;
using npc::DivisorStar;
using npc::IntegerMatrix;
using npc::IntegerVector;

namespace {

Constellation cusp() { return Constellation(2, {{std::nullopt, {}}, {0, {0}}, {1, {1, 0}}}); }

IntegerVector iv(std::initializer_list<int> xs) { return IntegerVector(xs.begin(), xs.end()); }

IntegerMatrix matmul(const IntegerMatrix& a, const IntegerMatrix& b) {
  IntegerMatrix out(a.size(), IntegerVector(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

}  // namespace

TEST_CASE("proximity matrices") {
  const auto single = Constellation(3, {{std::nullopt, {}}});
  CHECK(single.proximity() == IntegerMatrix{iv({1})});
  CHECK(single.proximity_inverse() == IntegerMatrix{iv({1})});

  const auto c = cusp();
  CHECK(c.proximity() == IntegerMatrix{iv({1, -1, -1}), iv({0, 1, -1}), iv({0, 0, 1})});
  CHECK(c.proximity_inverse() == IntegerMatrix{iv({1, 1, 2}), iv({0, 1, 1}), iv({0, 0, 1})});
  const auto [p, inv] = npc::proximity_matrix(c);
  CHECK(p == c.proximity());
  CHECK(inv == c.proximity_inverse());

  const auto chain = Constellation::free_chain(2, 3);
  CHECK(chain.proximity_inverse() == IntegerMatrix{iv({1, 1, 1}), iv({0, 1, 1}), iv({0, 0, 1})});
}

TEST_CASE("star coordinates on the cusp") {
  const auto c = cusp();
  CHECK(npc::to_star(c, DivisorE{iv({0, 0, 0})}).coords == iv({0, 0, 0}));
  CHECK(npc::to_star(c, DivisorE{iv({2, 3, 6})}).coords == iv({2, 1, 1}));
  CHECK(npc::from_star(c, DivisorStar{iv({1, 1, 1})}).coeffs == iv({1, 2, 4}));
  CHECK(npc::canonical_divisor(c).coeffs == iv({1, 2, 4}));
  CHECK(npc::fiber_divisor(Constellation(2, {{std::nullopt, {}}})).coeffs == iv({1}));
  CHECK(npc::fiber_divisor(c).coeffs == iv({1, 1, 2}));
}

TEST_CASE("fullness") {
  const auto c = cusp();
  CHECK(npc::is_full(c, DivisorE{iv({0, 0, 0})}));
  CHECK(npc::is_full(c, DivisorE{iv({2, 3, 6})}));
  CHECK(npc::is_full(c, DivisorE{iv({1, 3, 6})}));
  CHECK(!npc::is_full(c, DivisorE{iv({2, 3, 4})}));
  CHECK(!npc::is_full(c, DivisorE{iv({-1, 0, 0})}));
}

TEST_CASE("point bases") {
  CHECK(npc::adjoint_basis(npc::PointBasis(iv({2, 1, 1})), 2).values() == iv({1, 0, 0}));
  CHECK(npc::adjoint_basis(npc::PointBasis(iv({4})), 3).values() == iv({2}));
  CHECK(npc::adjoint_basis(npc::PointBasis(iv({2, 2, 1})), 3).is_zero());
  CHECK(npc::product_basis(npc::PointBasis(iv({2, 1, 1})), npc::PointBasis(iv({1, 0, 0}))).values() == iv({3, 1, 1}));
  CHECK_THROWS(npc::PointBasis(iv({1, -1})));
  const auto c = cusp();
  const npc::PointBasis b(iv({2, 1, 1}));
  CHECK(npc::divisor_of_basis(c, b).coeffs == iv({2, 3, 6}));
  CHECK(npc::basis_of_divisor(c, DivisorE{iv({2, 3, 6})}) == b);
}

TEST_CASE("validation names the broken invariant") {
  using P = Constellation::Point;
  auto message = [](int d, std::vector<P> pts) {
    try {
      Constellation(d, std::move(pts));
    } catch (const npc::ValidationError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(!message(2, {}).empty());                                          // r >= 1
  CHECK(!message(1, {{std::nullopt, {}}}).empty());                        // d >= 2
  CHECK(!message(2, {{std::nullopt, {}}, {std::nullopt, {}}}).empty());    // second root
  CHECK(!message(2, {{std::nullopt, {}}, {1, {1}}}).empty());              // parent not earlier
  CHECK(!message(2, {{std::nullopt, {}}, {0, {}}}).empty());               // parent missing from prox
  CHECK(!message(2, {{std::nullopt, {}}, {0, {0}}, {0, {0, 1}}}).empty());  // prox not an ancestor
  CHECK(!message(2, {{std::nullopt, {}}, {0, {0}}, {1, {1, 0}}, {2, {2, 1, 0}}}).empty());  // |prox| > d
  CHECK(message(3, {{std::nullopt, {}}, {0, {0}}, {1, {1, 0}}, {2, {2, 1, 0}}}).empty());
}

TEST_CASE("randomized constellation identities") {
  npc::RandomIdeals gen(99);
  for (int t = 0; t < 300; ++t) {
    const int d = 2 + t % 3;
    const auto c = gen.constellation(d, 9);
    const auto& p = c.proximity();
    const auto& inv = c.proximity_inverse();
    const std::size_t r = c.size();
    IntegerMatrix id(r, IntegerVector(r, 0));
    for (std::size_t i = 0; i < r; ++i) id[i][i] = 1;
    CHECK(matmul(p, inv) == id);
    CHECK(matmul(inv, p) == id);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        CHECK(inv[i][j] >= 0);
        if (j < i) CHECK(p[i][j] == 0);
      }
    const auto n = gen.vector(r, -5, 5);
    const DivisorE dn{n};
    CHECK(npc::from_star(c, npc::to_star(c, dn)) == dn);
    CHECK(npc::to_star(c, npc::from_star(c, DivisorStar{n})).coords == n);
    CHECK(npc::is_full(c, dn) == npc::is_full_by_definition(c, dn));
    const npc::PointBasis b(gen.vector(r, 0, 6));
    CHECK(npc::is_full(c, npc::divisor_of_basis(c, b)));
    const auto adj = npc::adjoint_basis(b, d);
    for (std::size_t i = 0; i < r; ++i) CHECK(adj[i] <= b[i]);
    CHECK(npc::canonical_divisor(c) == npc::from_star(c, DivisorStar{IntegerVector(r, d - 1)}));
  }
}

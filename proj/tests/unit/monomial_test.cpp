#include <doctest.h>

#include <random>

#include "npc/monomial.hpp"
#include "npc/newton.hpp"
#include "oracles.hpp"

using npc::MonomialIdeal;
using npc::parse_ideal;

namespace {

MonomialIdeal random_ideal(std::mt19937_64& rng, int d, int max_exp, bool m_primary) {
  std::uniform_int_distribution<int> e(0, max_exp), count(1, 4), pure(1, max_exp);
  std::vector<npc::Monomial> gens;
  if (m_primary)
    for (int k = 0; k < d; ++k) {
      npc::Monomial g(d, 0);
      g[k] = pure(rng);
      gens.push_back(g);
    }
  for (int n = count(rng); n > 0; --n) {
    npc::Monomial g(d);
    for (auto& x : g) x = e(rng);
    gens.push_back(g);
  }
  return MonomialIdeal(d, gens);
}

}  // namespace

TEST_CASE("parsing and printing") {
  const auto i = parse_ideal("x^2, y^3");
  CHECK(i.dim() == 2);
  CHECK(i.to_string() == "(x^2, y^3)");
  CHECK(parse_ideal("x*y^2 + y^3 + x^2").to_string() == "(x^2, x*y^2, y^3)");
  CHECK(parse_ideal("x", 3).dim() == 3);
  CHECK(parse_ideal("1", 2).is_unit());
  CHECK(parse_ideal("x1^2, x5").dim() == 5);
  CHECK_THROWS(parse_ideal("x^", 2));
  CHECK_THROWS(parse_ideal("", 2));
  CHECK_THROWS(MonomialIdeal(2, {{1, -1}}));
  CHECK_THROWS(MonomialIdeal(2, {}));
}

TEST_CASE("generators are minimalized") {
  const MonomialIdeal i(2, {{2, 0}, {3, 1}, {0, 3}, {2, 0}});
  CHECK(i.generators().size() == 2);
  CHECK(i == parse_ideal("x^2, y^3"));
}

TEST_CASE("worked examples for the algebra") {
  const auto m = MonomialIdeal::maximal(3);
  const auto m2 = npc::power(m, 2);
  CHECK(npc::colon(MonomialIdeal::pure_powers({2, 2, 2}), m2) == m2);
  const auto j3 = MonomialIdeal::pure_powers({3, 3, 3});
  CHECK(npc::intersect(j3, npc::power(m, 4)) == npc::product(m, j3));
  CHECK(npc::colon(j3, MonomialIdeal::unit(3)) == j3);
  CHECK(npc::colength(m) == 1);
  CHECK(m.order() == 1);
  CHECK(npc::colength(m2) == 4);
  // 1, x, y, xy, y^2, xy^2 lie outside (x^2, y^3).
  CHECK(npc::colength(parse_ideal("x^2, y^3")) == 6);
  CHECK(npc::colength(parse_ideal("x^2, x*y^2, y^3")) == 5);
  CHECK(npc::power(m, 0).is_unit());
  CHECK_THROWS(npc::sum(m, MonomialIdeal::maximal(2)));
  CHECK_THROWS(npc::colength(parse_ideal("x^2", 2)));
}

TEST_CASE("operations agree with brute-force membership") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 150; ++t) {
    const int d = 2 + t % 2;
    const auto a = random_ideal(rng, d, 4, t % 3 == 0);
    const auto b = random_ideal(rng, d, 4, t % 4 == 0);
    const auto s = npc::sum(a, b), p = npc::product(a, b), in = npc::intersect(a, b), c = npc::colon(a, b);
    const int hi = 9;
    oracle::for_box(d, hi, [&](const npc::Monomial& v) {
      const bool ia = oracle::in_gens(v, a.generators()), ib = oracle::in_gens(v, b.generators());
      CHECK(s.contains(v) == (ia || ib));
      CHECK(in.contains(v) == (ia && ib));
      bool prod = false;
      for (const auto& g : a.generators())
        for (const auto& h : b.generators()) prod = prod || oracle::le(npc::add(g, h), v);
      CHECK(p.contains(v) == prod);
      bool col = true;
      for (const auto& u : b.generators()) col = col && oracle::in_gens(npc::add(v, u), a.generators());
      if (oracle::le(v, npc::Monomial(d, hi - 4))) CHECK(c.contains(v) == col);
    });
    // colon(I,J) J is contained in I
    CHECK(a.contains(npc::product(c, b)));
    CHECK(npc::equals(a, b) == (a.contains(b) && b.contains(a)));
    if (a.is_m_primary()) {
      const int box = static_cast<int>(a.generator_box()[0] + a.generator_box()[1] + (d > 2 ? a.generator_box()[2] : 0));
      CHECK(npc::colength(a) == oracle::count_outside(d, box, a.generators()));
    }
  }
}

TEST_CASE("order, gcd, pure powers") {
  const auto i = parse_ideal("x^2*y, x*y^3", 2);
  CHECK(i.order() == 3);
  CHECK(i.gcd() == npc::Monomial{1, 1});
  CHECK(!i.is_m_primary());
  CHECK(i.pure_power(0) == std::nullopt);
  const auto j = parse_ideal("x^3, y^2, x*y");
  CHECK(j.is_m_primary());
  CHECK(j.pure_power(1) == 2);
  CHECK(npc::divide(npc::multiply(j, {2, 1}), {2, 1}) == j);
}

TEST_CASE("newton polyhedron examples") {
  const auto cusp = parse_ideal("x^2, y^3");
  CHECK(npc::np_interior({2, 1}, cusp));
  CHECK(!npc::np_interior({1, 1}, cusp));
  CHECK(!npc::np_member({1, 1}, cusp));
  CHECK(npc::np_member({1, 2}, cusp));
  CHECK(!npc::np_member({-1, 5}, cusp));
  CHECK(npc::np_member({1, 1, 1}, MonomialIdeal::pure_powers({2, 2, 2})));
  CHECK(*npc::np_depth({2, 1}, cusp) == npc::BigRational(2, 5));
  for (const auto& g : cusp.generators()) CHECK(npc::np_member(g, cusp));

  CHECK(npc::integral_closure(cusp) == parse_ideal("x^2, x*y^2, y^3"));
  CHECK(npc::adjoint_howald(cusp) == parse_ideal("x, y"));
  CHECK_THROWS(npc::adjoint_howald(parse_ideal("x^2", 2)));
  CHECK(npc::adjoint_howald(MonomialIdeal::unit(3)).is_unit());
  const auto m = MonomialIdeal::maximal(3);
  for (int a = 1; a <= 5; ++a) {
    CHECK(npc::integral_closure(MonomialIdeal::pure_powers({a, a, a})) == npc::power(m, a));
    CHECK(npc::integral_closure(npc::power(m, a)) == npc::power(m, a));
    CHECK(npc::adjoint_howald(npc::power(m, a)) == npc::power(m, std::max(a - 2, 0)));
  }
}

TEST_CASE("closure and adjoint of pure powers against the closed form") {
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b)
      for (int c = 1; c <= 4; ++c) {
        const std::vector<long> e{a, b, c};
        const auto j = MonomialIdeal::pure_powers({a, b, c});
        const auto cl = npc::integral_closure(j), adj = npc::adjoint_howald(j);
        oracle::for_box(3, 6, [&](const npc::Monomial& v) {
          CHECK(cl.contains(v) == oracle::pure_closure_member(v, e));
          CHECK(adj.contains(v) == oracle::pure_adjoint_member(v, e));
        });
      }
}

TEST_CASE("plane closure against the Newton polygon") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    const auto i = random_ideal(rng, 2, 7, t % 2 == 0);
    const auto cl = npc::integral_closure(i);
    oracle::for_box(2, 10, [&](const npc::Monomial& v) {
      CHECK(npc::np_member(v, i) == oracle::plane_np_member(v, i.generators()));
      CHECK(cl.contains(v) == oracle::plane_np_member(v, i.generators()));
    });
  }
}

TEST_CASE("closure soundness in three variables: k v in I^k implies membership") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 40; ++t) {
    const auto i = random_ideal(rng, 3, 4, true);
    const auto cl = npc::integral_closure(i);
    CHECK(cl.contains(i));
    CHECK(npc::integral_closure(cl) == cl);
    CHECK(cl.order() == i.order());
    for (int k = 2; k <= 3; ++k) {
      const auto ik = npc::power(i, k);
      oracle::for_box(3, 5, [&](const npc::Monomial& v) {
        npc::Monomial kv = v;
        for (auto& x : kv) x *= k;
        if (ik.contains(kv)) CHECK(cl.contains(v));
      });
    }
  }
}

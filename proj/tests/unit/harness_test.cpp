#include <doctest.h>

#include "npc/harness.hpp"
#include "npc/json_io.hpp"
#include "npc/newton.hpp"
#include "npc/suite.hpp"
#include "npc/toric.hpp"

using npc::MonomialIdeal;
using npc::parse_ideal;
using npc::Verdict;

namespace {

npc::CheckReport with(Verdict v) {
  npc::CheckReport r("x", {});
  r.verdict = v;
  if (v == Verdict::kFail) r.witness = "w";
  return r;
}

npc::PrincipalizationTree tree_of(const MonomialIdeal& i) {
  auto res = npc::principalize(i);
  REQUIRE(std::holds_alternative<npc::PrincipalizationTree>(res));
  return std::get<npc::PrincipalizationTree>(std::move(res));
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(npc::exit_code({with(Verdict::kPass)}) == 0);
  CHECK(npc::exit_code({with(Verdict::kPass), with(Verdict::kSkipped)}) == 0);
  CHECK(npc::exit_code({with(Verdict::kPass), with(Verdict::kFail)}) == 1);
  CHECK(npc::exit_code({with(Verdict::kInconclusive), with(Verdict::kFail)}) == 1);
  CHECK(npc::exit_code({with(Verdict::kPass), with(Verdict::kInconclusive)}) == 2);
  CHECK(npc::exit_code({with(Verdict::kSkipped)}) == 2);
  CHECK(npc::exit_code({}) == 2);
}

TEST_CASE("difference witness") {
  const auto a = parse_ideal("x, y"), b = parse_ideal("x^2, y");
  const auto w = npc::difference_witness(a, b);
  REQUIRE(w);
  CHECK(a.contains(*w) != b.contains(*w));
  CHECK(!npc::difference_witness(a, a));
}

TEST_CASE("fixture checks pass") {
  CHECK(npc::check_cusp_golden().passed());
  CHECK(npc::check_adjoint_theorem(parse_ideal("x^2, y^3")).passed());
  for (int a = 1; a <= 5; ++a) CHECK(npc::check_adjoint_theorem(npc::power(MonomialIdeal::maximal(3), a)).passed());
  CHECK(npc::check_transform_commutes(parse_ideal("x^2, y^3")).passed());
  CHECK(npc::check_pullout(MonomialIdeal::pure_powers({2, 2, 2})).passed());
  CHECK(npc::check_subadditivity(parse_ideal("x^2, y^3"), parse_ideal("x^2, y^3")).passed());
  // J = m fails the order condition at the non-root base points of I: strict inclusion
  const auto prod = npc::check_product_cor(parse_ideal("x^2, y^3"), parse_ideal("x, y"));
  CHECK(prod.passed());
  const auto m = MonomialIdeal::maximal(2);
  for (int a = 1; a <= 4; ++a) CHECK(npc::check_prop_3_3(m, npc::power(m, a)).verdict != Verdict::kFail);
}

TEST_CASE("preconditions give skipped verdicts with a reason") {
  const auto nfs = npc::check_adjoint_theorem(parse_ideal("x^2, y^2, z^3"));
  CHECK(nfs.verdict == Verdict::kSkipped);
  CHECK(!nfs.detail.empty());
  const auto tree = tree_of(parse_ideal("x^2, y^3"));
  const auto skipped = npc::check_vanishing(tree, npc::DivisorE{{2, 3, 4}}, {1}, npc::CohomOptions{});
  CHECK(skipped.verdict == Verdict::kSkipped);
  CHECK(skipped.detail.find("full") != std::string::npos);
  // prop 3.3 precondition fails for I = J = (x, y) in three variables
  const auto p33 = npc::check_prop_3_3(parse_ideal("x, y, z"), parse_ideal("x, y, z"));
  CHECK(p33.verdict == Verdict::kSkipped);
}

TEST_CASE("pure-power fixtures") {
  const auto m = MonomialIdeal::maximal(3);
  const auto j2 = MonomialIdeal::pure_powers({2, 2, 2});
  // s = 1: J : cl(J) = J : m^2 = m^2 = adjoint(J^2) + J
  CHECK(npc::integral_closure(j2) == npc::power(m, 2));
  CHECK(npc::colon(j2, npc::power(m, 2)) == npc::power(m, 2));
  CHECK(npc::sum(npc::adjoint_howald(npc::power(j2, 2)), j2) == npc::power(m, 2));
  CHECK(!npc::colon(j2, npc::power(m, 2)).contains(npc::Monomial{1, 0, 0}));  // x * yz = xyz is not in J

  const auto j3 = MonomialIdeal::pure_powers({3, 3, 3});
  CHECK(npc::product(j3, npc::power(m, 6)) == npc::power(m, 9));   // t = 3
  CHECK(npc::product(j3, npc::power(m, 3)) != npc::power(m, 6));   // t = 2
  CHECK(!npc::product(j3, npc::power(m, 3)).contains(npc::Monomial{2, 2, 2}));
  CHECK(npc::power(m, 6).contains(npc::Monomial{2, 2, 2}));
  CHECK(npc::product(j3, npc::adjoint_howald(j3)) == npc::intersect(npc::adjoint_howald(npc::power(j3, 2)), j3));
  CHECK(npc::product(j3, m) == npc::intersect(npc::power(m, 4), j3));

  for (int d = 2; d <= 3; ++d)
    for (int a = 1; a <= 4; ++a) CHECK(npc::check_section4(std::vector<npc::Exponent>(d, a), -1, d + 2).passed());
  CHECK(npc::check_section4({2, 3}, -1, 4).verdict != Verdict::kFail);
}

TEST_CASE("cohomology checks") {
  npc::CohomOptions o;
  o.window_cap = 32;
  const auto m2 = npc::product(npc::power(MonomialIdeal::maximal(3), 2), parse_ideal("x, y, z^2"));
  const auto tree = tree_of(m2);
  CHECK(npc::check_duality(parse_ideal("x^2, y^3"), o).passed());
  CHECK(npc::check_duality(m2, o).passed());
  CHECK(npc::check_gr_vanishing(tree, o).passed());
  CHECK(npc::check_vanishing(tree, tree.valuations(), {1, 2}, o).passed());
  CHECK(npc::check_nonfull_control(tree, npc::DivisorE{{0, -3}}, o).passed());
  const auto found = npc::find_nonfull_control(tree, -3, 0, o);
  REQUIRE(found);
  CHECK(!npc::is_full(tree.constellation(), *found));
  // a full divisor cannot serve as the control
  CHECK(npc::check_nonfull_control(tree, tree.valuations(), o).verdict != Verdict::kPass);
}

TEST_CASE("property suites pass and log seeds") {
  for (const auto& r : {npc::property_proximity(5, 40), npc::property_fullness(5, 40),
                        npc::property_basis_subadditivity(5, 40), npc::property_closure(5, 20),
                        npc::property_factor_pullout(5, 20), npc::property_product_basis(5, 20),
                        npc::property_discrepancy(5, 20)}) {
    CHECK_MESSAGE(r.passed(), r.name, ": ", r.witness, r.detail);
    REQUIRE(r.seed);
    CHECK(*r.seed == 5);
  }
}

TEST_CASE("checks are deterministic") {
  const auto a = npc::adjoint_sweep(3, 5, 123), b = npc::adjoint_sweep(3, 5, 123);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].inputs == b[k].inputs);
    CHECK(a[k].verdict == b[k].verdict);
  }
}

TEST_CASE("suite runner") {
  CHECK_THROWS_AS(npc::run_suite(npc::Json::array()), npc::UsageError);
  CHECK_THROWS_AS(npc::run_suite(npc::Json::object()), npc::UsageError);
  CHECK_THROWS_AS(npc::run_check("nope", npc::Json::object()), npc::UsageError);
  CHECK_THROWS_AS(npc::run_check("adjoint", npc::Json::object()), npc::UsageError);
  CHECK_THROWS_AS(npc::run_check("adjoint", npc::Json{{"ideal", "x^"}}), npc::UsageError);
  const auto reports = npc::run_suite(npc::Json::parse(R"([
    {"check": "adjoint", "params": {"ideal": "x^2, y^3"}},
    {"check": "pure-powers", "params": {"exponents": [2, 2, 2], "s_min": 1, "s_max": 1}},
    {"check": "adjoint", "params": {"ideal": {"ideal": "x, y, z", "power": 3}}}
  ])"));
  REQUIRE(reports.size() == 3);
  for (const auto& r : reports) CHECK(r.passed());
  for (const auto& name : npc::check_names()) CHECK(!name.empty());
  CHECK(npc::default_suite().size() > 20);
}

TEST_CASE("json roundtrips") {
  const auto tree = tree_of(npc::product(npc::power(MonomialIdeal::maximal(3), 2), parse_ideal("x, y, z^2")));
  const auto j = npc::to_json(tree);
  const auto back = npc::tree_from_json(npc::Json::parse(j.dump()));
  CHECK(back.constellation() == tree.constellation());
  CHECK(back.basis() == tree.basis());
  CHECK(back.fan().rays == tree.fan().rays);
  CHECK(back.fan().cones == tree.fan().cones);
  CHECK(npc::to_json(back) == j);

  const auto c = npc::constellation_from_json(npc::Json::parse(
      R"({"d":2,"points":[{"id":1},{"id":2,"parent":1,"prox":[1]},{"id":3,"parent":2,"prox":[2,1]}]})"));
  CHECK(c.size() == 3);
  CHECK(npc::constellation_from_json(npc::to_json(c)) == c);
  CHECK_THROWS(npc::constellation_from_json(npc::Json::parse(R"({"d":2,"points":[{"id":2}]})")));

  const auto i = parse_ideal("x^2, y^3");
  CHECK(npc::ideal_from_json(npc::to_json(i)) == i);
  CHECK(npc::ideal_from_json(npc::Json("x^2, y^3")) == i);

  npc::IntegerVector big{npc::Integer("123456789012345678901234567890"), -4};
  CHECK(npc::integers_from_json(npc::to_json(big)) == big);

  auto r = npc::check_cusp_golden();
  r.seed = 9;
  const auto rj = npc::to_json(r);
  for (const char* key : {"name", "inputs", "verdict", "witness", "seed", "time"}) CHECK(rj.contains(key));
  CHECK(rj["verdict"] == "pass");
  const auto csv = npc::reports_to_csv({r});
  CHECK(csv.rfind("name,inputs,verdict", 0) == 0);
  CHECK(csv.find("cusp") != std::string::npos);
}

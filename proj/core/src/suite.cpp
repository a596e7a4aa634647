#include "npc/suite.hpp"

#include <algorithm>

#include "npc/toric.hpp"

namespace npc {

namespace {

const Json& require(const Json& params, const char* key) {
  if (!params.is_object() || !params.contains(key))
    throw UsageError(std::string("missing parameter \"") + key + "\"");
  return params.at(key);
}

// An ideal parameter: a string or ideal object, optionally raised to "power"
// and multiplied by "times".
MonomialIdeal ideal_param(const Json& params, const char* key) {
  const Json& v = require(params, key);
  try {
    if (v.is_object() && v.contains("ideal")) {
      auto base = ideal_from_json(v.at("ideal"));
      if (v.contains("power")) base = power(base, v.at("power").get<int>());
      if (v.contains("times")) base = product(base, ideal_from_json(v.at("times"), base.dim()));
      return base;
    }
    return ideal_from_json(v);
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad ideal for \"") + key + "\": " + e.what());
  }
}

std::uint64_t seed_param(const Json& params, std::uint64_t fallback) {
  return params.is_object() && params.contains("seed") ? params.at("seed").get<std::uint64_t>() : fallback;
}

CohomOptions cohom_params(const Json& params) {
  CohomOptions o;
  o.window_cap = window_cap_from_env(o.window_cap);
  if (params.is_object()) {
    if (params.contains("window")) o.window = params.at("window").get<int>();
    if (params.contains("window_cap")) o.window_cap = params.at("window_cap").get<int>();
  }
  if (o.window < 1 || o.window_cap < 1) throw UsageError("window and window_cap must be positive");
  return o;
}

PrincipalizationTree tree_param(const Json& params) {
  const auto ideal = ideal_param(params, "ideal");
  auto res = principalize(ideal);
  if (auto* nfs = std::get_if<NotFinitelySupported>(&res)) throw UsageError("ideal is not finitely supported: " + nfs->describe());
  return std::get<PrincipalizationTree>(std::move(res));
}

DivisorE divisor_param(const PrincipalizationTree& tree, const Json& params) {
  const auto& c = tree.constellation();
  if (!params.contains("divisor")) return tree.valuations();
  const Json& v = params.at("divisor");
  DivisorE d;
  if (v.is_string()) {
    const auto name = v.get<std::string>();
    if (name == "valuations") return tree.valuations();
    if (name == "zero") return DivisorE{IntegerVector(c.size(), 0)};
    if (name == "canonical") return canonical_divisor(c);
    if (name == "fiber") return fiber_divisor(c);
    throw UsageError("unknown divisor preset " + name);
  }
  if (v.is_object() && v.contains("star")) d = from_star(c, DivisorStar{integers_from_json(v.at("star"))});
  else d.coeffs = integers_from_json(v);
  if (d.coeffs.size() != c.size())
    throw UsageError("divisor has " + std::to_string(d.coeffs.size()) + " coefficients, tree has " +
                     std::to_string(c.size()) + " points");
  return d;
}

std::vector<int> twist_param(const Json& params) {
  if (!params.contains("twists")) return {1, 2};
  return params.at("twists").get<std::vector<int>>();
}

std::vector<CheckReport> one(CheckReport r) { return {std::move(r)}; }

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "cusp",    "adjoint", "adjoint-sweep", "transform", "adjoint-factor",  "pullout", "subadditivity",
      "product", "pure-powers", "vanishing",    "gr",        "duality", "nonfull", "properties"};
  return names;
}

std::vector<CheckReport> run_check(const std::string& name, const Json& p) {
  const Json params = p.is_null() ? Json::object() : p;
  if (!params.is_object()) throw UsageError("params for " + name + " must be an object");
  try {
    if (name == "cusp") return one(check_cusp_golden());
    if (name == "adjoint") return one(check_adjoint_theorem(ideal_param(params, "ideal")));
    if (name == "adjoint-sweep") {
      const int dim = params.value("dim", 2);
      const auto count = params.value("count", std::size_t{50});
      if (dim != 2 && dim != 3) throw UsageError("adjoint-sweep: dim must be 2 or 3");
      return adjoint_sweep(dim, count, seed_param(params, 1));
    }
    if (name == "transform") return one(check_transform_commutes(ideal_param(params, "ideal")));
    if (name == "adjoint-factor") return one(check_prop_3_3(ideal_param(params, "i"), ideal_param(params, "j")));
    if (name == "pullout") return one(check_pullout(ideal_param(params, "j")));
    if (name == "subadditivity") return one(check_subadditivity(ideal_param(params, "i"), ideal_param(params, "j")));
    if (name == "product") return one(check_product_cor(ideal_param(params, "i"), ideal_param(params, "j")));
    if (name == "pure-powers") {
      const auto exps = require(params, "exponents").get<std::vector<Exponent>>();
      if (exps.size() < 2) throw UsageError("pure-powers: need at least two exponents");
      for (auto e : exps)
        if (e < 1) throw UsageError("pure-powers: exponents must be positive");
      const int d = static_cast<int>(exps.size());
      return one(check_section4(exps, params.value("s_min", -1), params.value("s_max", d + 2)));
    }
    if (name == "vanishing") {
      const auto tree = tree_param(params);
      return one(check_vanishing(tree, divisor_param(tree, params), twist_param(params), cohom_params(params)));
    }
    if (name == "gr") return one(check_gr_vanishing(tree_param(params), cohom_params(params)));
    if (name == "duality") return one(check_duality(ideal_param(params, "ideal"), cohom_params(params)));
    if (name == "nonfull") {
      const auto tree = tree_param(params);
      return one(check_nonfull_control(tree, divisor_param(tree, params), cohom_params(params)));
    }
    if (name == "properties") {
      const auto seed = seed_param(params, 1);
      const auto cases = params.value("cases", std::size_t{200});
      return {property_proximity(seed, cases),       property_fullness(seed, cases),
              property_basis_subadditivity(seed, cases), property_closure(seed, cases),
              property_factor_pullout(seed, cases),  property_product_basis(seed, cases),
              property_discrepancy(seed, cases)};
    }
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("bad parameters for " + name + ": " + e.what());
  }
  throw UsageError("unknown check \"" + name + "\"");
}

std::vector<CheckReport> run_suite(const Json& suite) {
  if (!suite.is_array()) throw UsageError("suite must be a JSON list of {check, params}");
  if (suite.empty()) throw UsageError("suite is empty");
  std::vector<CheckReport> out;
  for (const auto& entry : suite) {
    if (!entry.is_object() || !entry.contains("check") || !entry.at("check").is_string())
      throw UsageError("suite entry without a \"check\" name: " + entry.dump());
    auto reports = run_check(entry.at("check").get<std::string>(), entry.value("params", Json::object()));
    for (auto& r : reports) out.push_back(std::move(r));
  }
  return out;
}

Json default_suite() {
  const Json m2 = {{"ideal", "x, y, z"}, {"power", 2}, {"times", "x, y, z^2"}};
  Json suite = Json::array();
  auto add = [&](const std::string& check, Json params) { suite.push_back({{"check", check}, {"params", params}}); };
  add("cusp", Json::object());
  add("adjoint", {{"ideal", "x^2, y^3"}});
  for (int a = 1; a <= 5; ++a) add("adjoint", {{"ideal", {{"ideal", "x, y, z"}, {"power", a}}}});
  add("transform", {{"ideal", "x^2, y^3"}});
  add("transform", {{"ideal", m2}});
  add("adjoint-factor", {{"i", "x, y"}, {"j", "x^2, y^3"}});
  add("pullout", {{"j", "x^2, y^2, z^2"}});
  add("subadditivity", {{"i", "x^2, y^3"}, {"j", "x^2, y^3"}});
  add("product", {{"i", "x^2, y^3"}, {"j", "x, y"}});
  for (int d = 2; d <= 3; ++d)
    for (int a = 1; a <= 4; ++a) add("pure-powers", {{"exponents", std::vector<int>(d, a)}});
  add("duality", {{"ideal", "x^2, y^3"}});
  add("duality", {{"ideal", m2}});
  add("gr", {{"ideal", m2}});
  add("vanishing", {{"ideal", m2}, {"divisor", "valuations"}});
  add("vanishing", {{"ideal", "x^2, y^3"}, {"divisor", "valuations"}});
  add("nonfull", {{"ideal", m2}, {"divisor", {0, -3}}});
  add("properties", {{"seed", 20261018}, {"cases", 200}});
  add("adjoint-sweep", {{"dim", 2}, {"count", 50}, {"seed", 7}});
  add("adjoint-sweep", {{"dim", 3}, {"count", 20}, {"seed", 11}});
  return suite;
}

}  // namespace npc

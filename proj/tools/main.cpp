// npc: command-line front end for the constellation / adjoint toolkit.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 only skipped or
// inconclusive results, 3 usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "npc/constellation.hpp"
#include "npc/json_io.hpp"
#include "npc/newton.hpp"
#include "npc/suite.hpp"
#include "npc/toric.hpp"

namespace {

using npc::Json;

constexpr int kExitUsage = 3;

struct Common {
  bool json = false;
  std::string constellation;  // file
  std::vector<std::string> ideals;
  std::string basis;
};

std::string join(const npc::IntegerVector& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

// Accepts "2,1,1", "2 1 1" or "[2,1,1]".
npc::IntegerVector parse_integers(const std::string& text) {
  std::string cleaned;
  for (char c : text) cleaned += (c == ',' || c == '[' || c == ']') ? ' ' : c;
  std::istringstream in(cleaned);
  npc::IntegerVector out;
  std::string tok;
  while (in >> tok) {
    try {
      out.emplace_back(tok);
    } catch (const std::exception&) {
      throw npc::UsageError("not an integer: " + tok);
    }
  }
  return out;
}

// A JSON value given inline or as a path to a file.
Json json_argument(const std::string& value) {
  if (std::filesystem::exists(value)) return npc::read_json_file(value);
  try {
    return Json::parse(value);
  } catch (const std::exception&) {
    return Json(value);  // bare word, e.g. a preset name
  }
}

npc::Constellation load_constellation(const std::string& path) {
  if (!std::filesystem::exists(path)) throw npc::UsageError("constellation file not found: " + path);
  return npc::constellation_from_json(npc::read_json_file(path));
}

std::vector<npc::MonomialIdeal> load_ideals(const std::vector<std::string>& texts) {
  std::vector<npc::MonomialIdeal> out;
  for (const auto& t : texts) {
    try {
      out.push_back(npc::ideal_from_json(json_argument(t)));
    } catch (const std::exception& e) {
      throw npc::UsageError("bad ideal \"" + t + "\": " + e.what());
    }
  }
  if (out.size() > 1)
    for (const auto& i : out)
      if (i.dim() != out.front().dim()) throw npc::UsageError("ideals have different dimensions");
  return out;
}

npc::PrincipalizationTree require_tree(const npc::MonomialIdeal& ideal) {
  auto res = npc::principalize(ideal);
  if (auto* nfs = std::get_if<npc::NotFinitelySupported>(&res)) throw npc::UsageError(nfs->describe());
  return std::get<npc::PrincipalizationTree>(std::move(res));
}

void print_matrix(const std::string& title, const npc::IntegerMatrix& m) {
  std::cout << title << "\n";
  for (const auto& row : m) std::cout << "  " << join(row) << "\n";
}

int print_reports(const std::vector<npc::CheckReport>& reports, bool json) {
  if (json) {
    Json out = Json::array();
    for (const auto& r : reports) out.push_back(npc::to_json(r));
    std::cout << out.dump(2) << "\n";
  } else {
    std::size_t counts[4] = {0, 0, 0, 0};
    for (const auto& r : reports) {
      ++counts[static_cast<int>(r.verdict)];
      std::cout << "[" << npc::to_string(r.verdict) << "] " << r.name;
      for (const auto& [k, v] : r.inputs) std::cout << " " << k << "=" << v;
      if (!r.witness.empty()) std::cout << "\n    witness: " << r.witness;
      if (!r.detail.empty()) std::cout << "\n    " << r.detail;
      std::cout << "\n";
    }
    std::cout << counts[0] << " pass, " << counts[1] << " fail, " << counts[2] << " skipped, " << counts[3]
              << " inconclusive\n";
  }
  return npc::exit_code(reports);
}

// --- subcommands ---------------------------------------------------------------

int run_basis(const Common& c) {
  if (!c.constellation.empty()) {
    const auto con = load_constellation(c.constellation);
    if (c.basis.empty()) throw npc::UsageError("basis: --constellation needs --basis");
    const npc::PointBasis basis(parse_integers(c.basis));
    if (basis.size() != con.size()) throw npc::UsageError("basis length does not match the constellation");
    const auto divisor = npc::divisor_of_basis(con, basis);
    if (c.json) {
      std::cout << Json{{"basis", npc::to_json(basis.values())},
                        {"divisor", npc::to_json(divisor.coeffs)},
                        {"full", npc::is_full(con, divisor)},
                        {"adjoint_basis", npc::to_json(npc::adjoint_basis(basis, con.dim()).values())}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << "basis          " << join(basis.values()) << "\n"
                << "divisor (E)    " << join(divisor.coeffs) << "\n"
                << "full           " << (npc::is_full(con, divisor) ? "yes" : "no") << "\n"
                << "adjoint basis  " << join(npc::adjoint_basis(basis, con.dim()).values()) << "\n";
    }
    return 0;
  }
  const auto ideals = load_ideals(c.ideals);
  if (ideals.size() != 1) throw npc::UsageError("basis: give exactly one --ideal (or --constellation with --basis)");
  const auto tree = require_tree(ideals.front());
  if (c.json) {
    std::cout << Json{{"ideal", npc::to_json(ideals.front())},
                      {"constellation", npc::to_json(tree.constellation())},
                      {"basis", npc::to_json(tree.basis().values())},
                      {"valuations", npc::to_json(tree.valuations().coeffs)},
                      {"root_factor", tree.root_factors().front()}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "ideal        " << ideals.front().to_string() << "\n"
              << "points       " << tree.constellation().size() << "\n"
              << "basis        " << join(tree.basis().values()) << "\n"
              << "valuations   " << join(tree.valuations().coeffs) << "\n";
  }
  return 0;
}

int run_adjoint(const Common& c) {
  if (!c.constellation.empty()) {
    const auto con = load_constellation(c.constellation);
    const npc::PointBasis basis(parse_integers(c.basis));
    if (basis.size() != con.size()) throw npc::UsageError("basis length does not match the constellation");
    const auto adj = npc::adjoint_basis(basis, con.dim());
    if (c.json) std::cout << Json{{"adjoint_basis", npc::to_json(adj.values())}}.dump(2) << "\n";
    else std::cout << "adjoint basis  " << join(adj.values()) << "\n";
    return 0;
  }
  const auto ideals = load_ideals(c.ideals);
  if (ideals.size() != 1) throw npc::UsageError("adjoint: give exactly one --ideal");
  const auto& ideal = ideals.front();
  const auto tree = require_tree(ideal);
  const auto adj_basis = npc::adjoint_basis(tree.basis(), ideal.dim());
  const auto formula = npc::ideal_from_basis(tree, adj_basis);
  const auto sections = npc::adjoint_via_sections(tree);
  std::optional<npc::MonomialIdeal> howald;
  if (ideal.is_m_primary() || ideal.is_unit()) howald = npc::adjoint_howald(ideal);
  const bool agree = formula == sections && (!howald || *howald == sections);
  if (c.json) {
    Json out{{"ideal", npc::to_json(ideal)},
             {"basis", npc::to_json(tree.basis().values())},
             {"adjoint_basis", npc::to_json(adj_basis.values())},
             {"formula", npc::to_json(formula)},
             {"sections", npc::to_json(sections)},
             {"agree", agree}};
    out["howald"] = howald ? npc::to_json(*howald) : Json(nullptr);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "ideal          " << ideal.to_string() << "\n"
              << "basis          " << join(tree.basis().values()) << "\n"
              << "adjoint basis  " << join(adj_basis.values()) << "\n"
              << "formula        " << formula.to_string() << "\n"
              << "sections       " << sections.to_string() << "\n"
              << "howald         " << (howald ? howald->to_string() : "n/a (not m-primary)") << "\n";
  }
  return agree ? 0 : 1;
}

int run_prox(const Common& c) {
  std::optional<npc::Constellation> con;
  if (!c.constellation.empty()) {
    con = load_constellation(c.constellation);
  } else {
    const auto ideals = load_ideals(c.ideals);
    if (ideals.empty()) throw npc::UsageError("prox-matrix: give --constellation or --ideal");
    auto res = npc::principalize(std::span<const npc::MonomialIdeal>(ideals));
    if (auto* nfs = std::get_if<npc::NotFinitelySupported>(&res)) throw npc::UsageError(nfs->describe());
    con = std::get<npc::PrincipalizationTree>(res).constellation();
  }
  const auto [p, inv] = npc::proximity_matrix(*con);
  if (c.json) {
    Json jp = Json::array(), ji = Json::array();
    for (const auto& row : p) jp.push_back(npc::to_json(row));
    for (const auto& row : inv) ji.push_back(npc::to_json(row));
    std::cout << Json{{"constellation", npc::to_json(*con)}, {"p", jp}, {"p_inverse", ji}}.dump(2) << "\n";
  } else {
    print_matrix("p", p);
    print_matrix("p^-1", inv);
  }
  return 0;
}

int run_principalize(const Common& c, int max_depth) {
  const auto ideals = load_ideals(c.ideals);
  if (ideals.empty()) throw npc::UsageError("principalize: give at least one --ideal");
  auto res = npc::principalize(std::span<const npc::MonomialIdeal>(ideals), max_depth);
  if (auto* nfs = std::get_if<npc::NotFinitelySupported>(&res)) {
    if (c.json) std::cout << npc::to_json(*nfs).dump(2) << "\n";
    else std::cout << nfs->describe() << "\n";
    return 0;  // informational
  }
  const auto& tree = std::get<npc::PrincipalizationTree>(res);
  tree.verify();
  if (c.json) {
    std::cout << npc::to_json(tree).dump(2) << "\n";
    return 0;
  }
  const int d = tree.dim();
  std::cout << tree.constellation().size() << " points\n";
  for (std::size_t i = 0; i < tree.constellation().size(); ++i) {
    const auto& pt = tree.constellation().point(i);
    std::cout << "  E" << (i + 1);
    if (pt.parent) {
      std::cout << " parent E" << (*pt.parent + 1) << " prox {";
      for (std::size_t k = 0; k < pt.prox.size(); ++k) std::cout << (k ? "," : "") << "E" << (pt.prox[k] + 1);
      std::cout << "}";
    }
    std::cout << " chart [";
    const auto& path = tree.charts()[i].path;
    for (std::size_t k = 0; k < path.size(); ++k) std::cout << (k ? "," : "") << npc::variable_name(d, path[k]);
    std::cout << "] ray " << npc::monomial_to_string(tree.fan().rays[tree.point_ray(i)].vector) << " ("
              << join(npc::IntegerVector(tree.fan().rays[tree.point_ray(i)].vector.begin(),
                                         tree.fan().rays[tree.point_ray(i)].vector.end()))
              << ")\n";
  }
  for (std::size_t k = 0; k < ideals.size(); ++k)
    std::cout << "ideal " << ideals[k].to_string() << ": basis " << join(tree.basis(k).values()) << ", valuations "
              << join(tree.valuations(k).coeffs) << "\n";
  std::cout << tree.fan().cones.size() << " maximal cones\n";
  return 0;
}

struct CohomArgs {
  std::string tree;
  std::string divisor = "valuations";
  int max_i = 2;
  int window = 8;
  int window_cap = 0;
  int inject = -1;
};

int run_cohom(const Common& c, const CohomArgs& a) {
  std::optional<npc::PrincipalizationTree> tree;
  if (!a.tree.empty()) {
    if (!std::filesystem::exists(a.tree)) throw npc::UsageError("tree file not found: " + a.tree);
    tree = npc::tree_from_json(npc::read_json_file(a.tree));
  } else {
    const auto ideals = load_ideals(c.ideals);
    if (ideals.size() != 1) throw npc::UsageError("cohom: give --tree or one --ideal");
    tree = require_tree(ideals.front());
  }
  if (!c.constellation.empty() && !(load_constellation(c.constellation) == tree->constellation()))
    throw npc::UsageError("cohom: --constellation does not match the tree");
  if (a.max_i < 1 || a.window < 1) throw npc::UsageError("cohom: --max-i and --window must be positive");

  // Divisor: preset name, E-coefficient array, {"star": [...]}, or {"rays": [...]}.
  const Json spec = json_argument(a.divisor);
  npc::RayDivisor ray;
  std::string label;
  if (spec.is_string()) {
    const auto name = spec.get<std::string>();
    const auto& con = tree->constellation();
    if (name == "valuations" || name == "ideal") ray = npc::ideal_divisor(*tree);
    else if (name == "ideal+canonical") ray = npc::ideal_divisor(*tree) + npc::ray_divisor(*tree, npc::canonical_divisor(con));
    else if (name == "zero") ray = npc::ray_divisor(*tree, npc::DivisorE{npc::IntegerVector(con.size(), 0)});
    else if (name == "canonical") ray = npc::ray_divisor(*tree, npc::canonical_divisor(con));
    else throw npc::UsageError("unknown divisor preset " + name);
    label = name;
  } else if (spec.is_object() && spec.contains("rays")) {
    ray.coeffs = spec.at("rays").get<std::vector<std::int64_t>>();
    label = "rays";
  } else {
    npc::DivisorE d;
    if (spec.is_object() && spec.contains("star"))
      d = npc::from_star(tree->constellation(), npc::DivisorStar{npc::integers_from_json(spec.at("star"))});
    else
      d.coeffs = npc::integers_from_json(spec);
    if (d.coeffs.size() != tree->constellation().size()) throw npc::UsageError("divisor length does not match the tree");
    ray = npc::ray_divisor(*tree, d);
    label = "E";
  }
  if (ray.coeffs.size() != tree->fan().rays.size()) throw npc::UsageError("divisor needs one coefficient per ray");

  npc::CohomOptions opts;
  opts.max_degree = a.max_i;
  opts.window = a.window;
  opts.window_cap = a.window_cap > 0 ? a.window_cap : npc::window_cap_from_env();
  opts.window_cap = std::max(opts.window_cap, opts.window);
  const auto rep = npc::cech_dims(tree->fan(), ray, opts);
  std::optional<npc::InjectivityReport> inj;
  if (a.inject >= 0) {
    const auto fiber = npc::ray_divisor(*tree, npc::fiber_divisor(tree->constellation()));
    inj = npc::injectivity_check(tree->fan(), ray, fiber, a.inject, opts.window, opts.window_cap);
  }
  if (c.json) {
    Json out = npc::to_json(rep);
    if (inj) out["injectivity"] = npc::to_json(*inj);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "divisor on rays  ";
    for (std::size_t r = 0; r < ray.coeffs.size(); ++r)
      std::cout << (r ? " " : "") << tree->fan().rays[r].label() << ":" << ray.coeffs[r];
    std::cout << "\n";
    for (const auto& [i, n] : rep.dims) std::cout << "dim H^" << i << " = " << n << "\n";
    std::cout << "window N=" << rep.window << " (" << rep.status() << ", field " << rep.field << ")\n";
    if (inj)
      std::cout << "injective H^" << (tree->dim() - 1) << " for n=" << a.inject << ": "
                << (inj->injective ? "yes" : "no") << (inj->certified ? " (certified)" : " (window inconclusive)")
                << "\n";
  }
  if (inj && !inj->injective) return 1;
  return rep.certified && (!inj || inj->certified) ? 0 : 2;
}

struct CheckArgs {
  std::string name;
  std::string suite;
  std::string i, j;
  std::string exponents;
  std::optional<int> s_min, s_max;
  std::string divisor;
  std::string twists;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> count, cases;
  std::optional<int> dim;
  std::optional<int> window, window_cap;
};

Json check_params(const Common& c, const CheckArgs& a) {
  Json p = Json::object();
  if (!c.ideals.empty()) p["ideal"] = json_argument(c.ideals.front());
  if (!a.i.empty()) p["i"] = json_argument(a.i);
  if (!a.j.empty()) p["j"] = json_argument(a.j);
  if (a.name == "pullout" && !p.contains("j") && p.contains("ideal")) p["j"] = p["ideal"];
  if (!a.exponents.empty()) {
    std::vector<std::int64_t> e;
    for (const auto& v : parse_integers(a.exponents)) e.push_back(npc::to_int64(v));
    p["exponents"] = e;
  }
  if (a.s_min) p["s_min"] = *a.s_min;
  if (a.s_max) p["s_max"] = *a.s_max;
  if (!a.divisor.empty()) p["divisor"] = json_argument(a.divisor);
  if (!a.twists.empty()) {
    std::vector<std::int64_t> t;
    for (const auto& v : parse_integers(a.twists)) t.push_back(npc::to_int64(v));
    p["twists"] = t;
  }
  if (a.seed) p["seed"] = *a.seed;
  if (a.count) p["count"] = *a.count;
  if (a.cases) p["cases"] = *a.cases;
  if (a.dim) p["dim"] = *a.dim;
  if (a.window) p["window"] = *a.window;
  if (a.window_cap) p["window_cap"] = *a.window_cap;
  return p;
}

int run_check(const Common& c, const CheckArgs& a) {
  if (a.name == "all") {
    Json suite;
    if (a.suite.empty()) {
      suite = npc::default_suite();
    } else {
      if (!std::filesystem::exists(a.suite)) throw npc::UsageError("suite file not found: " + a.suite);
      if (std::filesystem::file_size(a.suite) == 0) throw npc::UsageError("suite file is empty: " + a.suite);
      try {
        suite = npc::read_json_file(a.suite);
      } catch (const Json::exception& e) {
        throw npc::UsageError("suite file is not valid JSON: " + std::string(e.what()));
      }
    }
    return print_reports(npc::run_suite(suite), c.json);
  }
  return print_reports(npc::run_check(a.name, check_params(c, a)), c.json);
}

struct SweepArgs {
  std::string family = "adjoint";
  int dim = 2;
  std::size_t count = 50;
  std::uint64_t seed = 1;
  int max_exponent = 4;
  std::string out;
};

int run_sweep(const SweepArgs& a) {
  std::vector<npc::CheckReport> reports;
  if (a.family == "adjoint") {
    if (a.dim != 2 && a.dim != 3) throw npc::UsageError("sweep: --dim must be 2 or 3");
    reports = npc::adjoint_sweep(a.dim, a.count, a.seed);
  } else if (a.family == "pure-powers") {
    for (int d = 2; d <= 3; ++d)
      for (int e = 1; e <= a.max_exponent; ++e) reports.push_back(npc::check_section4(std::vector<npc::Exponent>(d, e), -1, d + 2));
  } else if (a.family == "duality" || a.family == "vanishing") {
    npc::RandomIdeals gen(a.seed);
    npc::CohomOptions opts;
    opts.window_cap = npc::window_cap_from_env(opts.window_cap);
    for (std::size_t k = 0; k < a.count; ++k) {
      const auto ideal = a.dim == 2 ? gen.plane(6) : gen.spatial(12, 3);
      if (a.family == "duality") {
        reports.push_back(npc::check_duality(ideal, opts));
      } else {
        const auto tree = require_tree(ideal);
        const auto star = gen.vector(tree.constellation().size(), 0, 3);
        reports.push_back(npc::check_vanishing(tree, npc::from_star(tree.constellation(), npc::DivisorStar{star}), {1, 2}, opts));
      }
      reports.back().seed = a.seed;
    }
  } else {
    throw npc::UsageError("sweep: unknown family " + a.family + " (adjoint, pure-powers, duality, vanishing)");
  }
  const auto csv = npc::reports_to_csv(reports);
  if (a.out.empty()) {
    std::cout << csv;
  } else {
    std::ofstream f(a.out);
    if (!f) throw npc::UsageError("cannot write " + a.out);
    f << csv;
  }
  return npc::exit_code(reports);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"npc: point bases, adjoint ideals and their checks for finitely supported monomial ideals"};
  app.require_subcommand(1);
  Common common;
  app.add_flag("--json", common.json, "Machine-readable JSON output");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--constellation", common.constellation, "Constellation JSON file");
    sub->add_option("--ideal", common.ideals, "Ideal as text (\"x^2, y^3\") or JSON; repeatable where it makes sense");
    sub->add_flag("--json", common.json, "Machine-readable JSON output");
  };

  auto* basis = app.add_subcommand("basis", "Point basis of an ideal, or divisor/fullness of a given basis");
  add_common(basis);
  basis->add_option("--basis", common.basis, "Point basis such as 2,1,1 (with --constellation)");

  auto* adjoint = app.add_subcommand("adjoint", "Adjoint ideal by the basis formula, sections and Howald");
  add_common(adjoint);
  adjoint->add_option("--basis", common.basis, "Point basis (with --constellation)");

  auto* prox = app.add_subcommand("prox-matrix", "Proximity matrix and its inverse");
  add_common(prox);

  int max_depth = npc::kDefaultMaxDepth;
  auto* princ = app.add_subcommand("principalize", "Principalize ideals by point blowups");
  add_common(princ);
  princ->add_option("--max-depth", max_depth, "Recursion depth cap")->check(CLI::PositiveNumber);

  CohomArgs cohom_args;
  auto* cohom = app.add_subcommand("cohom", "Weight-graded Cech cohomology H^i(X, O_X(D))");
  add_common(cohom);
  cohom->add_option("--tree", cohom_args.tree, "Tree JSON written by `principalize --json`");
  cohom->add_option("--divisor", cohom_args.divisor,
                    "Preset (valuations, ideal+canonical, zero, canonical), E-coefficient array, "
                    "{\"star\":[..]}, {\"rays\":[..]}, or a JSON file");
  cohom->add_option("--max-i", cohom_args.max_i, "Highest degree i");
  cohom->add_option("--window", cohom_args.window, "Initial window half-width N");
  cohom->add_option("--window-cap", cohom_args.window_cap, "Window cap (default NPC_WINDOW_CAP or 64)");
  cohom->add_option("--inject", cohom_args.inject, "Also check injectivity of H^{d-1}(D) -> H^{d-1}(D+nE) for this n");

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Run a named check, or `all` for a suite");
  add_common(check);
  check->add_option("name", check_args.name, "Check name or `all`")->required();
  check->add_option("--suite", check_args.suite, "Suite JSON file (list of {check, params})");
  check->add_option("--i", check_args.i, "First ideal for two-ideal checks");
  check->add_option("--j", check_args.j, "Second ideal for two-ideal checks");
  check->add_option("--exponents", check_args.exponents, "Pure-power exponents, e.g. 3,3,3");
  check->add_option("--s-min", check_args.s_min, "Smallest s");
  check->add_option("--s-max", check_args.s_max, "Largest s");
  check->add_option("--divisor", check_args.divisor, "Divisor (E coefficients, {\"star\":..} or preset)");
  check->add_option("--twists", check_args.twists, "Values of n for injectivity, e.g. 1,2");
  check->add_option("--seed", check_args.seed, "Random seed");
  check->add_option("--count", check_args.count, "Number of random ideals");
  check->add_option("--cases", check_args.cases, "Cases per property");
  check->add_option("--dim", check_args.dim, "Dimension for sweeps");
  check->add_option("--window", check_args.window, "Initial cohomology window");
  check->add_option("--window-cap", check_args.window_cap, "Cohomology window cap");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Run a parameter family and write CSV");
  add_common(sweep);
  sweep->add_option("--family", sweep_args.family, "adjoint, pure-powers, duality or vanishing");
  sweep->add_option("--dim", sweep_args.dim, "Dimension (2 or 3)");
  sweep->add_option("--count", sweep_args.count, "Number of random inputs");
  sweep->add_option("--seed", sweep_args.seed, "Random seed");
  sweep->add_option("--max-exponent", sweep_args.max_exponent, "Largest exponent for the pure-powers family");
  sweep->add_option("--out", sweep_args.out, "CSV output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*basis) return run_basis(common);
    if (*adjoint) return run_adjoint(common);
    if (*prox) return run_prox(common);
    if (*princ) return run_principalize(common, max_depth);
    if (*cohom) return run_cohom(common, cohom_args);
    if (*check) return run_check(common, check_args);
    if (*sweep) return run_sweep(sweep_args);
  } catch (const npc::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const npc::ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    std::cerr << "invalid JSON: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}

// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "npc/harness.hpp"
#include "npc/monomial.hpp"
#include "npc/newton.hpp"
#include "npc/principalize.hpp"

using npc::MonomialIdeal;
using npc::parse_ideal;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

void note_failure(Outcome& out, const std::string& what) {
  if (out.ok) out.note = what;
  out.ok = false;
}

// Folds a batch of reports: every one must pass.
void require_all(Outcome& out, const std::vector<npc::CheckReport>& reports, std::size_t& passed) {
  for (const auto& r : reports) {
    if (r.passed()) {
      ++passed;
      continue;
    }
    std::ostringstream os;
    os << r.name << " [" << npc::to_string(r.verdict) << "]";
    for (const auto& [k, v] : r.inputs) os << " " << k << "=" << v;
    if (!r.witness.empty()) os << " witness: " << r.witness;
    else if (!r.detail.empty()) os << " " << r.detail;
    note_failure(out, os.str());
  }
}

npc::CohomOptions cohom_options() {
  npc::CohomOptions o;
  o.window_cap = npc::window_cap_from_env(64);
  return o;
}

Outcome cusp() {
  Outcome out;
  const auto r = npc::check_cusp_golden();
  if (!r.passed()) note_failure(out, r.witness.empty() ? r.detail : r.witness);
  else out.note = r.detail;
  return out;
}

Outcome adjoint_sweeps() {
  Outcome out;
  std::size_t p2 = 0, p3 = 0;
  require_all(out, npc::adjoint_sweep(2, 50, 7), p2);
  require_all(out, npc::adjoint_sweep(3, 20, 11), p3);
  if (p2 < 50 || p3 < 20) note_failure(out, "too few passing ideals");
  if (out.ok) out.note = std::to_string(p2) + " plane ideals (seed 7), " + std::to_string(p3) + " spatial ideals (seed 11)";
  return out;
}

Outcome non_finite_support() {
  Outcome out;
  auto res = npc::principalize(parse_ideal("x^2, y^2, z^3"));
  const auto* nfs = std::get_if<npc::NotFinitelySupported>(&res);
  if (!nfs) {
    note_failure(out, "principalize succeeded");
  } else if (nfs->depth() != 2 || nfs->free_coordinates.empty() || nfs->transform.is_unit()) {
    note_failure(out, "unexpected witness: " + nfs->describe());
  } else {
    out.note = nfs->describe();
  }
  return out;
}

Outcome pure_powers() {
  Outcome out;
  std::size_t passed = 0;
  std::vector<npc::CheckReport> reports;
  for (int d = 2; d <= 3; ++d)
    for (int a = 1; a <= 4; ++a) reports.push_back(npc::check_section4(std::vector<npc::Exponent>(d, a), -1, d + 2));
  require_all(out, reports, passed);

  const auto m = MonomialIdeal::maximal(3);
  const auto j2 = MonomialIdeal::pure_powers({2, 2, 2});
  if (!(npc::colon(j2, npc::power(m, 2)) == npc::power(m, 2) &&
        npc::sum(npc::adjoint_howald(npc::power(j2, 2)), j2) == npc::power(m, 2)))
    note_failure(out, "(x^2,y^2,z^2) s=1 fixture");
  const auto j3 = MonomialIdeal::pure_powers({3, 3, 3});
  if (!(npc::product(j3, npc::power(m, 6)) == npc::power(m, 9)))
    note_failure(out, "(x^3,y^3,z^3) t=3 fixture");
  if (npc::product(j3, npc::power(m, 3)).contains(npc::Monomial{2, 2, 2}) ||
      !npc::power(m, 6).contains(npc::Monomial{2, 2, 2}))
    note_failure(out, "(x^3,y^3,z^3) t=2 witness x^2*y^2*z^2");
  if (!(npc::product(j3, npc::adjoint_howald(j3)) == npc::intersect(npc::adjoint_howald(npc::power(j3, 2)), j3)))
    note_failure(out, "(x^3,y^3,z^3) J adj(J) = adj(J^2) and J");
  if (out.ok) out.note = std::to_string(passed) + " pure-power ideals, s in [-1, d+2], plus hand fixtures";
  return out;
}

// Star coordinates with r_i >= sum of r_j over the points j proximate to i.
bool in_proximity_cone(const npc::Constellation& c, const npc::IntegerVector& r) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    npc::Integer s = 0;
    for (std::size_t j = 0; j < c.size(); ++j)
      if (c.proximate(j, i)) s += r[j];
    if (r[i] < s) return false;
  }
  return true;
}

Outcome vanishing() {
  Outcome out;
  const auto opts = cohom_options();
  // Trees: the m^2 (x,y,z^2) fixture and random spatial ideals of depth 1..3.
  std::vector<npc::PrincipalizationTree> trees;
  const auto fixture = npc::product(npc::power(MonomialIdeal::maximal(3), 2), parse_ideal("x, y, z^2"));
  trees.push_back(std::get<npc::PrincipalizationTree>(npc::principalize(fixture)));
  npc::RandomIdeals gen(2026);
  std::size_t deep = 0;
  while (trees.size() < 6) {
    auto res = npc::principalize(gen.spatial(10, 3));
    auto& tree = std::get<npc::PrincipalizationTree>(res);
    const auto depth = npc::tree_depth(tree);
    if (depth < 1 || depth > 3) continue;
    deep += depth >= 2;
    trees.push_back(std::move(tree));
  }
  std::size_t divisors = 0, gr = 0, failed = 0, outside_cone = 0;
  double worst = 0;
  for (const auto& tree : trees) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<npc::CheckReport> reports;
    // the ideal's own divisor plus a random full one from E* coordinates
    const auto& c = tree.constellation();
    const auto star = gen.vector(c.size(), 0, 3);
    const std::vector<npc::DivisorE> sample{tree.valuations(), npc::from_star(c, npc::DivisorStar{star})};
    const std::vector<bool> in_cone{true, in_proximity_cone(c, star)};
    for (std::size_t k = 0; k < sample.size(); ++k) {
      std::size_t passed = 0;
      require_all(out, {npc::check_vanishing(tree, sample[k], {1, 2}, opts)}, passed);
      divisors += passed;
      if (!passed) ++failed, outside_cone += !in_cone[k];
    }
    std::size_t gr_passed = 0;
    require_all(out, {npc::check_gr_vanishing(tree, opts)}, gr_passed);
    gr += gr_passed;
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    worst = std::max(worst, secs);
    if (secs > 60) note_failure(out, "tree took " + std::to_string(secs) + " s");
  }
  if (divisors < 10) note_failure(out, "only " + std::to_string(divisors) + " full divisors verified");
  if (deep == 0) note_failure(out, "no tree of depth >= 2 drawn");
  if (failed) {
    std::ostringstream os;
    os << "; " << failed << " of " << divisors + failed << " sampled full divisors failed, " << outside_cone
       << " of them outside the proximity cone";
    out.note += os.str();
  }
  if (out.ok) {
    std::ostringstream os;
    os << divisors << " full divisors on " << trees.size() << " trees (" << deep
       << " of depth >= 2, seed 2026), n = 1, 2; GR on " << gr << " trees; slowest tree " << worst << " s";
    out.note = os.str();
  }
  return out;
}

Outcome duality() {
  Outcome out;
  const auto opts = cohom_options();
  std::vector<npc::CheckReport> reports;
  for (const char* text : {"x^2, y^3", "x^3, y^5", "x^4, x*y^2, y^5"}) reports.push_back(npc::check_duality(parse_ideal(text), opts));
  const auto m = MonomialIdeal::maximal(3);
  reports.push_back(npc::check_duality(npc::product(npc::power(m, 2), parse_ideal("x, y, z^2")), opts));
  reports.push_back(npc::check_duality(npc::power(m, 3), opts));
  reports.push_back(npc::check_duality(MonomialIdeal::pure_powers({2, 2, 2}), opts));
  std::size_t passed = 0;
  require_all(out, reports, passed);
  if (out.ok) out.note = std::to_string(passed) + " fixtures (3 plane, 3 spatial), certified windows";
  return out;
}

Outcome properties() {
  Outcome out;
  constexpr std::uint64_t seed = 20261018;
  constexpr std::size_t cases = 200;
  std::size_t passed = 0;
  require_all(out,
              {npc::property_proximity(seed, cases), npc::property_fullness(seed, cases),
               npc::property_basis_subadditivity(seed, cases), npc::property_closure(seed, cases),
               npc::property_factor_pullout(seed, cases), npc::property_product_basis(seed, cases),
               npc::property_discrepancy(seed, cases)},
              passed);
  if (out.ok) out.note = std::to_string(passed) + " properties x " + std::to_string(cases) + " cases, seed " + std::to_string(seed);
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"cusp golden values", cusp},
      {"adjoint theorem sweep", adjoint_sweeps},
      {"non-finite-support detection", non_finite_support},
      {"pure-power colon, length and threshold identities", pure_powers},
      {"vanishing and injectivity for full divisors", vanishing},
      {"duality colengths", duality},
      {"property suites", properties},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[k].second();
    } catch (const std::exception& e) {
      out.ok = false;
      out.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %zu %s: %s (%.2f s) %s\n", k + 1, out.ok ? "PASS" : "FAIL", criteria[k].first.c_str(), secs,
                out.note.c_str());
    failures += out.ok ? 0 : 1;
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}

#include "npc/harness.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "npc/fan.hpp"
#include "npc/newton.hpp"
#include "npc/toric.hpp"

namespace npc {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kSkipped: return "skipped";
    case Verdict::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

int exit_code(const std::vector<CheckReport>& reports) {
  bool any_pass = false;
  bool inconclusive = false;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::kFail) return 1;
    if (r.verdict == Verdict::kInconclusive) inconclusive = true;
    if (r.verdict == Verdict::kPass) any_pass = true;
  }
  return (inconclusive || !any_pass) ? 2 : 0;
}

std::optional<Monomial> difference_witness(const MonomialIdeal& a, const MonomialIdeal& b) {
  for (const auto& g : a.generators())
    if (!b.contains(g)) return g;
  for (const auto& g : b.generators())
    if (!a.contains(g)) return g;
  return std::nullopt;
}

namespace {

using Clock = std::chrono::steady_clock;

std::string join(const IntegerVector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::string join(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::string join(const std::vector<int>& v) {
  return join(std::vector<std::int64_t>(v.begin(), v.end()));
}

void fail(CheckReport& r, const std::string& witness) {
  if (r.verdict == Verdict::kFail) return;  // keep the first counterexample
  r.verdict = Verdict::kFail;
  r.witness = witness;
}

void skip(CheckReport& r, const std::string& why) {
  r.verdict = Verdict::kSkipped;
  r.detail = why;
}

// Record a mismatch between two ideals that should be equal.
bool expect_equal(CheckReport& r, const std::string& what, const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
  if (lhs == rhs) return true;
  const auto w = difference_witness(lhs, rhs);
  fail(r, what + ": " + lhs.to_string() + " != " + rhs.to_string() + "; monomial " +
              (w ? monomial_to_string(*w) + " " + join(*w) : std::string("?")) + " lies on one side only");
  return false;
}

bool expect_contains(CheckReport& r, const std::string& what, const MonomialIdeal& big, const MonomialIdeal& small) {
  if (big.contains(small)) return true;
  for (const auto& g : small.generators())
    if (!big.contains(g)) {
      fail(r, what + ": " + monomial_to_string(g) + " " + join(g) + " lies in " + small.to_string() + " but not in " +
                  big.to_string());
      break;
    }
  return false;
}

template <class Fn>
CheckReport guarded(CheckReport r, Fn&& body) {
  const auto start = Clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    fail(r, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

std::optional<PrincipalizationTree> tree_of(const std::vector<MonomialIdeal>& ideals, std::string* why = nullptr) {
  auto res = principalize(std::span<const MonomialIdeal>(ideals));
  if (auto* t = std::get_if<PrincipalizationTree>(&res)) return std::move(*t);
  if (why) *why = std::get<NotFinitelySupported>(res).describe();
  return std::nullopt;
}

// Inputs the Newton polyhedron oracle accepts.
bool oracle_ok(const MonomialIdeal& i) { return i.is_unit() || i.is_m_primary(); }

std::string weight_witness(const std::string& what, const Monomial& m) {
  return what + " at weight " + join(m);
}

}  // namespace

CheckReport check_cusp_golden() {
  const auto ideal = parse_ideal("x^2, y^3");
  return guarded(CheckReport{"cusp", {{"ideal", ideal.to_string()}}}, [&](CheckReport& r) {
    auto tree = tree_of({ideal});
    if (!tree) return fail(r, "(x^2, y^3) did not principalize");
    tree->verify();
    const auto& c = tree->constellation();
    auto ints = [](std::initializer_list<int> v) {
      IntegerVector out;
      for (int x : v) out.emplace_back(x);
      return out;
    };
    auto want = [&](const std::string& what, const IntegerVector& got, const IntegerVector& expected) {
      if (got != expected) fail(r, what + " = " + join(got) + ", expected " + join(expected));
    };
    if (c.size() != 3) return fail(r, "constellation has " + std::to_string(c.size()) + " points, expected 3");
    if (!(c.point(1).parent == std::optional<std::size_t>(0)) || c.point(1).prox != std::vector<std::size_t>{0} ||
        !(c.point(2).parent == std::optional<std::size_t>(1)) || c.point(2).prox != std::vector<std::size_t>{0, 1})
      fail(r, "constellation is not the chain with E3 proximate to E1 and E2");
    want("point basis", tree->basis().values(), ints({2, 1, 1}));
    const IntegerMatrix p{ints({1, -1, -1}), ints({0, 1, -1}), ints({0, 0, 1})};
    const IntegerMatrix p_inv{ints({1, 1, 2}), ints({0, 1, 1}), ints({0, 0, 1})};
    for (std::size_t i = 0; i < 3; ++i) {
      want("p row " + std::to_string(i + 1), c.proximity()[i], p[i]);
      want("p^-1 row " + std::to_string(i + 1), c.proximity_inverse()[i], p_inv[i]);
    }
    want("K_f", canonical_divisor(c).coeffs, ints({1, 2, 4}));
    want("valuations", tree->valuations().coeffs, ints({2, 3, 6}));
    const std::vector<Monomial> rays{{1, 1}, {2, 1}, {3, 2}};
    for (std::size_t i = 0; i < 3; ++i) {
      const auto& w = tree->fan().rays[tree->point_ray(i)].vector;
      if (w != rays[i]) fail(r, "ray of E" + std::to_string(i + 1) + " = " + join(w) + ", expected " + join(rays[i]));
      if (ray_valuation(ideal, w) != 2 * (i == 0) + 3 * (i == 1) + 6 * (i == 2))
        fail(r, "fan valuation at E" + std::to_string(i + 1) + " = " + std::to_string(ray_valuation(ideal, w)));
    }
    const auto xy = MonomialIdeal::maximal(2);
    expect_equal(r, "adjoint by the basis formula", ideal_from_basis(*tree, adjoint_basis(tree->basis(), 2)), xy);
    expect_equal(r, "adjoint by sections", adjoint_via_sections(*tree), xy);
    expect_equal(r, "adjoint by Howald", adjoint_howald(ideal), xy);
    want("adjoint point basis", adjoint_basis(tree->basis(), 2).values(), ints({1, 0, 0}));
    r.detail = "basis (2,1,1); K_f (1,2,4); valuations (2,3,6); adjoint (x, y) three ways";
  });
}

CheckReport check_adjoint_theorem(const MonomialIdeal& ideal) {
  return guarded(CheckReport{"adjoint", {{"ideal", ideal.to_string()}}}, [&](CheckReport& r) {
    const int d = ideal.dim();
    if (!ideal.is_m_primary()) return skip(r, "the Newton polyhedron adjoint needs an m-primary ideal");
    std::string why;
    auto tree = tree_of({ideal}, &why);
    if (!tree) return skip(r, why);
    tree->verify();

    const auto howald = adjoint_howald(ideal);
    const auto sections = adjoint_via_sections(*tree);
    const auto target_basis = adjoint_basis(tree->basis(), d);
    const auto formula = ideal_from_basis(*tree, target_basis);
    expect_equal(r, "(a) Howald vs sections", howald, sections);
    expect_equal(r, "(a) Howald vs basis formula", howald, formula);

    // (b) and (e): the adjoint principalizes on a tree shared with I.
    auto joint = tree_of({ideal, howald}, &why);
    if (!joint) return fail(r, "(e) adjoint not finitely supported: " + why);
    const auto expected = adjoint_basis(joint->basis(0), d);
    if (!(joint->basis(1) == expected))
      fail(r, "(b) adjoint point basis " + join(joint->basis(1).values()) + " != max(r+1-d,0) = " +
                  join(expected.values()) + " for r = " + join(joint->basis(0).values()));

    const auto order_law = std::max<Exponent>(ideal.order() + 1 - d, 0);
    if (howald.order() != order_law)
      fail(r, "(c) ord(adjoint) = " + std::to_string(howald.order()) + " but max(ord+1-d,0) = " +
                  std::to_string(order_law));
    expect_equal(r, "(d) adjoint not integrally closed", integral_closure(howald), howald);
    if (!howald.is_unit() && !is_finitely_supported(howald)) fail(r, "(e) adjoint not finitely supported");

    r.detail = "adjoint " + howald.to_string() + "; basis " + join(tree->basis().values()) + " -> " +
               join(target_basis.values());
  });
}

CheckReport check_transform_commutes(const MonomialIdeal& ideal) {
  return guarded(CheckReport{"transform", {{"ideal", ideal.to_string()}}}, [&](CheckReport& r) {
    if (!ideal.is_m_primary()) return skip(r, "the Newton polyhedron adjoint needs an m-primary ideal");
    const auto adj = adjoint_howald(ideal);
    std::string why;
    auto joint = tree_of({ideal, adj}, &why);
    if (!joint) return skip(r, why);
    std::size_t exact = 0;
    const std::size_t points = joint->constellation().size();
    for (std::size_t i = 1; i < points; ++i) {
      const auto& chart = joint->charts()[i];
      const auto lhs = adjoint_howald(chart.transforms[0]);
      const auto& rhs = chart.transforms[1];
      if (lhs == rhs) {
        ++exact;
        continue;
      }
      if (!expect_equal(r, "point E" + std::to_string(i + 1) + " chart " + join(chart.path) +
                               ": adjoint of transform vs transform of adjoint (up to closure)",
                        integral_closure(lhs), integral_closure(rhs)))
        return;
    }
    r.cases = points > 0 ? points - 1 : 0;
    r.detail = std::to_string(r.cases) + " non-root points; exact equality at " + std::to_string(exact);
  });
}

CheckReport check_prop_3_3(const MonomialIdeal& i, const MonomialIdeal& j) {
  return guarded(CheckReport{"adjoint-factor", {{"I", i.to_string()}, {"J", j.to_string()}}}, [&](CheckReport& r) {
    if (!oracle_ok(i) || !oracle_ok(j)) return skip(r, "I and J must be m-primary");
    std::string why;
    auto joint = tree_of({i, j}, &why);
    if (!joint) return skip(r, why);
    const int d = i.dim();
    for (std::size_t p = 0; p < joint->constellation().size(); ++p)
      if (joint->basis(1)[p] < (d - 1) * joint->basis(0)[p])
        return skip(r, "precondition ord(J^b) >= (d-1) ord(I^b) fails at E" + std::to_string(p + 1));
    expect_equal(r, "adj(IJ) = I adj(J)", adjoint_howald(product(i, j)), product(i, adjoint_howald(j)));
  });
}

CheckReport check_pullout(const MonomialIdeal& j) {
  return guarded(CheckReport{"pullout", {{"J", j.to_string()}}}, [&](CheckReport& r) {
    const int d = j.dim();
    if (!oracle_ok(j)) return skip(r, "J must be m-primary");
    if (j.order() < d - 1) return skip(r, "precondition ord(J) >= d-1 fails");
    if (!is_finitely_supported(j)) return skip(r, "J is not finitely supported");
    const auto m = MonomialIdeal::maximal(d);
    expect_equal(r, "adj(mJ) = m adj(J)", adjoint_howald(product(m, j)), product(m, adjoint_howald(j)));
  });
}

CheckReport check_subadditivity(const MonomialIdeal& i, const MonomialIdeal& j) {
  return guarded(CheckReport{"subadditivity", {{"I", i.to_string()}, {"J", j.to_string()}}}, [&](CheckReport& r) {
    if (!oracle_ok(i) || !oracle_ok(j)) return skip(r, "I and J must be m-primary");
    std::string why;
    if (!tree_of({i, j}, &why)) return skip(r, why);
    const auto lhs = integral_closure(product(adjoint_howald(i), adjoint_howald(j)));
    expect_contains(r, "closure(adj(I) adj(J)) contains adj(IJ)", lhs, adjoint_howald(product(i, j)));
  });
}

CheckReport check_product_cor(const MonomialIdeal& i, const MonomialIdeal& j) {
  return guarded(CheckReport{"product", {{"I", i.to_string()}, {"J", j.to_string()}}}, [&](CheckReport& r) {
    if (!oracle_ok(i) || !oracle_ok(j)) return skip(r, "I and J must be m-primary");
    std::string why;
    auto joint = tree_of({i, j}, &why);
    if (!joint) return skip(r, why);
    const int d = i.dim();
    std::optional<std::size_t> low_point;
    for (std::size_t p = 0; p < joint->constellation().size(); ++p)
      if (joint->basis(0)[p] > 0 && joint->basis(1)[p] < d - 1) {
        low_point = p;
        break;
      }
    const auto adj_ij = adjoint_howald(product(i, j));
    const auto rhs = integral_closure(product(i, adjoint_howald(j)));
    if (!expect_contains(r, "adj(IJ) contains closure(I adj(J))", adj_ij, rhs)) return;
    const bool equal = adj_ij == rhs;
    if (!low_point && !equal)
      expect_equal(r, "ord(J^b) >= d-1 at every base point of I, yet", adj_ij, rhs);
    if (low_point && equal)
      fail(r, "equality holds although ord(J^b) = " + joint->basis(1)[*low_point].str() + " < d-1 at base point E" +
                  std::to_string(*low_point + 1) + "; bases I " + join(joint->basis(0).values()) + ", J " +
                  join(joint->basis(1).values()));
    r.detail = equal ? "equality (order condition holds)"
                     : "strict inclusion (order condition fails at E" + std::to_string(*low_point + 1) + ")";
  });
}

CheckReport check_section4(const std::vector<Exponent>& exponents, int s_min, int s_max) {
  const auto j = MonomialIdeal::pure_powers(exponents);
  CheckReport base{"pure-powers", {{"J", j.to_string()}, {"s", "[" + std::to_string(s_min) + "," + std::to_string(s_max) + "]"}}};
  return guarded(std::move(base), [&](CheckReport& r) {
    const int d = j.dim();
    if (!j.is_m_primary()) return skip(r, "J must be m-primary");
    if (!is_finitely_supported(j)) return skip(r, "J is not finitely supported");
    std::map<int, MonomialIdeal> cl_cache, adj_cache;
    const auto unit = MonomialIdeal::unit(d);
    auto cl = [&](int t) -> const MonomialIdeal& {
      if (t <= 0) return unit;
      auto it = cl_cache.find(t);
      if (it == cl_cache.end()) it = cl_cache.emplace(t, integral_closure(power(j, t))).first;
      return it->second;
    };
    auto adj = [&](int t) -> const MonomialIdeal& {
      if (t <= 0) return unit;
      auto it = adj_cache.find(t);
      if (it == adj_cache.end()) it = adj_cache.emplace(t, adjoint_howald(power(j, t))).first;
      return it->second;
    };
    std::size_t identities = 0;
    auto eq = [&](const std::string& what, const MonomialIdeal& a, const MonomialIdeal& b) {
      ++identities;
      return expect_equal(r, what, a, b);
    };
    auto same_length = [&](const std::string& what, std::int64_t a, std::int64_t b) {
      ++identities;
      if (a != b) fail(r, what + ": " + std::to_string(a) + " != " + std::to_string(b));
    };

    for (int s = s_min; s <= s_max; ++s) {
      const std::string at = " at s=" + std::to_string(s);
      const auto j_cl = product(j, cl(s - 1));
      const auto j_adj = product(j, adj(s - 1));
      eq("Prop 4.2(iii)" + at, colon(j_cl, cl(s)), sum(adj(d - s), j));
      eq("Prop 4.2(iv)" + at, colon(j_adj, adj(s)), sum(cl(d - s), j));
      // J cl(J^{s-1}) is inside cl(J^s), so the quotient length is a colength difference.
      same_length("Prop 4.2(i) length" + at, colength(j_cl) - colength(cl(s)), colength(sum(adj(d - s), j)));
      same_length("Prop 4.2(ii) length" + at, colength(j_adj) - colength(adj(s)), colength(sum(cl(d - s), j)));

      const bool c1 = product(j, adj(s - 1)) == intersect(adj(s), j);
      const bool c2 = colon(product(j, cl(d - s - 1)), cl(d - s)) == colon(j, cl(d - s));
      const bool c3 = product(j, cl(d - s - 1)) == intersect(cl(d - s), j);
      const bool c4 = colon(j_adj, adj(s)) == colon(j, adj(s));
      ++identities;
      if (!(c1 == c2 && c2 == c3 && c3 == c4))
        fail(r, "Cor 4.3 conditions disagree" + at + ": (i)=" + std::to_string(c1) + " (ii)=" + std::to_string(c2) +
                    " (iii)=" + std::to_string(c3) + " (iv)=" + std::to_string(c4));
    }
    eq("Cor 4.4(i)", product(j, adj(d - 2)), intersect(adj(d - 1), j));
    eq("Cor 4.4(ii)", product(j, cl(d - 2)), intersect(cl(d - 1), j));
    eq("Cor 4.4(iii)", product(j, adj(d - 3)), intersect(adj(d - 2), j));
    eq("J : closure(J) = adj(J^{d-1}) + J", colon(j, cl(1)), sum(adj(d - 1), j));

    const Exponent ord = j.order();
    for (int t = 1; t <= d + 2; ++t) {
      ++identities;
      const bool holds = product(j, cl(t - 1)) == cl(t);
      const bool predicted = t * ord > d * (ord - 1);
      if (holds != predicted) {
        const auto w = difference_witness(product(j, cl(t - 1)), cl(t));
        fail(r, "threshold law at t=" + std::to_string(t) + ": J closure(J^{t-1}) = closure(J^t) is " +
                    (holds ? "true" : "false") + " but t > d(1-1/ord) is " + (predicted ? "true" : "false") +
                    (w ? "; monomial " + join(*w) : std::string()));
      }
    }
    r.cases = identities;
    r.detail = std::to_string(identities) + " identities";
  });
}

CheckReport check_vanishing(const PrincipalizationTree& tree, const DivisorE& divisor, const std::vector<int>& twists,
                            const CohomOptions& options) {
  CheckReport base{"vanishing", {{"ideals", tree.ideals().front().to_string()}, {"divisor", join(divisor.coeffs)}}};
  return guarded(std::move(base), [&](CheckReport& r) {
    const int d = tree.dim();
    if (!is_full(tree.constellation(), divisor)) return skip(r, "divisor is not full");
    const auto ray = ray_divisor(tree, divisor);
    auto opts = options;
    opts.max_degree = d - 1;
    const auto rep = cech_dims(tree.fan(), ray, opts);
    if (!rep.certified) {
      r.verdict = Verdict::kInconclusive;
      r.detail = "window inconclusive at N=" + std::to_string(rep.window);
      return;
    }
    for (int i = 1; i < d - 1; ++i)
      if (rep.dim(i) != 0)
        return fail(r, weight_witness("H^" + std::to_string(i) + " != 0", rep.support.at(i).front()));
    std::ostringstream detail;
    if (d > 2) detail << "H^1..H^" << (d - 2) << " = 0; ";
    detail << "certified window N=" << rep.window << "; dim H^" << (d - 1) << " = " << rep.dim(d - 1);
    const auto fiber = ray_divisor(tree, fiber_divisor(tree.constellation()));
    for (int n : twists) {
      const auto inj = injectivity_check(tree.fan(), ray, fiber, n, options.window, options.window_cap);
      if (!inj.injective) return fail(r, weight_witness("kernel for n=" + std::to_string(n), *inj.witness));
      if (!inj.certified) {
        r.verdict = Verdict::kInconclusive;
        r.detail = "injectivity window inconclusive for n=" + std::to_string(n);
        return;
      }
      detail << "; injective n=" << n << " (" << inj.weights_checked << " weights, N=" << inj.window << ")";
    }
    r.detail = detail.str();
  });
}

CheckReport check_gr_vanishing(const PrincipalizationTree& tree, const CohomOptions& options) {
  return guarded(CheckReport{"gr", {{"ideals", tree.ideals().front().to_string()}}}, [&](CheckReport& r) {
    const int d = tree.dim();
    auto opts = options;
    opts.max_degree = d;
    const RayDivisor zero{std::vector<std::int64_t>(tree.fan().rays.size(), 0)};
    const auto rep = cech_dims(tree.fan(), zero, opts);
    for (int i = 1; i <= d; ++i)
      if (rep.dim(i) != 0) return fail(r, weight_witness("H^" + std::to_string(i) + "(O_X) != 0", rep.support.at(i).front()));
    if (!rep.certified) {
      r.verdict = Verdict::kInconclusive;
      r.detail = "window inconclusive";
      return;
    }
    r.detail = "H^i(O_X) = 0 for i = 1.." + std::to_string(d) + " on certified window N=" + std::to_string(rep.window);
  });
}

CheckReport check_duality(const MonomialIdeal& ideal, const CohomOptions& options) {
  return guarded(CheckReport{"duality", {{"ideal", ideal.to_string()}}}, [&](CheckReport& r) {
    const int d = ideal.dim();
    if (!ideal.is_m_primary()) return skip(r, "ideal must be m-primary");
    std::string why;
    auto tree = tree_of({ideal}, &why);
    if (!tree) return skip(r, why);
    auto opts = options;
    opts.max_degree = d - 1;
    const auto d_i = ideal_divisor(*tree);
    const auto k = ray_divisor(*tree, canonical_divisor(tree->constellation()));
    const auto rep_adj = cech_dims(tree->fan(), d_i, opts);
    const auto rep_cl = cech_dims(tree->fan(), d_i + k, opts);
    if (!rep_adj.certified || !rep_cl.certified) {
      r.verdict = Verdict::kInconclusive;
      r.detail = "window inconclusive";
      return;
    }
    const auto want_adj = static_cast<std::size_t>(colength(adjoint_howald(ideal)));
    const auto want_cl = static_cast<std::size_t>(colength(integral_closure(ideal)));
    const auto top = std::to_string(d - 1);
    auto first_weight = [&](const CohomReport& rep) {
      auto it = rep.support.find(d - 1);
      return it == rep.support.end() || it->second.empty() ? std::string("(none)") : join(it->second.front());
    };
    if (rep_adj.dim(d - 1) != want_adj)
      fail(r, "dim H^" + top + "(O(D_I)) = " + std::to_string(rep_adj.dim(d - 1)) + " but colength(adj) = " +
                  std::to_string(want_adj) + "; first weight " + first_weight(rep_adj));
    if (rep_cl.dim(d - 1) != want_cl)
      fail(r, "dim H^" + top + "(O(D_I+K_f)) = " + std::to_string(rep_cl.dim(d - 1)) + " but colength(closure) = " +
                  std::to_string(want_cl) + "; first weight " + first_weight(rep_cl));
    r.detail = "H^" + top + "(O(D_I)) = " + std::to_string(rep_adj.dim(d - 1)) + ", H^" + top +
               "(O(D_I+K_f)) = " + std::to_string(rep_cl.dim(d - 1)) + " (windows " + std::to_string(rep_adj.window) +
               ", " + std::to_string(rep_cl.window) + ")";
  });
}

CheckReport check_nonfull_control(const PrincipalizationTree& tree, const DivisorE& divisor,
                                  const CohomOptions& options) {
  CheckReport base{"nonfull", {{"ideals", tree.ideals().front().to_string()}, {"divisor", join(divisor.coeffs)}}};
  return guarded(std::move(base), [&](CheckReport& r) {
    if (is_full(tree.constellation(), divisor)) return skip(r, "divisor is full");
    auto opts = options;
    opts.max_degree = 1;
    const auto rep = cech_dims(tree.fan(), ray_divisor(tree, divisor), opts);
    if (rep.dim(1) == 0)
      return fail(r, "H^1 vanishes on window N=" + std::to_string(rep.window) + " for non-full divisor " +
                         join(divisor.coeffs));
    r.detail = "dim H^1 >= " + std::to_string(rep.dim(1)) + " (window N=" + std::to_string(rep.window) +
               (rep.certified ? ", certified" : "") + "); first weight " + join(rep.support.at(1).front());
  });
}

std::optional<DivisorE> find_nonfull_control(const PrincipalizationTree& tree, int lo, int hi,
                                             const CohomOptions& options) {
  const std::size_t r = tree.constellation().size();
  std::vector<std::int64_t> n(r, lo);
  auto opts = options;
  opts.max_degree = 1;
  while (true) {
    DivisorE d;
    for (auto v : n) d.coeffs.emplace_back(v);
    if (!is_full(tree.constellation(), d) && cech_dims(tree.fan(), ray_divisor(tree, d), opts).dim(1) > 0) return d;
    std::size_t k = r;
    while (k > 0 && n[k - 1] == hi) n[--k] = lo;
    if (k == 0) return std::nullopt;
    ++n[k - 1];
  }
}

// --- random inputs -----------------------------------------------------------

int RandomIdeals::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

IntegerVector RandomIdeals::vector(std::size_t length, int lo, int hi) {
  IntegerVector v;
  for (std::size_t i = 0; i < length; ++i) v.emplace_back(uniform(lo, hi));
  return v;
}

MonomialIdeal RandomIdeals::plane(int max_exponent) {
  std::vector<Monomial> gens{{uniform(1, max_exponent), 0}, {0, uniform(1, max_exponent)}};
  const int extra = uniform(0, 3);
  for (int k = 0; k < extra; ++k) {
    Monomial g{uniform(0, max_exponent), uniform(0, max_exponent)};
    if (total_degree(g) > 0) gens.push_back(std::move(g));
  }
  return MonomialIdeal(2, std::move(gens));
}

MonomialIdeal RandomIdeals::spatial(std::size_t max_points, std::size_t max_depth) {
  const auto m = MonomialIdeal::maximal(3);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    int a = uniform(0, 2);
    const int factors = uniform(0, 4) == 0 ? 0 : uniform(1, 3);
    if (a == 0 && factors == 0) a = 1;
    auto ideal = power(m, a);
    for (int f = 0; f < factors; ++f) {
      std::vector<int> perm{0, 1, 2};
      std::shuffle(perm.begin(), perm.end(), rng_);
      Monomial u(3, 0), v(3, 0), w(3, 0);
      u[perm[0]] = 1;
      v[perm[1]] = uniform(0, 3) == 0 ? 2 : 1;
      w[perm[2]] = uniform(1, 4);
      ideal = product(ideal, MonomialIdeal(3, {u, v, w}));
    }
    auto res = principalize(ideal);
    auto* tree = std::get_if<PrincipalizationTree>(&res);
    if (!tree || tree->constellation().size() > max_points || tree_depth(*tree) > max_depth) continue;
    return ideal;
  }
  throw std::logic_error("RandomIdeals::spatial: no finitely supported ideal within the limits");
}

Constellation RandomIdeals::constellation(int dim, std::size_t max_points) {
  const auto r = static_cast<std::size_t>(uniform(1, static_cast<int>(max_points)));
  std::vector<Constellation::Point> pts(1);
  for (std::size_t i = 1; i < r; ++i) {
    Constellation::Point p;
    p.parent = static_cast<std::size_t>(uniform(0, static_cast<int>(i) - 1));
    p.prox.push_back(*p.parent);
    for (auto a = pts[*p.parent].parent; a; a = pts[*a].parent)
      if (static_cast<int>(p.prox.size()) < dim && uniform(0, 2) == 0) p.prox.push_back(*a);
    std::sort(p.prox.begin(), p.prox.end());
    pts.push_back(std::move(p));
  }
  return Constellation(dim, std::move(pts));
}

std::size_t tree_depth(const PrincipalizationTree& tree) {
  std::size_t depth = 0;
  for (std::size_t i = 0; i < tree.constellation().size(); ++i)
    depth = std::max(depth, tree.constellation().depth(i));
  return depth;
}

// --- property suites -----------------------------------------------------------

namespace {

CheckReport property_report(std::string name, std::uint64_t seed, std::size_t cases) {
  CheckReport r{std::move(name), {{"seed", std::to_string(seed)}, {"cases", std::to_string(cases)}}};
  r.seed = seed;
  r.cases = cases;
  return r;
}

std::string case_tag(std::size_t c) { return "case " + std::to_string(c) + ": "; }

bool leq(const PointBasis& a, const PointBasis& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

MonomialIdeal random_ideal(RandomIdeals& gen, int d) {
  return d == 2 ? gen.plane(6) : gen.spatial(8, 2);
}

}  // namespace

CheckReport property_proximity(std::uint64_t seed, std::size_t cases) {
  return guarded(property_report("prop-proximity", seed, cases), [&](CheckReport& r) {
    RandomIdeals gen(seed);
    for (std::size_t c = 0; c < cases && r.verdict != Verdict::kFail; ++c) {
      const int d = gen.uniform(2, 4);
      const auto con = gen.constellation(d, 9);
      const auto [p, inv] = proximity_matrix(con);
      const std::size_t n = con.size();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          Integer dot = 0;
          for (std::size_t k = 0; k < n; ++k) dot += p[i][k] * inv[k][j];
          if (dot != (i == j ? 1 : 0)) return fail(r, case_tag(c) + "p p^-1 != I at entry " + join(std::vector<int>{int(i), int(j)}));
          if (inv[i][j] < 0) return fail(r, case_tag(c) + "p^-1 has a negative entry");
          if (i > j && p[i][j] != 0) return fail(r, case_tag(c) + "p is not upper triangular");
        }
      const DivisorE v{gen.vector(n, -20, 20)};
      if (!(from_star(con, to_star(con, v)) == v)) return fail(r, case_tag(c) + "from_star(to_star(n)) != n for n = " + join(v.coeffs));
      const DivisorStar m{gen.vector(n, -20, 20)};
      if (!(to_star(con, from_star(con, m)) == m)) return fail(r, case_tag(c) + "to_star(from_star(m)) != m for m = " + join(m.coords));
      const DivisorE w{gen.vector(n, -3, 10)};
      if (is_full(con, w) != is_full_by_definition(con, w))
        return fail(r, case_tag(c) + "star-coordinate fullness disagrees with the definition at " + join(w.coeffs));
    }
  });
}

CheckReport property_fullness(std::uint64_t seed, std::size_t cases) {
  return guarded(property_report("prop-fullness", seed, cases), [&](CheckReport& r) {
    RandomIdeals gen(seed);
    auto random_full = [&](const Constellation& con) {
      // Half the time a literal-definition rejection sample, otherwise a nonnegative E* combination.
      if (gen.uniform(0, 1) == 0)
        for (int attempt = 0; attempt < 50; ++attempt) {
          DivisorE d{gen.vector(con.size(), 0, 12)};
          if (is_full_by_definition(con, d)) return d;
        }
      return from_star(con, DivisorStar{gen.vector(con.size(), 0, 4)});
    };
    for (std::size_t c = 0; c < cases; ++c) {
      const auto con = gen.constellation(gen.uniform(2, 4), 8);
      const auto a = random_full(con);
      const auto b = random_full(con);
      if (!is_full_by_definition(con, a + b))
        return fail(r, case_tag(c) + "sum of full divisors " + join(a.coeffs) + " + " + join(b.coeffs) + " is not full");
      const BigRational scale(gen.uniform(0, 15), gen.uniform(1, 7));
      const auto f = floor_scale(a, scale);
      if (!is_full_by_definition(con, f))
        return fail(r, case_tag(c) + "floor(" + scale.str() + " * " + join(a.coeffs) + ") = " + join(f.coeffs) + " is not full");
      const PointBasis basis(gen.vector(con.size(), 0, 6));
      if (!is_full_by_definition(con, divisor_of_basis(con, basis)))
        return fail(r, case_tag(c) + "divisor of point basis " + join(basis.values()) + " is not full");
    }
  });
}

CheckReport property_basis_subadditivity(std::uint64_t seed, std::size_t cases) {
  return guarded(property_report("prop-basis-subadditivity", seed, cases), [&](CheckReport& r) {
    RandomIdeals gen(seed);
    for (std::size_t c = 0; c < cases; ++c) {
      const int d = gen.uniform(2, 5);
      const std::size_t n = static_cast<std::size_t>(gen.uniform(1, 8));
      const PointBasis a(gen.vector(n, 0, 12));
      const PointBasis b(gen.vector(n, 0, 12));
      const auto sum_ab = product_basis(a, b);
      const auto lhs = product_basis(adjoint_basis(a, d), adjoint_basis(b, d));
      const auto rhs = adjoint_basis(sum_ab, d);
      const std::string tag = case_tag(c) + "r=" + join(a.values()) + " s=" + join(b.values()) + " d=" + std::to_string(d) + ": ";
      if (!leq(lhs, rhs)) return fail(r, tag + "adj(r)+adj(s) exceeds adj(r+s)");
      if (!leq(adjoint_basis(a, d), a)) return fail(r, tag + "adj(r) exceeds r");
      if (!leq(adjoint_basis(a, d), rhs)) return fail(r, tag + "adjoint basis not monotone");
      const Integer root = a[0] + 1 - d;
      if (adjoint_basis(a, d)[0] != (root > 0 ? root : Integer(0))) return fail(r, tag + "root entry law");
    }
  });
}

CheckReport property_closure(std::uint64_t seed, std::size_t cases) {
  return guarded(property_report("prop-closure", seed, cases), [&](CheckReport& r) {
    RandomIdeals gen(seed);
    for (std::size_t c = 0; c < cases; ++c) {
      const int d = c % 2 == 0 ? 2 : 3;
      const auto i = random_ideal(gen, d);
      const auto j = random_ideal(gen, d);
      const auto tag = case_tag(c) + "I=" + i.to_string() + ": ";
      const auto ci = integral_closure(i);
      const auto cj = integral_closure(j);
      if (!ci.contains(i)) return fail(r, tag + "I not inside its closure");
      if (!(integral_closure(ci) == ci)) return fail(r, tag + "closure not idempotent");
      if (ci.order() != i.order()) return fail(r, tag + "order changes under closure");
      if (colength(ci) > colength(i)) return fail(r, tag + "colength not antitone");
      if (!integral_closure(product(i, j)).contains(product(ci, cj)))
        return fail(r, tag + "closure(I) closure(J) not inside closure(IJ) for J=" + j.to_string());
      // Membership agrees with the Newton polyhedron on the generator box.
      const auto box = i.generator_box();
      Monomial v(d, 0);
      while (true) {
        if (ci.contains(v) != np_member(v, i)) return fail(r, tag + "closure membership vs NP at " + join(v));
        int k = d - 1;
        while (k >= 0 && v[k] == box[k]) v[k--] = 0;
        if (k < 0) break;
        ++v[k];
      }
      // Point bases on one shared tree decide closures.
      auto joint = tree_of({i, ci, j});
      if (!joint) continue;
      if (!(joint->basis(0) == joint->basis(1))) return fail(r, tag + "I and its closure have different point bases");
      if (leq(joint->basis(0), joint->basis(2)) && !ci.contains(cj))
        return fail(r, tag + "B(I) <= B(J) but closure(I) does not contain closure(J) for J=" + j.to_string());
      if ((joint->basis(0) == joint->basis(2)) != (ci == cj))
        return fail(r, tag + "equal point bases do not match equal closures for J=" + j.to_string());
    }
  });
}

CheckReport property_factor_pullout(std::uint64_t seed, std::size_t cases) {
  return guarded(property_report("prop-factor-pullout", seed, cases), [&](CheckReport& r) {
    RandomIdeals gen(seed);
    for (std::size_t c = 0; c < cases; ++c) {
      const int d = c % 3 == 2 ? 3 : 2;
      // J = I^{d-1} K makes ord(J^b) >= (d-1) ord(I^b) hold at every point.
      const auto i = d == 2 ? gen.plane(4) : gen.spatial(6, 1);
      const auto k = d == 2 ? gen.plane(4) : MonomialIdeal::maximal(3);
      const auto j = product(power(i, d - 1), k);
      auto rep = check_prop_3_3(i, j);
      if (rep.verdict != Verdict::kPass)
        return fail(r, case_tag(c) + "Prop 3.3 " + to_string(rep.verdict) + " for I=" + i.to_string() + " J=" +
                           j.to_string() + ": " + rep.witness + rep.detail);
      auto jp = random_ideal(gen, d);
      if (jp.order() < d - 1) jp = product(jp, MonomialIdeal::maximal(d));
      rep = check_pullout(jp);
      if (rep.verdict != Verdict::kPass)
        return fail(r, case_tag(c) + "pullout " + to_string(rep.verdict) + " for J=" + jp.to_string() + ": " +
                           rep.witness + rep.detail);
    }
  });
}

CheckReport property_product_basis(std::uint64_t seed, std::size_t cases) {
  return guarded(property_report("prop-product-basis", seed, cases), [&](CheckReport& r) {
    RandomIdeals gen(seed);
    for (std::size_t c = 0; c < cases; ++c) {
      const int d = c % 2 == 0 ? 2 : 3;
      const auto i = random_ideal(gen, d);
      const auto j = random_ideal(gen, d);
      auto joint = tree_of({i, j, product(i, j)});
      if (!joint) return fail(r, case_tag(c) + "product of finitely supported ideals failed to principalize");
      if (!(joint->basis(2) == product_basis(joint->basis(0), joint->basis(1))))
        return fail(r, case_tag(c) + "B(IJ) = " + join(joint->basis(2).values()) + " != B(I)+B(J) for I=" +
                           i.to_string() + " J=" + j.to_string());
    }
  });
}

CheckReport property_discrepancy(std::uint64_t seed, std::size_t cases) {
  return guarded(property_report("prop-discrepancy", seed, cases), [&](CheckReport& r) {
    RandomIdeals gen(seed);
    for (std::size_t c = 0; c < cases; ++c) {
      const int d = c % 2 == 0 ? 2 : 3;
      const auto i = d == 2 ? gen.plane(8) : gen.spatial(16, 3);
      auto tree = tree_of({i});
      if (!tree) return fail(r, case_tag(c) + "generator produced an ideal that does not principalize");
      tree->verify();
      if (!discrepancy_bridge_holds(*tree))
        return fail(r, case_tag(c) + "|v|-1 differs from the K_f coefficient for I=" + i.to_string());
      if (!is_full(tree->constellation(), tree->valuations()))
        return fail(r, case_tag(c) + "valuation divisor not full for I=" + i.to_string());
    }
  });
}

std::vector<CheckReport> adjoint_sweep(int dim, std::size_t count, std::uint64_t seed) {
  if (dim != 2 && dim != 3) throw std::invalid_argument("adjoint_sweep: dimension must be 2 or 3");
  RandomIdeals gen(seed);
  std::set<std::string> seen;
  std::vector<CheckReport> out;
  for (int attempt = 0; out.size() < count && attempt < 100000; ++attempt) {
    const auto ideal = dim == 2 ? gen.plane(8) : gen.spatial(16, 3);
    if (!seen.insert(ideal.to_string()).second) continue;
    auto rep = check_adjoint_theorem(ideal);
    rep.seed = seed;
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace npc

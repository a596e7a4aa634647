#include "npc/principalize.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace npc {

PrincipalizationTree::PrincipalizationTree(Constellation constellation, std::vector<MonomialIdeal> ideals,
                                           std::vector<Monomial> root_factors, std::vector<PointBasis> bases,
                                           Fan fan, std::vector<std::size_t> point_rays,
                                           std::vector<ChartRecord> charts)
    : constellation_(std::move(constellation)),
      ideals_(std::move(ideals)),
      root_factors_(std::move(root_factors)),
      bases_(std::move(bases)),
      fan_(std::move(fan)),
      point_rays_(std::move(point_rays)),
      charts_(std::move(charts)) {
  if (ideals_.size() != bases_.size() || ideals_.size() != root_factors_.size())
    throw std::invalid_argument("principalization tree: one basis and root factor per ideal");
  for (const auto& b : bases_)
    if (b.size() != constellation_.size()) throw std::invalid_argument("principalization tree: basis length");
  if (point_rays_.size() != constellation_.size() || charts_.size() != constellation_.size())
    throw std::invalid_argument("principalization tree: per-point data length");
}

DivisorE PrincipalizationTree::valuations(std::size_t ideal) const {
  return divisor_of_basis(constellation_, bases_.at(ideal));
}

void PrincipalizationTree::verify() const {
  fan_.validate();
  for (std::size_t k = 0; k < ideals_.size(); ++k) {
    const auto normalized = divide(ideals_[k], root_factors_[k]);
    const auto v = valuations(k);
    for (std::size_t i = 0; i < constellation_.size(); ++i) {
      const auto& w = fan_.rays.at(point_rays_[i]).vector;
      if (Integer(ray_valuation(normalized, w)) != v.coeffs[i]) {
        std::ostringstream os;
        os << "principalization: fan valuation of " << normalized.to_string() << " at E" << (i + 1)
           << " disagrees with the point-basis valuation " << v.coeffs[i];
        throw std::logic_error(os.str());
      }
    }
  }
}

std::string NotFinitelySupported::describe() const {
  std::ostringstream os;
  const int d = transform.dim();
  os << "not finitely supported: ideal #" << (ideal_index + 1) << " has transform " << transform.to_string()
     << " in chart path [";
  for (std::size_t i = 0; i < chart_path.size(); ++i)
    os << (i ? "," : "") << variable_name(d, chart_path[i]);
  os << "] (depth " << depth() << "), vanishing along the coordinate subspace spanned by {";
  for (std::size_t i = 0; i < free_coordinates.size(); ++i)
    os << (i ? "," : "") << variable_name(d, free_coordinates[i]);
  os << "}";
  return os.str();
}

Monomial chart_substitute(const Monomial& u, int i) {
  Monomial out(u);
  out[i] = total_degree(u);
  return out;
}

MonomialIdeal chart_transform(const MonomialIdeal& ideal, int i) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) gens.push_back(chart_substitute(g, i));
  MonomialIdeal substituted(ideal.dim(), std::move(gens));
  return divide(substituted, substituted.gcd());
}

namespace {

// Coordinates F such that the subspace {y_j = 0, j not in F} lies in the zero
// set, grown greedily from the first variable without a pure power.
std::vector<int> free_coordinates(const MonomialIdeal& t) {
  const int d = t.dim();
  auto supported_in = [&](const std::vector<int>& f) {
    for (const auto& g : t.generators()) {
      bool inside = true;
      for (int k = 0; k < d; ++k)
        if (g[k] != 0 && std::find(f.begin(), f.end(), k) == f.end()) inside = false;
      if (inside) return true;
    }
    return false;
  };
  std::vector<int> f;
  for (int k = 0; k < d; ++k) {
    f.push_back(k);
    if (supported_in(f)) f.pop_back();
  }
  return f;
}

class Builder {
 public:
  Builder(int dim, std::size_t count, int max_depth) : d_(dim), bases_(count), max_depth_(max_depth) {
    for (int k = 0; k < d_; ++k) {
      Monomial e(d_, 0);
      e[k] = 1;
      rays_.push_back(Ray{std::move(e), Ray::Kind::kAxis, static_cast<std::size_t>(k)});
    }
  }

  // Returns false when a non-finitely-supported transform is found.
  bool visit(ChartRecord chart, std::optional<std::size_t> parent, int depth) {
    const std::size_t id = points_.size();
    Constellation::Point pt;
    pt.parent = parent;
    for (auto rid : chart.coordinate_rays)
      if (rays_[rid].kind == Ray::Kind::kExceptional) pt.prox.push_back(rays_[rid].index);
    std::sort(pt.prox.begin(), pt.prox.end());
    points_.push_back(std::move(pt));
    for (std::size_t k = 0; k < bases_.size(); ++k) bases_[k].push_back(Integer(chart.transforms[k].order()));

    Monomial w(d_, 0);
    for (auto rid : chart.coordinate_rays) w = add(w, rays_[rid].vector);
    const std::size_t new_ray = rays_.size();
    rays_.push_back(Ray{std::move(w), Ray::Kind::kExceptional, id});
    point_rays_.push_back(new_ray);
    charts_.push_back(chart);

    for (int i = 0; i < d_; ++i) {
      ChartRecord child;
      child.path = chart.path;
      child.path.push_back(i);
      child.coordinate_rays = chart.coordinate_rays;
      child.coordinate_rays[i] = new_ray;
      bool all_unit = true;
      for (std::size_t k = 0; k < chart.transforms.size(); ++k) {
        auto t = chart_transform(chart.transforms[k], i);
        if (!t.is_unit()) {
          all_unit = false;
          if (!t.is_m_primary()) {
            failure_ = NotFinitelySupported{child.path, k, t, free_coordinates(t)};
            return false;
          }
        }
        child.transforms.push_back(std::move(t));
      }
      if (all_unit) {
        cones_.push_back(child.coordinate_rays);
        continue;
      }
      if (depth + 1 > max_depth_) {
        std::ostringstream os;
        os << "principalize: recursion depth cap " << max_depth_ << " exceeded at chart path of length "
           << child.path.size();
        throw PrincipalizationDepthError(os.str());
      }
      if (!visit(std::move(child), id, depth + 1)) return false;
    }
    return true;
  }

  int d_;
  std::vector<IntegerVector> bases_;
  int max_depth_;
  std::vector<Ray> rays_;
  std::vector<std::vector<std::size_t>> cones_;
  std::vector<Constellation::Point> points_;
  std::vector<std::size_t> point_rays_;
  std::vector<ChartRecord> charts_;
  std::optional<NotFinitelySupported> failure_;
};

}  // namespace

PrincipalizeResult principalize(std::span<const MonomialIdeal> ideals, int max_depth) {
  if (ideals.empty()) throw std::invalid_argument("principalize: no ideals given");
  const int d = ideals.front().dim();
  if (d < 2) throw std::invalid_argument("principalize: dimension must be at least 2");
  ChartRecord root;
  std::vector<Monomial> root_factors;
  for (std::size_t k = 0; k < ideals.size(); ++k) {
    if (ideals[k].dim() != d) throw std::invalid_argument("principalize: dimension mismatch");
    auto g = ideals[k].gcd();
    auto t = divide(ideals[k], g);
    if (!t.is_unit() && !t.is_m_primary()) return NotFinitelySupported{{}, k, t, free_coordinates(t)};
    root_factors.push_back(std::move(g));
    root.transforms.push_back(std::move(t));
  }
  for (int k = 0; k < d; ++k) root.coordinate_rays.push_back(static_cast<std::size_t>(k));

  Builder b(d, ideals.size(), max_depth);
  if (!b.visit(std::move(root), std::nullopt, 0)) return *b.failure_;

  std::vector<PointBasis> bases;
  for (auto& v : b.bases_) bases.emplace_back(std::move(v));
  Fan fan{d, std::move(b.rays_), std::move(b.cones_)};
  return PrincipalizationTree(Constellation(d, std::move(b.points_)),
                              std::vector<MonomialIdeal>(ideals.begin(), ideals.end()), std::move(root_factors),
                              std::move(bases), std::move(fan), std::move(b.point_rays_), std::move(b.charts_));
}

PrincipalizeResult principalize(const MonomialIdeal& ideal, int max_depth) {
  return principalize(std::span<const MonomialIdeal>(&ideal, 1), max_depth);
}

bool is_finitely_supported(const MonomialIdeal& ideal) {
  return std::holds_alternative<PrincipalizationTree>(principalize(ideal));
}

}  // namespace npc

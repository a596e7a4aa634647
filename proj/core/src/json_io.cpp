#include "npc/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace npc {

namespace {

Json integer_value(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();  // too wide for a JSON number we can trust
}

Integer integer_from(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

Json monomial_json(const Monomial& m) { return Json(m); }

Monomial monomial_from(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an exponent vector, got " + j.dump());
  return j.get<Monomial>();
}

}  // namespace

Json to_json(const Constellation& c) {
  Json pts = Json::array();
  for (std::size_t i = 0; i < c.size(); ++i) {
    Json p{{"id", i + 1}};
    const auto& pt = c.point(i);
    if (pt.parent) {
      p["parent"] = *pt.parent + 1;
      Json prox = Json::array();
      for (auto q : pt.prox) prox.push_back(q + 1);
      p["prox"] = prox;
    }
    pts.push_back(p);
  }
  return Json{{"d", c.dim()}, {"points", pts}};
}

Constellation constellation_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("points"))
    throw std::invalid_argument("constellation JSON needs \"d\" and \"points\"");
  std::vector<Constellation::Point> pts;
  for (const auto& p : j.at("points")) {
    const auto id = p.at("id").get<std::size_t>();
    if (id != pts.size() + 1)
      throw ValidationError("constellation JSON: point ids must be 1..r in topological order (saw id " +
                            std::to_string(id) + " at position " + std::to_string(pts.size() + 1) + ")");
    Constellation::Point pt;
    if (p.contains("parent")) {
      const auto parent = p.at("parent").get<std::size_t>();
      if (parent < 1) throw ValidationError("constellation JSON: parent ids start at 1");
      pt.parent = parent - 1;
    }
    if (p.contains("prox"))
      for (const auto& q : p.at("prox")) {
        const auto id_q = q.get<std::size_t>();
        if (id_q < 1) throw ValidationError("constellation JSON: prox ids start at 1");
        pt.prox.push_back(id_q - 1);
      }
    pts.push_back(std::move(pt));
  }
  return Constellation(j.at("d").get<int>(), std::move(pts));
}

Json to_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) gens.push_back(monomial_json(g));
  return Json{{"d", ideal.dim()}, {"gens", gens}, {"text", ideal.to_string()}};
}

MonomialIdeal ideal_from_json(const Json& j, std::optional<int> dim) {
  if (j.is_string()) return parse_ideal(j.get<std::string>(), dim);
  if (!j.is_object() || !j.contains("gens")) throw std::invalid_argument("ideal JSON needs \"gens\"");
  std::vector<Monomial> gens;
  for (const auto& g : j.at("gens")) gens.push_back(monomial_from(g));
  int d = j.contains("d") ? j.at("d").get<int>() : (gens.empty() ? 0 : static_cast<int>(gens.front().size()));
  if (dim && *dim != d) throw std::invalid_argument("ideal JSON: dimension mismatch");
  return MonomialIdeal(d, std::move(gens));
}

Json to_json(const IntegerVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer_value(x));
  return out;
}

IntegerVector integers_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an integer array, got " + j.dump());
  IntegerVector out;
  for (const auto& x : j) out.push_back(integer_from(x));
  return out;
}

Json to_json(const PrincipalizationTree& tree) {
  Json out = to_json(tree.constellation());
  Json ideals = Json::array(), factors = Json::array(), bases = Json::array(), vals = Json::array();
  for (std::size_t k = 0; k < tree.ideals().size(); ++k) {
    ideals.push_back(to_json(tree.ideals()[k]));
    factors.push_back(monomial_json(tree.root_factors()[k]));
    bases.push_back(to_json(tree.basis(k).values()));
    vals.push_back(to_json(tree.valuations(k).coeffs));
  }
  out["ideals"] = ideals;
  out["root_factors"] = factors;
  out["bases"] = bases;
  out["valuations"] = vals;
  Json rays = Json::array();
  for (const auto& r : tree.fan().rays)
    rays.push_back(Json{{"label", r.label()},
                        {"kind", r.kind == Ray::Kind::kAxis ? "axis" : "exceptional"},
                        {"index", r.index},
                        {"vector", monomial_json(r.vector)}});
  out["rays"] = rays;
  out["cones"] = tree.fan().cones;
  out["point_rays"] = tree.point_rays();
  Json charts = Json::array();
  for (const auto& c : tree.charts()) {
    Json transforms = Json::array();
    for (const auto& t : c.transforms) transforms.push_back(to_json(t));
    charts.push_back(Json{{"path", c.path}, {"coordinate_rays", c.coordinate_rays}, {"transforms", transforms}});
  }
  out["charts"] = charts;
  return out;
}

PrincipalizationTree tree_from_json(const Json& j) {
  auto constellation = constellation_from_json(j);
  const int d = constellation.dim();
  std::vector<MonomialIdeal> ideals;
  for (const auto& i : j.at("ideals")) ideals.push_back(ideal_from_json(i, d));
  std::vector<Monomial> factors;
  for (const auto& f : j.at("root_factors")) factors.push_back(monomial_from(f));
  std::vector<PointBasis> bases;
  for (const auto& b : j.at("bases")) bases.emplace_back(integers_from_json(b));
  Fan fan;
  fan.dim = d;
  for (const auto& r : j.at("rays")) {
    Ray ray;
    ray.vector = monomial_from(r.at("vector"));
    const auto kind = r.at("kind").get<std::string>();
    if (kind != "axis" && kind != "exceptional") throw std::invalid_argument("tree JSON: unknown ray kind " + kind);
    ray.kind = kind == "axis" ? Ray::Kind::kAxis : Ray::Kind::kExceptional;
    ray.index = r.at("index").get<std::size_t>();
    fan.rays.push_back(std::move(ray));
  }
  fan.cones = j.at("cones").get<std::vector<std::vector<std::size_t>>>();
  auto point_rays = j.at("point_rays").get<std::vector<std::size_t>>();
  std::vector<ChartRecord> charts;
  for (const auto& c : j.at("charts")) {
    ChartRecord rec;
    rec.path = c.at("path").get<std::vector<int>>();
    rec.coordinate_rays = c.at("coordinate_rays").get<std::vector<std::size_t>>();
    for (const auto& t : c.at("transforms")) rec.transforms.push_back(ideal_from_json(t, d));
    charts.push_back(std::move(rec));
  }
  for (auto r : point_rays)
    if (r >= fan.rays.size()) throw std::invalid_argument("tree JSON: point ray out of range");
  for (const auto& cone : fan.cones)
    for (auto r : cone)
      if (r >= fan.rays.size()) throw std::invalid_argument("tree JSON: cone ray out of range");
  PrincipalizationTree tree(std::move(constellation), std::move(ideals), std::move(factors), std::move(bases),
                            std::move(fan), std::move(point_rays), std::move(charts));
  tree.verify();
  return tree;
}

Json to_json(const NotFinitelySupported& nfs) {
  const int d = nfs.transform.dim();
  Json path = Json::array();
  for (auto c : nfs.chart_path) path.push_back(variable_name(d, c));
  Json free = Json::array();
  for (auto c : nfs.free_coordinates) free.push_back(variable_name(d, c));
  return Json{{"status", "not finitely supported"},
              {"ideal_index", nfs.ideal_index + 1},
              {"chart_path", path},
              {"depth", nfs.depth()},
              {"transform", to_json(nfs.transform)},
              {"curve_coordinates", free},
              {"message", nfs.describe()}};
}

Json to_json(const CohomReport& report) {
  Json dims = Json::object();
  for (const auto& [i, n] : report.dims) dims[std::to_string(i)] = n;
  return Json{{"divisor", report.divisor.coeffs},
              {"window", report.window},
              {"dims", dims},
              {"certified", report.certified},
              {"status", report.status()},
              {"field", report.field},
              {"weights_examined", report.weights_examined}};
}

Json to_json(const InjectivityReport& report) {
  Json out{{"injective", report.injective},
           {"certified", report.certified},
           {"window", report.window},
           {"weights_checked", report.weights_checked}};
  if (report.witness) out["witness"] = *report.witness;
  return out;
}

Json to_json(const CheckReport& report) {
  Json inputs = Json::object();
  for (const auto& [k, v] : report.inputs) inputs[k] = v;
  Json out{{"name", report.name},
           {"inputs", inputs},
           {"verdict", to_string(report.verdict)},
           {"witness", report.witness},
           {"detail", report.detail},
           {"time", report.seconds},
           {"cases", report.cases}};
  out["seed"] = report.seed ? Json(*report.seed) : Json(nullptr);
  return out;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string reports_to_csv(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  os << "name,inputs,verdict,seconds,seed,cases,witness,detail\n";
  for (const auto& r : reports) {
    std::string inputs;
    for (const auto& [k, v] : r.inputs) inputs += (inputs.empty() ? "" : "; ") + k + "=" + v;
    os << csv_field(r.name) << ',' << csv_field(inputs) << ',' << to_string(r.verdict) << ',' << r.seconds << ','
       << (r.seed ? std::to_string(*r.seed) : "") << ',' << r.cases << ',' << csv_field(r.witness) << ','
       << csv_field(r.detail) << '\n';
  }
  return os.str();
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return Json::parse(in);
}

}  // namespace npc

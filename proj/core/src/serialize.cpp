#include "mchroma/serialize.hpp"

namespace mchroma {

namespace {

Json vec_list(const std::vector<Vec2>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

Json lattice_point(const LatticePoint& p) { return Json{{"i", p.i}, {"j", p.j}, {"vector", to_json(p.v)}}; }

Json line_json(const Line& l) { return Json{{"normal", to_json(l.normal)}, {"offset", l.offset}}; }

// JSON has no infinities.
Json real_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

}  // namespace

Json to_json(Vec2 v) { return Json::array({v.x, v.y}); }

Vec2 vec2_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw SchemeError("expected a [x, y] number pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json to_json(const HexagonChoice& c) {
  return Json{{"kind", to_string(c.kind)},
              {"index", c.index},
              {"ratio", c.ratio},
              {"shared_side", c.shared_side},
              {"provenance", c.provenance}};
}

HexagonChoice choice_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) throw SchemeError("choice must be an object with a kind");
  try {
    HexagonChoice c;
    c.kind = hexagon_kind_from_string(j.at("kind").get<std::string>());
    c.index = j.value("index", 0);
    c.ratio = j.value("ratio", 0.5);
    c.shared_side = j.value("shared_side", 0);
    c.provenance = j.value("provenance", std::string("user"));
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw SchemeError(std::string("malformed choice: ") + e.what());
  }
}

Json to_json(const ColoringScheme& s) {
  const auto& hex = s.hexagon();
  Json a = Json::object();
  for (int k = 1; k <= 6; ++k) a["A" + std::to_string(k)] = to_json(hex.a(k));
  const auto sum = sum_polygon(s);
  std::vector<Vec2> reps(s.coset_reps().begin(), s.coset_reps().end());
  return Json{
      {"format", kSchemeFormat},
      {"id", s.id()},
      {"n", s.n()},
      {"experimental", !is_supported_n(s.n())},
      {"choice", to_json(s.choice())},
      {"norm", {{"circumradius", s.norm().circumradius()}, {"vertices", vec_list(s.norm().ball().vertices())}}},
      {"half_ball", {{"vertices", vec_list(s.half_ball().vertices())}}},
      {"hexagon",
       {{"vertices", a},
        {"removed_boundary", "open chain A1 -> A2 -> A3 -> A4 with A4 included, and the vertex A5"}}},
      {"tiling", {{"b1", to_json(s.tiling().b1())}, {"b2", to_json(s.tiling().b2())}}},
      {"colors", {{"v1", to_json(s.colors().b1())}, {"v2", to_json(s.colors().b2())}}},
      {"coset_reps", vec_list(reps)},
      {"flat_generator", to_json(s.flat_generator())},
      {"sum", {{"circumradius", sum.circumradius()}, {"vertices", vec_list(sum.vertices())}}},
  };
}

ColoringScheme scheme_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("choice")) {
    throw SchemeError("scheme document needs 'n' and 'choice'");
  }
  if (j.contains("format") && j["format"] != kSchemeFormat) {
    throw SchemeError("unrecognized scheme format " + j["format"].dump());
  }
  if (!j["n"].is_number_integer()) throw SchemeError("'n' must be an integer");
  const int n = j["n"].get<int>();
  const bool experimental = j.value("experimental", false);
  return ColoringScheme::build(n, choice_from_json(j["choice"]), BuildOptions{.allow_experimental = experimental});
}

Json to_json(const SeparationResult& r) {
  Json out{{"verdict", to_string(r.verdict)}, {"margin", r.margin}};
  out["witness"] = r.witness ? line_json(*r.witness) : Json(nullptr);
  return out;
}

Json to_json(const PackingReport& r) {
  Json nbs = Json::array();
  for (const auto& nb : r.neighbors) {
    nbs.push_back(Json{{"lattice_vector", lattice_point(nb.lattice_vector)},
                       {"flat", nb.flat},
                       {"separation", to_json(nb.result)}});
  }
  return Json{{"scheme_id", r.scheme_id},
              {"sum_circumradius", r.sum_circumradius},
              {"enumeration_radius", r.enumeration_radius},
              {"flat_width_defect", r.flat_width_defect},
              {"min_nonflat_margin", real_or_null(r.min_nonflat_margin())},
              {"neighbors", nbs},
              {"pass", r.pass}};
}

Json to_json(const LineRegression& r) {
  return Json{{"name", r.name},
              {"line", line_json(r.line)},
              {"neighbor", lattice_point(r.neighbor)},
              {"separates", r.check.separates},
              {"min_margin_sum", r.check.min_margin_p},
              {"min_margin_translate", r.check.min_margin_q},
              {"on_line_sum", r.on_line_p},
              {"on_line_translate", r.on_line_q}};
}

Json to_json(const SamplingReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) {
    v.push_back(Json{{"index", x.index}, {"p", to_json(x.p)}, {"q", to_json(x.q)}, {"color", x.color}});
  }
  return Json{{"kind", r.kind},
              {"n_samples", r.n_samples},
              {"seed", r.seed},
              {"violation_count", r.violations.size()},
              {"violations", v},
              {"pass", r.pass()}};
}

Json to_json(const FeasibilityReport& r) {
  Json samples = Json::array();
  for (const auto& s : r.samples) samples.push_back(Json::array({s.t, real_or_null(s.clearance)}));
  Json intervals = Json::array();
  for (const auto& iv : r.intervals) intervals.push_back(Json{{"lo", iv.lo}, {"hi", iv.hi}, {"width", iv.width()}});
  Json fi = r.feasible_interval
                ? Json{{"lo", r.feasible_interval->lo}, {"hi", r.feasible_interval->hi}, {"width", r.feasible_interval->width()}}
                : Json(nullptr);
  return Json{{"n", r.n},
              {"parameterization",
               {{"kind", to_string(r.param.kind)},
                {"side", r.param.side},
                {"shared_side", r.param.shared_side},
                {"description", r.param.describe()}}},
              {"grid_size", r.grid_size},
              {"best", {{"t", r.best.t}, {"clearance", real_or_null(r.best.clearance)}}},
              {"feasible_interval", fi},
              {"intervals", intervals},
              {"samples", samples}};
}

Json to_json(const CertifiedDefault& r) {
  Json cands = Json::array();
  for (const auto& c : r.candidates) {
    cands.push_back(Json{{"choice", to_json(c.choice)}, {"clearance", real_or_null(c.clearance)}});
  }
  return Json{{"n", r.n},
              {"choice", to_json(r.choice)},
              {"clearance", r.clearance},
              {"fell_back_to_arc_scan", r.fell_back},
              {"candidates", cands}};
}

Json to_json(const Configuration& k) { return Json{{"points", vec_list(k.points())}, {"size", k.size()}}; }

Json to_json(const TranslateHitReport& r) {
  Json m = Json::array();
  for (const auto& x : r.misses) m.push_back(Json{{"index", x.index}, {"m", to_json(x.m)}});
  return Json{{"n_samples", r.n_samples},
              {"seed", r.seed},
              {"miss_count", r.misses.size()},
              {"misses", m},
              {"pass", r.pass()}};
}

}  // namespace mchroma

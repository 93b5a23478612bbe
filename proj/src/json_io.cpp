#include "degloci/json_io.hpp"

#include <fstream>

#include "degloci/errors.hpp"
#include "degloci/parse.hpp"

namespace degloci {

namespace {

Json strings(const std::vector<std::string>& v) { return Json(v); }

Json substitution_json(const Substitution& s) {
  Json j = Json::object();
  for (const auto& [var, image] : s.assignments()) j[var] = image.str();
  return j;
}

Json square_json(const std::vector<std::vector<Poly>>& M) {
  Json j = Json::array();
  for (const auto& row : M) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(e.str());
    j.push_back(std::move(r));
  }
  return j;
}

Json polys_json(const std::vector<Poly>& ps) {
  Json j = Json::array();
  for (const auto& p : ps) j.push_back(p.str());
  return j;
}

Json witness_json(const Witness& w) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        Json j;
        if constexpr (std::is_same_v<T, SmoothWitness>) {
          j["generators"] = x.generators;
        } else if constexpr (std::is_same_v<T, ToricWitness>) {
          j["u"] = x.match.u;
          j["v"] = x.match.v;
          j["M"] = x.match.M.str();
          j["unit"] = to_string(x.match.unit);
          j["singular_codim"] = x.singular_codim;
        } else if constexpr (std::is_same_v<T, FormMatchWitness>) {
          j["u"] = x.match.u;
          j["v"] = x.match.v;
          j["d"] = x.match.d;
          j["M1"] = x.match.M1.str();
          j["M2"] = x.match.M2.str();
          j["unit"] = to_string(x.match.unit);
          j["shift"] = substitution_json(x.shift);
          j["shifted"] = x.shifted.str();
        } else if constexpr (std::is_same_v<T, ElkikWitness>) {
          if (const auto* h = std::get_if<HypersurfaceFamily>(&x.data)) {
            j["type"] = "hypersurface";
            j["weights"] = h->weights;
            j["family"] = h->family.str();
            j["limit"] = h->limit.str();
          } else {
            const auto& m = std::get<MatrixDegeneration>(x.data);
            j["type"] = "matrix";
            j["origin"] = to_json(m.family.origin);
            j["family"] = to_json(m.family.phi_t);
            Json w;
            w["variable_weights"] = m.witness.variable_weights;
            w["row_scales"] = polys_json(m.witness.row_scales);
            w["col_scales"] = polys_json(m.witness.col_scales);
            if (m.witness.row_ops) w["row_ops"] = square_json(*m.witness.row_ops);
            if (m.witness.col_ops) w["col_ops"] = square_json(*m.witness.col_ops);
            if (m.witness.linear_change) w["linear_change"] = substitution_json(*m.witness.linear_change);
            j["witness"] = std::move(w);
            j["flatness"] = to_json(m.flatness);
          }
        } else if constexpr (std::is_same_v<T, ChartCoverWitness>) {
          j["matrix"] = to_json(x.matrix);
          j["proj_vars"] = x.proj_vars;
          Json solved = Json::array();
          for (const auto& chart : x.solved) {
            Json c = Json::array();
            for (const auto& s : chart) c.push_back(Json{{"var", s.var}, {"image", s.image.str()}});
            solved.push_back(std::move(c));
          }
          j["solved"] = std::move(solved);
          j["blowup"] = to_json(x.blowup);
        } else {
          j["reason"] = x.reason;
        }
        return j;
      },
      w);
}

template <typename T>
T get_or(const Json& j, const char* key, T fallback) {
  return j.contains(key) ? j.at(key).get<T>() : fallback;
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  return j.at(key);
}

}  // namespace

Json to_json(const Poly& p) { return p.str(); }

Json to_json(const Ideal& I) {
  return Json{{"vars", I.ring()->vars()}, {"generators", strings(I.generator_strings())}};
}

Json to_json(const PolyMatrix& M) {
  Json vars = M.ring()->vars();
  Json j{{"vars", vars}};
  if (M.ring()->has_laurent()) j["parameter"] = M.ring()->laurent_name();
  j["entries"] = M.strings();
  return j;
}

Json to_json(const Certificate& c) {
  Json j;
  j["kind"] = kind_name(c.kind);
  j["subject"] = to_json(c.subject);
  j["citation"] = c.citation;
  j["witness"] = witness_json(c.witness);
  Json kids = Json::array();
  for (const auto& k : c.children) kids.push_back(to_json(k));
  j["children"] = std::move(kids);
  return j;
}

Json to_json(const ValidationReport& r) {
  return Json{{"valid", r.valid}, {"complete", r.complete}, {"failures", r.failures}};
}

Json to_json(const BlowupReport& r) {
  Json strata = Json::array();
  for (const auto& s : r.strata) {
    strata.push_back(Json{{"p", s.p}, {"codim", s.codim}, {"empty", s.empty}, {"ok", s.ok}});
  }
  return Json{{"ok", r.ok}, {"strata", std::move(strata)}};
}

Json to_json(const Chart& c) {
  Json solved = Json::array();
  for (const auto& s : c.solved) solved.push_back(Json{{"var", s.var}, {"image", s.image.str()}});
  return Json{{"chart", c.chart_var},
              {"vars", c.ring->vars()},
              {"solved", std::move(solved)},
              {"equations", c.equation_strings()}};
}

Json to_json(const FlatnessReport& r) {
  return Json{{"n", r.n},
              {"fiber0_chart_dims", r.fiber0_chart_dims},
              {"fiber0_dim", r.fiber0_dim},
              {"total_dim", r.total_dim},
              {"ok", r.ok}};
}

Json to_json(const MonomialIdeal& I) { return Json{{"generators", I.generators()}}; }

Json to_json(const FlipData& f) { return Json{{"g", f.g}, {"i", f.i}, {"m", f.m}, {"p", f.p}}; }

Json to_json(const BlowupExponents& b) {
  return Json{{"bundle_exp", to_string(b.bundle_exp)},
              {"canonical_m", b.canonical_m},
              {"threshold", to_string(b.threshold)},
              {"fiber_degree", b.fiber_degree},
              {"trivial_chain", b.trivial_chain}};
}

Json to_json(const DensityProfile& p) {
  Json j;
  j["map"] = p.map_id;
  j["p"] = p.p;
  j["K"] = p.K;
  j["N"] = p.N;
  j["seed"] = p.seed;
  Json centers = Json::array();
  for (const auto& c : p.centers) {
    Json levels = Json::array();
    for (const auto& e : c.levels) {
      levels.push_back(Json{{"k", e.k}, {"hits", e.hits}, {"density", e.density}, {"stderr", e.stderr_}});
    }
    centers.push_back(Json{{"center", c.center}, {"levels", std::move(levels)}});
  }
  j["centers"] = std::move(centers);
  Json shells = Json::array();
  for (const auto& s : p.shells) {
    shells.push_back(Json{{"nu", s.nu}, {"hits", s.hits}, {"density", s.density}, {"stderr", s.stderr_}});
  }
  j["shells"] = std::move(shells);
  return j;
}

Json to_json(const Verdict& v) {
  return Json{{"bounded", v.bounded},     {"sup_estimate", v.sup_estimate}, {"trend", v.trend},
              {"trend_se", v.trend_se},   {"first_level", v.first_level},   {"last_level", v.last_level},
              {"note", v.note}};
}

Json to_json(const InstanceResult& r) {
  Json j;
  j["id"] = r.id;
  j["pass"] = r.pass;
  j["matrices"] = r.matrices;
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  j["checks"] = std::move(checks);
  Json blowups = Json::array();
  for (const auto& b : r.blowups) blowups.push_back(to_json(b));
  j["blowups"] = std::move(blowups);
  j["diffs"] = r.diffs;
  j["certificate"] = r.certificate ? to_json(*r.certificate) : Json(nullptr);
  return j;
}

Json to_json(const PipelineReport& r) {
  Json j;
  j["pipeline"] = r.name;
  Json s;
  s["total"] = r.summary.total;
  s["passed"] = r.summary.passed;
  s["failed"] = r.summary.failed;
  s["complete_certificates"] = r.summary.complete_certificates;
  s["elkik_nodes"] = r.summary.elkik_nodes;
  s["max_toric_degree"] = r.summary.max_toric_degree;
  s["notes"] = r.summary.notes;
  j["summary"] = std::move(s);
  Json insts = Json::array();
  for (const auto& i : r.instances) insts.push_back(to_json(i));
  j["instances"] = std::move(insts);
  return j;
}

PolyMatrix matrix_from_json(const Json& j) {
  try {
    auto vars = require(j, "vars").get<std::vector<std::string>>();
    auto entries = require(j, "entries").get<std::vector<std::vector<std::string>>>();
    RingPtr R = j.contains("parameter") ? make_ring(vars, j.at("parameter").get<std::string>()) : make_ring(vars);
    return PolyMatrix::parse(R, entries);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("matrix: ") + e.what());
  }
}

Ideal ideal_from_json(const Json& j) {
  try {
    auto vars = require(j, "vars").get<std::vector<std::string>>();
    auto gens = require(j, "generators").get<std::vector<std::string>>();
    std::string order = get_or<std::string>(j, "order", "degrevlex");
    RingPtr R = make_ring(vars);
    std::vector<Poly> ps;
    for (const auto& g : gens) ps.push_back(parse_poly(g, R));
    MonomialOrder o = MonomialOrder::degrevlex();
    if (order == "lex") {
      o = MonomialOrder::lex();
    } else if (order != "degrevlex") {
      throw ParseError("unknown monomial order '" + order + "'");
    }
    return Ideal(R, std::move(ps), o);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("ideal: ") + e.what());
  }
}

MonomialIdeal monomial_ideal_from_json(const Json& j) {
  try {
    return MonomialIdeal(require(j, "generators").get<std::vector<Exponent>>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("monomial ideal: ") + e.what());
  }
}

PadicConfig padic_config_from_json(const Json& j) {
  PadicConfig c;
  try {
    c.p = get_or(j, "p", c.p);
    c.K = get_or(j, "K", c.K);
    c.N = get_or(j, "N", c.N);
    c.seed = get_or(j, "seed", c.seed);
    c.centers = get_or(j, "centers", c.centers);
    c.threads = get_or(j, "threads", c.threads);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("p-adic configuration: ") + e.what());
  }
  return c;
}

ScalingJob scaling_job_from_json(const Json& j) {
  try {
    ScalingJob s{matrix_from_json(require(j, "origin")), require(j, "weights").get<std::map<std::string, int>>(),
                 require(j, "row_powers").get<std::vector<int>>(), require(j, "col_powers").get<std::vector<int>>()};
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("degeneration job: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

}  // namespace degloci

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "degloci/birational.hpp"
#include "degloci/degeneration.hpp"
#include "degloci/errors.hpp"
#include "degloci/json_io.hpp"
#include "degloci/monomial_closure.hpp"
#include "degloci/padic.hpp"
#include "degloci/paper_suite.hpp"
#include "degloci/parse.hpp"
#include "degloci/singularity.hpp"
#include "degloci/validate.hpp"

using namespace degloci;

namespace {

struct Global {
  std::string json_path;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

// Matrix input: a job file or --vars plus one --row per row.
struct MatrixInput {
  std::string job;
  std::string vars;
  std::vector<std::string> rows;

  void attach(CLI::App* app) {
    app->add_option("job", job, "JSON job file {\"vars\": [...], \"entries\": [[...]]}");
    app->add_option("--vars", vars, "comma separated variables");
    app->add_option("--row", rows, "comma separated row entries (repeat per row)");
  }

  PolyMatrix get() const {
    if (!job.empty()) {
      Json j = read_json_file(job);
      return matrix_from_json(j.contains("matrix") ? j.at("matrix") : j);
    }
    if (vars.empty() || rows.empty()) throw ConfigError("give a job file or --vars with --row");
    std::vector<std::vector<std::string>> entries;
    for (const auto& r : rows) entries.push_back(split(r, ','));
    return PolyMatrix::parse(make_ring(split(vars, ',')), entries);
  }
};

void emit(const Global& g, const Json& j) {
  if (!g.json_path.empty()) write_json_file(g.json_path, j);
}

void print_certificate(const Certificate& c, int indent = 0) {
  std::cout << std::string(static_cast<std::size_t>(indent), ' ') << kind_name(c.kind) << ":";
  for (const auto& s : c.subject.generator_strings()) std::cout << " [" << s << "]";
  if (const auto* u = std::get_if<UnknownWitness>(&c.witness)) std::cout << " (" << u->reason << ")";
  std::cout << '\n';
  for (const auto& k : c.children) print_certificate(k, indent + 2);
}

void print_report(const PipelineReport& r) {
  for (const auto& i : r.instances) {
    std::cout << (i.pass ? "PASS " : "FAIL ") << i.id << '\n';
    for (const auto& d : i.diffs) std::cout << "    " << d << '\n';
  }
  const auto& s = r.summary;
  std::cout << r.name << ": " << s.passed << "/" << s.total << " pass, " << s.complete_certificates
            << " complete certificates, " << s.elkik_nodes << " Elkik nodes, max toric degree " << s.max_toric_degree
            << '\n';
  for (const auto& n : s.notes) std::cout << "note: " << n << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degeneracy loci, blow-up charts and rational singularity certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--json", g.json_path, "write the report as JSON");
  app.add_option("--seed", g.seed, "seed for randomized trials");
  app.add_option("--threads", g.threads, "worker threads (results do not depend on it)");

  int rc = 0;

  // gb
  auto* gb = app.add_subcommand("gb", "reduced Groebner basis and dimension");
  std::string gb_job, gb_vars, gb_order = "degrevlex";
  std::vector<std::string> gb_gens;
  gb->add_option("job", gb_job, "JSON job file {\"vars\", \"generators\", \"order\"}");
  gb->add_option("--vars", gb_vars, "comma separated variables");
  gb->add_option("--gen", gb_gens, "generator (repeat)");
  gb->add_option("--order", gb_order, "degrevlex or lex");
  gb->callback([&] {
    Json job;
    if (!gb_job.empty()) {
      job = read_json_file(gb_job);
    } else {
      job = Json{{"vars", split(gb_vars, ',')}, {"generators", gb_gens}, {"order", gb_order}};
    }
    Ideal I = groebner_basis(ideal_from_json(job));
    std::vector<std::string> basis;
    for (const auto& p : I.basis()) basis.push_back(p.str());
    for (const auto& b : basis) std::cout << b << '\n';
    int dim = dimension(I);
    std::cout << "dimension " << dim << '\n';
    emit(g, Json{{"order", I.order().name()}, {"basis", basis}, {"dimension", dim}});
  });

  // fitting
  auto* fit = app.add_subcommand("fitting", "degeneracy ideal and blow-up criterion");
  MatrixInput fit_in;
  fit_in.attach(fit);
  fit->callback([&] {
    PolyMatrix phi = fit_in.get();
    Ideal Z = fitting_ideal(phi);
    BlowupReport b = blowup_criterion(phi);
    std::cout << "ideal:";
    for (const auto& s : Z.generator_strings()) std::cout << ' ' << s;
    std::cout << '\n';
    for (const auto& s : b.strata) {
      std::cout << "codim S_" << s.p << " = " << s.codim << (s.ok ? " ok" : " too small") << '\n';
    }
    std::cout << "blow-up criterion " << (b.ok ? "holds" : "fails") << '\n';
    emit(g, Json{{"ideal", to_json(Z)}, {"blowup", to_json(b)}});
    if (!b.ok) rc = 1;
  });

  // charts
  auto* chs = app.add_subcommand("charts", "standard charts of the incidence scheme");
  MatrixInput chs_in;
  chs_in.attach(chs);
  chs->callback([&] {
    IncidenceScheme X = incidence_scheme(chs_in.get());
    Json out = Json::array();
    for (const auto& c : charts(X)) {
      std::cout << c.chart_var << " = 1:";
      for (const auto& s : c.solved) std::cout << ' ' << s.var << " = " << s.image.str() << ';';
      for (const auto& e : c.equation_strings()) std::cout << " [" << e << "]";
      std::cout << '\n';
      out.push_back(to_json(c));
    }
    emit(g, Json{{"charts", out}});
  });

  // certify
  auto* cert = app.add_subcommand("certify", "rational singularity certificate for X(phi) or an ideal");
  MatrixInput cert_in;
  cert_in.attach(cert);
  std::vector<std::string> cert_ideal;
  cert->add_option("--gen", cert_ideal, "certify the ideal with these generators over --vars instead");
  cert->callback([&] {
    CertifyOptions opts;
    opts.threads = g.threads;
    Certificate c = cert_ideal.empty()
                        ? certify_matrix(cert_in.get(), opts)
                        : certify_ideal(ideal_from_json(Json{{"vars", split(cert_in.vars, ',')}, {"generators", cert_ideal}}),
                                        opts);
    ValidationReport v = validate(c);
    print_certificate(c);
    std::cout << "complete " << c.complete() << ", valid " << v.valid << '\n';
    for (const auto& f : v.failures) std::cout << "  " << f << '\n';
    emit(g, Json{{"certificate", to_json(c)}, {"validation", to_json(v)}});
    if (!c.complete() || !v.valid) rc = 1;
  });

  // degenerate
  auto* deg = app.add_subcommand("degenerate", "Elkik node for a scaling family");
  std::string deg_job;
  deg->add_option("job", deg_job, "JSON {\"origin\", \"weights\", \"row_powers\", \"col_powers\"}")->required();
  deg->callback([&] {
    ScalingJob job = scaling_job_from_json(read_json_file(deg_job));
    std::vector<Poly> rows, cols;
    for (int k : job.row_powers) rows.push_back(t_monomial(job.origin.ring(), k));
    for (int k : job.col_powers) cols.push_back(t_monomial(job.origin.ring(), k));
    MatrixFamily F = build_family(job.origin, job.weights, rows, cols);
    EquivalenceWitness W{job.weights, rows, cols, std::nullopt, std::nullopt, std::nullopt};
    FlatnessReport fl = verify_flat_degeneration(F);
    std::cout << "family " << F.phi_t.str() << '\n';
    std::cout << "limit " << fiber0(F).str() << '\n';
    std::cout << "flatness: fiber dim " << fl.fiber0_dim << ", total dim " << fl.total_dim << (fl.ok ? " ok" : " fails")
              << '\n';
    Json out{{"family", to_json(F.phi_t)}, {"flatness", to_json(fl)}};
    CertifyOptions opts;
    opts.threads = g.threads;
    try {
      Certificate c = elkik_node(F, W, fl, certify_matrix(fiber0(F), opts));
      print_certificate(c);
      out["certificate"] = to_json(c);
    } catch (const PreconditionFailed& e) {
      std::cout << "refused: " << e.what() << '\n';
      out["refused"] = e.what();
      rc = 1;
    }
    emit(g, out);
  });

  // closure
  auto* clo = app.add_subcommand("closure", "integral closure of a monomial ideal");
  std::string clo_job;
  std::vector<std::string> clo_gens;
  clo->add_option("job", clo_job, "JSON {\"generators\": [[...], ...]}");
  clo->add_option("--gen", clo_gens, "comma separated exponent vector (repeat)");
  clo->callback([&] {
    MonomialIdeal I = [&] {
      if (!clo_job.empty()) return monomial_ideal_from_json(read_json_file(clo_job));
      std::vector<Exponent> gens;
      for (const auto& s : clo_gens) {
        Exponent e;
        for (const auto& part : split(s, ',')) e.push_back(std::stoi(part));
        gens.push_back(std::move(e));
      }
      return MonomialIdeal(std::move(gens));
    }();
    MonomialIdeal C = integral_closure(I);
    bool closed = C == I;
    std::cout << "ideal " << I.str() << "\nclosure " << C.str() << "\nclosed " << closed << '\n';
    Json out{{"ideal", to_json(I)}, {"closure", to_json(C)}, {"closed", closed}};
    if (I.nvars() == 3) {
      bool normal = rrv_normal(I);
      std::cout << "normal (I and I^2 closed) " << normal << '\n';
      out["normal"] = normal;
    }
    emit(g, out);
  });

  // flip
  auto* flip = app.add_subcommand("flip", "discrepancies along the flip chain");
  int gmax = 50;
  std::string kappa_text = "1/2";
  flip->add_option("--gmax", gmax, "largest genus");
  flip->add_option("--kappa", kappa_text, "real part of kappa, exact rational");
  flip->callback([&] {
    Rational kappa = parse_rational(kappa_text);
    Json rows = Json::array();
    bool all = true;
    std::cout << "g i m_i p_i ok\n";
    for (int gg = 2; gg <= gmax; ++gg) {
      for (int i = 1; i <= gg - 1; ++i) {
        FlipData f = flip_data(gg, i);
        bool ok = kappa_flip_ok(gg, i, kappa);
        all = all && ok;
        std::cout << gg << ' ' << i << ' ' << f.m << ' ' << f.p << ' ' << (ok ? "yes" : "no") << '\n';
        Json r = to_json(f);
        r["ok"] = ok;
        rows.push_back(std::move(r));
      }
    }
    emit(g, Json{{"kappa", to_string(kappa)}, {"flips", rows}, {"all_ok", all}});
    if (!all) rc = 1;
  });

  // padic
  auto* pad = app.add_subcommand("padic", "Monte Carlo pushforward density of a polynomial map");
  std::string pad_f, pad_vars, pad_csv;
  PadicConfig pc;
  pad->add_option("--f", pad_f, "polynomial with integer coefficients")->required();
  pad->add_option("--vars", pad_vars, "comma separated variables")->required();
  pad->add_option("--p", pc.p, "prime");
  pad->add_option("--K", pc.K, "precision exponent");
  pad->add_option("--N", pc.N, "samples");
  pad->add_option("--center", pc.centers, "tracked target center (repeat)");
  pad->add_option("--csv", pad_csv, "write the profile as CSV");
  pad->callback([&] {
    pc.seed = g.seed;
    pc.threads = g.threads;
    Poly f = parse_poly(pad_f, make_ring(split(pad_vars, ',')));
    DensityProfile prof = estimate_pushforward(f, pc, pad_f);
    std::cout << profile_csv(prof);
    Json out{{"profile", to_json(prof)}};
    if (prof.K >= 5) {
      Verdict v = boundedness_verdict(prof);
      std::cout << "verdict at 0: " << (v.bounded ? "bounded" : "unbounded") << ", trend " << v.trend << " +- "
                << v.trend_se << ", sup estimate " << v.sup_estimate << "\nnote: " << v.note << '\n';
      out["verdict"] = to_json(v);
    } else {
      std::cout << "verdict needs K >= 5\n";
    }
    if (!pad_csv.empty()) {
      std::ofstream out(pad_csv);
      out << profile_csv(prof);
    }
    emit(g, out);
  });

  // catalog pipelines
  auto* paper = app.add_subcommand("paper", "catalog pipelines");
  paper->require_subcommand(1);
  auto* g2 = paper->add_subcommand("genus2", "local models (x^d, y)");
  int dmax = 6;
  g2->add_option("--dmax", dmax, "largest d");
  g2->callback([&] {
    SuiteOptions opts;
    opts.seed = g.seed;
    opts.threads = g.threads;
    PipelineReport r = verify_genus2(dmax, opts);
    print_report(r);
    emit(g, to_json(r));
    if (!r.all_pass()) rc = 1;
  });
  auto* g3 = paper->add_subcommand("genus3", "genus-3 catalog");
  std::string only;
  bool list = false;
  g3->add_option("--instance", only, "run one catalog id");
  g3->add_flag("--list", list, "list catalog ids");
  g3->callback([&] {
    if (list) {
      for (const auto& id : instance_ids(true)) std::cout << id << '\n';
      return;
    }
    SuiteOptions opts;
    opts.seed = g.seed;
    opts.threads = g.threads;
    PipelineReport r = verify_genus3(only.empty() ? std::nullopt : std::optional<std::string>(only), opts);
    print_report(r);
    emit(g, to_json(r));
    if (!r.all_pass()) rc = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return rc;
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "degloci/birational.hpp"
#include "degloci/errors.hpp"
#include "degloci/json_io.hpp"
#include "degloci/monomial_closure.hpp"
#include "degloci/padic.hpp"
#include "degloci/paper_suite.hpp"
#include "degloci/parse.hpp"
#include "degloci/singularity.hpp"
#include "degloci/validate.hpp"

namespace py = pybind11;
using namespace degloci;

namespace {

using Rows = std::vector<std::vector<std::string>>;

PolyMatrix matrix(const std::vector<std::string>& vars, const Rows& rows) {
  return PolyMatrix::parse(make_ring(vars), rows);
}

Ideal ideal(const std::vector<std::string>& vars, const std::vector<std::string>& gens, const std::string& order) {
  return ideal_from_json(Json{{"vars", vars}, {"generators", gens}, {"order", order}});
}

std::pair<std::string, std::string> fraction(const Rational& q) {
  return {q.get_num().get_str(), q.get_den().get_str()};
}

}  // namespace

PYBIND11_MODULE(_degloci, m) {
  m.doc() = "Degeneracy loci, blow-up charts and rational singularity certificates";
  py::register_exception<Error>(m, "DeglociError", PyExc_ValueError);

  m.def("groebner_basis", [](const std::vector<std::string>& vars, const std::vector<std::string>& gens,
                             const std::string& order) {
    Ideal I = ideal(vars, gens, order);
    std::vector<std::string> out;
    for (const auto& p : I.basis()) out.push_back(p.str());
    return out;
  }, py::arg("vars"), py::arg("generators"), py::arg("order") = "degrevlex");

  m.def("dimension", [](const std::vector<std::string>& vars, const std::vector<std::string>& gens) {
    return dimension(ideal(vars, gens, "degrevlex"));
  }, py::arg("vars"), py::arg("generators"));

  m.def("fitting_ideal", [](const std::vector<std::string>& vars, const Rows& rows) {
    return fitting_ideal(matrix(vars, rows)).generator_strings();
  }, py::arg("vars"), py::arg("rows"));

  m.def("ideal_equal", [](const std::vector<std::string>& vars, const std::vector<std::string>& a,
                          const std::vector<std::string>& b) {
    return ideal_equal(ideal(vars, a, "degrevlex"), ideal(vars, b, "degrevlex"));
  }, py::arg("vars"), py::arg("a"), py::arg("b"));

  // Structured results travel as JSON text; the Python package decodes them.
  m.def("_blowup_criterion", [](const std::vector<std::string>& vars, const Rows& rows) {
    return to_json(blowup_criterion(matrix(vars, rows))).dump();
  });
  m.def("_charts", [](const std::vector<std::string>& vars, const Rows& rows) {
    Json out = Json::array();
    for (const auto& c : charts(incidence_scheme(matrix(vars, rows)))) out.push_back(to_json(c));
    return out.dump();
  });
  m.def("_certify_matrix", [](const std::vector<std::string>& vars, const Rows& rows) {
    Certificate c = certify_matrix(matrix(vars, rows));
    return Json{{"complete", c.complete()}, {"validation", to_json(validate(c))}, {"certificate", to_json(c)}}.dump();
  });
  m.def("_certify_ideal", [](const std::vector<std::string>& vars, const std::vector<std::string>& gens) {
    Certificate c = certify_ideal(ideal(vars, gens, "degrevlex"));
    return Json{{"complete", c.complete()}, {"validation", to_json(validate(c))}, {"certificate", to_json(c)}}.dump();
  });

  m.def("integral_closure", [](const std::vector<Exponent>& gens) {
    return integral_closure(MonomialIdeal(gens)).generators();
  }, py::arg("generators"));
  m.def("is_integrally_closed", [](const std::vector<Exponent>& gens) {
    return is_integrally_closed(MonomialIdeal(gens));
  }, py::arg("generators"));
  m.def("rrv_normal", [](const std::vector<Exponent>& gens) { return rrv_normal(MonomialIdeal(gens)); },
        py::arg("generators"));

  m.def("flip_data", [](int g, int i) {
    FlipData f = flip_data(g, i);
    return std::pair<int, int>{f.m, f.p};
  }, py::arg("g"), py::arg("i"));
  m.def("kappa_flip_ok", [](int g, int i, const std::string& kappa) {
    return kappa_flip_ok(g, i, parse_rational(kappa));
  }, py::arg("g"), py::arg("i"), py::arg("kappa"));
  m.def("_blowup_exponents", [](int g, const std::string& kappa) {
    return to_json(blowup_exponents(g, parse_rational(kappa))).dump();
  });

  m.def("_estimate_pushforward", [](const std::string& f, const std::vector<std::string>& vars, int p, int K,
                                    std::uint64_t N, std::uint64_t seed, const std::vector<long long>& centers,
                                    unsigned threads) {
    PadicConfig cfg;
    cfg.p = p;
    cfg.K = K;
    cfg.N = N;
    cfg.seed = seed;
    cfg.centers = centers;
    cfg.threads = threads;
    DensityProfile prof;
    {
      py::gil_scoped_release release;
      prof = estimate_pushforward(parse_poly(f, make_ring(vars)), cfg, f);
    }
    Json out{{"profile", to_json(prof)}, {"verdict", nullptr}};
    if (prof.K >= 5) out["verdict"] = to_json(boundedness_verdict(prof));
    return out.dump();
  });
  m.def("_exact_monomial_density", [](const std::vector<int>& a, int p, int nu) {
    return fraction(exact_monomial_density(a, p, nu));
  });
  m.def("_exact_cone_density_at_zero", [](int p, int k) { return fraction(exact_cone_density_at_zero(p, k)); });

  m.def("instance_ids", &instance_ids, py::arg("include_controls") = false);
  m.def("_verify_genus2", [](int dmax) {
    PipelineReport r;
    {
      py::gil_scoped_release release;
      r = verify_genus2(dmax);
    }
    return to_json(r).dump();
  });
  m.def("_verify_genus3", [](std::optional<std::string> only, std::uint64_t seed) {
    SuiteOptions opts;
    opts.seed = seed;
    PipelineReport r;
    {
      py::gil_scoped_release release;
      r = verify_genus3(only, opts);
    }
    return to_json(r).dump();
  });
}

#pragma once

#include <string>

#include <json.hpp>

#include "degloci/birational.hpp"
#include "degloci/certificate.hpp"
#include "degloci/degeneracy.hpp"
#include "degloci/family.hpp"
#include "degloci/monomial_closure.hpp"
#include "degloci/padic.hpp"
#include "degloci/paper_suite.hpp"
#include "degloci/validate.hpp"

namespace degloci {

using Json = nlohmann::ordered_json;

Json to_json(const Poly& p);
Json to_json(const Ideal& I);
Json to_json(const PolyMatrix& M);
Json to_json(const Certificate& c);
Json to_json(const ValidationReport& r);
Json to_json(const BlowupReport& r);
Json to_json(const Chart& c);
Json to_json(const FlatnessReport& r);
Json to_json(const MonomialIdeal& I);
Json to_json(const FlipData& f);
Json to_json(const BlowupExponents& b);
Json to_json(const DensityProfile& p);
Json to_json(const Verdict& v);
Json to_json(const InstanceResult& r);
Json to_json(const PipelineReport& r);

/// {"vars": [...], "entries": [[...], ...]}. Throws ParseError.
PolyMatrix matrix_from_json(const Json& j);
/// {"vars": [...], "generators": [...], "order": "degrevlex" | "lex"}.
Ideal ideal_from_json(const Json& j);
/// {"generators": [[e1, ..., en], ...]}.
MonomialIdeal monomial_ideal_from_json(const Json& j);
/// {"p", "K", "N", "seed", "centers", "threads"}; missing keys keep defaults.
PadicConfig padic_config_from_json(const Json& j);

/// Scaling witness {"weights": {...}, "row_powers": [...], "col_powers": [...]}.
struct ScalingJob {
  PolyMatrix origin;
  std::map<std::string, int> weights;
  std::vector<int> row_powers;
  std::vector<int> col_powers;
};
ScalingJob scaling_job_from_json(const Json& j);

Json read_json_file(const std::string& path);
/// Two-space indentation and a trailing newline.
void write_json_file(const std::string& path, const Json& j);

}  // namespace degloci

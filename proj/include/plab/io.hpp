#pragma once

#include <string>

#include <json.hpp>

#include "plab/norms.hpp"
#include "plab/search.hpp"
#include "plab/verify.hpp"

namespace plab {

inline constexpr const char* kSchemaVersion = "1.0";
inline constexpr const char* kToolVersion = "poincare-lab 0.1.0";

using Json = nlohmann::ordered_json;

// Polynomial wire format (stable contract):
//   { "dim": N, "terms": [ { "alpha": [a1,...,aN], "coef": c }, ... ] }
// Writers emit terms in graded-lex order; readers accept any order but
// reject duplicate alphas, zero coefficients and dimension mismatches,
// naming the offending term.
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);
Polynomial load_polynomial_file(const std::string& path);
void save_polynomial_file(const Polynomial& p, const std::string& path);

std::string hash_string(uint64_t h);

Json params_to_json(const SobolevParams& s);
Json to_json(const RatioReport& r);
Json to_json(const ConstantEstimate& e);
Json to_json(const MediantCheck& m);
Json norm_result_json(const NormResult& r);

// RunRecord wrapper: schema/tool/command/params/timestamp + results payload.
// The timestamp is the only field excluded from reproducibility comparisons.
Json run_record(const std::string& command, Json params, Json results);

// Stream header for JSONL outputs (one record per line after the header).
Json stream_header(const std::string& command, Json params);

// Major-version gate for records this tool reads back (sweep --resume).
void check_schema(const Json& j);

std::string iso8601_now();

} // namespace plab

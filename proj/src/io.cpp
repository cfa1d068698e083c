#include "plab/io.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <set>

namespace plab {

Json polynomial_to_json(const Polynomial& p) {
    Json j;
    j["dim"] = p.dim();
    Json terms = Json::array();
    for (const auto& [a, c] : p.terms()) {
        Json t;
        t["alpha"] = a.entries();
        t["coef"] = c;
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

Polynomial polynomial_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("terms"))
        throw InputError("polynomial: expected an object with \"dim\" and \"terms\"");
    if (!j["dim"].is_number_integer() || j["dim"].get<int>() < 1)
        throw InputError("polynomial: \"dim\" must be an integer >= 1");
    const int dim = j["dim"].get<int>();
    if (!j["terms"].is_array()) throw InputError("polynomial: \"terms\" must be an array");

    Polynomial p(dim);
    std::set<std::vector<int>> seen;
    size_t idx = 0;
    for (const auto& t : j["terms"]) {
        const std::string where = "term #" + std::to_string(idx);
        if (!t.is_object() || !t.contains("alpha") || !t.contains("coef"))
            throw InputError("polynomial: " + where + " needs \"alpha\" and \"coef\"");
        if (!t["alpha"].is_array() || t["alpha"].size() != static_cast<size_t>(dim))
            throw InputError("polynomial: " + where + " has alpha of wrong length (dim=" +
                             std::to_string(dim) + ")");
        std::vector<int> e;
        for (const auto& v : t["alpha"]) {
            if (!v.is_number_integer() || v.get<long long>() < 0)
                throw InputError("polynomial: " + where + " has a negative or non-integer exponent");
            e.push_back(v.get<int>());
        }
        if (!t["coef"].is_number())
            throw InputError("polynomial: " + where + " has a non-numeric coefficient");
        double c = t["coef"].get<double>();
        if (c == 0.0 || !std::isfinite(c))
            throw InputError("polynomial: " + where + " has a zero or non-finite coefficient");
        if (!seen.insert(e).second) {
            MultiIndex a(e);
            throw InputError("polynomial: duplicate alpha [" + a.to_string() + "] at " + where);
        }
        p.add_term(MultiIndex(e), c);
        ++idx;
    }
    return p;
}

Polynomial load_polynomial_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open polynomial file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw InputError("cannot parse JSON in " + path + ": " + e.what());
    }
    return polynomial_from_json(j);
}

void save_polynomial_file(const Polynomial& p, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open output file: " + path);
    out << polynomial_to_json(p).dump(2) << "\n";
}

std::string hash_string(uint64_t h) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Json params_to_json(const SobolevParams& s) {
    Json j;
    j["dim"] = s.dim;
    j["p"] = s.p;
    j["m"] = s.m;
    j["p_star"] = s.p_star;
    if (s.p_exact) j["p_exact"] = fraction_string(*s.p_exact);
    if (s.p_star_exact) j["p_star_exact"] = fraction_string(*s.p_star_exact);
    return j;
}

Json to_json(const RatioReport& r) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["type"] = "ratio_report";
    j["theorem"] = r.theorem;
    j["params"] = params_to_json(r.params);
    j["poly_hash"] = hash_string(r.poly_hash);
    if (r.seed) j["seed"] = *r.seed;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["ratio"] = r.degenerate ? Json(nullptr) : Json(r.ratio);
    j["degenerate"] = r.degenerate;
    j["lhs_err"] = r.lhs_err;
    j["rhs_err"] = r.rhs_err;
    j["work"] = r.work;
    if (r.const_norm_equal) {
        j["sub_identities"] = Json{{"const_norm_equal", *r.const_norm_equal},
                                   {"p0_le_triple", *r.p0_le_triple}};
    }
    return j;
}

Json to_json(const ConstantEstimate& e) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["type"] = "constant_estimate";
    j["params"] = params_to_json(e.params);
    j["value"] = e.degenerate ? Json(nullptr) : Json(e.value);
    j["degenerate"] = e.degenerate;
    j["witness"] = polynomial_to_json(e.witness);
    j["witness_hash"] = hash_string(content_hash(e.witness));
    j["budget_used"] = e.budget_used;
    Json tr = Json::array();
    for (const auto& t : e.trace) tr.push_back(Json::array({t.iteration, t.best}));
    j["trace"] = std::move(tr);
    return j;
}

Json to_json(const MediantCheck& m) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["type"] = "mediant_check";
    j["ratio_full"] = m.ratio_full;
    j["ratio_plus"] = m.ratio_plus ? Json(*m.ratio_plus) : Json(nullptr);
    j["ratio_minus"] = m.ratio_minus ? Json(*m.ratio_minus) : Json(nullptr);
    j["margin"] = m.margin;
    j["single_signed"] = m.single_signed;
    return j;
}

Json norm_result_json(const NormResult& r) {
    Json j;
    j["value"] = r.value;
    j["method"] = norm_method_name(r.method_used);
    j["err_estimate"] = r.err_estimate;
    j["work"] = r.work;
    if (r.exact) j["exact"] = fraction_string(*r.exact);
    return j;
}

Json run_record(const std::string& command, Json params, Json results) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["tool"] = kToolVersion;
    j["command"] = command;
    j["params"] = std::move(params);
    j["timestamp"] = iso8601_now();
    j["results"] = std::move(results);
    return j;
}

Json stream_header(const std::string& command, Json params) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["tool"] = kToolVersion;
    j["command"] = command;
    j["params"] = std::move(params);
    j["timestamp"] = iso8601_now();
    j["stream"] = true;
    return j;
}

void check_schema(const Json& j) {
    if (!j.contains("schema_version") || !j["schema_version"].is_string())
        throw InputError("record has no schema_version");
    std::string v = j["schema_version"].get<std::string>();
    std::string major = v.substr(0, v.find('.'));
    std::string ours(kSchemaVersion);
    if (major != ours.substr(0, ours.find('.')))
        throw InputError("unsupported schema major version: " + v);
}

std::string iso8601_now() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace plab

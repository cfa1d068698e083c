// poincare-lab: numerical laboratory for sign-split ("triple stroke")
// L^p quasi-norms of polynomials on the unit cube, the weak Poincare and
// Sobolev-embedding inequalities they satisfy for p < 1, and empirical
// estimation of the inequality constants.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "plab/io.hpp"

namespace {

using namespace plab;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitWindow = 3;
constexpr int kExitNonConvergence = 4;
constexpr int kExitPartialFailure = 5;

uint64_t default_seed() {
    if (const char* env = std::getenv("POINCARE_LAB_SEED")) {
        char* end = nullptr;
        uint64_t v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
        throw InputError("POINCARE_LAB_SEED is not an unsigned integer");
    }
    return 1;
}

// --p accepts a decimal ("0.9"), an exact fraction ("3/4"), the token
// "boundary" (= N/(N+1), exact) or "boundary+<decimal>".
SobolevParams resolve_params(int dim, const std::string& p_spec, int m) {
    if (p_spec == "boundary") return SobolevParams::make_exact(dim, window_lower_exact(dim), m);
    if (p_spec.rfind("boundary+", 0) == 0) {
        double eps = std::strtod(p_spec.c_str() + 9, nullptr);
        return SobolevParams::make(dim, to_double(window_lower_exact(dim)) + eps, m);
    }
    auto slash = p_spec.find('/');
    if (slash != std::string::npos) {
        long long num = std::strtoll(p_spec.substr(0, slash).c_str(), nullptr, 10);
        long long den = std::strtoll(p_spec.substr(slash + 1).c_str(), nullptr, 10);
        if (den <= 0) throw InputError("--p fraction must have a positive denominator");
        return SobolevParams::make_exact(dim, Rational(num) / Rational(den), m);
    }
    char* end = nullptr;
    double p = std::strtod(p_spec.c_str(), &end);
    if (end == p_spec.c_str() || *end != '\0') throw InputError("cannot parse --p value: " + p_spec);
    return SobolevParams::make(dim, p, m);
}

NormMethod parse_method(const std::string& s) {
    if (s == "auto") return NormMethod::automatic;
    if (s == "quad") return NormMethod::quadrature;
    if (s == "mc") return NormMethod::monte_carlo;
    if (s == "exact") return NormMethod::exact_rational;
    throw InputError("unknown --method: " + s + " (expected quad|mc|exact|auto)");
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot open output file: " + path);
    out << text;
}

struct VerifyOptions {
    std::string theorem = "1.3";
    int dim = 2;
    std::string p_spec = "0.8";
    int m = 1;
    uint64_t samples = 100;
    uint64_t seed = 1;
    double tol = 1e-9;
    int max_degree = 8;
    int support = 8;
    int min_degree = 1;
    std::string sign = "mixed";
    std::string poly_file;
    std::string out;
};

int run_verify(const VerifyOptions& o) {
    if (o.theorem != "1.3" && o.theorem != "1.4" && o.theorem != "1.6")
        throw InputError("--theorem must be one of 1.3, 1.4, 1.6");
    int m = o.theorem == "1.4" ? o.m : 1;
    if (o.theorem != "1.4" && o.m != 1) throw InputError("--m is only meaningful for theorem 1.4");
    SobolevParams params = resolve_params(o.dim, o.p_spec, m);
    RangeCheck rc = range_check(params);
    if (!rc.in_window)
        throw WindowError("parameters rejected before sampling: window requires N/(N+1) <= p < 1 and m < N/p");

    NormConfig cfg;
    cfg.quad.rel_tol = o.tol;

    SamplerConfig sampler;
    sampler.dim = o.dim;
    sampler.max_degree = o.max_degree;
    sampler.support_size = o.support;
    sampler.min_degree = o.min_degree;
    sampler.sign_mode = o.sign == "positive" ? SignMode::positive_only : SignMode::mixed;

    Json params_json;
    params_json["theorem"] = o.theorem;
    params_json["params"] = params_to_json(params);
    params_json["samples"] = o.samples;
    params_json["seed"] = o.seed;
    params_json["tol"] = o.tol;
    params_json["max_degree"] = o.max_degree;
    params_json["support"] = o.support;
    params_json["min_degree"] = o.min_degree;
    params_json["sign"] = o.sign;
    if (!o.poly_file.empty()) params_json["poly_file"] = o.poly_file;

    auto score = [&](const Polynomial& poly) {
        if (o.theorem == "1.3") return verify_poincare(poly, params, cfg);
        if (o.theorem == "1.4") return verify_higher(poly, params, cfg);
        return verify_embedding(poly, params, cfg);
    };

    std::vector<Polynomial> polys;
    std::vector<std::optional<uint64_t>> seeds;
    if (!o.poly_file.empty()) {
        polys.push_back(load_polynomial_file(o.poly_file));
        seeds.push_back(std::nullopt);
    } else {
        for (uint64_t i = 0; i < o.samples; ++i) {
            SamplerConfig sc = sampler;
            sc.seed = child_seed(o.seed, i);
            polys.push_back(sample_polynomial(sc));
            seeds.push_back(sc.seed);
        }
    }

    std::vector<RatioReport> reports(polys.size());
    std::string failure;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int64_t i = 0; i < static_cast<int64_t>(polys.size()); ++i) {
        try {
            reports[static_cast<size_t>(i)] = score(polys[static_cast<size_t>(i)]);
        } catch (const std::exception& e) {
#ifdef _OPENMP
#pragma omp critical
#endif
            if (failure.empty()) failure = e.what();
        }
    }

    std::ostringstream body;
    body << stream_header("verify", params_json).dump() << "\n";
    uint64_t degenerate = 0, oracle_checked = 0, oracle_agreed = 0;
    double max_ratio = -1.0;
    bool sub_identities_ok = true;
    for (size_t i = 0; i < reports.size(); ++i) {
        if (!failure.empty()) break;
        RatioReport& r = reports[i];
        r.seed = seeds[i];
        if (r.degenerate)
            ++degenerate;
        else
            max_ratio = std::max(max_ratio, r.ratio);
        if (r.const_norm_equal && (!*r.const_norm_equal || !*r.p0_le_triple)) sub_identities_ok = false;
        // periodic independent cross-check of one quasi-norm against Monte Carlo
        if (i % 50 == 0 && !r.degenerate) {
            Decomposition d = decompose(polys[i]);
            const Polynomial& part = d.plus.is_zero() ? d.minus : d.plus;
            NormResult quad_val = power_integral(part, params.p_star, cfg);
            MonteCarloConfig mc;
            mc.samples = 20000;
            mc.seed = child_seed(o.seed, 0xABCD0000ULL + i);
            QuadResult mc_val = integrate_power_mc(part, params.p_star, mc);
            ++oracle_checked;
            if (std::abs(quad_val.value - mc_val.value) <= 4.0 * mc_val.err_estimate + 1e-12)
                ++oracle_agreed;
        }
        body << to_json(r).dump() << "\n";
    }
    if (!failure.empty()) {
        body << Json{{"type", "truncated"}, {"error", failure}}.dump() << "\n";
        write_text(o.out, body.str());
        throw ConvergenceError(failure);
    }

    Json summary;
    summary["schema_version"] = kSchemaVersion;
    summary["type"] = "summary";
    summary["samples"] = polys.size();
    summary["degenerate_count"] = degenerate;
    summary["max_ratio"] = max_ratio < 0.0 ? Json(nullptr) : Json(max_ratio);
    summary["oracle_checked"] = oracle_checked;
    summary["oracle_agreed"] = oracle_agreed;
    if (o.theorem == "1.6") summary["sub_identities_ok"] = sub_identities_ok;
    body << summary.dump() << "\n";
    write_text(o.out, body.str());
    return kExitOk;
}

struct SweepOptions {
    std::string dims = "1,2,3";
    std::string ps = "boundary+0.01,0.9,0.97";
    int m = 1;
    uint64_t budget = 200;
    uint64_t climb = 200;
    int max_degree = 6;
    int support = 6;
    uint64_t seed = 1;
    double tol = 1e-9;
    std::string out;
    bool resume = false;
};

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

int run_sweep(const SweepOptions& o) {
    std::vector<int> dims;
    for (const auto& d : split_list(o.dims)) dims.push_back(std::stoi(d));
    std::vector<std::string> ps = split_list(o.ps);
    if (dims.empty() || ps.empty()) throw InputError("empty sweep grid");

    struct Cell {
        int dim;
        std::string p_spec;
    };
    std::vector<Cell> cells;
    for (int d : dims)
        for (const auto& p : ps) cells.push_back({d, p});

    Json params_json;
    params_json["dims"] = o.dims;
    params_json["ps"] = o.ps;
    params_json["m"] = o.m;
    params_json["budget"] = o.budget;
    params_json["climb"] = o.climb;
    params_json["max_degree"] = o.max_degree;
    params_json["support"] = o.support;
    params_json["seed"] = o.seed;
    params_json["tol"] = o.tol;

    // completed cells of a previous run are kept byte-for-byte
    std::vector<std::string> prior(cells.size());
    if (o.resume && !o.out.empty() && std::filesystem::exists(o.out)) {
        std::ifstream in(o.out);
        std::string line;
        bool first = true;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            Json j = Json::parse(line, nullptr, false);
            if (j.is_discarded()) continue;
            if (first) {
                check_schema(j);
                first = false;
                continue;
            }
            if (j.value("type", "") == "sweep_cell" && !j["estimate"].is_null()) {
                size_t idx = j.value("index", cells.size());
                if (idx < cells.size()) prior[idx] = line;
            }
        }
    }

    SearchConfig base;
    base.random_budget = o.budget;
    base.climb_budget = o.climb;
    base.sampler.max_degree = o.max_degree;
    base.sampler.support_size = o.support;
    base.sampler.sign_mode = SignMode::positive_only;
    base.seed = o.seed;
    base.norms.quad.rel_tol = o.tol;

    size_t skipped = 0, failed = 0;
    std::vector<std::string> lines(cells.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int64_t i = 0; i < static_cast<int64_t>(cells.size()); ++i) {
        const Cell& cell = cells[static_cast<size_t>(i)];
        if (!prior[static_cast<size_t>(i)].empty()) continue;
        Json rec;
        rec["schema_version"] = kSchemaVersion;
        rec["type"] = "sweep_cell";
        rec["index"] = i;
        try {
            SobolevParams params = resolve_params(cell.dim, cell.p_spec, o.m);
            SearchConfig cfg = base;
            cfg.seed = child_seed(o.seed, static_cast<uint64_t>(i));
            cfg.sampler.dim = cell.dim;
            ConstantEstimate est = estimate_constant(params, cfg);
            rec["estimate"] = to_json(est);
            rec["error"] = nullptr;
        } catch (const std::exception& e) {
            rec["estimate"] = nullptr;
            rec["error"] = e.what();
        }
        lines[static_cast<size_t>(i)] = rec.dump();
    }

    std::ostringstream body;
    body << stream_header("sweep", params_json).dump() << "\n";
    std::map<int, std::ostringstream> plots;
    for (size_t i = 0; i < cells.size(); ++i) {
        std::string line = !prior[i].empty() ? prior[i] : lines[i];
        if (!prior[i].empty()) ++skipped;
        Json j = Json::parse(line);
        if (j["estimate"].is_null())
            ++failed;
        else if (!j["estimate"]["value"].is_null())
            plots[cells[i].dim] << j["estimate"]["params"]["p"].dump() << " "
                                << j["estimate"]["value"].dump() << "\n";
        body << line << "\n";
    }
    Json summary;
    summary["schema_version"] = kSchemaVersion;
    summary["type"] = "summary";
    summary["cells"] = cells.size();
    summary["failed"] = failed;
    summary["skipped"] = skipped;
    body << summary.dump() << "\n";
    write_text(o.out, body.str());

    if (!o.out.empty()) {
        for (auto& [dim, text] : plots) {
            std::ofstream pf(o.out + ".N" + std::to_string(dim) + ".dat");
            pf << text.str();
        }
    }
    if (skipped) std::cerr << "sweep: skipped " << skipped << " completed cell(s)\n";
    return failed ? kExitPartialFailure : kExitOk;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"triple-stroke quasi-norm laboratory on the unit cube"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    // decompose
    auto* cmd_dec = app.add_subcommand("decompose", "split a polynomial into constant/positive/negative parts");
    std::string dec_in, dec_out;
    cmd_dec->add_option("--in", dec_in, "polynomial JSON file")->required();
    cmd_dec->add_option("--out", dec_out, "output file (stdout if omitted)");

    // norm
    auto* cmd_norm = app.add_subcommand("norm", "triple-stroke L^q quasi-norm of a polynomial");
    std::string norm_in, norm_out, norm_method = "auto";
    double norm_q = 1.0, norm_tol = 1e-9;
    uint64_t norm_seed = default_seed(), norm_mc_samples = 1'000'000;
    cmd_norm->add_option("--in", norm_in, "polynomial JSON file")->required();
    cmd_norm->add_option("--q", norm_q, "norm exponent q > 0")->required();
    cmd_norm->add_option("--method", norm_method, "quad|mc|exact|auto");
    cmd_norm->add_option("--tol", norm_tol, "relative quadrature tolerance");
    cmd_norm->add_option("--seed", norm_seed, "Monte Carlo seed");
    cmd_norm->add_option("--mc-samples", norm_mc_samples, "Monte Carlo sample count");
    cmd_norm->add_option("--out", norm_out, "output file (stdout if omitted)");

    // monomial-table
    auto* cmd_tab = app.add_subcommand("monomial-table", "ratio table over a box of monomial exponents");
    int tab_dim = 1, tab_box = 10, tab_m = 1;
    std::string tab_p = "0.8", tab_out;
    cmd_tab->add_option("--dim", tab_dim, "dimension N")->required();
    cmd_tab->add_option("--p", tab_p, "exponent p (decimal, fraction, or 'boundary')")->required();
    cmd_tab->add_option("--m", tab_m, "derivative order (must be 1)");
    cmd_tab->add_option("--box", tab_box, "entry bound K of the scanned box")->required();
    cmd_tab->add_option("--out", tab_out, "CSV output file (stdout if omitted)");

    // verify
    auto* cmd_ver = app.add_subcommand("verify", "sample polynomials and report inequality ratios");
    VerifyOptions vo;
    vo.seed = default_seed();
    cmd_ver->add_option("--theorem", vo.theorem, "1.3 (Poincare), 1.4 (order m), 1.6 (embedding)")->required();
    cmd_ver->add_option("--dim", vo.dim, "dimension N")->required();
    cmd_ver->add_option("--p", vo.p_spec, "exponent p")->required();
    cmd_ver->add_option("--m", vo.m, "derivative order for theorem 1.4");
    cmd_ver->add_option("--samples", vo.samples, "number of random polynomials");
    cmd_ver->add_option("--seed", vo.seed, "master seed");
    cmd_ver->add_option("--tol", vo.tol, "relative quadrature tolerance");
    cmd_ver->add_option("--max-degree", vo.max_degree, "sampler degree bound");
    cmd_ver->add_option("--support", vo.support, "sampler support size");
    cmd_ver->add_option("--min-degree", vo.min_degree, "sampler minimum degree (0 or 1)");
    cmd_ver->add_option("--sign", vo.sign, "mixed|positive");
    cmd_ver->add_option("--poly", vo.poly_file, "score this polynomial file instead of sampling");
    cmd_ver->add_option("--out", vo.out, "JSONL output file (stdout if omitted)");

    // search-constant
    auto* cmd_sc = app.add_subcommand("search-constant", "estimate the best inequality constant in one cell");
    int sc_dim = 1, sc_m = 1, sc_maxdeg = 6, sc_support = 6, sc_mindeg = 1, sc_patience = 50;
    std::string sc_p = "0.9", sc_out, sc_sign = "positive";
    uint64_t sc_budget = 500, sc_climb = 500, sc_seed = default_seed();
    double sc_tol = 1e-9, sc_sigma0 = 0.5, sc_sigma_min = 1e-4;
    bool sc_no_monomial = false;
    cmd_sc->add_option("--dim", sc_dim, "dimension N")->required();
    cmd_sc->add_option("--p", sc_p, "exponent p")->required();
    cmd_sc->add_option("--m", sc_m, "derivative order");
    cmd_sc->add_option("--budget", sc_budget, "random-sample budget");
    cmd_sc->add_option("--climb", sc_climb, "hill-climb budget");
    cmd_sc->add_option("--max-degree", sc_maxdeg, "sampler degree bound");
    cmd_sc->add_option("--support", sc_support, "sampler support size");
    cmd_sc->add_option("--min-degree", sc_mindeg, "sampler minimum degree");
    cmd_sc->add_option("--sign", sc_sign, "mixed|positive (mixed only for falsification runs)");
    cmd_sc->add_option("--seed", sc_seed, "master seed");
    cmd_sc->add_option("--tol", sc_tol, "relative quadrature tolerance");
    cmd_sc->add_option("--sigma0", sc_sigma0, "initial climb step");
    cmd_sc->add_option("--sigma-min", sc_sigma_min, "climb stop threshold");
    cmd_sc->add_option("--patience", sc_patience, "non-improvements before halving the step");
    cmd_sc->add_flag("--no-monomial-seed", sc_no_monomial, "skip the monomial seeding pass");
    cmd_sc->add_option("--out", sc_out, "output file (stdout if omitted)");

    // sweep
    auto* cmd_sw = app.add_subcommand("sweep", "search-constant over a (N, p) grid");
    SweepOptions so;
    so.seed = default_seed();
    cmd_sw->add_option("--dims", so.dims, "comma list of dimensions");
    cmd_sw->add_option("--ps", so.ps, "comma list of p specs (decimal, fraction, boundary, boundary+eps)");
    cmd_sw->add_option("--m", so.m, "derivative order");
    cmd_sw->add_option("--budget", so.budget, "random-sample budget per cell");
    cmd_sw->add_option("--climb", so.climb, "hill-climb budget per cell");
    cmd_sw->add_option("--max-degree", so.max_degree, "sampler degree bound");
    cmd_sw->add_option("--support", so.support, "sampler support size");
    cmd_sw->add_option("--seed", so.seed, "master seed");
    cmd_sw->add_option("--tol", so.tol, "relative quadrature tolerance");
    cmd_sw->add_option("--out", so.out, "JSONL output file")->required();
    cmd_sw->add_flag("--resume", so.resume, "keep completed cells from an existing output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    if (cmd_dec->parsed()) {
        Polynomial p = load_polynomial_file(dec_in);
        Decomposition d = decompose(p);
        Json rec;
        rec["schema_version"] = kSchemaVersion;
        rec["type"] = "decomposition";
        rec["p0"] = d.p0;
        rec["plus"] = polynomial_to_json(d.plus);
        rec["minus"] = polynomial_to_json(d.minus);
        Json out = run_record("decompose", Json{{"in", dec_in}}, Json::array({rec}));
        write_text(dec_out, out.dump(2) + "\n");
        return kExitOk;
    }

    if (cmd_norm->parsed()) {
        Polynomial p = load_polynomial_file(norm_in);
        NormConfig cfg;
        cfg.method = parse_method(norm_method);
        cfg.quad.rel_tol = norm_tol;
        cfg.mc.samples = norm_mc_samples;
        cfg.mc.seed = norm_seed;
        TripleStrokeResult t = triple_stroke_norm(p, norm_q, cfg);
        Json rec;
        rec["schema_version"] = kSchemaVersion;
        rec["type"] = "triple_stroke_norm";
        rec["q"] = norm_q;
        rec["value"] = t.value;
        rec["p0_abs"] = t.p0_abs;
        rec["plus"] = norm_result_json(t.plus);
        rec["minus"] = norm_result_json(t.minus);
        if (t.exact) rec["exact"] = fraction_string(*t.exact);
        if (cfg.method == NormMethod::monte_carlo) rec["rng"] = kMonteCarloGenerator;
        Json params;
        params["in"] = norm_in;
        params["q"] = norm_q;
        params["method"] = norm_method;
        params["tol"] = norm_tol;
        params["seed"] = norm_seed;
        params["mc_samples"] = norm_mc_samples;
        Json out = run_record("norm", params, Json::array({rec}));
        write_text(norm_out, out.dump(2) + "\n");
        return kExitOk;
    }

    if (cmd_tab->parsed()) {
        if (tab_m != 1) throw InputError("monomial-table: --m must be 1");
        SobolevParams params = resolve_params(tab_dim, tab_p, 1);
        RangeCheck rc = range_check(params);
        if (!rc.in_window) {
            std::ostringstream msg;
            msg << "monomial-table: parameters out of window (need " << rc.lower
                << " <= p < 1; got p = " << params.p << ")";
            throw WindowError(msg.str());
        }
        std::ostringstream csv;
        csv << "alpha,lp_star_norm,grad_lp_norm,ratio\n";
        csv.precision(17);
        double best = -1.0;
        std::string best_alpha;
        double best_num = 0.0, best_den = 0.0;
        uint64_t base = static_cast<uint64_t>(tab_box) + 1;
        uint64_t total = 1;
        for (int j = 0; j < tab_dim; ++j) total *= base;
        for (uint64_t flat = 1; flat < total; ++flat) {
            uint64_t rem = flat;
            std::vector<int> e(static_cast<size_t>(tab_dim));
            for (int j = 0; j < tab_dim; ++j) {
                e[static_cast<size_t>(j)] = static_cast<int>(rem % base);
                rem /= base;
            }
            MultiIndex alpha(e);
            double num = monomial_norm_closed(alpha, params.p_star);
            double den = monomial_gradient_norm_closed(alpha, params.p);
            double ratio = num / den;
            csv << alpha.to_string() << "," << num << "," << den << "," << ratio << "\n";
            if (ratio > best) {
                best = ratio;
                best_alpha = alpha.to_string();
                best_num = num;
                best_den = den;
            }
        }
        csv << "sup@" << best_alpha << "," << best_num << "," << best_den << "," << best << "\n";
        write_text(tab_out, csv.str());
        return kExitOk;
    }

    if (cmd_ver->parsed()) return run_verify(vo);

    if (cmd_sc->parsed()) {
        SobolevParams params = resolve_params(sc_dim, sc_p, sc_m);
        SearchConfig cfg;
        cfg.sampler.dim = sc_dim;
        cfg.sampler.max_degree = sc_maxdeg;
        cfg.sampler.support_size = sc_support;
        cfg.sampler.min_degree = sc_mindeg;
        cfg.sampler.sign_mode = sc_sign == "mixed" ? SignMode::mixed : SignMode::positive_only;
        cfg.random_budget = sc_budget;
        cfg.climb_budget = sc_climb;
        cfg.sigma0 = sc_sigma0;
        cfg.sigma_min = sc_sigma_min;
        cfg.patience = sc_patience;
        cfg.seed_monomials = !sc_no_monomial;
        cfg.seed = sc_seed;
        cfg.norms.quad.rel_tol = sc_tol;
        ConstantEstimate est = estimate_constant(params, cfg);
        Json params_json;
        params_json["params"] = params_to_json(params);
        params_json["budget"] = sc_budget;
        params_json["climb"] = sc_climb;
        params_json["max_degree"] = sc_maxdeg;
        params_json["support"] = sc_support;
        params_json["min_degree"] = sc_mindeg;
        params_json["sign"] = sc_sign;
        params_json["seed"] = sc_seed;
        params_json["tol"] = sc_tol;
        params_json["sigma0"] = sc_sigma0;
        params_json["sigma_min"] = sc_sigma_min;
        params_json["patience"] = sc_patience;
        params_json["monomial_seed"] = !sc_no_monomial;
        Json out = run_record("search-constant", params_json, Json::array({to_json(est)}));
        write_text(sc_out, out.dump(2) + "\n");
        return kExitOk;
    }

    if (cmd_sw->parsed()) return run_sweep(so);

    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const plab::WindowError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitWindow;
    } catch (const plab::ConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNonConvergence;
    } catch (const plab::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}

#include "vperiod/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <thread>

#include "vperiod/expsums.hpp"
#include "vperiod/version.hpp"

namespace vperiod {

namespace {

using Clock = std::chrono::steady_clock;

Json make_report(const std::string& command, Json inputs, Json outputs, double ms) {
    Json rep;
    rep["command"] = command;
    rep["inputs"] = std::move(inputs);
    rep["outputs"] = std::move(outputs);
    rep["timing_ms"] = ms;
    rep["version"] = kVersion;
    return rep;
}

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Uniform error mapping for command bodies.
template <typename Fn>
CliResult guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const FeasibilityError& e) {
        CliResult r;
        r.exit_code = kExitFeasibility;
        r.message = e.what();
        if (e.largest_feasible_k > 0)
            r.message += " (largest feasible kmax: " + std::to_string(e.largest_feasible_k) + ")";
        return r;
    } catch (const LaurentParseError& e) {
        return CliResult{kExitUsage, {}, e.what()};
    } catch (const std::invalid_argument& e) {
        return CliResult{kExitUsage, {}, e.what()};
    } catch (const std::domain_error& e) {
        return CliResult{kExitFeasibility, {}, e.what()};
    } catch (const std::exception& e) {
        return CliResult{kExitInternal, {}, std::string("internal error: ") + e.what()};
    }
}

std::uint64_t effective_point_cap(const CliOptions& opts) {
    return opts.unsafe_caps ? 1'000'000'000'000ull : kDefaultPointCap;
}

Json recurrence_to_json(const MinimalRecurrence& rec) {
    Json j;
    j["dim"] = rec.dim;
    j["window_certified"] = rec.window_certified;
    j["proper"] = rec.proper;
    Json coeffs = Json::array();
    for (const CycNum& c : rec.coeffs) coeffs.push_back(cycnum_to_json(c));
    j["coeffs"] = std::move(coeffs);
    return j;
}

}  // namespace

CliResult cmd_bound(std::uint64_t m, std::uint64_t n, const CliOptions&) {
    return guarded([&] {
        auto t0 = Clock::now();
        BoundReport b = bound_R(m, n);
        Json inputs;
        inputs["m"] = m;
        inputs["n"] = n;
        Json outputs;
        outputs["bound"] = bound_to_json(b);
        return CliResult{kExitOk, make_report("bound", inputs, outputs, ms_since(t0)), {}};
    });
}

CliResult cmd_lrs(const std::string& input_path, std::optional<std::uint64_t> kmax,
                  std::optional<std::uint64_t> ell, const CliOptions&) {
    return guarded([&] {
        auto t0 = Clock::now();
        Lrs L = lrs_from_file(input_path);
        const std::uint64_t K = kmax ? *kmax : default_window(L.modulus(), L.dim());
        if (K < 2) throw std::invalid_argument("lrs: window must contain at least 2 terms");
        LrsAnalysis an = analyze_lrs(L, K, {}, ell);

        Json inputs;
        inputs["input"] = input_path;
        inputs["m"] = L.modulus();
        inputs["n"] = L.dim();
        inputs["kmax"] = K;
        if (ell) inputs["ell"] = *ell;

        Json outputs;
        outputs["degrees"] = an.degrees;
        outputs["period"] = period_to_json(an.period);
        outputs["R_n"] = bound_to_json(an.bound_n);
        outputs["R_2n"] = bound_to_json(an.bound_2n);
        outputs["divides_R_n"] = an.divides_R_n;
        outputs["divides_R_2n"] = an.divides_R_2n;
        if (an.certificate) {
            Json cert;
            cert["ell"] = an.certificate->ell;
            cert["t"] = an.certificate->t;
            cert["s_ell"] = int_to_string(an.certificate->s_ell);
            outputs["certificate"] = std::move(cert);
        }
        outputs["zero_set"] = zeroset_to_json(an.zeros);
        return CliResult{kExitOk, make_report("lrs", inputs, outputs, ms_since(t0)), {}};
    });
}

CliResult cmd_expsum(std::uint64_t p, unsigned f, const std::string& poly, unsigned c,
                     std::optional<std::uint64_t> kmax, const CliOptions& opts) {
    return guarded([&] {
        auto t0 = Clock::now();
        auto base = GaloisField::make(p, f);
        LaurentPoly lp = parse_laurent_poly(poly, *base);
        const std::uint64_t cap = effective_point_cap(opts);
        std::uint64_t K = kmax ? *kmax : std::min<std::uint64_t>(
                                             largest_feasible_k(*base, lp.mvars, cap), 10);
        if (K < 1) throw std::invalid_argument("expsum: kmax must be at least 1");
        ExpSumSpec spec{base, lp, c};
        std::vector<CycNum> S = exp_sum_range(spec, K, opts.threads, cap);

        Json inputs;
        inputs["p"] = p;
        inputs["f"] = f;
        inputs["poly"] = poly;
        inputs["c"] = c;
        inputs["kmax"] = K;

        std::vector<SubfieldDesc> fields;
        fields.reserve(S.size());
        for (const CycNum& s : S) fields.push_back(fixing_subgroup(s));
        Json outputs;
        Json sj = Json::array();
        for (const CycNum& s : S) sj.push_back(cycnum_to_json(s));
        outputs["S"] = std::move(sj);
        Json degs = Json::array();
        for (const auto& fd : fields) degs.push_back(fd.degree);
        outputs["degrees"] = std::move(degs);

        MinimalRecurrence rec = minimal_recurrence(S);
        outputs["recurrence"] = recurrence_to_json(rec);

        Json period_json;
        bool divides = false;
        BoundReport R = bound_R(p * c, std::max<std::uint64_t>(rec.dim, 1));
        if (S.size() >= 2) {
            PeriodReport pr = detect_virtual_period<SubfieldDesc>(
                std::span<const SubfieldDesc>(fields),
                [](const SubfieldDesc& x, const SubfieldDesc& y) { return field_equal(x, y); });
            if (pr.found) {
                pr = verify_against_bound(pr, R.R);
                divides = !pr.bound_violation;
            }
            period_json = period_to_json(pr);
        }
        outputs["period"] = std::move(period_json);
        outputs["R"] = bound_to_json(R);
        outputs["divides_R"] = divides;
        return CliResult{kExitOk, make_report("expsum", inputs, outputs, ms_since(t0)), {}};
    });
}

CliResult cmd_gauss(std::uint64_t p, unsigned f, std::uint64_t d, std::uint64_t a,
                    std::uint64_t kmax, const CliOptions& opts) {
    return guarded([&] {
        auto t0 = Clock::now();
        GaussStudy st = gauss_study(p, f, d, a, kmax, opts.threads,
                                    opts.unsafe_caps ? 1'000'000'000ull : 4'000'000ull);
        Json inputs;
        inputs["p"] = p;
        inputs["f"] = f;
        inputs["d"] = d;
        inputs["a"] = a;
        inputs["kmax"] = kmax;

        Json outputs;
        Json sj = Json::array();
        for (const CycNum& s : st.S) sj.push_back(cycnum_to_json(s));
        outputs["S"] = std::move(sj);
        outputs["degrees"] = st.degrees;
        outputs["prefix_len"] = st.prefix_len;
        outputs["recurrence_dim"] = st.rec.dim;
        outputs["period"] = period_to_json(st.period);
        outputs["detected"] = st.period.found ? Json(st.period.r) : Json(nullptr);
        outputs["predicted"] = st.predicted ? Json(*st.predicted) : Json(nullptr);
        outputs["match"] = st.match ? Json(*st.match) : Json(nullptr);
        return CliResult{kExitOk, make_report("gauss", inputs, outputs, ms_since(t0)), {}};
    });
}

CliResult cmd_kloosterman(std::uint64_t p, unsigned f, unsigned n, std::uint64_t a,
                          std::uint64_t kmax, const CliOptions& opts) {
    return guarded([&] {
        auto t0 = Clock::now();
        KloostermanStudy st =
            kloosterman_study(p, f, n, a, kmax, opts.threads, effective_point_cap(opts));
        Json inputs;
        inputs["p"] = p;
        inputs["f"] = f;
        inputs["n"] = n;
        inputs["a"] = a;
        inputs["kmax"] = kmax;

        Json outputs;
        Json sj = Json::array();
        for (const CycNum& s : st.S) sj.push_back(cycnum_to_json(s));
        outputs["S"] = std::move(sj);
        outputs["degrees"] = st.degrees;
        outputs["recurrence_dim"] = st.rec.dim;
        outputs["period"] = period_to_json(st.period);
        outputs["R"] = bound_to_json(st.bound);
        outputs["divides_R"] = st.divides_bound;
        return CliResult{kExitOk, make_report("kloosterman", inputs, outputs, ms_since(t0)), {}};
    });
}

std::string render_report(const Json& report, const CliOptions& opts) {
    if (opts.output == "csv") return json_to_csv(report);
    return report.dump(2) + "\n";
}

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"virtual periods of generating-field sequences of linear recurrences "
                 "over cyclotomic fields, with exponential-sum studies"};
    app.require_subcommand(1);

    CliOptions opts;
    opts.threads = std::max(1u, std::thread::hardware_concurrency());
    app.add_option("--output", opts.output, "report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--threads", opts.threads, "torus sweep parallelism")->capture_default_str();
    std::uint64_t seed_val = 0;
    auto* seed_opt =
        app.add_option("--seed", seed_val, "seed (reserved for randomized test generation)");
    app.add_flag("--unsafe-caps", opts.unsafe_caps,
                 "override desk-scale caps; prints a cost estimate first");

    // bound
    std::uint64_t b_m = 0, b_n = 0;
    auto* bound_cmd = app.add_subcommand("bound", "compute the divisor bound R_{m,n}");
    bound_cmd->add_option("--m", b_m, "cyclotomic modulus")->required();
    bound_cmd->add_option("--n", b_n, "recurrence dimension")->required();

    // lrs
    std::string lrs_input;
    std::uint64_t lrs_kmax = 0, lrs_ell = 0;
    auto* lrs_cmd = app.add_subcommand("lrs", "analyze a linear recurrence sequence file");
    lrs_cmd->add_option("--input", lrs_input, "Lrs JSON file")->required();
    auto* lrs_kmax_opt = lrs_cmd->add_option("--kmax", lrs_kmax, "window size");
    auto* lrs_ell_opt = lrs_cmd->add_option("--ell", lrs_ell, "force this split prime");

    // expsum
    std::uint64_t e_p = 0, e_kmax = 0;
    unsigned e_f = 1, e_c = 1;
    std::string e_poly;
    auto* exp_cmd = app.add_subcommand("expsum", "exact toric exponential sums S_1..S_kmax");
    exp_cmd->add_option("--p", e_p, "characteristic")->required();
    exp_cmd->add_option("--f", e_f, "base field degree over F_p")->required();
    exp_cmd->add_option("--poly", e_poly, "Laurent polynomial, e.g. \"x1 + g^3*x1^-1*x2\"")
        ->required();
    exp_cmd->add_option("--c", e_c, "multiplicative character order")->capture_default_str();
    auto* e_kmax_opt = exp_cmd->add_option("--kmax", e_kmax, "number of sums");

    // gauss
    std::uint64_t g_p = 0, g_d = 0, g_a = 0, g_kmax = 40;
    unsigned g_f = 1;
    auto* gauss_cmd = app.add_subcommand("gauss", "period study of f = x^d + a");
    gauss_cmd->add_option("--p", g_p, "characteristic")->required();
    gauss_cmd->add_option("--f", g_f, "base field degree over F_p")->required();
    gauss_cmd->add_option("--d", g_d, "exponent d | q-1")->required();
    gauss_cmd->add_option("--a", g_a, "constant term (field element encoding)")->required();
    gauss_cmd->add_option("--kmax", g_kmax, "window size")->capture_default_str();

    // kloosterman
    std::uint64_t k_p = 0, k_a = 1, k_kmax = 10;
    unsigned k_f = 1, k_n = 2;
    auto* kl_cmd = app.add_subcommand("kloosterman", "Kloosterman sum study");
    kl_cmd->add_option("--p", k_p, "characteristic")->required();
    kl_cmd->add_option("--f", k_f, "base field degree over F_p")->required();
    kl_cmd->add_option("--n", k_n, "dimension (number of variables + 1)")->required();
    kl_cmd->add_option("--a", k_a, "parameter a (field element encoding)")->required();
    kl_cmd->add_option("--kmax", k_kmax, "window size")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    if (seed_opt->count() > 0) opts.seed = seed_val;

    if (opts.unsafe_caps) {
        std::cerr << "warning: desk caps overridden; sweeps may take up to ~"
                  << effective_point_cap(opts) << " point evaluations per sum\n";
    }

    CliResult result;
    if (*bound_cmd) {
        result = cmd_bound(b_m, b_n, opts);
    } else if (*lrs_cmd) {
        result = cmd_lrs(lrs_input,
                         lrs_kmax_opt->count() ? std::optional<std::uint64_t>(lrs_kmax)
                                               : std::nullopt,
                         lrs_ell_opt->count() ? std::optional<std::uint64_t>(lrs_ell)
                                              : std::nullopt,
                         opts);
    } else if (*exp_cmd) {
        result = cmd_expsum(e_p, e_f, e_poly, e_c,
                            e_kmax_opt->count() ? std::optional<std::uint64_t>(e_kmax)
                                                : std::nullopt,
                            opts);
    } else if (*gauss_cmd) {
        result = cmd_gauss(g_p, g_f, g_d, g_a, g_kmax, opts);
    } else if (*kl_cmd) {
        result = cmd_kloosterman(k_p, k_f, k_n, k_a, k_kmax, opts);
    }

    if (result.exit_code != kExitOk) {
        std::cerr << "error: " << result.message << "\n";
        return result.exit_code;
    }
    std::cout << render_report(result.report, opts);
    return kExitOk;
}

}  // namespace vperiod

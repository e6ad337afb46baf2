#include "hcross/experiment.hpp"

#include "hcross/errors.hpp"
#include "hcross/extremal.hpp"
#include "hcross/freq_index.hpp"
#include "hcross/io.hpp"
#include "hcross/norms.hpp"
#include "hcross/sampling.hpp"
#include "hcross/smallwidths.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <limits>
#include <sstream>

#ifndef HCROSS_VERSION
#define HCROSS_VERSION "0.0.0"
#endif

namespace hcross {

using nlohmann::json;

namespace {

const std::vector<std::string> kTags{"T1", "T2", "T3", "T4", "T5-family", "lemmaA", "nikolskii", "entropy44"};

bool is_rate_tag(const std::string& t) { return t == "T1" || t == "T2" || t == "T3" || t == "T4"; }

double ext_real(const json& v, const char* key) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return parse_extended_real(v.get<std::string>());
    throw ValidationError(std::string("config: '") + key + "' must be a number or \"inf\"");
}

json ext_json(double v) { return std::isinf(v) ? json("inf") : json(v); }

std::string utc_now() {
    const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string hex(std::uint64_t v) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

SweepParams sweep_params(const ExperimentConfig& c) {
    SweepParams sp;
    sp.p = c.p;
    sp.q = c.q;
    sp.theta = c.theta;
    sp.r = c.r;
    sp.gamma_mode = c.gamma_mode;
    sp.gamma_prime_weight = c.gamma_prime_weight;
    sp.n_min = c.n_min;
    sp.n_max = c.n_max;
    sp.with_best_ub = true;
    return sp;
}

json fit_json(const RateFit& f) {
    return json{{"mode", f.mode == FitMode::Free ? "free" : "slope-fixed"},
                {"a_hat", f.a_hat},
                {"b_hat", f.b_hat},
                {"c_hat", f.c_hat},
                {"residual_rms", f.residual_rms},
                {"a_theory", f.a_theory},
                {"b_theory", f.b_theory}};
}

} // namespace

std::string_view version() { return HCROSS_VERSION; }

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("config: ") + e.what());
    }
    if (!j.is_object()) throw ValidationError("config: top level must be an object");
    ExperimentConfig c;
    try {
        c.schema_version = j.value("schema_version", kSchemaVersion);
        c.theorem = j.at("theorem").get<std::string>();
        c.d = j.value("d", c.d);
        if (j.contains("p")) c.p = ext_real(j.at("p"), "p");
        if (j.contains("q")) c.q = ext_real(j.at("q"), "q");
        if (j.contains("theta")) c.theta = ext_real(j.at("theta"), "theta");
        c.r = j.value("r", std::vector<double>{});
        if (j.contains("gamma_mode")) c.gamma_mode = parse_gamma_mode(j.at("gamma_mode").get<std::string>());
        c.gamma_prime_weight = j.value("gamma_prime_weight", c.gamma_prime_weight);
        if (j.contains("n_range")) {
            const auto nr = j.at("n_range").get<std::vector<int>>();
            if (nr.size() != 2) throw ValidationError("config: n_range must be [n_min, n_max]");
            c.n_min = nr[0];
            c.n_max = nr[1];
        }
        c.n_min = j.value("n_min", c.n_min);
        c.n_max = j.value("n_max", c.n_max);
        c.seed = j.value("seed", c.seed);
        c.output = j.value("output", c.output);
        if (j.contains("alpha")) {
            const json& a = j.at("alpha");
            c.alpha = a.is_array() ? a.get<std::vector<double>>() : std::vector<double>{a.get<double>()};
        }
        c.l_min = j.value("l_min", c.l_min);
        c.l_max = j.value("l_max", c.l_max);
        if (j.contains("lemma_mode")) {
            const auto m = j.at("lemma_mode").get<std::string>();
            if (m == "gamma")
                c.lemma_mode = LemmaAMode::GammaOnGamma;
            else if (m == "gamma-prime")
                c.lemma_mode = LemmaAMode::GammaPrimeOnGamma;
            else
                throw ValidationError("config: lemma_mode must be gamma or gamma-prime");
        }
        c.samples = j.value("samples", c.samples);
        c.max_degree = j.value("max_degree", c.max_degree);
        c.terms = j.value("terms", c.terms);
        c.clouds = j.value("clouds", c.clouds);
        c.points = j.value("points", c.points);
        c.dim = j.value("dim", c.dim);
        if (j.contains("cloud_p")) c.cloud_p = ext_real(j.at("cloud_p"), "cloud_p");
        if (j.contains("eps")) c.eps = j.at("eps").get<std::vector<double>>();
    } catch (const json::exception& e) {
        throw ValidationError(std::string("config: ") + e.what());
    }
    c.validate();
    return c;
}

std::string ExperimentConfig::canonical_json() const {
    json j{{"schema_version", schema_version},
           {"theorem", theorem},
           {"d", d},
           {"p", ext_json(p)},
           {"q", ext_json(q)},
           {"theta", ext_json(theta)},
           {"r", r},
           {"gamma_mode", std::string(to_string(gamma_mode))},
           {"gamma_prime_weight", gamma_prime_weight},
           {"n_min", n_min},
           {"n_max", n_max},
           {"seed", seed},
           {"alpha", alpha},
           {"l_min", l_min},
           {"l_max", l_max},
           {"lemma_mode", lemma_mode == LemmaAMode::GammaOnGamma ? "gamma" : "gamma-prime"},
           {"samples", samples},
           {"max_degree", max_degree},
           {"terms", terms},
           {"clouds", clouds},
           {"points", points},
           {"dim", dim},
           {"cloud_p", ext_json(cloud_p)},
           {"eps", eps}};
    return j.dump();
}

std::uint64_t ExperimentConfig::hash() const { return fnv1a(canonical_json()); }

void ExperimentConfig::validate() const {
    if (schema_version != kSchemaVersion)
        throw ValidationError("config: unsupported schema_version " + std::to_string(schema_version));
    if (std::find(kTags.begin(), kTags.end(), theorem) == kTags.end())
        throw ValidationError("config: unknown theorem tag '" + theorem + "'");
    if (d < 1) throw ValidationError("config: d must be >= 1");
    const bool needs_r = theorem != "nikolskii" && theorem != "entropy44";
    if (needs_r) {
        if (r.size() != static_cast<std::size_t>(d)) throw ValidationError("config: r must have d entries");
        SmoothParams::from_r(r, gamma_prime_weight);
    }
    if (is_rate_tag(theorem)) {
        const Regime reg = classify(sweep_params(*this));
        if (reg != Regime::Control && to_string(reg) != theorem)
            throw ValidationError("config: parameters satisfy the hypotheses of " + std::string(to_string(reg)) +
                                  ", not " + theorem);
    } else if (theorem == "T5-family") {
        if (n_min % 2 != 0 || n_max % 2 != 0) throw ValidationError("config: T5-family needs even n_min and n_max");
        if (n_min < 2 * d || n_max < n_min) throw ValidationError("config: T5-family needs 2d <= n_min <= n_max");
        if (n_max > kMaxCrossN) throw ValidationError("config: n_max exceeds cap of 40");
        if (!(theta >= 1.0)) throw ValidationError("config: theta must lie in [1, inf]");
        if (samples < 1) throw ValidationError("config: samples must be >= 1");
    } else if (theorem == "lemmaA") {
        if (alpha.empty()) throw ValidationError("config: alpha must be nonempty");
        for (double a : alpha)
            if (!(a > 0.0)) throw ValidationError("config: alpha must be positive");
        if (l_min < d || l_max < l_min) throw ValidationError("config: need d <= l_min <= l_max");
    } else if (theorem == "nikolskii") {
        if (!(p >= 1.0) || !(p < q)) throw ValidationError("config: nikolskii needs 1 <= p < q <= inf");
        if (samples < 1 || max_degree < 1 || terms < 1)
            throw ValidationError("config: samples, max_degree and terms must be >= 1");
    } else if (theorem == "entropy44") {
        if (clouds < 1 || points < 1 || dim < 1) throw ValidationError("config: clouds, points, dim must be >= 1");
        if (!(cloud_p >= 1.0)) throw ValidationError("config: cloud_p must lie in [1, inf]");
        for (double e : eps)
            if (!(e > 0.0)) throw ValidationError("config: eps values must be positive");
    }
}

std::string write_experiment_csv(const ExperimentConfig& cfg, std::ostream& os, bool with_timestamp) {
    cfg.validate();
    const auto& tag = cfg.theorem;
    std::vector<std::string> columns;
    if (is_rate_tag(tag))
        columns = {"n", "M", "error", "predicted", "ratio"};
    else if (tag == "T5-family")
        columns = {"n", "member", "omega_size", "scaled_class_norm", "l2_sq", "b11_norm"};
    else if (tag == "lemmaA")
        columns = {"alpha", "l", "value", "normalized_ratio", "tail_bound"};
    else if (tag == "nikolskii")
        columns = {"id", "lhs", "rhs", "ok"};
    else
        columns = {"cloud", "eps", "cover_ub", "pack_lb", "cover_ub_half_eps"};

    CsvWriter csv(os, columns);
    csv.comment("hcross " + std::string(version()));
    csv.comment("experiment " + tag);
    csv.comment("config_hash fnv1a:" + hex(cfg.hash()));
    csv.comment("seed " + std::to_string(cfg.seed));
    csv.comment("config " + cfg.canonical_json());
    if (with_timestamp) csv.comment("created " + utc_now());

    using N = CsvWriter;
    std::string fit_text;
    if (is_rate_tag(tag)) {
        const auto sweep = sweep_extremal(sweep_params(cfg));
        csv.comment("regime " + std::string(to_string(sweep.regime)) + (sweep.exploratory ? " exploratory" : ""));
        for (const auto& row : sweep.rows)
            csv.row({N::num(std::int64_t{row.n}), N::num(row.M), N::num(row.error), N::num(row.predicted),
                     N::num(row.ratio)});
        json rep{{"regime", to_string(sweep.regime)},
                 {"exploratory", sweep.exploratory},
                 {"config_hash", hex(cfg.hash())},
                 {"fits", json::array()}};
        for (FitMode m : {FitMode::Free, FitMode::SlopeFixed}) {
            try {
                rep["fits"].push_back(fit_json(fit_rates(sweep, m)));
            } catch (const ValidationError& e) {
                rep["fits"].push_back(json{{"mode", m == FitMode::Free ? "free" : "slope-fixed"}, {"error", e.what()}});
            }
        }
        fit_text = rep.dump(2);
    } else if (tag == "T5-family") {
        const auto params = SmoothParams::from_r(cfg.r, cfg.gamma_prime_weight);
        NormSpec spec;
        spec.p = kInf;
        spec.theta = cfg.theta;
        spec.form = BlockForm::SmoothA;
        for (int n = cfg.n_min; n <= cfg.n_max; n += 2) {
            const double scale = tprime_scale(n, cfg.d, params.r1(), cfg.theta);
            const auto omega = static_cast<std::int64_t>(omega_n(n, cfg.d).size());
            const TrigPoly t0 = tprime_sample(n, cfg.d, TPrimeMode::Constant, cfg.seed);
            csv.row({N::num(std::int64_t{n}), "-1", N::num(omega), N::num(besov_class_norm(t0 * scale, params, spec)),
                     N::num(t0.l2_norm_sq()), N::num(bq1_norm(t0, 1.0, BlockForm::SmoothA))});
            for (int m = 0; m < cfg.samples; ++m) {
                const auto seed = cfg.seed ^ (static_cast<std::uint64_t>(n) << 32) ^ static_cast<std::uint64_t>(m);
                const TrigPoly t = tprime_sample(n, cfg.d, TPrimeMode::RandomSign, seed);
                csv.row({N::num(std::int64_t{n}), N::num(std::int64_t{m}), N::num(omega),
                         N::num(besov_class_norm(t * scale, params, spec)), N::num(t.l2_norm_sq()),
                         N::num(bq1_norm(t, 1.0, BlockForm::SmoothA))});
            }
        }
    } else if (tag == "lemmaA") {
        const auto params = SmoothParams::from_r(cfg.r, cfg.gamma_prime_weight);
        for (double a : cfg.alpha)
            for (int l = cfg.l_min; l <= cfg.l_max; ++l) {
                const auto s = lemma_a_sum(a, params, l, cfg.lemma_mode);
                csv.row({N::num(a), N::num(std::int64_t{l}), N::num(s.value), N::num(s.normalized_ratio),
                         N::num(s.tail_bound)});
            }
    } else if (tag == "nikolskii") {
        std::vector<NikolskiiResult> res(static_cast<std::size_t>(cfg.samples));
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < cfg.samples; ++i) {
            Rng rng = make_rng(cfg.seed, static_cast<std::uint64_t>(i));
            const TrigPoly t = random_poly(cfg.d, cfg.max_degree, cfg.terms, rng);
            res[static_cast<std::size_t>(i)] = nikolskii_check(t, cfg.p, cfg.q);
        }
        for (int i = 0; i < cfg.samples; ++i) {
            const auto& r = res[static_cast<std::size_t>(i)];
            csv.row({N::num(std::int64_t{i}), N::num(r.lhs), N::num(r.rhs), r.ok ? "1" : "0"});
        }
    } else {
        for (int c = 0; c < cfg.clouds; ++c) {
            Rng rng = make_rng(cfg.seed, static_cast<std::uint64_t>(c));
            std::uniform_real_distribution<double> u(-1.0, 1.0);
            std::vector<std::vector<double>> pts(static_cast<std::size_t>(cfg.points),
                                                 std::vector<double>(static_cast<std::size_t>(cfg.dim)));
            for (auto& x : pts)
                for (auto& v : x) v = u(rng);
            const auto cloud = CloudProblem::lp(std::move(pts), cfg.cloud_p);
            for (double e : cfg.eps)
                csv.row({N::num(std::int64_t{c}), N::num(e), N::num(covering_number_greedy(cloud, e).count),
                         N::num(packing_number_greedy(cloud, e).count),
                         N::num(covering_number_greedy(cloud, e / 2).count)});
        }
    }
    csv.header();
    return fit_text;
}

ExperimentOutput run_experiment(const ExperimentConfig& cfg) {
    if (cfg.output.empty()) throw ValidationError("config: no output path");
    ExperimentOutput out;
    out.csv_path = cfg.output;
    std::ofstream os(cfg.output);
    if (!os) throw std::runtime_error("cannot open '" + cfg.output + "' for writing");
    const std::string fit = write_experiment_csv(cfg, os);
    if (!os) throw std::runtime_error("write to '" + cfg.output + "' failed");
    if (!fit.empty()) {
        auto stem = cfg.output;
        if (const auto dot = stem.rfind('.'); dot != std::string::npos && stem.find('/', dot) == std::string::npos)
            stem.erase(dot);
        out.fit_path = stem + ".fit.json";
        std::ofstream fj(out.fit_path);
        if (!fj) throw std::runtime_error("cannot open '" + out.fit_path + "' for writing");
        fj << fit << '\n';
    }
    return out;
}

void emit_plot_script(std::ostream& os, const std::string& csv_path) {
    json path = csv_path;
    os << "import sys\n"
          "import pandas as pd\n"
          "import matplotlib.pyplot as plt\n\n"
       << "path = sys.argv[1] if len(sys.argv) > 1 else " << path.dump() << "\n"
       << "df = pd.read_csv(path, comment='#')\n"
          "x = df.columns[0]\n"
          "fig, ax = plt.subplots()\n"
          "for col in df.columns[1:]:\n"
          "    if pd.api.types.is_numeric_dtype(df[col]) and (df[col] > 0).all():\n"
          "        ax.plot(df[x], df[col], marker='o', label=col)\n"
          "ax.set_yscale('log')\n"
          "ax.set_xlabel(x)\n"
          "ax.legend()\n"
          "fig.savefig(path.rsplit('.', 1)[0] + '.png', dpi=150)\n";
}

} // namespace hcross

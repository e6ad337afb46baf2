// Command-line front end for the hcross library.

#include "hcross/approx.hpp"
#include "hcross/errors.hpp"
#include "hcross/experiment.hpp"
#include "hcross/extremal.hpp"
#include "hcross/freq_index.hpp"
#include "hcross/io.hpp"
#include "hcross/kernels.hpp"
#include "hcross/norms.hpp"
#include "hcross/rates.hpp"
#include "hcross/smallwidths.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

using namespace hcross;
using nlohmann::json;

namespace {

struct Globals {
    std::uint64_t seed = 0;
    std::string out;
    std::string config;
    std::string gamma_mode = "gamma";
};

/// Output stream for --out, or stdout.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw std::runtime_error("cannot open '" + path + "' for writing");
        }
    }
    std::ostream& get() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

std::string slurp(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ValidationError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

std::vector<TrigPoly> load_polys(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ValidationError("cannot open '" + path + "'");
    return read_polys(is);
}

double json_ext(const json& j, const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    const json& v = j.at(key);
    if (v.is_string()) return parse_extended_real(v.get<std::string>());
    return v.get<double>();
}

/// Evaluates one norm described by a JSON spec:
/// {"kind": "lp"|"besov"|"bq1", "p", "q", "theta", "r", "form", "convention", "oversampling"}.
double norm_from_spec(const json& spec, const TrigPoly& f) {
    const auto kind = spec.value("kind", std::string("lp"));
    GridSpec g;
    g.oversampling = spec.value("oversampling", 4.0);
    const BlockForm form = parse_block_form(spec.value("form", std::string("sharp")));
    const ASConvention conv = parse_convention(spec.value("convention", std::string("partition-exact")));
    if (kind == "lp") return lp_norm(f, json_ext(spec, "p", 2.0), g);
    if (kind == "bq1") return bq1_norm(f, json_ext(spec, "q", 2.0), form, g, conv);
    if (kind == "besov") {
        NormSpec ns;
        ns.p = json_ext(spec, "p", 2.0);
        ns.theta = json_ext(spec, "theta", kInf);
        ns.form = form;
        ns.conv = conv;
        ns.grid = g;
        const auto r = spec.contains("r") ? spec.at("r").get<std::vector<double>>()
                                          : std::vector<double>(static_cast<std::size_t>(f.dim()), 1.0);
        return besov_class_norm(f, SmoothParams::from_r(r), ns);
    }
    throw ValidationError("norm spec: unknown kind '" + kind + "'");
}

void run_config(const std::string& path, const Globals& gl, const std::string& plot_script) {
    auto cfg = ExperimentConfig::from_json_text(slurp(path));
    if (!gl.out.empty()) cfg.output = gl.out;
    if (cfg.output.empty()) throw ValidationError("no output path: set \"output\" in the config or pass --out");
    const auto res = run_experiment(cfg);
    std::cout << res.csv_path << '\n';
    if (!res.fit_path.empty()) std::cout << res.fit_path << '\n';
    if (!plot_script.empty()) {
        std::ofstream ps(plot_script);
        if (!ps) throw std::runtime_error("cannot open '" + plot_script + "' for writing");
        emit_plot_script(ps, res.csv_path);
        std::cout << plot_script << '\n';
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Step hyperbolic cross approximation toolkit"};
    app.require_subcommand(0, 1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(version()));
    Globals gl;
    app.add_option("--seed", gl.seed, "RNG seed")->capture_default_str();
    app.add_option("--out", gl.out, "Output file (default: stdout)");
    app.add_option("--config", gl.config, "Run the experiment described by a JSON config");
    app.add_option("--gamma-mode", gl.gamma_mode, "Cross weights: gamma, gamma-prime or ones")
        ->check(CLI::IsMember({"gamma", "gamma-prime", "ones"}))
        ->capture_default_str();
    std::string plot_script;
    app.add_option("--emit-plot-script", plot_script, "Also write a plotting script for the CSV");

    // poly
    auto* poly = app.add_subcommand("poly", "Polynomial utilities");
    poly->require_subcommand(1);
    std::string poly_in;
    int grid_n = 0;
    double oversampling = 4.0;
    auto* poly_eval = poly->add_subcommand("eval", "Values on the uniform grid as CSV");
    poly_eval->add_option("--input", poly_in, "Polynomial JSONL")->required();
    poly_eval->add_option("--grid", grid_n, "Points per axis (default: from --oversampling)");
    poly_eval->add_option("--oversampling", oversampling)->capture_default_str();

    int cross_n = 4;
    std::vector<double> r_vec;
    auto* poly_project = poly->add_subcommand("project", "Step hyperbolic Fourier sum S_Q(f)");
    poly_project->add_option("--input", poly_in, "Polynomial JSONL")->required();
    poly_project->add_option("--n", cross_n, "Cross parameter")->required();
    poly_project->add_option("--r", r_vec, "Smoothness vector (default: all ones)");

    auto* poly_cross = poly->add_subcommand("cross", "List the blocks of Q_n, one per line");
    poly_cross->add_option("--n", cross_n, "Cross parameter")->required();
    poly_cross->add_option("--r", r_vec, "Smoothness vector")->required();

    // kernel
    auto* kernel = app.add_subcommand("kernel", "de la Vallee-Poussin kernels");
    kernel->require_subcommand(1);
    std::int64_t kernel_l = 1;
    auto* kernel_coeffs = kernel->add_subcommand("coeffs", "Coefficient profile of V_l as CSV");
    kernel_coeffs->add_option("--l", kernel_l, "Kernel parameter l >= 1")->required();

    // norm
    auto* norm = app.add_subcommand("norm", "Evaluate a norm");
    std::string norm_spec;
    norm->add_option("--spec", norm_spec, "JSON norm spec")->required();
    norm->add_option("--input", poly_in, "Polynomial JSONL (several polynomials: CSV id,norm)")->required();

    // approx
    auto* approx = app.add_subcommand("approx", "Approximation errors");
    approx->require_subcommand(1);
    SweepParams sp;
    std::string theta_s = "inf", p_s = "2", q_s = "4";
    auto* approx_sweep = approx->add_subcommand("sweep", "Fourier-sum error of the extremal g over n");
    approx_sweep->add_option("--n-min", sp.n_min)->capture_default_str();
    approx_sweep->add_option("--n-max", sp.n_max)->capture_default_str();
    approx_sweep->add_option("--p", p_s)->capture_default_str();
    approx_sweep->add_option("--q", q_s)->capture_default_str();
    approx_sweep->add_option("--theta", theta_s)->capture_default_str();
    approx_sweep->add_option("--r", sp.r, "Smoothness vector")->required();

    // extremal
    auto* extremal = app.add_subcommand("extremal", "Extremal test families");
    extremal->require_subcommand(1);
    std::string family = "dn", tp_mode = "constant";
    int ext_n = 4, ext_d = 2;
    double r1 = 1.0, ext_p = 2.0, c4 = 1.0;
    std::string ext_theta = "inf";
    bool scaled = false;
    auto* extremal_gen = extremal->add_subcommand("gen", "Write a family member as polynomial JSONL");
    extremal_gen->add_option("--family", family)->check(CLI::IsMember({"dn", "g", "tprime"}))->capture_default_str();
    extremal_gen->add_option("--n", ext_n)->required();
    extremal_gen->add_option("--d", ext_d)->capture_default_str();
    extremal_gen->add_option("--r1", r1)->capture_default_str();
    extremal_gen->add_option("--p", ext_p)->capture_default_str();
    extremal_gen->add_option("--theta", ext_theta)->capture_default_str();
    extremal_gen->add_option("--c4", c4)->capture_default_str();
    extremal_gen->add_option("--mode", tp_mode, "tprime mode")
        ->check(CLI::IsMember({"constant", "random-sign"}))
        ->capture_default_str();
    extremal_gen->add_flag("--scaled", scaled, "tprime: multiply by 2^{-n r1} n^{-(d-1)/theta}");

    // rates
    auto* rates = app.add_subcommand("rates", "Rate experiments");
    rates->require_subcommand(1);
    std::string rates_cfg;
    auto* rates_run = rates->add_subcommand("run", "Run a sweep and fit from a JSON config");
    rates_run->add_option("--config", rates_cfg, "Experiment config")->required();

    // entropy
    auto* entropy = app.add_subcommand("entropy", "Covering and packing numbers of a point cloud");
    std::string cloud_path;
    std::vector<double> eps_list;
    std::vector<int> k_list;
    entropy->add_option("--cloud", cloud_path, "Cloud JSONL")->required();
    auto* eps_opt = entropy->add_option("--eps", eps_list, "Radii");
    auto* k_opt = entropy->add_option("--k", k_list, "Entropy indices");
    eps_opt->excludes(k_opt);

    // lemma-a
    auto* lemma = app.add_subcommand("lemma-a", "Tail sums over hyperbolic layers");
    std::vector<double> alphas{1.0};
    int l_min = 10, l_max = 20;
    std::string lemma_mode = "gamma";
    double gp_weight = 0.5;
    lemma->add_option("--alpha", alphas)->capture_default_str();
    lemma->add_option("--r", r_vec, "Smoothness vector")->required();
    lemma->add_option("--l-min", l_min)->capture_default_str();
    lemma->add_option("--l-max", l_max)->capture_default_str();
    lemma->add_option("--mode", lemma_mode)->check(CLI::IsMember({"gamma", "gamma-prime"}))->capture_default_str();
    lemma->add_option("--gamma-prime-weight", gp_weight)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        const GammaMode gmode = parse_gamma_mode(gl.gamma_mode);
        auto params_or_ones = [&](int d) {
            return r_vec.empty() ? SmoothParams::isotropic(d, 1.0) : SmoothParams::from_r(r_vec);
        };

        if (!gl.config.empty()) {
            if (app.get_subcommands().size() > 0) throw ValidationError("--config cannot be combined with a subcommand");
            run_config(gl.config, gl, plot_script);
        } else if (*poly_eval) {
            std::ifstream is(poly_in);
            if (!is) throw ValidationError("cannot open '" + poly_in + "'");
            const TrigPoly f = read_poly(is);
            const auto shape = grid_n > 0 ? GridSpec::fixed(grid_n).resolve(f) : GridSpec{oversampling, 0}.resolve(f);
            const auto v = eval_grid(f, shape);
            Sink sink(gl.out);
            std::vector<std::string> cols;
            for (int j = 0; j < f.dim(); ++j) cols.push_back("m" + std::to_string(j + 1));
            cols.insert(cols.end(), {"re", "im"});
            CsvWriter csv(sink.get(), cols);
            for (std::size_t i = 0; i < v.size(); ++i) {
                std::vector<std::string> row(static_cast<std::size_t>(f.dim()));
                std::size_t rem = i;
                for (int j = f.dim(); j-- > 0;) {
                    row[static_cast<std::size_t>(j)] = std::to_string(rem % static_cast<std::size_t>(shape[j]));
                    rem /= static_cast<std::size_t>(shape[j]);
                }
                row.push_back(CsvWriter::num(v.values[i].real()));
                row.push_back(CsvWriter::num(v.values[i].imag()));
                csv.row(row);
            }
        } else if (*poly_project) {
            const auto polys = load_polys(poly_in);
            Sink sink(gl.out);
            for (const auto& f : polys) {
                const auto params = params_or_ones(f.dim());
                write_poly(sink.get(), project_cross(f, hyperbolic_cross(cross_n, params, gmode)));
            }
        } else if (*poly_cross) {
            Sink sink(gl.out);
            write_blocks(sink.get(), hyperbolic_cross(cross_n, SmoothParams::from_r(r_vec), gmode));
        } else if (*kernel_coeffs) {
            Sink sink(gl.out);
            CsvWriter csv(sink.get(), {"k", "coeff"});
            for (const auto& [k, c] : vdp_profile(kernel_l)) csv.row({CsvWriter::num(k), CsvWriter::num(c)});
        } else if (*norm) {
            json spec;
            try {
                spec = json::parse(norm_spec);
            } catch (const json::parse_error& e) {
                throw ValidationError(std::string("--spec: ") + e.what());
            }
            const auto polys = load_polys(poly_in);
            Sink sink(gl.out);
            if (polys.size() == 1) {
                sink.get() << CsvWriter::num(norm_from_spec(spec, polys.front())) << '\n';
            } else {
                CsvWriter csv(sink.get(), {"id", "norm"});
                for (std::size_t i = 0; i < polys.size(); ++i)
                    csv.row({std::to_string(i), CsvWriter::num(norm_from_spec(spec, polys[i]))});
            }
        } else if (*approx_sweep) {
            sp.p = parse_extended_real(p_s);
            sp.q = parse_extended_real(q_s);
            sp.theta = parse_extended_real(theta_s);
            sp.gamma_mode = gmode;
            sp.with_best_ub = true;
            const auto res = sweep_extremal(sp);
            Sink sink(gl.out);
            CsvWriter csv(sink.get(), {"n", "M", "script_E", "best_ub", "predicted_order"});
            csv.comment("hcross " + std::string(version()));
            csv.comment("regime " + std::string(to_string(res.regime)) + (res.exploratory ? " exploratory" : ""));
            for (const auto& row : res.rows)
                csv.row({CsvWriter::num(std::int64_t{row.n}), CsvWriter::num(row.M), CsvWriter::num(row.script_E),
                         CsvWriter::num(row.best_ub), CsvWriter::num(row.predicted)});
            csv.header();
        } else if (*extremal_gen) {
            const double theta = parse_extended_real(ext_theta);
            TrigPoly f(ext_d);
            if (family == "dn") {
                f = dirichlet_dn(ext_n, ext_d);
            } else if (family == "g") {
                f = extremal_g(ExtremalSpec{ext_n, ext_d, r1, ext_p, theta, c4});
            } else {
                const auto mode = tp_mode == "constant" ? TPrimeMode::Constant : TPrimeMode::RandomSign;
                f = tprime_sample(ext_n, ext_d, mode, gl.seed);
                if (scaled) f *= tprime_scale(ext_n, ext_d, r1, theta);
            }
            Sink sink(gl.out);
            write_poly(sink.get(), f);
        } else if (*rates_run) {
            run_config(rates_cfg, gl, plot_script);
        } else if (*entropy) {
            std::ifstream is(cloud_path);
            if (!is) throw ValidationError("cannot open '" + cloud_path + "'");
            const auto cloud = read_cloud(is);
            Sink sink(gl.out);
            if (!k_list.empty()) {
                CsvWriter csv(sink.get(), {"k", "eps_ub"});
                for (int k : k_list)
                    csv.row({std::to_string(k), CsvWriter::num(entropy_number_estimate(cloud, k))});
            } else {
                if (eps_list.empty()) throw ValidationError("entropy: pass --eps or --k");
                CsvWriter csv(sink.get(), {"eps", "cover_ub", "log2_cover_ub", "pack_lb"});
                for (double e : eps_list) {
                    const auto c = covering_number_greedy(cloud, e);
                    csv.row({CsvWriter::num(e), CsvWriter::num(c.count), CsvWriter::num(c.log2_count),
                             CsvWriter::num(packing_number_greedy(cloud, e).count)});
                }
            }
        } else if (*lemma) {
            const auto params = SmoothParams::from_r(r_vec, gp_weight);
            const auto mode = lemma_mode == "gamma" ? LemmaAMode::GammaOnGamma : LemmaAMode::GammaPrimeOnGamma;
            Sink sink(gl.out);
            CsvWriter csv(sink.get(), {"alpha", "l", "value", "normalized_ratio", "tail_bound"});
            for (double a : alphas)
                for (int l = l_min; l <= l_max; ++l) {
                    const auto s = lemma_a_sum(a, params, l, mode);
                    csv.row({CsvWriter::num(a), std::to_string(l), CsvWriter::num(s.value),
                             CsvWriter::num(s.normalized_ratio), CsvWriter::num(s.tail_bound)});
                }
        } else {
            std::cout << app.help();
        }
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << " (partial value " << e.partial() << ")\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

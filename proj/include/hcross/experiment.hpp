#pragma once

#include "hcross/rates.hpp"
#include "hcross/types.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hcross {

inline constexpr int kSchemaVersion = 1;

/// One experiment as read from a JSON config file. Fields irrelevant to the
/// selected tag are ignored.
struct ExperimentConfig {
    int schema_version = kSchemaVersion;
    /// T1, T2, T3, T4, T5-family, lemmaA, nikolskii, entropy44
    std::string theorem;
    int d = 2;
    double p = 2.0;
    double q = 4.0;
    double theta = 1.0;
    std::vector<double> r;
    GammaMode gamma_mode = GammaMode::Gamma;
    double gamma_prime_weight = 0.5;
    int n_min = 5;
    int n_max = 11;
    std::uint64_t seed = 0;
    std::string output;

    // lemmaA
    std::vector<double> alpha{1.0};
    int l_min = 10;
    int l_max = 20;
    LemmaAMode lemma_mode = LemmaAMode::GammaOnGamma;

    // nikolskii and T5-family
    int samples = 100;
    int max_degree = 16;
    int terms = 12;

    // entropy44
    int clouds = 10;
    int points = 10;
    int dim = 3;
    double cloud_p = 2.0;
    std::vector<double> eps{0.5, 1.0};

    /// Parses and validates; throws ValidationError naming the problem.
    static ExperimentConfig from_json_text(const std::string& text);
    /// Canonical JSON text (sorted keys), the input of the config hash.
    std::string canonical_json() const;
    std::uint64_t hash() const;
    /// Checks the tagged theorem's hypotheses.
    void validate() const;
};

struct ExperimentOutput {
    std::string csv_path;
    std::string fit_path; ///< empty unless the tag produces a rate fit
};

/// Runs the experiment and writes the CSV (and fit JSON for rate tags).
/// Output is deterministic given the config, apart from the timestamp line.
ExperimentOutput run_experiment(const ExperimentConfig& cfg);

/// Writes the CSV for cfg to os; run_experiment wraps this. Returns the fit
/// report as JSON text for rate tags, empty otherwise.
std::string write_experiment_csv(const ExperimentConfig& cfg, std::ostream& os, bool with_timestamp = true);

/// Standalone plotting script (Python, matplotlib) for a CSV written by
/// run_experiment: first column on the x axis, the remaining numeric columns
/// on a log y axis.
void emit_plot_script(std::ostream& os, const std::string& csv_path);

/// Library version string.
std::string_view version();

} // namespace hcross

#pragma once

#include "hcross/types.hpp"

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace hcross {

/// Largest admissible cross parameter. Keeps 2^{(s,1)} and every frequency
/// comfortably inside int64.
inline constexpr int kMaxCrossN = 40;

/// Frequency vector k of the exponential e^{i(k,x)}.
struct Freq {
    std::vector<std::int64_t> k;

    Freq() = default;
    explicit Freq(std::vector<std::int64_t> v) : k(std::move(v)) {}
    Freq(std::initializer_list<std::int64_t> v) : k(v) {}

    std::size_t dim() const noexcept { return k.size(); }
    std::int64_t operator[](std::size_t j) const { return k[j]; }

    auto operator<=>(const Freq&) const = default;
};

/// Dyadic block index s, every component >= 1.
struct SVec {
    std::vector<int> s;

    SVec() = default;
    explicit SVec(std::vector<int> v);
    SVec(std::initializer_list<int> v);

    std::size_t dim() const noexcept { return s.size(); }
    int operator[](std::size_t j) const { return s[j]; }
    /// (s, 1)
    int total() const noexcept;
    /// (s, w) for a weight vector of the same dimension.
    double dot(std::span<const double> w) const;

    auto operator<=>(const SVec&) const = default;
};

/// Smoothness vector r with the derived vectors gamma, gamma' and the count nu
/// of coordinates attaining the minimum r_1.
class SmoothParams {
public:
    /// r must be nondecreasing with r_1 > 0. gamma'_j = 1 + w (gamma_j - 1) for
    /// j > nu, with w in (0, 1); the default w = 1/2 gives (1 + gamma_j) / 2.
    static SmoothParams from_r(std::vector<double> r, double gamma_prime_weight = 0.5);
    /// Isotropic smoothness (r1, ..., r1).
    static SmoothParams isotropic(int d, double r1);

    std::size_t dim() const noexcept { return r_.size(); }
    const std::vector<double>& r() const noexcept { return r_; }
    const std::vector<double>& gamma() const noexcept { return gamma_; }
    const std::vector<double>& gamma_prime() const noexcept { return gamma_prime_; }
    const std::vector<double>& ones() const noexcept { return ones_; }
    int nu() const noexcept { return nu_; }
    double r1() const noexcept { return r_.front(); }
    double gamma_prime_weight() const noexcept { return weight_; }

    const std::vector<double>& weights(GammaMode mode) const;

private:
    std::vector<double> r_, gamma_, gamma_prime_, ones_;
    int nu_ = 0;
    double weight_ = 0.5;
};

/// A set of dyadic blocks, kept in lexicographic order, with the number of
/// frequencies in their union.
struct BlockIndexSet {
    int d = 0;
    std::vector<SVec> blocks;
    std::int64_t freq_count = 0;

    bool contains(const SVec& s) const;
    bool contains(const Freq& k) const;
    bool empty() const noexcept { return blocks.empty(); }
};

/// rho(s): all k with 2^{s_j-1} <= |k_j| < 2^{s_j}. Returned in lexicographic order.
std::vector<Freq> rho_block(const SVec& s);

/// The block s with k in rho(s); nullopt when some k_j = 0.
std::optional<SVec> block_of(const Freq& k);

/// Q_n^{gamma*} = union of rho(s) over (s, gamma*) < n. Empty when no block
/// qualifies. n above kMaxCrossN is rejected.
BlockIndexSet hyperbolic_cross(int n, const SmoothParams& params, GammaMode mode);

/// Same enumeration for an explicit weight vector (all weights >= 1 required
/// for termination; smaller positive weights are accepted but bounded by n).
BlockIndexSet hyperbolic_cross(int n, std::span<const double> weights);

/// All blocks with (s, 1) == n, lexicographic.
std::vector<SVec> shell(int n, int d);

/// Omega_n: s with every s_j even and >= 2 and (s, 1) == n. n must be even.
std::vector<SVec> omega_n(int n, int d);

/// k^s with k^s_j = 2^{s_j-1} + 2^{s_j-2}; requires s_j >= 2.
Freq k_shift(const SVec& s);

enum class LemmaAMode { GammaOnGamma, GammaPrimeOnGamma };

struct LemmaASum {
    double value = 0.0;
    double normalized_ratio = 0.0;
    /// Rigorous bound on the omitted tail.
    double tail_bound = 0.0;
    /// Exclusive cutoff on (s, gamma*) used by the enumeration.
    double cutoff = 0.0;
};

/// sum over (s, gamma*) >= l of 2^{-alpha (s, gamma)}, where gamma* is gamma or
/// gamma' according to mode. normalized_ratio divides by 2^{-alpha l} l^{m-1},
/// with m = d (GammaOnGamma) or m = nu (GammaPrimeOnGamma).
LemmaASum lemma_a_sum(double alpha, const SmoothParams& params, int l, LemmaAMode mode);

/// One block per line, "s1 s2 ... sd".
void write_blocks(std::ostream& os, const BlockIndexSet& set);
BlockIndexSet read_blocks(std::istream& is);

} // namespace hcross

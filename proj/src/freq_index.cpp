#include "hcross/freq_index.hpp"

#include "hcross/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

namespace hcross {

namespace {

void check_svec(const std::vector<int>& s) {
    if (s.empty()) throw ValidationError("SVec: dimension must be >= 1");
    for (int v : s)
        if (v < 1) throw ValidationError("SVec: components must be >= 1");
}

// Calls visit(s) for every s in N^d with lo <= (s, w) < hi, in lexicographic order.
template <class Visit>
void enumerate_band(std::span<const double> w, double lo, double hi, Visit&& visit) {
    const std::size_t d = w.size();
    std::vector<double> tail_min(d + 1, 0.0); // (1, w) restricted to coordinates >= j
    for (std::size_t j = d; j-- > 0;) tail_min[j] = tail_min[j + 1] + w[j];

    std::vector<int> s(d, 1);
    std::function<void(std::size_t, double)> rec = [&](std::size_t j, double acc) {
        if (j == d) {
            if (acc >= lo) visit(s);
            return;
        }
        for (int v = 1;; ++v) {
            const double next = acc + w[j] * v;
            if (next + tail_min[j + 1] >= hi) break;
            s[j] = v;
            rec(j + 1, next);
        }
        s[j] = 1;
    };
    rec(0, 0.0);
}

std::int64_t pow2(int e) { return std::int64_t{1} << e; }

} // namespace

SVec::SVec(std::vector<int> v) : s(std::move(v)) { check_svec(s); }
SVec::SVec(std::initializer_list<int> v) : s(v) { check_svec(s); }

int SVec::total() const noexcept { return std::accumulate(s.begin(), s.end(), 0); }

double SVec::dot(std::span<const double> w) const {
    if (w.size() != s.size()) throw ValidationError("SVec::dot: dimension mismatch");
    double acc = 0.0;
    for (std::size_t j = 0; j < s.size(); ++j) acc += w[j] * s[j];
    return acc;
}

SmoothParams SmoothParams::from_r(std::vector<double> r, double gamma_prime_weight) {
    if (r.empty()) throw ValidationError("SmoothParams: r must be nonempty");
    if (!(r.front() > 0.0)) throw ValidationError("SmoothParams: r_1 must be positive");
    for (std::size_t j = 1; j < r.size(); ++j)
        if (!(r[j] >= r[j - 1]))
            throw ValidationError("SmoothParams ordering: r must be nondecreasing");
    if (!(gamma_prime_weight > 0.0 && gamma_prime_weight < 1.0))
        throw ValidationError("SmoothParams: gamma' weight must lie in (0, 1)");

    SmoothParams p;
    p.r_ = std::move(r);
    p.weight_ = gamma_prime_weight;
    const double r1 = p.r_.front();
    const std::size_t d = p.r_.size();
    p.gamma_.resize(d);
    p.gamma_prime_.resize(d);
    p.ones_.assign(d, 1.0);
    p.nu_ = 0;
    for (std::size_t j = 0; j < d; ++j) {
        p.gamma_[j] = p.r_[j] / r1;
        if (p.r_[j] == r1) {
            ++p.nu_;
            p.gamma_[j] = 1.0;
            p.gamma_prime_[j] = 1.0;
        } else {
            p.gamma_prime_[j] = 1.0 + gamma_prime_weight * (p.gamma_[j] - 1.0);
        }
    }
    return p;
}

SmoothParams SmoothParams::isotropic(int d, double r1) {
    if (d < 1) throw ValidationError("SmoothParams: dimension must be >= 1");
    return from_r(std::vector<double>(static_cast<std::size_t>(d), r1));
}

const std::vector<double>& SmoothParams::weights(GammaMode mode) const {
    switch (mode) {
    case GammaMode::Gamma: return gamma_;
    case GammaMode::GammaPrime: return gamma_prime_;
    case GammaMode::Ones: return ones_;
    }
    return ones_;
}

bool BlockIndexSet::contains(const SVec& s) const {
    return std::binary_search(blocks.begin(), blocks.end(), s);
}

bool BlockIndexSet::contains(const Freq& k) const {
    auto s = block_of(k);
    return s && contains(*s);
}

std::vector<Freq> rho_block(const SVec& s) {
    const std::size_t d = s.dim();
    if (d == 0) throw ValidationError("rho_block: empty block index");
    if (s.total() > 62) throw ValidationError("rho_block: block too large to enumerate");

    // Per-coordinate frequencies in increasing order: -2^s+1 .. -2^{s-1}, 2^{s-1} .. 2^s-1.
    std::vector<std::vector<std::int64_t>> axes(d);
    for (std::size_t j = 0; j < d; ++j) {
        const std::int64_t lo = pow2(s[j] - 1), hi = pow2(s[j]);
        for (std::int64_t k = -(hi - 1); k <= -lo; ++k) axes[j].push_back(k);
        for (std::int64_t k = lo; k < hi; ++k) axes[j].push_back(k);
    }

    std::vector<Freq> out;
    out.reserve(static_cast<std::size_t>(pow2(s.total())));
    std::vector<std::size_t> idx(d, 0);
    while (true) {
        Freq f;
        f.k.resize(d);
        for (std::size_t j = 0; j < d; ++j) f.k[j] = axes[j][idx[j]];
        out.push_back(std::move(f));
        std::size_t j = d;
        while (j-- > 0) {
            if (++idx[j] < axes[j].size()) break;
            idx[j] = 0;
            if (j == 0) return out;
        }
    }
}

std::optional<SVec> block_of(const Freq& k) {
    SVec s;
    s.s.resize(k.dim());
    for (std::size_t j = 0; j < k.dim(); ++j) {
        if (k[j] == 0) return std::nullopt;
        const auto a = static_cast<std::uint64_t>(k[j] < 0 ? -k[j] : k[j]);
        s.s[j] = std::bit_width(a); // 2^{s-1} <= a < 2^s
    }
    return s;
}

BlockIndexSet hyperbolic_cross(int n, std::span<const double> weights) {
    if (weights.empty()) throw ValidationError("hyperbolic_cross: dimension must be >= 1");
    if (n > kMaxCrossN) throw ValidationError("hyperbolic_cross: n exceeds cap of 40");
    for (double w : weights)
        if (!(w > 0.0)) throw ValidationError("hyperbolic_cross: weights must be positive");

    BlockIndexSet set;
    set.d = static_cast<int>(weights.size());
    enumerate_band(weights, -std::numeric_limits<double>::infinity(), static_cast<double>(n),
                   [&](const std::vector<int>& s) {
                       set.blocks.emplace_back(s);
                       set.freq_count += pow2(set.blocks.back().total());
                   });
    return set;
}

BlockIndexSet hyperbolic_cross(int n, const SmoothParams& params, GammaMode mode) {
    return hyperbolic_cross(n, params.weights(mode));
}

std::vector<SVec> shell(int n, int d) {
    if (d < 1) throw ValidationError("shell: dimension must be >= 1");
    std::vector<SVec> out;
    if (n < d) return out;
    const std::vector<double> ones(static_cast<std::size_t>(d), 1.0);
    enumerate_band(ones, n, n + 0.5, [&](const std::vector<int>& s) { out.emplace_back(s); });
    return out;
}

std::vector<SVec> omega_n(int n, int d) {
    if (n % 2 != 0) throw ValidationError("omega_n: n must be even");
    if (d < 1) throw ValidationError("omega_n: dimension must be >= 1");
    std::vector<SVec> out;
    if (n < 2 * d) return out;
    // s = 2 u with u in N^d and (u, 1) = n / 2.
    for (const SVec& u : shell(n / 2, d)) {
        std::vector<int> s(u.s);
        for (int& v : s) v *= 2;
        out.emplace_back(std::move(s));
    }
    return out;
}

Freq k_shift(const SVec& s) {
    Freq k;
    k.k.resize(s.dim());
    for (std::size_t j = 0; j < s.dim(); ++j) {
        if (s[j] < 2) throw ValidationError("k_shift: every s_j must be >= 2");
        if (s[j] > 62) throw ValidationError("k_shift: s_j too large");
        k.k[j] = pow2(s[j] - 1) + pow2(s[j] - 2);
    }
    return k;
}

namespace {

// inf over beta in (0, alpha) of 2^{-(alpha-beta) L} prod_j 2^{-beta w_j} / (1 - 2^{-beta w_j}).
// Bounds sum_{(s,w) >= L} 2^{-alpha (s,w)}, which dominates the lemma tail since gamma >= gamma*.
double tail_bound(double alpha, std::span<const double> w, double cutoff) {
    double best = std::numeric_limits<double>::infinity();
    constexpr int kSteps = 400;
    for (int i = 1; i < kSteps; ++i) {
        const double beta = alpha * i / kSteps;
        double log2_bound = -(alpha - beta) * cutoff;
        for (double wj : w) {
            const double x = std::exp2(-beta * wj);
            log2_bound += std::log2(x / (1.0 - x));
        }
        best = std::min(best, std::exp2(log2_bound));
    }
    return best;
}

} // namespace

LemmaASum lemma_a_sum(double alpha, const SmoothParams& params, int l, LemmaAMode mode) {
    const int d = static_cast<int>(params.dim());
    if (!(alpha > 0.0)) throw ValidationError("lemma_a_sum: alpha must be positive");
    if (l < d) throw ValidationError("lemma_a_sum: l must be >= d");

    const auto& weight = params.gamma();
    const auto& band = mode == LemmaAMode::GammaOnGamma ? params.gamma() : params.gamma_prime();
    const int m = mode == LemmaAMode::GammaOnGamma ? d : params.nu();

    constexpr double kRelTol = 1e-12;
    constexpr std::size_t kBudget = 200'000'000;

    long double value = 0.0L;
    std::size_t visited = 0;
    double lo = l;
    double hi = l + 16.0 / alpha + 8.0;
    LemmaASum out;
    while (true) {
        enumerate_band(band, lo, hi, [&](const std::vector<int>& s) {
            double dot = 0.0;
            for (std::size_t j = 0; j < s.size(); ++j) dot += weight[j] * s[j];
            value += std::exp2(static_cast<long double>(-alpha * dot));
            ++visited;
        });
        out.value = static_cast<double>(value);
        out.cutoff = hi;
        out.tail_bound = tail_bound(alpha, band, hi);
        if (out.tail_bound < kRelTol * out.value) break;
        if (visited > kBudget)
            throw BudgetExceeded("lemma_a_sum: truncation budget exceeded", out.value);
        lo = hi;
        hi += std::max(8.0, 0.5 * hi);
    }
    out.normalized_ratio = out.value / (std::exp2(-alpha * l) * std::pow(double(l), m - 1));
    return out;
}

void write_blocks(std::ostream& os, const BlockIndexSet& set) {
    for (const SVec& s : set.blocks) {
        for (std::size_t j = 0; j < s.dim(); ++j) os << (j ? " " : "") << s[j];
        os << '\n';
    }
}

BlockIndexSet read_blocks(std::istream& is) {
    BlockIndexSet set;
    std::string line;
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        std::vector<int> s;
        int v;
        while (ls >> v) s.push_back(v);
        if (!ls.eof()) throw ValidationError("read_blocks: malformed line '" + line + "'");
        if (set.d == 0) set.d = static_cast<int>(s.size());
        if (static_cast<int>(s.size()) != set.d)
            throw ValidationError("read_blocks: inconsistent block dimension");
        set.blocks.emplace_back(std::move(s));
    }
    std::sort(set.blocks.begin(), set.blocks.end());
    set.blocks.erase(std::unique(set.blocks.begin(), set.blocks.end()), set.blocks.end());
    for (const SVec& s : set.blocks) set.freq_count += pow2(s.total());
    return set;
}

} // namespace hcross

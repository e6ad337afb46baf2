#include "hcross/grid.hpp"

#include "hcross/errors.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <numbers>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hcross {

namespace {

// FFTW planning is not thread-safe; execution of a finished plan is.
std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}

constexpr std::size_t kChunk = 8192;

int next_pow2(double x) {
    int n = 1;
    while (n < x) n <<= 1;
    return n;
}

std::size_t total_points(std::span<const int> shape) {
    std::size_t n = 1;
    for (int v : shape) n *= static_cast<std::size_t>(v);
    return n;
}

void check_shape(const TrigPoly& f, std::span<const int> shape) {
    if (static_cast<int>(shape.size()) != f.dim()) throw ValidationError("grid: shape dimension mismatch");
    for (int n : shape)
        if (n < 1) throw ValidationError("grid: every axis needs at least one point");
    const auto deg = f.degree();
    for (std::size_t j = 0; j < shape.size(); ++j)
        if (2 * deg[j] >= shape[j])
            throw AliasingError("grid: frequency " + std::to_string(deg[j]) + " aliases on an axis of " +
                                std::to_string(shape[j]) + " points");
}

inline double abs_pow(const Coeff& z, double p) {
    if (p == 2.0) return std::norm(z);
    if (p == 1.0) return std::abs(z);
    if (p == 4.0) {
        const double a = std::norm(z);
        return a * a;
    }
    return std::pow(std::abs(z), p);
}

} // namespace

std::vector<int> GridSpec::resolve(const TrigPoly& f) const {
    const auto deg = f.degree();
    std::vector<int> shape(deg.size());
    for (std::size_t j = 0; j < deg.size(); ++j) {
        if (points_per_dim > 0) {
            if (2 * deg[j] >= points_per_dim)
                throw AliasingError("grid: fixed N = " + std::to_string(points_per_dim) +
                                    " cannot resolve frequency " + std::to_string(deg[j]));
            shape[j] = points_per_dim;
        } else {
            const double want = std::max(oversampling, 2.0) * static_cast<double>(deg[j]) + 1.0;
            if (want > (1 << 26)) throw ValidationError("grid: requested axis length too large");
            shape[j] = next_pow2(want);
        }
    }
    return shape;
}

GridValues eval_grid(const TrigPoly& f, const GridSpec& g) {
    const auto shape = g.resolve(f);
    return eval_grid(f, shape);
}

GridValues eval_grid(const TrigPoly& f, std::span<const int> shape) {
    check_shape(f, shape);
    GridValues out;
    out.shape.assign(shape.begin(), shape.end());
    out.values.assign(total_points(shape), Coeff{});

    const std::size_t d = shape.size();
    for (const auto& [k, c] : f.coeffs()) {
        std::size_t idx = 0;
        for (std::size_t j = 0; j < d; ++j) {
            const std::int64_t n = shape[j];
            idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(((k[j] % n) + n) % n);
        }
        out.values[idx] += c;
    }
    if (out.values.size() == 1) return out;

    auto* data = reinterpret_cast<fftw_complex*>(out.values.data());
    fftw_plan plan;
    {
        std::lock_guard lock(fftw_planner_mutex());
        plan = fftw_plan_dft(static_cast<int>(d), out.shape.data(), data, data, FFTW_BACKWARD,
                             FFTW_ESTIMATE | FFTW_UNALIGNED);
    }
    if (plan == nullptr) throw std::runtime_error("grid: FFTW planning failed");
    fftw_execute(plan);
    {
        std::lock_guard lock(fftw_planner_mutex());
        fftw_destroy_plan(plan);
    }
    return out;
}

GridValues eval_grid_direct(const TrigPoly& f, std::span<const int> shape, Exec exec) {
    check_shape(f, shape);
    const std::size_t d = shape.size();
    GridValues out;
    out.shape.assign(shape.begin(), shape.end());
    out.values.assign(total_points(shape), Coeff{});

    // roots[j][t] = e^{2 pi i t / N_j}
    std::vector<std::vector<Coeff>> roots(d);
    for (std::size_t j = 0; j < d; ++j) {
        roots[j].resize(static_cast<std::size_t>(shape[j]));
        for (int t = 0; t < shape[j]; ++t)
            roots[j][t] = std::polar(1.0, 2.0 * std::numbers::pi * t / shape[j]);
    }
    std::vector<std::vector<std::int64_t>> freqs;
    std::vector<Coeff> cs;
    for (const auto& [k, c] : f.coeffs()) {
        std::vector<std::int64_t> r(d);
        for (std::size_t j = 0; j < d; ++j) r[j] = ((k[j] % shape[j]) + shape[j]) % shape[j];
        freqs.push_back(std::move(r));
        cs.push_back(c);
    }

    const auto npts = static_cast<std::int64_t>(out.values.size());
    auto point = [&](std::int64_t flat) {
        std::vector<std::int64_t> m(d);
        std::int64_t rem = flat;
        for (std::size_t j = d; j-- > 0;) {
            m[j] = rem % shape[j];
            rem /= shape[j];
        }
        Coeff acc{};
        for (std::size_t t = 0; t < cs.size(); ++t) {
            Coeff e = cs[t];
            for (std::size_t j = 0; j < d; ++j) e *= roots[j][(freqs[t][j] * m[j]) % shape[j]];
            acc += e;
        }
        out.values[static_cast<std::size_t>(flat)] = acc;
    };

    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < npts; ++i) point(i);
    } else {
        for (std::int64_t i = 0; i < npts; ++i) point(i);
    }
    return out;
}

double power_mean(std::span<const Coeff> v, double p, Exec exec) {
    if (v.empty()) return 0.0;
    if (exec == Exec::Serial) {
        double acc = 0.0;
        for (const Coeff& z : v) acc += abs_pow(z, p);
        return acc / static_cast<double>(v.size());
    }
    // Fixed chunking keeps the summation order independent of the thread count.
    const auto nchunks = static_cast<std::int64_t>((v.size() + kChunk - 1) / kChunk);
    std::vector<double> partial(static_cast<std::size_t>(nchunks), 0.0);
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < nchunks; ++c) {
        const std::size_t lo = static_cast<std::size_t>(c) * kChunk;
        const std::size_t hi = std::min(v.size(), lo + kChunk);
        double acc = 0.0;
        for (std::size_t i = lo; i < hi; ++i) acc += abs_pow(v[i], p);
        partial[static_cast<std::size_t>(c)] = acc;
    }
    double acc = 0.0;
    for (double x : partial) acc += x;
    return acc / static_cast<double>(v.size());
}

double max_modulus(std::span<const Coeff> v, Exec exec) {
    double best = 0.0;
    if (exec == Exec::Serial) {
        for (const Coeff& z : v) best = std::max(best, std::abs(z));
        return best;
    }
    const auto n = static_cast<std::int64_t>(v.size());
#pragma omp parallel for reduction(max : best) schedule(static)
    for (std::int64_t i = 0; i < n; ++i) best = std::max(best, std::abs(v[static_cast<std::size_t>(i)]));
    return best;
}

int parallel_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace hcross

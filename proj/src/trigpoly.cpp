#include "hcross/trigpoly.hpp"

#include "hcross/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace hcross {

TrigPoly::TrigPoly(int d) : d_(d) {
    if (d < 1) throw ValidationError("TrigPoly: dimension must be >= 1");
}

TrigPoly::TrigPoly(int d, const Map& coeffs) : TrigPoly(d) {
    for (const auto& [k, c] : coeffs) add(k, c);
}

TrigPoly TrigPoly::exponential(const Freq& k, Coeff c) {
    TrigPoly f(static_cast<int>(k.dim()));
    f.add(k, c);
    return f;
}

TrigPoly TrigPoly::constant(int d, Coeff c) {
    TrigPoly f(d);
    f.add(Freq(std::vector<std::int64_t>(static_cast<std::size_t>(d), 0)), c);
    return f;
}

void TrigPoly::check_dim(const Freq& k) const {
    if (static_cast<int>(k.dim()) != d_) throw ValidationError("TrigPoly: frequency dimension mismatch");
}

Coeff TrigPoly::coeff(const Freq& k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? Coeff{} : it->second;
}

void TrigPoly::add(const Freq& k, Coeff c) {
    check_dim(k);
    auto [it, inserted] = coeffs_.try_emplace(k, c);
    if (!inserted) it->second += c;
    if (std::abs(it->second) < kDropThreshold) coeffs_.erase(it);
}

bool TrigPoly::in_l0() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) {
        return std::none_of(kv.first.k.begin(), kv.first.k.end(), [](std::int64_t v) { return v == 0; });
    });
}

std::vector<std::int64_t> TrigPoly::degree() const {
    std::vector<std::int64_t> m(static_cast<std::size_t>(d_), 0);
    for (const auto& [k, c] : coeffs_)
        for (int j = 0; j < d_; ++j) m[j] = std::max(m[j], std::abs(k[j]));
    return m;
}

Coeff TrigPoly::eval(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != d_) throw ValidationError("TrigPoly::eval: point dimension mismatch");
    Coeff acc{};
    for (const auto& [k, c] : coeffs_) {
        double phase = 0.0;
        for (int j = 0; j < d_; ++j) phase += static_cast<double>(k[j]) * x[j];
        acc += c * std::polar(1.0, phase);
    }
    return acc;
}

double TrigPoly::l2_norm_sq() const {
    double acc = 0.0;
    for (const auto& [k, c] : coeffs_) acc += std::norm(c);
    return acc;
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& o) {
    if (o.d_ != d_) throw ValidationError("TrigPoly: dimension mismatch");
    for (const auto& [k, c] : o.coeffs_) add(k, c);
    return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& o) {
    if (o.d_ != d_) throw ValidationError("TrigPoly: dimension mismatch");
    for (const auto& [k, c] : o.coeffs_) add(k, -c);
    return *this;
}

TrigPoly& TrigPoly::operator*=(Coeff a) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        it->second *= a;
        if (std::abs(it->second) < kDropThreshold)
            it = coeffs_.erase(it);
        else
            ++it;
    }
    return *this;
}

TrigPoly delta_block(const TrigPoly& f, const SVec& s) {
    if (static_cast<int>(s.dim()) != f.dim()) throw ValidationError("delta_block: dimension mismatch");
    TrigPoly out(f.dim());
    for (const auto& [k, c] : f.coeffs()) {
        auto b = block_of(k);
        if (b && *b == s) out.add(k, c);
    }
    return out;
}

TrigPoly project_cross(const TrigPoly& f, const BlockIndexSet& q) {
    if (q.d != f.dim()) throw ValidationError("project_cross: dimension mismatch");
    TrigPoly out(f.dim());
    for (const auto& [k, c] : f.coeffs())
        if (q.contains(k)) out.add(k, c);
    return out;
}

std::map<SVec, TrigPoly> split_blocks(const TrigPoly& f) {
    std::map<SVec, TrigPoly> out;
    for (const auto& [k, c] : f.coeffs()) {
        auto b = block_of(k);
        if (!b) continue;
        out.try_emplace(*b, f.dim()).first->second.add(k, c);
    }
    return out;
}

TrigPoly mixed_difference(const TrigPoly& f, std::span<const int> order, std::span<const double> h) {
    const auto d = static_cast<std::size_t>(f.dim());
    if (order.size() != d || h.size() != d) throw ValidationError("mixed_difference: dimension mismatch");
    for (int o : order)
        if (o < 1) throw ValidationError("mixed_difference: order components must be >= 1");
    return f.multiplied([&](const Freq& k) {
        Coeff m = 1.0;
        for (std::size_t j = 0; j < d; ++j) {
            const Coeff step = std::polar(1.0, static_cast<double>(k[j]) * h[j]) - 1.0;
            for (int r = 0; r < order[j]; ++r) m *= step;
        }
        return m;
    });
}

bool approx_equal(const TrigPoly& a, const TrigPoly& b, double abs_tol) {
    if (a.dim() != b.dim()) return false;
    const TrigPoly diff = a - b;
    return std::all_of(diff.coeffs().begin(), diff.coeffs().end(),
                       [&](const auto& kv) { return std::abs(kv.second) <= abs_tol; });
}

} // namespace hcross

#include "hcross/types.hpp"

#include "hcross/errors.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <string>

namespace hcross {

std::string_view to_string(GammaMode m) {
    switch (m) {
    case GammaMode::Gamma: return "gamma";
    case GammaMode::GammaPrime: return "gamma-prime";
    case GammaMode::Ones: return "ones";
    }
    return "?";
}

std::string_view to_string(ASConvention c) {
    return c == ASConvention::PartitionExact ? "partition-exact" : "paper-literal";
}

std::string_view to_string(BlockForm f) { return f == BlockForm::SharpDelta ? "sharp-delta" : "smooth-a"; }

GammaMode parse_gamma_mode(std::string_view s) {
    if (s == "gamma") return GammaMode::Gamma;
    if (s == "gamma-prime") return GammaMode::GammaPrime;
    if (s == "ones") return GammaMode::Ones;
    throw ValidationError("unknown gamma mode '" + std::string(s) + "'");
}

ASConvention parse_convention(std::string_view s) {
    if (s == "partition-exact") return ASConvention::PartitionExact;
    if (s == "paper-literal") return ASConvention::PaperLiteral;
    throw ValidationError("unknown A_s convention '" + std::string(s) + "'");
}

BlockForm parse_block_form(std::string_view s) {
    if (s == "sharp" || s == "sharp-delta") return BlockForm::SharpDelta;
    if (s == "smooth" || s == "smooth-a") return BlockForm::SmoothA;
    throw ValidationError("unknown block form '" + std::string(s) + "'");
}

double parse_extended_real(std::string_view s) {
    if (s == "inf" || s == "infinity" || s == "Inf") return std::numeric_limits<double>::infinity();
    try {
        std::size_t pos = 0;
        const std::string str(s);
        const double v = std::stod(str, &pos);
        if (pos != str.size()) throw ValidationError("malformed number '" + str + "'");
        return v;
    } catch (const std::logic_error&) {
        throw ValidationError("malformed number '" + std::string(s) + "'");
    }
}

} // namespace hcross

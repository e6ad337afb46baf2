#pragma once

#include "hcross/smallwidths.hpp"
#include "hcross/trigpoly.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hcross {

/// Polynomial stream: a header line {"d": int} followed by one line per term
/// {"k": [...], "re": float, "im": float}. A new header starts the next polynomial.
std::vector<TrigPoly> read_polys(std::istream& is);
/// Exactly one polynomial expected.
TrigPoly read_poly(std::istream& is);
void write_poly(std::ostream& os, const TrigPoly& f);

/// Cloud stream: a header {"norm": {"type": "lp", "p": float | "inf"}} followed
/// by one JSON array of coordinates per line.
CloudProblem read_cloud(std::istream& is);
void write_cloud(std::ostream& os, const std::vector<std::vector<double>>& points, double p);

/// CSV with '#'-prefixed provenance lines and a fixed column order. Reals are
/// printed with %.17g so the body round-trips exactly.
class CsvWriter {
public:
    CsvWriter(std::ostream& os, std::vector<std::string> columns);

    void comment(const std::string& line);
    /// Writes the column line; called automatically before the first row.
    void header();
    void row(const std::vector<std::string>& cells);

    static std::string num(double v);
    static std::string num(std::int64_t v);

private:
    std::ostream& os_;
    std::vector<std::string> columns_;
    bool header_done_ = false;
};

/// Lines of a CSV file that are not '#' comments.
std::string csv_body(std::istream& is);

/// 64-bit FNV-1a, used for configuration hashes.
std::uint64_t fnv1a(const std::string& bytes);

} // namespace hcross

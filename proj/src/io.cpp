#include "hcross/io.hpp"

#include "hcross/errors.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>

namespace hcross {

using nlohmann::json;

namespace {

json parse_line(const std::string& line, std::size_t lineno) {
    try {
        return json::parse(line);
    } catch (const json::parse_error& e) {
        throw ValidationError("line " + std::to_string(lineno) + ": " + e.what());
    }
}

bool blank(const std::string& line) { return line.find_first_not_of(" \t\r") == std::string::npos; }

double json_real(const json& v) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (s == "inf" || s == "infinity") return std::numeric_limits<double>::infinity();
    }
    throw ValidationError("expected a number or \"inf\"");
}

} // namespace

std::vector<TrigPoly> read_polys(std::istream& is) {
    std::vector<TrigPoly> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (blank(line)) continue;
        const json j = parse_line(line, lineno);
        if (!j.is_object()) throw ValidationError("line " + std::to_string(lineno) + ": expected an object");
        if (j.contains("d")) {
            const int d = j.at("d").get<int>();
            out.emplace_back(d);
            continue;
        }
        if (out.empty()) throw ValidationError("polynomial stream must start with a {\"d\": ...} header");
        if (!j.contains("k")) throw ValidationError("line " + std::to_string(lineno) + ": missing \"k\"");
        Freq k(j.at("k").get<std::vector<std::int64_t>>());
        const double re = j.value("re", 0.0);
        const double im = j.value("im", 0.0);
        out.back().add(k, Coeff(re, im));
    }
    return out;
}

TrigPoly read_poly(std::istream& is) {
    auto all = read_polys(is);
    if (all.size() != 1) throw ValidationError("expected exactly one polynomial, found " + std::to_string(all.size()));
    return std::move(all.front());
}

void write_poly(std::ostream& os, const TrigPoly& f) {
    os << json{{"d", f.dim()}}.dump() << '\n';
    for (const auto& [k, c] : f.coeffs()) os << json{{"k", k.k}, {"re", c.real()}, {"im", c.imag()}}.dump() << '\n';
}

CloudProblem read_cloud(std::istream& is) {
    std::string line;
    std::size_t lineno = 0;
    double p = 2.0;
    bool have_header = false;
    std::vector<std::vector<double>> pts;
    while (std::getline(is, line)) {
        ++lineno;
        if (blank(line)) continue;
        const json j = parse_line(line, lineno);
        if (j.is_object()) {
            if (have_header || !pts.empty()) throw ValidationError("cloud: header must come first and only once");
            const json& n = j.at("norm");
            const auto type = n.value("type", std::string("lp"));
            if (type != "lp") throw ValidationError("cloud: unsupported norm type '" + type + "'");
            p = n.contains("p") ? json_real(n.at("p")) : 2.0;
            have_header = true;
            continue;
        }
        if (!j.is_array()) throw ValidationError("line " + std::to_string(lineno) + ": expected a coordinate array");
        pts.push_back(j.get<std::vector<double>>());
    }
    return CloudProblem::lp(std::move(pts), p);
}

void write_cloud(std::ostream& os, const std::vector<std::vector<double>>& points, double p) {
    json norm{{"type", "lp"}};
    if (std::isinf(p))
        norm["p"] = "inf";
    else
        norm["p"] = p;
    os << json{{"norm", norm}}.dump() << '\n';
    for (const auto& x : points) os << json(x).dump() << '\n';
}

CsvWriter::CsvWriter(std::ostream& os, std::vector<std::string> columns) : os_(os), columns_(std::move(columns)) {}

void CsvWriter::comment(const std::string& line) {
    if (header_done_) throw std::logic_error("CsvWriter: comments must precede the header");
    os_ << "# " << line << '\n';
}

void CsvWriter::header() {
    if (header_done_) return;
    for (std::size_t i = 0; i < columns_.size(); ++i) os_ << (i ? "," : "") << columns_[i];
    os_ << '\n';
    header_done_ = true;
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    header();
    if (cells.size() != columns_.size()) throw std::logic_error("CsvWriter: row width mismatch");
    for (std::size_t i = 0; i < cells.size(); ++i) os_ << (i ? "," : "") << cells[i];
    os_ << '\n';
}

std::string CsvWriter::num(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string CsvWriter::num(std::int64_t v) { return std::to_string(v); }

std::string csv_body(std::istream& is) {
    std::string out, line;
    while (std::getline(is, line))
        if (line.empty() || line[0] != '#') out += line + '\n';
    return out;
}

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace hcross

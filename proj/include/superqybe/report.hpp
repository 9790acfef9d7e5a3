#ifndef SUPERQYBE_REPORT_HPP
#define SUPERQYBE_REPORT_HPP

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "superqybe/errors.hpp"
#include "superqybe/superlinalg.hpp"

namespace superqybe {

/// Fixed 17-significant-digit rendering: round-trips every double and is
/// byte-stable across runs (no locale dependence).
inline std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return std::string(buf);
}

enum class OutputFormat { Json, Csv, Pretty };

inline OutputFormat output_format_from_string(const std::string& s) {
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "pretty") return OutputFormat::Pretty;
    throw DomainError("unknown output format '" + s + "' (expected json, csv or pretty)");
}

struct CheckResult {
    std::string name;
    std::vector<std::pair<std::string, double>> params;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;

    bool operator==(const CheckResult& o) const {
        return name == o.name && params == o.params && residual == o.residual &&
               tolerance == o.tolerance && pass == o.pass;
    }
};

struct VerificationReport {
    std::string generator = "mt19937_64";
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    void add(std::string name, std::vector<std::pair<std::string, double>> params,
             double residual, double tolerance) {
        checks.push_back(CheckResult{std::move(name), std::move(params), residual, tolerance,
                                     residual < tolerance});
    }

    int total() const { return static_cast<int>(checks.size()); }
    int passed() const {
        int n = 0;
        for (const auto& c : checks) n += c.pass ? 1 : 0;
        return n;
    }
    double max_residual() const {
        double m = 0.0;
        for (const auto& c : checks) m = std::max(m, c.residual);
        return m;
    }
    bool all_pass() const { return passed() == total(); }

    /// Deterministic ordering: by check name, then by parameter list.
    void sort() {
        std::stable_sort(checks.begin(), checks.end(),
                         [](const CheckResult& a, const CheckResult& b) {
                             if (a.name != b.name) return a.name < b.name;
                             return a.params < b.params;
                         });
    }

    bool operator==(const VerificationReport& o) const {
        return generator == o.generator && seed == o.seed && checks == o.checks;
    }
};

namespace detail {

inline std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

} // namespace detail

inline std::string emit_report(const VerificationReport& report, OutputFormat fmt) {
    std::ostringstream os;
    if (fmt == OutputFormat::Json) {
        os << "{\n  \"schema\": 1,\n";
        os << "  \"generator\": \"" << detail::json_escape(report.generator) << "\",\n";
        os << "  \"seed\": " << report.seed << ",\n";
        os << "  \"checks\": [";
        for (std::size_t i = 0; i < report.checks.size(); ++i) {
            const auto& c = report.checks[i];
            os << (i ? ",\n    " : "\n    ");
            os << "{\"check\": \"" << detail::json_escape(c.name) << "\", \"params\": {";
            for (std::size_t j = 0; j < c.params.size(); ++j) {
                if (j) os << ", ";
                os << "\"" << detail::json_escape(c.params[j].first)
                   << "\": " << format_double(c.params[j].second);
            }
            os << "}, \"residual\": " << format_double(c.residual)
               << ", \"tolerance\": " << format_double(c.tolerance)
               << ", \"pass\": " << (c.pass ? "true" : "false") << "}";
        }
        os << (report.checks.empty() ? "" : "\n  ") << "],\n";
        os << "  \"summary\": {\"total\": " << report.total()
           << ", \"passed\": " << report.passed()
           << ", \"max_residual\": " << format_double(report.max_residual()) << "}\n}\n";
        return os.str();
    }
    if (fmt == OutputFormat::Csv) {
        os << "check,params,residual,tolerance,pass\n";
        for (const auto& c : report.checks) {
            os << c.name << ",";
            for (std::size_t j = 0; j < c.params.size(); ++j) {
                if (j) os << ";";
                os << c.params[j].first << "=" << format_double(c.params[j].second);
            }
            os << "," << format_double(c.residual) << "," << format_double(c.tolerance) << ","
               << (c.pass ? "true" : "false") << "\n";
        }
        os << "summary,total=" << report.total() << ";passed=" << report.passed() << ","
           << format_double(report.max_residual()) << ",,"
           << (report.all_pass() ? "true" : "false") << "\n";
        return os.str();
    }
    for (const auto& c : report.checks) {
        os << (c.pass ? "[pass] " : "[FAIL] ") << c.name;
        if (!c.params.empty()) {
            os << " (";
            for (std::size_t j = 0; j < c.params.size(); ++j) {
                if (j) os << ", ";
                os << c.params[j].first << "=" << format_double(c.params[j].second);
            }
            os << ")";
        }
        os << ": residual " << format_double(c.residual) << " vs tolerance "
           << format_double(c.tolerance) << "\n";
    }
    os << report.passed() << "/" << report.total()
       << " checks passed, max residual " << format_double(report.max_residual()) << "\n";
    return os.str();
}

/// Shared matrix dump: row-major, each complex entry a two-element
/// [re, im] array.
inline std::string emit_matrix(const Matrix& m, OutputFormat fmt, const std::string& kind,
                               const std::vector<std::pair<std::string, double>>& params) {
    std::ostringstream os;
    if (fmt == OutputFormat::Json) {
        os << "{\n  \"schema\": 1,\n  \"kind\": \"" << detail::json_escape(kind) << "\",\n";
        os << "  \"params\": {";
        for (std::size_t j = 0; j < params.size(); ++j) {
            if (j) os << ", ";
            os << "\"" << detail::json_escape(params[j].first)
               << "\": " << format_double(params[j].second);
        }
        os << "},\n  \"rows\": " << m.rows() << ",\n  \"cols\": " << m.cols() << ",\n";
        os << "  \"data\": [";
        for (int r = 0; r < m.rows(); ++r) {
            os << (r ? ",\n    " : "\n    ") << "[";
            for (int c = 0; c < m.cols(); ++c) {
                if (c) os << ", ";
                os << "[" << format_double(m(r, c).real()) << ", "
                   << format_double(m(r, c).imag()) << "]";
            }
            os << "]";
        }
        os << "\n  ]\n}\n";
        return os.str();
    }
    if (fmt == OutputFormat::Csv) {
        for (int r = 0; r < m.rows(); ++r) {
            for (int c = 0; c < m.cols(); ++c) {
                if (c) os << ",";
                os << format_double(m(r, c).real()) << "," << format_double(m(r, c).imag());
            }
            os << "\n";
        }
        return os.str();
    }
    os << kind << " (" << m.rows() << "x" << m.cols() << ")\n";
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%10.4g%+10.4gi ", m(r, c).real(), m(r, c).imag());
            os << buf;
        }
        os << "\n";
    }
    return os.str();
}

inline std::string emit_spectrum(const std::vector<double>& eigs, OutputFormat fmt,
                                 const std::vector<std::pair<std::string, double>>& params) {
    std::ostringstream os;
    if (fmt == OutputFormat::Json) {
        os << "{\n  \"schema\": 1,\n  \"kind\": \"spectrum\",\n  \"params\": {";
        for (std::size_t j = 0; j < params.size(); ++j) {
            if (j) os << ", ";
            os << "\"" << detail::json_escape(params[j].first)
               << "\": " << format_double(params[j].second);
        }
        os << "},\n  \"eigenvalues\": [";
        for (std::size_t i = 0; i < eigs.size(); ++i)
            os << (i ? ", " : "") << format_double(eigs[i]);
        os << "]\n}\n";
        return os.str();
    }
    if (fmt == OutputFormat::Csv) {
        for (double e : eigs) os << format_double(e) << "\n";
        return os.str();
    }
    os << "spectrum (" << eigs.size() << " levels)\n";
    for (double e : eigs) os << "  " << format_double(e) << "\n";
    return os.str();
}

/// Seeded generator for the randomized verification sweeps. The name is
/// recorded in the report header so a run can be reproduced exactly.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [lo, hi) derived from the top 53 bits, identical on
    /// every platform for a given seed.
    double uniform(double lo, double hi) {
        const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }

    static const char* name() { return "mt19937_64"; }

  private:
    std::mt19937_64 engine_;
};

} // namespace superqybe

#endif

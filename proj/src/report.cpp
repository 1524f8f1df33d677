#include "ofdma/report.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ofdma {

namespace {

std::string optional_text(const std::optional<double>& v) {
    return v ? format_exact(*v) : std::string{};
}

std::string optional_text(const std::optional<std::uint64_t>& v) {
    return v ? std::to_string(*v) : std::string{};
}

std::optional<double> optional_double(const std::string& field) {
    if (field.empty()) return std::nullopt;
    return parse_double(field);
}

std::optional<std::uint64_t> optional_u64(const std::string& field) {
    if (field.empty()) return std::nullopt;
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw std::invalid_argument("csv: bad integer field \"" + field + "\"");
    }
    return value;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

std::string short_number(double v, int precision = 4) {
    std::ostringstream out;
    out.precision(precision);
    out << v;
    return out.str();
}

}  // namespace

std::string format_exact(double value) {
    std::array<char, 64> buffer{};
    const auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    if (ec != std::errc{}) throw std::runtime_error("format_exact: conversion failed");
    return std::string(buffer.data(), ptr);
}

double parse_double(const std::string& text) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument("not a number: \"" + text + "\"");
    }
    return value;
}

void compute_delta(ReportRow& row) {
    row.delta.reset();
    const std::optional<double> loss = row.p_exact ? row.p_exact : row.p_hat;
    if (row.p_sup && loss && *loss > 0.0) {
        row.delta = std::log10(*row.p_sup / *loss);
    }
}

void write_csv(std::ostream& out, const std::vector<ReportRow>& rows) {
    out << kReportCsvHeader << '\n';
    for (const ReportRow& r : rows) {
        out << r.variant << ',' << format_exact(r.alpha) << ',' << format_exact(r.n0) << ','
            << optional_text(r.p_sup) << ',' << optional_text(r.p_exact) << ',' << optional_text(r.p_exact_ge)
            << ',' << optional_text(r.p_hat) << ',' << optional_text(r.ci_low) << ','
            << optional_text(r.ci_high) << ',' << optional_text(r.n_reps) << ',' << optional_text(r.seed)
            << ',' << optional_text(r.delta) << '\n';
    }
}

std::vector<ReportRow> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kReportCsvHeader) {
        throw std::invalid_argument("csv: unexpected header");
    }
    std::vector<ReportRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::vector<std::string> f = split_csv(line);
        if (f.size() != 12) throw std::invalid_argument("csv: expected 12 fields");
        ReportRow r;
        r.variant = f[0];
        r.alpha = parse_double(f[1]);
        r.n0 = parse_double(f[2]);
        r.p_sup = optional_double(f[3]);
        r.p_exact = optional_double(f[4]);
        r.p_exact_ge = optional_double(f[5]);
        r.p_hat = optional_double(f[6]);
        r.ci_low = optional_double(f[7]);
        r.ci_high = optional_double(f[8]);
        r.n_reps = optional_u64(f[9]);
        r.seed = optional_u64(f[10]);
        r.delta = optional_double(f[11]);
        rows.push_back(std::move(r));
    }
    return rows;
}

void write_markdown(std::ostream& out, const RunReport& report) {
    out << "# " << report.command << "\n\n";
    if (!report.scenario.empty()) {
        out << "## Scenario\n\n| key | value |\n|---|---|\n";
        for (const auto& [k, v] : report.scenario) out << "| " << k << " | " << v << " |\n";
        out << '\n';
    }
    if (!report.thresholds.empty()) {
        out << "## Thresholds\n\n";
        for (const std::string& t : report.thresholds) out << "- " << t << '\n';
        out << '\n';
    }
    if (!report.moments.empty()) {
        out << "## Moments\n\n| variant | m_N | v_N | n_max | class masses |\n|---|---|---|---|---|\n";
        for (const MomentSummary& m : report.moments) {
            out << "| " << m.variant << " | " << short_number(m.moments.m, 6) << " | "
                << short_number(m.moments.v, 6) << " | " << m.n_max << " | ";
            for (std::size_t j = 0; j < m.class_masses.size(); ++j) {
                out << (j ? ", " : "") << short_number(m.class_masses[j], 6);
            }
            out << " |\n";
        }
        out << '\n';
    }
    if (!report.rows.empty()) {
        out << "## Results\n\n| variant | alpha | N0 | P_sup | P_loss (>) | P_loss (>=) | P_hat [99% CI] | Delta |\n"
               "|---|---|---|---|---|---|---|---|\n";
        for (const ReportRow& r : report.rows) {
            out << "| " << r.variant << " | " << short_number(r.alpha) << " | " << short_number(r.n0, 6) << " | "
                << (r.p_sup ? short_number(*r.p_sup) : "") << " | " << (r.p_exact ? short_number(*r.p_exact) : "")
                << " | " << (r.p_exact_ge ? short_number(*r.p_exact_ge) : "") << " | ";
            if (r.p_hat) {
                out << short_number(*r.p_hat) << " [" << short_number(r.ci_low.value_or(0.0)) << ", "
                    << short_number(r.ci_high.value_or(1.0)) << "]";
            }
            out << " | " << (r.delta ? short_number(*r.delta, 3) : "") << " |\n";
        }
        out << '\n';
    }
    if (!report.notes.empty()) {
        out << "## Notes\n\n";
        for (const std::string& n : report.notes) out << "- " << n << '\n';
        out << '\n';
    }
    if (!report.provenance.empty()) {
        out << "## Provenance\n\n";
        for (const auto& [k, v] : report.provenance) out << "- " << k << ": " << v << '\n';
    }
}

}  // namespace ofdma

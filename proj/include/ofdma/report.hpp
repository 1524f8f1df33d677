#pragma once

#include "ofdma/moments.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ofdma {

// Shortest decimal text that parses back to the same double.
std::string format_exact(double value);
double parse_double(const std::string& text);

struct ReportRow {
    std::string variant;  // scenario or association label
    double alpha = 1.0;
    double n0 = 0.0;
    std::optional<double> p_sup;
    std::optional<double> p_exact;     // P(total > n0)
    std::optional<double> p_exact_ge;  // P(total >= n0)
    std::optional<double> p_hat;
    std::optional<double> ci_low;
    std::optional<double> ci_high;
    std::optional<std::uint64_t> n_reps;
    std::optional<std::uint64_t> seed;
    // log10(P_sup / P_loss); P_loss is p_exact when present, else p_hat.
    std::optional<double> delta;

    bool operator==(const ReportRow&) const = default;
};

// Fills delta from p_sup and the loss estimate; left empty when P_loss = 0.
void compute_delta(ReportRow& row);

struct MomentSummary {
    std::string variant;
    MomentPair moments;
    int n_max = 0;
    std::vector<double> class_masses;
};

struct RunReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> scenario;
    std::vector<std::string> thresholds;
    std::vector<MomentSummary> moments;
    std::vector<ReportRow> rows;
    std::vector<std::pair<std::string, std::string>> provenance;
    std::vector<std::string> notes;
    bool accuracy_warning = false;
};

inline constexpr const char* kReportCsvHeader =
    "variant,alpha,n0,p_sup,p_exact,p_exact_ge,p_hat,ci_low,ci_high,n_reps,seed,delta";

void write_csv(std::ostream& out, const std::vector<ReportRow>& rows);
std::vector<ReportRow> read_csv(std::istream& in);

// Human-readable summary (markdown tables).
void write_markdown(std::ostream& out, const RunReport& report);

}  // namespace ofdma

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "groverian/optimize.hpp"
#include "groverian/state.hpp"

namespace groverian {

// Published table values used by --paper-compare, with the per-column
// comparison tolerances. The entropy column is informational only: it is
// known to disagree with direct computation and is never flagged.
struct PaperBaseline {
    int n;
    std::vector<double> groverian;
    std::vector<double> entropy;
    std::vector<double> tangle; // empty for n = 5
    double groverian_tol;
    double tangle_tol;
};

// n = 3 or n = 5; nullptr otherwise.
const PaperBaseline* paper_baseline(int n);

struct TraceReportRow {
    std::string label;
    int half_step = 0; // applied half-steps: 0, 1, 2, ...
    double p_closed = 0.0;
    double g_closed = 0.0;
    double p_numeric = 0.0;
    double g_numeric = 0.0;
    double entropy = 0.0;
    std::optional<double> tangle; // n = 3 only
    double success = 0.0;

    // --paper-compare extras
    std::optional<double> paper_g, delta_g;
    bool g_flag = false;
    std::optional<double> paper_entropy, delta_entropy;
    std::optional<double> paper_tangle, delta_tangle;
    bool tangle_flag = false;

    // closed-form bound tightness against the grid oracle (n <= 3)
    std::optional<double> grid_p;
    std::optional<double> bound_gap;
    bool bound_gap_flag = false;
};

struct TraceReport {
    int n = 0;
    std::uint64_t marked = 0;
    int iterations = 0;
    NumericConfig numeric_cfg;
    bool paper_compare = false;
    std::vector<TraceReportRow> rows;
    std::vector<std::string> notes;
};

TraceReport build_trace_report(int n, std::uint64_t marked, int iterations,
                               const NumericConfig& cfg, bool paper_compare);

// Fixed column order:
//   step_label, half_step, groverian_cf, groverian_numeric, entropy,
//   tangle, success_prob
// plus the paper-comparison columns when enabled. Cells hold 6 significant
// digits; inapplicable cells are empty.
std::string trace_report_csv(const TraceReport& r);
nlohmann::json trace_report_json(const TraceReport& r);

// Single-state report for the measure command.
struct MeasureReport {
    std::string source;
    int n = 0;
    bool real = false;
    std::optional<MeasureResult> closed, numeric, grid;
    std::vector<std::pair<int, double>> entropies; // (qubit, value)
    std::optional<double> tangle;
    std::vector<std::string> warnings; // printed to stderr by the CLI
};

struct MeasureOptions {
    std::string method = "all"; // closed | numeric | grid | all
    std::optional<int> qubit;
    NumericConfig numeric_cfg;
    int grid_resolution = 181;
};

MeasureReport build_measure_report(const StateVector& s, const std::string& source,
                                   const MeasureOptions& opt);

std::string measure_report_csv(const MeasureReport& r);
nlohmann::json measure_report_json(const MeasureReport& r);

// 6-significant-digit cell formatting shared by the CSV writers.
std::string format_cell(double v);

} // namespace groverian

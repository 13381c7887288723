#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "randtext/analytic.hpp"
#include "randtext/params.hpp"
#include "randtext/stats.hpp"
#include "randtext/zipf_fit.hpp"

namespace randtext {

// Tolerances are relative errors except alpha_abs and kstar_abs, which are
// absolute differences. Per-length rows are only enforced when the
// predicted count reaches the matching floor; below it the statistical
// noise of a single run exceeds any useful tolerance and the row is
// reported as informational.
struct ToleranceConfig {
    double total_tokens = 0.005;
    double tokens_per_length = 0.03;
    double types_per_length = 0.05;
    double hapax_per_length = 0.05;
    double alpha_abs = 0.1;
    double kstar_abs = 1.0;
    double tokens_floor = 1e4;
    double types_floor = 1e3;
    double hapax_floor = 1e3;
    std::uint64_t fit_r_min = 10;
    std::uint64_t fit_r_max = 10000;
};

struct ComparisonRow {
    std::string name;
    std::optional<std::int64_t> k;
    double empirical = 0.0;
    double predicted = 0.0;
    double rel_error = 0.0;  // |empirical - predicted| / max(|predicted|, 1e-12)
    double tolerance = 0.0;  // on the rel_error scale
    bool pass = false;       // rel_error <= tolerance
    bool enforced = true;    // informational rows never fail the report
    std::string note;
};

struct ComparisonReport {
    std::vector<ComparisonRow> rows;
    ModelParams params;
    std::uint64_t n_symbols = 0;
    std::int64_t k_max = 0;
    bool all_pass = true;  // over enforced rows

    std::optional<FitResult> alpha_fit;
};

// Side-by-side evaluation of empirical statistics against every closed-form
// prediction at (params, N): token total, per-length token/type/hapax
// counts, the fitted rank-frequency exponent, and the hapax-crossing
// length against the critical length.
ComparisonReport compare_stats(const CorpusStats& stats, const ModelParams& params,
                               std::uint64_t n_symbols,
                               const ToleranceConfig& tolerances = {});

}  // namespace randtext

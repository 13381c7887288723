#include "randtext/compare.hpp"

#include <algorithm>
#include <cmath>

namespace randtext {

namespace {

constexpr double kRelFloor = 1e-12;

double rel_error(double empirical, double predicted) {
    return std::fabs(empirical - predicted) /
           std::max(std::fabs(predicted), kRelFloor);
}

ComparisonRow make_row(std::string name, std::optional<std::int64_t> k,
                       double empirical, double predicted, double tolerance,
                       bool enforced, std::string note = {}) {
    ComparisonRow row;
    row.name = std::move(name);
    row.k = k;
    row.empirical = empirical;
    row.predicted = predicted;
    row.rel_error = rel_error(empirical, predicted);
    row.tolerance = tolerance;
    row.pass = row.rel_error <= tolerance;
    row.enforced = enforced;
    row.note = std::move(note);
    return row;
}

}  // namespace

ComparisonReport compare_stats(const CorpusStats& stats, const ModelParams& params,
                               std::uint64_t n_symbols,
                               const ToleranceConfig& tol) {
    if (n_symbols == 0) {
        throw std::domain_error("cannot compare an empty corpus");
    }
    const auto n = static_cast<std::int64_t>(n_symbols);
    const AnalyticReport model = build_analytic_report(params, n);

    ComparisonReport report{.rows = {}, .params = params, .n_symbols = n_symbols,
                            .k_max = model.k_max};

    // Total token count vs the exact word-count formula.
    report.rows.push_back(make_row(
        "total_tokens", std::nullopt, static_cast<double>(stats.total_tokens),
        model.expected_words, tol.total_tokens, true));

    // Per-length rows. Type/hapax tracking stops at the accumulator cap.
    const std::int64_t k_hi = model.k_max;
    for (std::int64_t k = 1; k <= k_hi; ++k) {
        const double predicted = model.expected_tokens_by_length[k];
        report.rows.push_back(make_row(
            "tokens_by_length", k, static_cast<double>(stats.tokens_at(k)),
            predicted, tol.tokens_per_length, predicted >= tol.tokens_floor,
            predicted >= tol.tokens_floor ? "" : "below enforcement floor"));
    }
    const std::int64_t type_hi = std::min(k_hi, stats.tracked_k_max);
    for (std::int64_t k = 1; k <= type_hi; ++k) {
        const double predicted = model.expected_distinct_by_length[k];
        report.rows.push_back(make_row(
            "types_by_length", k, static_cast<double>(stats.types_at(k)),
            predicted, tol.types_per_length, predicted >= tol.types_floor,
            predicted >= tol.types_floor ? "" : "below enforcement floor"));
    }
    for (std::int64_t k = 1; k <= type_hi; ++k) {
        const double predicted = model.expected_unique_by_length[k];
        report.rows.push_back(make_row(
            "hapax_by_length", k, static_cast<double>(stats.hapax_at(k)),
            predicted, tol.hapax_per_length, predicted >= tol.hapax_floor,
            predicted >= tol.hapax_floor ? "" : "below enforcement floor"));
    }

    // Fitted rank-frequency exponent vs the analytic one. The absolute
    // tolerance is expressed on the rel_error scale of the row contract.
    {
        std::vector<RankCount> table;
        table.reserve(stats.rank_frequency.size());
        for (const auto& entry : stats.rank_frequency) {
            table.push_back({entry.rank, entry.count});
        }
        const double predicted = model.zipf_alpha;
        try {
            const FitResult fit =
                fit_ols(table, tol.fit_r_min,
                        std::max(tol.fit_r_min + 1, tol.fit_r_max));
            report.alpha_fit = fit;
            report.rows.push_back(make_row(
                "zipf_alpha", std::nullopt, fit.alpha_hat, predicted,
                tol.alpha_abs / std::max(std::fabs(predicted), kRelFloor), true));
        } catch (const std::domain_error& e) {
            report.rows.push_back(make_row("zipf_alpha", std::nullopt,
                                           std::nan(""), predicted, 0.0, false,
                                           std::string("fit unavailable: ") + e.what()));
        }
    }

    // Hapax-crossing length vs the critical length: the smallest k at
    // which at least half of the observed types occur exactly once.
    {
        const double predicted = model.critical.value;
        std::optional<std::int64_t> crossing;
        for (std::int64_t k = 1;
             k < static_cast<std::int64_t>(stats.types_by_length.size()); ++k) {
            if (stats.types_at(k) > 0 &&
                static_cast<double>(stats.hapax_at(k)) >=
                    0.5 * static_cast<double>(stats.types_at(k))) {
                crossing = k;
                break;
            }
        }
        if (!model.critical.has_core) {
            report.rows.push_back(make_row(
                "critical_length", std::nullopt,
                crossing ? static_cast<double>(*crossing) : std::nan(""), predicted,
                0.0, false, "no saturated core: N q^2 <= 1"));
        } else if (!crossing) {
            report.rows.push_back(make_row(
                "critical_length", std::nullopt, std::nan(""), predicted, 0.0,
                false, "no hapax-majority length observed"));
        } else {
            report.rows.push_back(make_row(
                "critical_length", std::nullopt, static_cast<double>(*crossing),
                predicted, tol.kstar_abs / std::max(std::fabs(predicted), kRelFloor),
                true));
        }
    }

    report.all_pass = std::all_of(
        report.rows.begin(), report.rows.end(),
        [](const ComparisonRow& row) { return !row.enforced || row.pass; });
    return report;
}

}  // namespace randtext

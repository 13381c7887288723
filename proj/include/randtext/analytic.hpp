#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "randtext/params.hpp"

namespace randtext {

// Closed-form predictions for the i.i.d. symbol model with words defined
// as maximal non-space runs. Word lengths are geometric on k >= 1 with
// P(L = k) = q(1-q)^(k-1); consecutive spaces produce no word and a text
// ending mid-word still counts its final word. All operations are pure.

// P(L = k) = q (1-q)^(k-1), k >= 1.
double word_length_pmf(double space_prob, std::int64_t length);

struct LengthMoments {
    double mean;      // 1/q
    double variance;  // (1-q)/q^2
};
LengthMoments word_length_moments(double space_prob);

// E[word count] = (1-q)(1 + (N-1)q). Exact, not asymptotic. N = 0 -> 0.
double expected_word_count(std::int64_t text_length, double space_prob);

// E[count of length-k words] ~= N q^2 (1-q)^k. Ignores boundary effects;
// exact_bruteforce_word_stats quantifies the error at tiny N.
double expected_tokens_of_length(std::int64_t text_length, double space_prob,
                                 std::int64_t length);

// Probability that a random word token equals one fixed k-letter string:
// q(1-q)^(k-1) / m^k. Requires equiprobable letters.
double word_probability(const ModelParams& params, std::int64_t length);

// Mean occurrence count of one fixed k-letter word: N q^2 ((1-q)/m)^k.
double expected_occurrences(const ModelParams& params, std::int64_t text_length,
                            std::int64_t length);

// Coupon-collector vocabulary estimate:
// E[distinct length-k types] = m^k (1 - (1-pi_k)^K), K = N q (1-q).
double expected_distinct_types(const ModelParams& params, std::int64_t text_length,
                               std::int64_t length);

// Poisson estimate of hapax types at length k: m^k * lambda_k * exp(-lambda_k).
double expected_unique_types(const ModelParams& params, std::int64_t text_length,
                             std::int64_t length);

struct CriticalLength {
    double value;   // solution of lambda_k = 1, may be <= 0 when has_core is false
    bool has_core;  // false when N q^2 <= 1: every length is already rare
};

// k* = ln(N q^2) / (ln m - ln(1-q)); the length at which the expected
// occurrence count of a fixed word crosses 1.
CriticalLength critical_length(const ModelParams& params, std::int64_t text_length);

// alpha = 1 - ln(1-q)/ln m. Always > 1.
double zipf_exponent(const ModelParams& params);

// Exact count of words of length <= k: m (m^k - 1) / (m - 1). R_0 = 0.
// Throws std::overflow_error when the count exceeds the uint64 range
// (the largest supported boundary is 2^64 - 1).
std::uint64_t rank_boundary(std::uint32_t alphabet_size, std::int64_t length);

// Exact model rank-frequency curve: pi_k for the unique k with
// R_(k-1) < rank <= R_k. Non-increasing, constant on each length block.
double predicted_rank_frequency(const ModelParams& params, std::uint64_t rank);

// Pr(X = c) = exp(-lambda) lambda^c / c!, evaluated in log space.
double poisson_occurrence_pmf(double mean_occurrences, std::int64_t count);

// Exact expectations for tiny texts by enumerating all 2^N space layouts.
// Pattern weight is q^(#spaces) (1-q)^(#non-spaces). Validates the exact
// word-count formula and measures the bias of the length-k approximation.
struct BruteForceStats {
    double expected_words = 0.0;
    // expected_tokens_by_length[k] for k = 1..max_length (index 0 unused).
    std::vector<double> expected_tokens_by_length;
};
BruteForceStats exact_bruteforce_word_stats(std::int64_t text_length,
                                            double space_prob,
                                            std::int64_t max_length);

// Every closed-form quantity for one (params, N), tabulated to k_max.
struct AnalyticReport {
    ModelParams params;
    std::int64_t text_length = 0;
    std::int64_t k_max = 0;

    double expected_words = 0.0;
    CriticalLength critical;
    double zipf_alpha = 0.0;

    // All vectors are indexed by k, entry 0 unused.
    std::vector<double> word_length_probability;       // P(L = k)
    std::vector<double> expected_tokens_by_length;     // E[count of length-k tokens]
    std::vector<double> word_probability_by_length;    // pi_k
    std::vector<double> expected_occurrences_by_length;  // lambda_k
    std::vector<double> expected_distinct_by_length;   // E[V_k]
    std::vector<double> expected_unique_by_length;     // U_k

    // Exact boundaries while they fit in 64 bits; k beyond
    // rank_boundary_limit are omitted (entry count = limit + 1).
    std::vector<std::uint64_t> rank_boundaries;        // R_k, index 0 holds R_0 = 0
    std::int64_t rank_boundary_limit = 0;

    // Degenerate-configuration flags.
    bool no_core = false;                              // N q^2 <= 1
    std::vector<std::int64_t> lambda_underflow_lengths;  // lambda_k underflowed to 0
};

// k_max = 0 selects the default max(ceil(4/q), ceil(2 k*)).
AnalyticReport build_analytic_report(const ModelParams& params,
                                     std::int64_t text_length,
                                     std::int64_t k_max = 0);

}  // namespace randtext

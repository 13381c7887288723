#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "randtext/analytic.hpp"

using namespace randtext;

namespace {
const std::vector<double> kQGrid{0.1, 0.2, 0.5, 0.8};
}

TEST_CASE("model params validation") {
    CHECK_THROWS_AS(ModelParams(1, 0.2), std::domain_error);
    CHECK_THROWS_AS(ModelParams(26, 0.0), std::domain_error);
    CHECK_THROWS_AS(ModelParams(26, 1.0), std::domain_error);
    CHECK_THROWS_AS(ModelParams(26, -0.1), std::domain_error);
    CHECK_THROWS_AS(ModelParams(3, 0.2, {0.4, 0.4}), std::domain_error);
    CHECK_THROWS_AS(ModelParams(2, 0.2, {0.9, -0.1}), std::domain_error);
    CHECK_THROWS_AS(ModelParams(2, 0.2, {0.5, 0.5}), std::domain_error);

    CHECK(ModelParams(26, 0.2).uniform());
    CHECK(ModelParams(2, 0.2, {0.4, 0.4}).uniform());
    CHECK_FALSE(ModelParams(2, 0.2, {0.5, 0.3}).uniform());
}

TEST_CASE("word length pmf") {
    CHECK(word_length_pmf(0.2, 1) == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(word_length_pmf(0.2, 3) == doctest::Approx(0.128).epsilon(1e-14));
    CHECK_THROWS_AS(word_length_pmf(0.2, 0), std::domain_error);
    CHECK_THROWS_AS(word_length_pmf(0.2, -3), std::domain_error);
    CHECK_THROWS_AS(word_length_pmf(1.0, 1), std::domain_error);

    // Normalization: truncated sum plus the analytic geometric tail (1-q)^K.
    for (double q : {0.011, 0.2, 0.5, 0.93}) {
        const int cap = 500;
        double sum = 0.0;
        for (int k = 1; k <= cap; ++k) sum += word_length_pmf(q, k);
        const double tail = std::exp(cap * std::log1p(-q));
        CHECK(sum + tail == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("word length moments") {
    const auto [mean_half, var_half] = word_length_moments(0.5);
    CHECK(mean_half == doctest::Approx(2.0));
    CHECK(var_half == doctest::Approx(2.0));

    const auto [mean, var] = word_length_moments(0.2);
    CHECK(mean == doctest::Approx(5.0));
    CHECK(var == doctest::Approx(20.0));

    // q -> 1: every run has length 1, variance collapses.
    const auto [mean_hi, var_hi] = word_length_moments(0.999999);
    CHECK(mean_hi == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(var_hi == doctest::Approx(0.0).epsilon(1e-5));

    CHECK_THROWS_AS(word_length_moments(0.0), std::domain_error);
    CHECK_THROWS_AS(word_length_moments(1.5), std::domain_error);
}

TEST_CASE("expected word count") {
    CHECK(expected_word_count(1, 0.5) == doctest::Approx(0.5));
    CHECK(expected_word_count(3, 0.5) == doctest::Approx(1.0));
    CHECK(expected_word_count(100, 0.2) == doctest::Approx(16.64).epsilon(1e-14));
    CHECK(expected_word_count(0, 0.3) == 0.0);
    CHECK_THROWS_AS(expected_word_count(-1, 0.3), std::domain_error);
}

TEST_CASE("expected tokens of length") {
    CHECK(expected_tokens_of_length(10000, 0.2, 3) ==
          doctest::Approx(204.8).epsilon(1e-12));
    CHECK(expected_tokens_of_length(10000, 0.2, 1) ==
          doctest::Approx(320.0).epsilon(1e-12));
    // Consecutive lengths decay by exactly 1-q.
    for (int k = 1; k < 30; ++k) {
        const double ratio = expected_tokens_of_length(1000, 0.3, k + 1) /
                             expected_tokens_of_length(1000, 0.3, k);
        CHECK(ratio == doctest::Approx(0.7).epsilon(1e-12));
    }
    CHECK_THROWS_AS(expected_tokens_of_length(0, 0.2, 1), std::domain_error);
    CHECK_THROWS_AS(expected_tokens_of_length(10, 0.2, 0), std::domain_error);
}

TEST_CASE("word probability") {
    const ModelParams params(26, 0.2);
    CHECK(word_probability(params, 1) ==
          doctest::Approx(0.2 / 26.0).epsilon(1e-14));
    CHECK(word_probability(params, 2) ==
          doctest::Approx(0.16 / 676.0).epsilon(1e-14));

    // Total probability over all word types: sum_k m^k pi_k = 1.
    // The tail beyond k = 200 carries (1-q)^200 ~ 1.7e-20.
    double total = 0.0;
    for (int k = 1; k <= 200; ++k) {
        total += std::pow(26.0, k) * word_probability(params, k);
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));

    const ModelParams skewed(2, 0.5, {0.3, 0.2});
    CHECK_THROWS_AS(word_probability(skewed, 1), std::domain_error);
    CHECK_THROWS_AS(word_probability(params, 0), std::domain_error);
}

TEST_CASE("expected occurrences") {
    const ModelParams params(26, 0.2);
    CHECK(expected_occurrences(params, 1000000, 3) ==
          doctest::Approx(1.1652253072371417).epsilon(1e-12));
    CHECK(expected_occurrences(params, 1000000, 1) ==
          doctest::Approx(1230.769230769231).epsilon(1e-12));

    // lambda_k * m^k equals the expected token count at length k.
    for (int k = 1; k <= 12; ++k) {
        const double lhs =
            expected_occurrences(params, 1000000, k) * std::pow(26.0, k);
        CHECK(lhs == doctest::Approx(expected_tokens_of_length(1000000, 0.2, k))
                         .epsilon(1e-12));
    }

    // lambda_k = K pi_k with K = N q (1-q), across a parameter grid.
    for (std::uint32_t m : {2u, 5u, 26u, 100u}) {
        for (double q : kQGrid) {
            const ModelParams p(m, q);
            const double draws = 1e6 * q * (1 - q);
            for (int k = 1; k <= 40; k += 3) {
                const double lambda = expected_occurrences(p, 1000000, k);
                const double via_pi = draws * word_probability(p, k);
                if (via_pi == 0.0) {
                    CHECK(lambda == 0.0);
                } else {
                    CHECK(lambda == doctest::Approx(via_pi).epsilon(1e-12));
                }
            }
        }
    }
}

TEST_CASE("expected distinct types") {
    CHECK(expected_distinct_types(ModelParams(2, 0.5), 100, 1) ==
          doctest::Approx(1.99849491308367).epsilon(1e-12));

    // Saturation: enormous N fills the whole length-k vocabulary.
    const ModelParams params(26, 0.2);
    CHECK(expected_distinct_types(params, 1000000000, 2) ==
          doctest::Approx(676.0).epsilon(1e-9));

    // 1 - (1-pi)^K <= K pi bounds distinct types by both counts.
    for (double q : kQGrid) {
        const ModelParams p(26, q);
        for (int k = 1; k <= 30; ++k) {
            const double distinct = expected_distinct_types(p, 500000, k);
            const double tokens = expected_tokens_of_length(500000, q, k);
            CHECK(distinct <= std::pow(26.0, k) * (1 + 1e-12));
            CHECK(distinct <= tokens * (1 + 1e-12));
        }
    }
}

TEST_CASE("expected unique types") {
    const ModelParams params(26, 0.2);
    CHECK(expected_unique_types(params, 1000000, 3) ==
          doctest::Approx(6386.736978247426).epsilon(1e-12));

    // Deep tail: expected tokens underflow entirely, so do hapaxes.
    CHECK(expected_unique_types(ModelParams(2, 0.5), 1, 3000) == 0.0);

    // With lambda << 1 essentially every token is a hapax.
    for (int k = 8; k <= 14; ++k) {
        const double ratio = expected_unique_types(params, 1000000, k) /
                             expected_tokens_of_length(1000000, 0.2, k);
        CHECK(ratio == doctest::Approx(1.0).epsilon(1e-3));
    }

    // Bound chain: hapaxes <= distinct <= min(m^k, tokens).
    for (double q : kQGrid) {
        const ModelParams p(4, q);
        for (int k = 1; k <= 25; ++k) {
            const double unique = expected_unique_types(p, 200000, k);
            const double distinct = expected_distinct_types(p, 200000, k);
            const double tokens = expected_tokens_of_length(200000, q, k);
            CHECK(unique <= distinct * (1 + 1e-12));
            CHECK(distinct <= std::min(std::pow(4.0, k), tokens) * (1 + 1e-12));
        }
    }
}

TEST_CASE("critical length") {
    const ModelParams params(26, 0.2);
    const CriticalLength crit = critical_length(params, 1000000);
    CHECK(crit.has_core);
    CHECK(crit.value == doctest::Approx(3.043925285577812).epsilon(1e-12));

    // lambda at the real k* is 1 by construction.
    const double log_ratio = std::log(0.8 / 26.0);
    const double lambda_at =
        1e6 * 0.04 * std::exp(crit.value * log_ratio);
    CHECK(lambda_at == doctest::Approx(1.0).epsilon(1e-9));

    // Bracketing: lambda(floor) >= 1 >= lambda(ceil) whenever a core exists.
    for (double q : kQGrid) {
        const ModelParams p(26, q);
        const CriticalLength c = critical_length(p, 2000000);
        if (!c.has_core) continue;
        const auto lo = static_cast<std::int64_t>(std::floor(c.value));
        const auto hi = static_cast<std::int64_t>(std::ceil(c.value));
        if (lo >= 1) CHECK(expected_occurrences(p, 2000000, lo) >= 1.0 - 1e-12);
        CHECK(expected_occurrences(p, 2000000, hi) <= 1.0 + 1e-12);
    }

    // N = m^4 / (q^2 (1-q)^4) makes k* exactly 4: lambda_4 = 1.
    const CriticalLength exact = critical_length(ModelParams(2, 0.5), 1024);
    CHECK(exact.value == doctest::Approx(4.0).epsilon(1e-12));

    // No saturated core when N q^2 <= 1.
    const CriticalLength rare = critical_length(ModelParams(26, 0.2), 10);
    CHECK_FALSE(rare.has_core);
    CHECK(rare.value < 0.0);
}

TEST_CASE("zipf exponent") {
    CHECK(zipf_exponent(ModelParams(26, 0.2)) ==
          doctest::Approx(1.068488931715239).epsilon(1e-12));
    CHECK(zipf_exponent(ModelParams(26, 1e-9)) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(zipf_exponent(ModelParams(50, 0.2)) < zipf_exponent(ModelParams(20, 0.2)));

    // Identity with the per-position convention: alpha = ln(m/(1-q)) / ln m.
    for (std::uint32_t m : {2u, 26u, 1000u}) {
        for (double q : kQGrid) {
            const double main_form = zipf_exponent(ModelParams(m, q));
            const double appendix_form =
                std::log(static_cast<double>(m) / (1.0 - q)) /
                std::log(static_cast<double>(m));
            CHECK(main_form == doctest::Approx(appendix_form).epsilon(1e-12));
        }
    }

    for (double q : kQGrid) {
        CHECK(zipf_exponent(ModelParams(26, q)) > 1.0);
    }
}

TEST_CASE("rank boundary") {
    CHECK(rank_boundary(2, 3) == 14);
    CHECK(rank_boundary(26, 1) == 26);
    CHECK(rank_boundary(26, 2) == 702);
    CHECK(rank_boundary(26, 0) == 0);
    CHECK(rank_boundary(26, 13) == 2580398988131886038ULL);
    CHECK_THROWS_AS(rank_boundary(26, 14), std::overflow_error);
    CHECK_THROWS_AS(rank_boundary(1, 3), std::domain_error);
    CHECK_THROWS_AS(rank_boundary(26, -1), std::domain_error);
}

TEST_CASE("predicted rank frequency") {
    const ModelParams params(2, 0.5);
    CHECK(predicted_rank_frequency(params, 1) == doctest::Approx(0.25));
    CHECK(predicted_rank_frequency(params, 2) == doctest::Approx(0.25));
    CHECK(predicted_rank_frequency(params, 3) == doctest::Approx(0.0625));
    CHECK_THROWS_AS(predicted_rank_frequency(params, 0), std::domain_error);

    // Non-increasing, with drops exactly at R_k + 1.
    const ModelParams p3(3, 0.3);
    double previous = predicted_rank_frequency(p3, 1);
    std::vector<std::uint64_t> boundaries;
    for (int k = 1; rank_boundary(3, k) < 300; ++k) {
        boundaries.push_back(rank_boundary(3, k));
    }
    for (std::uint64_t r = 2; r <= 300; ++r) {
        const double current = predicted_rank_frequency(p3, r);
        CHECK(current <= previous);
        const bool at_block_start =
            std::find(boundaries.begin(), boundaries.end(), r - 1) != boundaries.end();
        if (at_block_start) {
            CHECK(current < previous);
        } else {
            CHECK(current == previous);
        }
        previous = current;
    }

    // Ranks beyond any representable boundary still get a block.
    CHECK(predicted_rank_frequency(ModelParams(26, 0.2),
                                   std::numeric_limits<std::uint64_t>::max()) > 0.0);

    // Log-log slope between block midpoints approaches -alpha. Midpoints
    // are evaluated with the closed form in floating point; integer
    // boundaries overflow long before k = 20 at m = 26.
    {
        const ModelParams p(26, 0.2);
        const double alpha = zipf_exponent(p);
        const auto boundary = [](double m, double k) {
            return m * (std::pow(m, k) - 1.0) / (m - 1.0);
        };
        for (int k = 10; k < 20; ++k) {
            const auto mid = [&](int kk) {
                return std::sqrt((boundary(26.0, kk - 1) + 1.0) * boundary(26.0, kk));
            };
            const double slope =
                (std::log(word_probability(p, k + 1)) - std::log(word_probability(p, k))) /
                (std::log(mid(k + 1)) - std::log(mid(k)));
            CHECK(-slope == doctest::Approx(alpha).epsilon(1e-3));
        }
    }
}

TEST_CASE("poisson occurrence pmf") {
    CHECK(poisson_occurrence_pmf(0.0, 0) == 1.0);
    CHECK(poisson_occurrence_pmf(0.0, 3) == 0.0);
    CHECK(poisson_occurrence_pmf(1.0, 0) ==
          doctest::Approx(0.36787944117144233).epsilon(1e-14));
    CHECK_THROWS_AS(poisson_occurrence_pmf(-1.0, 0), std::domain_error);
    CHECK_THROWS_AS(poisson_occurrence_pmf(1.0, -1), std::domain_error);

    // Normalization and mean for lambda up to 50; the tail beyond c = 400
    // is far below 1e-12 there.
    for (double lambda : {0.5, 5.0, 50.0}) {
        double total = 0.0, mean = 0.0;
        for (int c = 0; c <= 400; ++c) {
            const double p = poisson_occurrence_pmf(lambda, c);
            total += p;
            mean += c * p;
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(mean == doctest::Approx(lambda).epsilon(1e-10));
    }
}

TEST_CASE("brute force oracle matches the exact word count formula") {
    // The closed form is exact; enumeration must agree to 1e-12 absolute.
    for (std::int64_t n = 1; n <= 12; ++n) {
        for (double q : kQGrid) {
            const BruteForceStats stats = exact_bruteforce_word_stats(n, q, n);
            CHECK(std::fabs(stats.expected_words - expected_word_count(n, q)) <=
                  1e-12);
        }
    }
}

TEST_CASE("brute force oracle edge cases and boundary bias") {
    const BruteForceStats tiny = exact_bruteforce_word_stats(1, 0.2, 5);
    CHECK(tiny.expected_words == doctest::Approx(0.8).epsilon(1e-14));
    CHECK(tiny.expected_tokens_by_length[1] == doctest::Approx(0.8).epsilon(1e-14));

    const BruteForceStats three = exact_bruteforce_word_stats(3, 0.5, 3);
    CHECK(three.expected_words == doctest::Approx(1.0).epsilon(1e-13));

    // The approximate length-k formula ignores boundary effects; the exact
    // value at N = 12, q = 0.2, k = 2 is 0.4864 and the relative deviation
    // shrinks as N grows.
    const BruteForceStats n6 = exact_bruteforce_word_stats(6, 0.2, 3);
    const BruteForceStats n12 = exact_bruteforce_word_stats(12, 0.2, 3);
    CHECK(n12.expected_tokens_by_length[2] == doctest::Approx(0.4864).epsilon(1e-12));
    const double dev6 =
        (n6.expected_tokens_by_length[2] - 6 * 0.04 * 0.64) /
        n6.expected_tokens_by_length[2];
    const double dev12 =
        (n12.expected_tokens_by_length[2] - 12 * 0.04 * 0.64) /
        n12.expected_tokens_by_length[2];
    CHECK(dev12 < dev6);

    CHECK_THROWS_AS(exact_bruteforce_word_stats(21, 0.2, 3), std::domain_error);
    CHECK_THROWS_AS(exact_bruteforce_word_stats(0, 0.2, 3), std::domain_error);
}

TEST_CASE("analytic report") {
    const ModelParams params(26, 0.2);
    const AnalyticReport report = build_analytic_report(params, 1000000);

    // Default truncation: max(ceil(4/q), ceil(2 k*)).
    CHECK(report.k_max == 20);
    CHECK(report.expected_words ==
          doctest::Approx(expected_word_count(1000000, 0.2)));
    CHECK(report.zipf_alpha == doctest::Approx(1.068488931715239));
    CHECK_FALSE(report.no_core);

    for (std::int64_t k = 1; k <= report.k_max; ++k) {
        CHECK(report.word_length_probability[k] >= 0.0);
        CHECK(report.word_length_probability[k] <= 1.0);
        CHECK(report.word_probability_by_length[k] >= 0.0);
        CHECK(report.word_probability_by_length[k] <= 1.0);
        CHECK(report.expected_tokens_by_length[k] >= 0.0);
        CHECK(report.expected_distinct_by_length[k] <=
              report.expected_tokens_by_length[k] * (1 + 1e-12));
        CHECK(report.expected_distinct_by_length[k] <=
              std::pow(26.0, k) * (1 + 1e-12));
        if (k > 1) {
            CHECK(report.expected_tokens_by_length[k] <
                  report.expected_tokens_by_length[k - 1]);
        }
    }

    // Boundaries stop where uint64 stops at m = 26.
    CHECK(report.rank_boundary_limit == 13);
    CHECK(report.rank_boundaries.size() == 14);
    CHECK(report.rank_boundaries[0] == 0);
    CHECK(report.rank_boundaries[2] == 702);

    // Degenerate flags.
    const AnalyticReport no_core = build_analytic_report(params, 10);
    CHECK(no_core.no_core);
    const AnalyticReport deep = build_analytic_report(ModelParams(1000, 0.2), 1000, 200);
    CHECK_FALSE(deep.lambda_underflow_lengths.empty());

    CHECK_THROWS_AS(
        build_analytic_report(ModelParams(2, 0.5, {0.4, 0.1}), 1000),
        std::domain_error);
}

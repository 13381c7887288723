#include "randtext/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace randtext {

namespace {

void check_space_prob(double q) {
    if (!(q > 0.0) || !(q < 1.0)) {
        throw std::domain_error("space probability must lie in (0, 1)");
    }
}

void check_length(std::int64_t k) {
    if (k < 1) {
        throw std::domain_error(
            "word length must be >= 1 (maximal non-space blocks are never empty)");
    }
}

void check_text_length(std::int64_t n) {
    if (n < 1) {
        throw std::domain_error("text length must be >= 1");
    }
}

void require_uniform(const ModelParams& params) {
    if (!params.uniform()) {
        throw std::domain_error(
            "closed-form predictions assume equiprobable letters; "
            "non-uniform letter probabilities are not supported here");
    }
}

// ln pi_k; always finite even when pi_k underflows as a double.
double log_word_probability(const ModelParams& params, std::int64_t k) {
    const double q = params.space_prob();
    const double m = static_cast<double>(params.alphabet_size());
    return std::log(q) + static_cast<double>(k - 1) * std::log1p(-q) -
           static_cast<double>(k) * std::log(m);
}

// ln lambda_k = ln(N q^2) + k (ln(1-q) - ln m).
double log_expected_occurrences(const ModelParams& params, std::int64_t n,
                                std::int64_t k) {
    const double q = params.space_prob();
    const double m = static_cast<double>(params.alphabet_size());
    return std::log(static_cast<double>(n)) + 2.0 * std::log(q) +
           static_cast<double>(k) * (std::log1p(-q) - std::log(m));
}

}  // namespace

double word_length_pmf(double space_prob, std::int64_t length) {
    check_space_prob(space_prob);
    check_length(length);
    return space_prob *
           std::exp(static_cast<double>(length - 1) * std::log1p(-space_prob));
}

LengthMoments word_length_moments(double space_prob) {
    check_space_prob(space_prob);
    return {1.0 / space_prob, (1.0 - space_prob) / (space_prob * space_prob)};
}

double expected_word_count(std::int64_t text_length, double space_prob) {
    check_space_prob(space_prob);
    if (text_length == 0) return 0.0;
    if (text_length < 0) {
        throw std::domain_error("text length must be >= 0");
    }
    const double q = space_prob;
    return (1.0 - q) * (1.0 + static_cast<double>(text_length - 1) * q);
}

double expected_tokens_of_length(std::int64_t text_length, double space_prob,
                                 std::int64_t length) {
    check_space_prob(space_prob);
    check_text_length(text_length);
    check_length(length);
    const double q = space_prob;
    return static_cast<double>(text_length) * q * q *
           std::exp(static_cast<double>(length) * std::log1p(-q));
}

double word_probability(const ModelParams& params, std::int64_t length) {
    require_uniform(params);
    check_length(length);
    return std::exp(log_word_probability(params, length));
}

double expected_occurrences(const ModelParams& params, std::int64_t text_length,
                            std::int64_t length) {
    require_uniform(params);
    check_text_length(text_length);
    check_length(length);
    return std::exp(log_expected_occurrences(params, text_length, length));
}

double expected_distinct_types(const ModelParams& params, std::int64_t text_length,
                               std::int64_t length) {
    require_uniform(params);
    check_text_length(text_length);
    check_length(length);

    const double q = params.space_prob();
    const double log_m = std::log(static_cast<double>(params.alphabet_size()));
    const double draws = static_cast<double>(text_length) * q * (1.0 - q);
    const double log_pi = log_word_probability(params, length);

    if (log_pi < -45.0) {
        // Rare regime: 1 - (1-pi)^K = K pi (1 + O(K pi)), and K pi < 1e-19 * K
        // makes the correction unobservable in double precision.
        const double log_kpi = std::log(draws) + log_pi;
        return std::exp(static_cast<double>(length) * log_m + log_kpi);
    }
    const double pi = std::exp(log_pi);
    const double log_miss = draws * std::log1p(-pi);  // ln (1-pi)^K
    return std::exp(static_cast<double>(length) * log_m) * (-std::expm1(log_miss));
}

double expected_unique_types(const ModelParams& params, std::int64_t text_length,
                             std::int64_t length) {
    require_uniform(params);
    check_text_length(text_length);
    check_length(length);
    // m^k * lambda * exp(-lambda); m^k * lambda equals the expected token
    // count at this length, so evaluate that product jointly in log space.
    const double q = params.space_prob();
    const double log_tokens = std::log(static_cast<double>(text_length)) +
                              2.0 * std::log(q) +
                              static_cast<double>(length) * std::log1p(-q);
    const double lambda = std::exp(log_expected_occurrences(params, text_length, length));
    return std::exp(log_tokens - lambda);
}

CriticalLength critical_length(const ModelParams& params, std::int64_t text_length) {
    require_uniform(params);
    check_text_length(text_length);
    const double q = params.space_prob();
    const double nq2 = static_cast<double>(text_length) * q * q;
    const double denom =
        std::log(static_cast<double>(params.alphabet_size())) - std::log1p(-q);
    return {std::log(nq2) / denom, nq2 > 1.0};
}

double zipf_exponent(const ModelParams& params) {
    return 1.0 - std::log1p(-params.space_prob()) /
                     std::log(static_cast<double>(params.alphabet_size()));
}

std::uint64_t rank_boundary(std::uint32_t alphabet_size, std::int64_t length) {
    if (alphabet_size < 2) {
        throw std::domain_error("alphabet size must be >= 2");
    }
    if (length < 0) {
        throw std::domain_error("length must be >= 0");
    }
    const std::uint64_t m = alphabet_size;
    std::uint64_t power = 1;  // m^j
    std::uint64_t total = 0;  // sum of m^1..m^j
    for (std::int64_t j = 1; j <= length; ++j) {
        if (__builtin_mul_overflow(power, m, &power) ||
            __builtin_add_overflow(total, power, &total)) {
            throw std::overflow_error(
                "rank boundary exceeds the 64-bit range at length " +
                std::to_string(j));
        }
    }
    return total;
}

double predicted_rank_frequency(const ModelParams& params, std::uint64_t rank) {
    require_uniform(params);
    if (rank == 0) {
        throw std::domain_error("ranks are 1-based");
    }
    const std::uint64_t m = params.alphabet_size();
    std::uint64_t power = 1;
    std::uint64_t total = 0;
    std::int64_t k = 0;
    while (total < rank) {
        ++k;
        if (__builtin_mul_overflow(power, m, &power) ||
            __builtin_add_overflow(total, power, &total)) {
            // The boundary passed the uint64 range, so it passed `rank` too.
            break;
        }
    }
    return word_probability(params, k);
}

double poisson_occurrence_pmf(double mean_occurrences, std::int64_t count) {
    if (!(mean_occurrences >= 0.0)) {
        throw std::domain_error("Poisson mean must be >= 0");
    }
    if (count < 0) {
        throw std::domain_error("occurrence count must be >= 0");
    }
    if (count == 0) return std::exp(-mean_occurrences);
    if (mean_occurrences == 0.0) return 0.0;
    return std::exp(-mean_occurrences +
                    static_cast<double>(count) * std::log(mean_occurrences) -
                    std::lgamma(static_cast<double>(count) + 1.0));
}

BruteForceStats exact_bruteforce_word_stats(std::int64_t text_length,
                                            double space_prob,
                                            std::int64_t max_length) {
    check_space_prob(space_prob);
    check_text_length(text_length);
    if (text_length > 20) {
        throw std::domain_error(
            "brute-force enumeration is limited to text length 20");
    }
    if (max_length < 1) {
        throw std::domain_error("length cap must be >= 1");
    }
    const int n = static_cast<int>(text_length);
    const std::int64_t k_cap = std::min<std::int64_t>(max_length, text_length);

    // Exact pattern weights q^s (1-q)^(n-s), shared across patterns.
    std::vector<double> pow_q(n + 1, 1.0), pow_p(n + 1, 1.0);
    for (int i = 1; i <= n; ++i) {
        pow_q[i] = pow_q[i - 1] * space_prob;
        pow_p[i] = pow_p[i - 1] * (1.0 - space_prob);
    }

    long double expected_words = 0.0L;
    std::vector<long double> by_length(k_cap + 1, 0.0L);

    const std::uint32_t patterns = 1u << n;
    for (std::uint32_t mask = 0; mask < patterns; ++mask) {
        // Bit i set = position i holds a space.
        const int spaces = __builtin_popcount(mask);
        const double weight = pow_q[spaces] * pow_p[n - spaces];

        int words = 0;
        int run = 0;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) {
                if (run > 0) {
                    ++words;
                    if (run <= k_cap) by_length[run] += weight;
                }
                run = 0;
            } else {
                ++run;
            }
        }
        if (run > 0) {
            ++words;
            if (run <= k_cap) by_length[run] += weight;
        }
        expected_words += static_cast<long double>(words) * weight;
    }

    BruteForceStats out;
    out.expected_words = static_cast<double>(expected_words);
    out.expected_tokens_by_length.assign(k_cap + 1, 0.0);
    for (std::int64_t k = 1; k <= k_cap; ++k) {
        out.expected_tokens_by_length[k] = static_cast<double>(by_length[k]);
    }
    return out;
}

AnalyticReport build_analytic_report(const ModelParams& params,
                                     std::int64_t text_length, std::int64_t k_max) {
    require_uniform(params);
    check_text_length(text_length);

    const double q = params.space_prob();
    const CriticalLength crit = critical_length(params, text_length);
    if (k_max <= 0) {
        const double from_tail = std::ceil(4.0 / q);
        const double from_core = crit.has_core ? std::ceil(2.0 * crit.value) : 0.0;
        k_max = static_cast<std::int64_t>(std::max(from_tail, from_core));
        k_max = std::max<std::int64_t>(k_max, 1);
    }

    AnalyticReport report{params};
    report.text_length = text_length;
    report.k_max = k_max;
    report.expected_words = expected_word_count(text_length, q);
    report.critical = crit;
    report.no_core = !crit.has_core;
    report.zipf_alpha = zipf_exponent(params);

    auto sized = [&] { return std::vector<double>(k_max + 1, 0.0); };
    report.word_length_probability = sized();
    report.expected_tokens_by_length = sized();
    report.word_probability_by_length = sized();
    report.expected_occurrences_by_length = sized();
    report.expected_distinct_by_length = sized();
    report.expected_unique_by_length = sized();

    for (std::int64_t k = 1; k <= k_max; ++k) {
        report.word_length_probability[k] = word_length_pmf(q, k);
        report.expected_tokens_by_length[k] =
            expected_tokens_of_length(text_length, q, k);
        report.word_probability_by_length[k] = word_probability(params, k);
        const double lambda = expected_occurrences(params, text_length, k);
        report.expected_occurrences_by_length[k] = lambda;
        if (lambda == 0.0) report.lambda_underflow_lengths.push_back(k);
        report.expected_distinct_by_length[k] =
            expected_distinct_types(params, text_length, k);
        report.expected_unique_by_length[k] =
            expected_unique_types(params, text_length, k);
    }

    report.rank_boundaries.push_back(0);  // R_0
    report.rank_boundary_limit = 0;
    for (std::int64_t k = 1; k <= k_max; ++k) {
        try {
            report.rank_boundaries.push_back(
                rank_boundary(params.alphabet_size(), k));
            report.rank_boundary_limit = k;
        } catch (const std::overflow_error&) {
            break;
        }
    }
    return report;
}

}  // namespace randtext

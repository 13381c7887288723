#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace randtext {

enum class FitMethod { ols_loglog, discrete_mle };

std::string to_string(FitMethod method);

struct FitResult {
    double alpha_hat = 0.0;
    double stderr_value = 0.0;
    FitMethod method = FitMethod::ols_loglog;
    std::uint64_t r_min = 0;
    std::uint64_t r_max = 0;
    std::int64_t n_points = 0;
};

struct RankCount {
    std::uint64_t rank;
    std::uint64_t count;
};

// Rank-frequency exponent by least squares of ln(count) on ln(rank).
// Entries are first filtered to the window and to count >= min_count,
// then aggregated into geometrically spaced rank bins (one regression
// point per bin) so every decade of rank carries equal weight; raw
// per-rank regression would let the largest length block dominate.
// Throws std::domain_error when fewer than 3 usable entries remain.
FitResult fit_ols(std::span<const RankCount> table, std::uint64_t r_min,
                  std::uint64_t r_max, std::uint64_t min_count = 5,
                  int bins_per_decade = 16);

// Discrete power-law maximum likelihood with Hurwitz zeta normalization:
// observations x >= cutoff are modeled as P(x) = x^(-alpha)/zeta(alpha, cutoff).
// alpha is found by golden-section search on (1.0001, 10) to 1e-6; the
// standard error comes from the observed Fisher information. Requires at
// least 100 observations above the cutoff and at least two distinct values.
FitResult fit_mle(std::span<const std::uint64_t> observations,
                  std::uint64_t cutoff);

// Table variant: each table row contributes `count` observations of the
// value `rank`.
FitResult fit_mle(std::span<const RankCount> table, std::uint64_t cutoff);

namespace detail {
// zeta(s, a) = sum_{n>=0} (a+n)^-s for s > 1, a >= 1 (Euler-Maclaurin).
double hurwitz_zeta(double s, double a);
}  // namespace detail

}  // namespace randtext

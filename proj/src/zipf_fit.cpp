#include "randtext/zipf_fit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace randtext {

std::string to_string(FitMethod method) {
    switch (method) {
        case FitMethod::ols_loglog: return "ols_loglog";
        case FitMethod::discrete_mle: return "discrete_mle";
    }
    return "unknown";
}

namespace detail {

double hurwitz_zeta(double s, double a) {
    if (!(s > 1.0) || !(a >= 1.0)) {
        throw std::domain_error("hurwitz_zeta requires s > 1 and a >= 1");
    }
    // Direct terms until the argument is large, then Euler-Maclaurin tail.
    double sum = 0.0;
    double x = a;
    while (x < a + 24.5) {
        sum += std::pow(x, -s);
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double xs = std::pow(x, -s);
    sum += xs * x / (s - 1.0);  // integral term x^(1-s)/(s-1)
    sum += 0.5 * xs;
    // Bernoulli corrections B2/2!, B4/4!, B6/6!.
    const double s1 = s * inv;
    sum += xs * s1 / 12.0;
    sum -= xs * s1 * (s + 1.0) * (s + 2.0) * inv * inv / 720.0;
    sum += xs * s1 * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * inv * inv *
           inv * inv / 30240.0;
    return sum;
}

}  // namespace detail

namespace {

struct LinearFit {
    double slope;
    double stderr_value;
};

LinearFit least_squares(const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::size_t n = xs.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    const double slope = sxy / sxx;
    double sse = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = ys[i] - my - slope * (xs[i] - mx);
        sse += r * r;
    }
    const double se =
        n > 2 ? std::sqrt(sse / static_cast<double>(n - 2) / sxx) : 0.0;
    return {slope, se};
}

// Negative log-likelihood per observation, up to a constant:
// alpha * mean(ln x) + ln zeta(alpha, cutoff).
double mle_objective(double alpha, double mean_log, double cutoff) {
    return alpha * mean_log + std::log(detail::hurwitz_zeta(alpha, cutoff));
}

FitResult mle_from_sums(double mean_log, std::uint64_t n_obs,
                        std::uint64_t distinct, std::uint64_t cutoff) {
    if (n_obs < 100) {
        throw std::domain_error(
            "discrete MLE requires at least 100 observations above the cutoff");
    }
    if (distinct < 2) {
        throw std::domain_error(
            "discrete MLE is degenerate on a single distinct value");
    }
    const double c = static_cast<double>(cutoff);

    // Golden-section search for the minimum of the convex objective.
    constexpr double kLo = 1.0001, kHi = 10.0, kTol = 1e-6;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = kLo, b = kHi;
    double x1 = b - gr * (b - a);
    double x2 = a + gr * (b - a);
    double f1 = mle_objective(x1, mean_log, c);
    double f2 = mle_objective(x2, mean_log, c);
    while (b - a > kTol) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = mle_objective(x1, mean_log, c);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = mle_objective(x2, mean_log, c);
        }
    }
    const double alpha = (a + b) / 2.0;
    if (alpha <= kLo + 10 * kTol || alpha >= kHi - 10 * kTol) {
        throw std::domain_error(
            "discrete MLE did not converge inside (1, 10); the data do not "
            "follow a power law in this range");
    }

    // Observed information n * d^2/dalpha^2 ln zeta, by central differences.
    const double h = 1e-3;
    const double lz0 = std::log(detail::hurwitz_zeta(alpha, c));
    const double lzp = std::log(detail::hurwitz_zeta(alpha + h, c));
    const double lzm = std::log(detail::hurwitz_zeta(alpha - h, c));
    const double d2 = (lzp - 2.0 * lz0 + lzm) / (h * h);
    const double info = static_cast<double>(n_obs) * d2;
    const double se = info > 0.0 ? 1.0 / std::sqrt(info) : 0.0;

    FitResult out;
    out.alpha_hat = alpha;
    out.stderr_value = se;
    out.method = FitMethod::discrete_mle;
    out.r_min = cutoff;
    out.r_max = 0;  // unbounded above
    out.n_points = static_cast<std::int64_t>(n_obs);
    return out;
}

}  // namespace

FitResult fit_ols(std::span<const RankCount> table, std::uint64_t r_min,
                  std::uint64_t r_max, std::uint64_t min_count,
                  int bins_per_decade) {
    if (r_min < 1 || r_max <= r_min) {
        throw std::domain_error("fit window must satisfy 1 <= r_min < r_max");
    }
    if (bins_per_decade < 1) {
        throw std::domain_error("bins_per_decade must be >= 1");
    }
    std::vector<RankCount> kept;
    for (const RankCount& rc : table) {
        if (rc.rank >= r_min && rc.rank <= r_max && rc.count >= min_count) {
            kept.push_back(rc);
        }
    }
    if (kept.size() < 3) {
        throw std::domain_error(
            "insufficient data: fewer than 3 table entries with count >= " +
            std::to_string(min_count) + " inside the rank window");
    }

    const double lo = std::log(static_cast<double>(r_min));
    const double hi = std::log(static_cast<double>(r_max));
    const int nbins = std::max(
        3, static_cast<int>(std::lround((hi - lo) / std::log(10.0) *
                                        static_cast<double>(bins_per_decade))));
    const double width = (hi - lo) / static_cast<double>(nbins);

    std::vector<double> sum_x(nbins, 0.0), sum_y(nbins, 0.0);
    std::vector<std::uint64_t> bin_n(nbins, 0);
    for (const RankCount& rc : kept) {
        const double lr = std::log(static_cast<double>(rc.rank));
        int bin = static_cast<int>((lr - lo) / width);
        bin = std::clamp(bin, 0, nbins - 1);
        sum_x[bin] += lr;
        sum_y[bin] += std::log(static_cast<double>(rc.count));
        ++bin_n[bin];
    }

    std::vector<double> xs, ys;
    for (int b = 0; b < nbins; ++b) {
        if (bin_n[b] == 0) continue;
        xs.push_back(sum_x[b] / static_cast<double>(bin_n[b]));
        ys.push_back(sum_y[b] / static_cast<double>(bin_n[b]));
    }
    if (xs.size() < 3) {
        throw std::domain_error(
            "insufficient data: entries collapse into fewer than 3 rank bins");
    }

    const LinearFit fit = least_squares(xs, ys);
    FitResult out;
    out.alpha_hat = -fit.slope;
    out.stderr_value = fit.stderr_value;
    out.method = FitMethod::ols_loglog;
    out.r_min = r_min;
    out.r_max = r_max;
    out.n_points = static_cast<std::int64_t>(xs.size());
    return out;
}

FitResult fit_mle(std::span<const std::uint64_t> observations, std::uint64_t cutoff) {
    if (cutoff < 1) {
        throw std::domain_error("cutoff must be >= 1");
    }
    double sum_log = 0.0;
    std::uint64_t n = 0;
    std::uint64_t first = 0;
    bool multi = false;
    for (std::uint64_t x : observations) {
        if (x < cutoff) continue;
        sum_log += std::log(static_cast<double>(x));
        ++n;
        if (first == 0) {
            first = x;
        } else if (x != first) {
            multi = true;
        }
    }
    return mle_from_sums(n > 0 ? sum_log / static_cast<double>(n) : 0.0, n,
                         multi ? 2 : (n > 0 ? 1 : 0), cutoff);
}

FitResult fit_mle(std::span<const RankCount> table, std::uint64_t cutoff) {
    if (cutoff < 1) {
        throw std::domain_error("cutoff must be >= 1");
    }
    double sum_log = 0.0;
    std::uint64_t n = 0;
    std::uint64_t distinct = 0;
    for (const RankCount& rc : table) {
        if (rc.rank < cutoff || rc.count == 0) continue;
        sum_log += static_cast<double>(rc.count) *
                   std::log(static_cast<double>(rc.rank));
        n += rc.count;
        ++distinct;
    }
    return mle_from_sums(n > 0 ? sum_log / static_cast<double>(n) : 0.0, n,
                         distinct, cutoff);
}

}  // namespace randtext

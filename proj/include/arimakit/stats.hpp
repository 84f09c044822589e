#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace arimakit {

enum class CorrelogramKind { acf, pacf };

/// Correlations indexed by lag 0..max_lag. values[0] is 1 for an ACF.
struct Correlogram {
    CorrelogramKind kind = CorrelogramKind::acf;
    std::size_t n = 0; ///< sample size the correlations were computed from
    std::vector<double> values;

    int max_lag() const { return static_cast<int>(values.size()) - 1; }
    double at(int lag) const { return values[static_cast<std::size_t>(lag)]; }
};

/**
 * Sample autocorrelation function with the divisor-n convention:
 * r_k = sum_t (x_t - xbar)(x_{t+k} - xbar) / sum_t (x_t - xbar)^2.
 *
 * @throws Error(degenerate_series) for a constant series (zero variance)
 * @throws Error(invalid_argument) when max_lag < 1 or max_lag >= length
 */
Correlogram acf(std::span<const double> values, int max_lag);

/**
 * Partial autocorrelations by the Durbin-Levinson recursion; the value at
 * lag k is the last coefficient of the order-k Yule-Walker solution.
 *
 * @throws Error(numeric) when the recursion produces a non-finite value or
 *         a magnitude above 1, which signals a numerically degenerate input
 */
Correlogram pacf(const Correlogram& acf, int max_lag);

struct LjungBoxResult {
    double statistic = 0.0;
    int dof = 0;
};

/**
 * Ljung-Box portmanteau statistic Q = n(n+2) sum_{k=1..lags} r_k^2/(n-k)
 * over the residual ACF, with dof = lags - fitted_count.
 *
 * @throws Error(invalid_argument) when lags <= fitted_count (nonpositive dof)
 */
LjungBoxResult ljung_box(std::span<const double> residuals, int lags, int fitted_count);

} // namespace arimakit

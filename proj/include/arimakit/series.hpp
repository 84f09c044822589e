#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace arimakit {

/**
 * A named annual time series. Each slot is either an observed value or an
 * explicit missing marker; slots correspond to consecutive years starting
 * at start_year.
 */
struct Series {
    std::string name;
    int start_year = 0;
    std::vector<std::optional<double>> values;

    std::size_t size() const { return values.size(); }
    int year_at(std::size_t index) const { return start_year + static_cast<int>(index); }
};

/// A maximal run of consecutive present values inside a Series.
struct ContiguousRun {
    std::size_t offset = 0; ///< index of the first run element in the series
    std::vector<double> values;

    bool empty() const { return values.empty(); }
    std::size_t size() const { return values.size(); }
};

/**
 * Longest contiguous run of present values; ties are broken by preferring
 * the latest run, because forecasting anchors on the last observation.
 * Returns an empty run when the series has no present values.
 */
ContiguousRun contiguous_run(const Series& series);

/// Values of contiguous_run; empty result signals an unusable series.
std::vector<double> contiguous_values(const Series& series);

/**
 * d-th order difference. Output length = input length - d; d = 0 returns
 * the input unchanged.
 *
 * @throws Error(insufficient_data) when length <= d
 */
std::vector<double> difference(std::span<const double> values, int d);

} // namespace arimakit

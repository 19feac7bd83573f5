#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "isoclass/census.hpp"
#include "isoclass/window.hpp"

namespace isoclass::experiments {

using ParamValue = std::variant<std::int64_t, double, std::string>;

struct ReportRow
{
    std::string command;
    std::vector<std::pair<std::string, ParamValue>> params;
    double statistic = 0.0;
    double envelope = 0.0;
    double ratio = 0.0;  ///< statistic / envelope, NaN when envelope <= 0
    std::optional<std::uint64_t> seed;

    const ParamValue* find(const std::string& name) const;
};

ReportRow make_row(std::string command, std::vector<std::pair<std::string, ParamValue>> params, double statistic,
                   double envelope, std::optional<std::uint64_t> seed = std::nullopt);

/// log q / sqrt(log R) (log log q)^{7/2}. Requires R >= 2.
double theorem_envelope(std::int64_t q, std::int64_t R);

/// Class counts I(t) for t ~ R.
struct WindowCounts
{
    WindowSpec window;
    std::vector<std::int64_t> counts;  ///< counts[i] = I(R + 1 + i)
    std::int64_t class_total = 0;
};

/// Window counts read from a census table (prime q).
WindowCounts window_counts(const WindowSpec& w, const census::TraceTable& table);

/// Window counts from Kronecker class numbers. Works for any prime power q
/// as long as every trace in the window is ordinary.
WindowCounts window_counts_formula(const WindowSpec& w);

/// statistic = (1/R) sum_{t ~ R} iota(t) against theorem_envelope. Params
/// carry q, R, count (classes in the window) and sum_iota. With `mirror`
/// the window -2R <= t < -R is summed too and reported as mirror_sum_iota.
ReportRow theorem_window_average(const WindowSpec& w, const census::TraceTable& table, bool mirror = false);
ReportRow theorem_window_average(const WindowCounts& counts);

/// Class counts of the windows (1,2], (2,4], (4,8], ... clipped at T = floor(2 sqrt p).
std::vector<std::int64_t> dyadic_partition_counts(const census::TraceTable& table);

/// (2/pi) * integral of sin^2 over [arccos beta, arccos alpha].
double mu_density(double alpha, double beta);

/// sum_{alpha T <= t <= beta T} iota(t) / T with T = floor(2 sqrt p).
double sato_tate_mass(const census::TraceTable& table, double alpha, double beta);

/// c = sato_tate_mass(-1, 1) / mu_density(-1, 1).
double sato_tate_calibration(const census::TraceTable& table);

/// statistic = window mass, envelope = c mu(alpha, beta); params carry
/// alpha, beta, mu and c.
ReportRow sato_tate_compare(const census::TraceTable& table, double alpha, double beta);

/// ceil(max(q sqrt R, q^2 / R^2)).
std::int64_t x_parameter(std::int64_t q, std::int64_t R);

struct LThreshold
{
    double log_value = 0.0;             ///< log of the least admissible L
    std::optional<std::int64_t> value;  ///< the least L itself, when it fits in 62 bits
};

/// Least L >= 16 with log L / sqrt(log log L) >= 4 log X / sqrt(log R).
LThreshold l_threshold(std::int64_t q, std::int64_t R);

/// Whether a given L satisfies the length condition above.
bool satisfies_l_condition(std::int64_t q, std::int64_t R, std::int64_t L);

} // namespace isoclass::experiments

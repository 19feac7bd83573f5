#include "isoclass/experiments.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "isoclass/arith.hpp"
#include "int128.hpp"
#include "isoclass/error.hpp"
#include "isoclass/quadforms.hpp"

namespace isoclass::experiments {

namespace {

double half_sqrt(std::int64_t q)
{
    return 0.5 * std::sqrt(static_cast<double>(q));
}

detail::u128 isqrt128(detail::u128 n)
{
    auto r = static_cast<detail::u128>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

double length_target(std::int64_t q, std::int64_t R)
{
    return 4.0 * std::log(static_cast<double>(x_parameter(q, R))) / std::sqrt(std::log(static_cast<double>(R)));
}

// log L / sqrt(log log L) written in terms of y = log L.
double length_lhs(double y)
{
    return y / std::sqrt(std::log(y));
}

} // namespace

const ParamValue* ReportRow::find(const std::string& name) const
{
    for (const auto& [key, value] : params)
        if (key == name) return &value;
    return nullptr;
}

ReportRow make_row(std::string command, std::vector<std::pair<std::string, ParamValue>> params, double statistic,
                   double envelope, std::optional<std::uint64_t> seed)
{
    ReportRow row;
    row.command = std::move(command);
    row.params = std::move(params);
    row.statistic = statistic;
    row.envelope = envelope;
    row.ratio = envelope > 0.0 ? statistic / envelope : std::numeric_limits<double>::quiet_NaN();
    row.seed = seed;
    return row;
}

double theorem_envelope(std::int64_t q, std::int64_t R)
{
    if (R < 2) throw DomainError("the window envelope needs R >= 2 (log R = 0 at R = 1)");
    const double logq = std::log(static_cast<double>(q));
    return logq / std::sqrt(std::log(static_cast<double>(R))) * std::pow(std::log(logq), 3.5);
}

WindowCounts window_counts(const WindowSpec& w, const census::TraceTable& table)
{
    validate_window(w);
    if (table.p != w.q)
        throw DomainError("census table is for p = " + std::to_string(table.p) + ", window is over q = " +
                          std::to_string(w.q));
    WindowCounts out;
    out.window = w;
    for (std::int64_t t = w.first(); t <= w.last(); ++t) {
        out.counts.push_back(table.count(t));
        out.class_total += out.counts.back();
    }
    return out;
}

WindowCounts window_counts_formula(const WindowSpec& w)
{
    validate_window(w);
    WindowCounts out;
    out.window = w;
    for (std::int64_t t = w.first(); t <= w.last(); ++t) {
        quadforms::require_ordinary_trace(w.q, t);
        out.counts.push_back(quadforms::kronecker_class_number(t * t - 4 * w.q));
        out.class_total += out.counts.back();
    }
    return out;
}

ReportRow theorem_window_average(const WindowCounts& counts)
{
    const WindowSpec& w = counts.window;
    const double envelope = theorem_envelope(w.q, w.R);
    const double sum_iota = static_cast<double>(counts.class_total) / half_sqrt(w.q);
    const double average = sum_iota / static_cast<double>(w.R);
    return make_row("theorem",
                    {{"q", w.q}, {"R", w.R}, {"count", counts.class_total}, {"sum_iota", sum_iota}},
                    average, envelope);
}

ReportRow theorem_window_average(const WindowSpec& w, const census::TraceTable& table, bool mirror)
{
    if (w.R < 2) throw DomainError("the window envelope needs R >= 2 (log R = 0 at R = 1)");
    ReportRow row = theorem_window_average(window_counts(w, table));
    if (mirror) {
        std::int64_t mirrored = 0;
        for (std::int64_t t = -w.last(); t < -w.R; ++t) mirrored += table.count(t);
        row.params.emplace_back("mirror_sum_iota", static_cast<double>(mirrored) / half_sqrt(w.q));
    }
    return row;
}

std::vector<std::int64_t> dyadic_partition_counts(const census::TraceTable& table)
{
    std::vector<std::int64_t> out;
    const std::int64_t T = table.bound;
    for (std::int64_t R = 1; R < T; R *= 2) {
        std::int64_t sum = 0;
        for (std::int64_t t = R + 1; t <= std::min(2 * R, T); ++t) sum += table.count(t);
        out.push_back(sum);
    }
    return out;
}

double mu_density(double alpha, double beta)
{
    if (!(alpha >= -1.0 && beta <= 1.0 && alpha <= beta))
        throw DomainError("mu_density requires -1 <= alpha <= beta <= 1");
    const auto F = [](double theta) { return (theta - std::sin(theta) * std::cos(theta)) / 2.0; };
    return 2.0 / std::numbers::pi * (F(std::acos(alpha)) - F(std::acos(beta)));
}

double sato_tate_mass(const census::TraceTable& table, double alpha, double beta)
{
    if (!(alpha >= -1.0 && beta <= 1.0 && alpha < beta))
        throw DomainError("Sato-Tate window requires -1 <= alpha < beta <= 1");
    const auto T = static_cast<double>(table.bound);
    const auto lo = static_cast<std::int64_t>(std::ceil(alpha * T));
    const auto hi = static_cast<std::int64_t>(std::floor(beta * T));
    double sum = 0.0;
    for (std::int64_t t = lo; t <= hi; ++t) sum += census::iota(table, t);
    return sum / T;
}

double sato_tate_calibration(const census::TraceTable& table)
{
    return sato_tate_mass(table, -1.0, 1.0) / mu_density(-1.0, 1.0);
}

ReportRow sato_tate_compare(const census::TraceTable& table, double alpha, double beta)
{
    const double c = sato_tate_calibration(table);
    const double mu = mu_density(alpha, beta);
    const double mass = sato_tate_mass(table, alpha, beta);
    return make_row("satotate",
                    {{"q", table.p}, {"alpha", alpha}, {"beta", beta}, {"mu", mu}, {"c", c}},
                    mass, c * mu);
}

std::int64_t x_parameter(std::int64_t q, std::int64_t R)
{
    // Pure arithmetic; neither primality of q nor R < sqrt(q) is needed here.
    if (R < 2) throw DomainError("x_parameter needs R >= 2");
    if (q < 1) throw DomainError("x_parameter needs q >= 1");
    const auto q128 = static_cast<detail::u128>(q);
    const auto R128 = static_cast<detail::u128>(R);
    // ceil(q sqrt R) = ceil(sqrt(q^2 R)).
    const detail::u128 n = q128 * q128 * R128;
    detail::u128 first = isqrt128(n);
    if (first * first < n) ++first;
    const detail::u128 second = (q128 * q128 + R128 * R128 - 1) / (R128 * R128);
    return static_cast<std::int64_t>(std::max(first, second));
}

bool satisfies_l_condition(std::int64_t q, std::int64_t R, std::int64_t L)
{
    if (R < 2) throw DomainError("the length condition needs R >= 2");
    if (L < 16) return false;
    return length_lhs(std::log(static_cast<double>(L))) >= length_target(q, R);
}

LThreshold l_threshold(std::int64_t q, std::int64_t R)
{
    if (R < 2) throw DomainError("l_threshold needs R >= 2");
    const double target = length_target(q, R);

    LThreshold out;
    constexpr std::int64_t kMaxExact = std::int64_t{1} << 62;
    std::int64_t hi = 16;
    while (hi < kMaxExact && !satisfies_l_condition(q, R, hi)) hi *= 2;
    if (satisfies_l_condition(q, R, hi)) {
        std::int64_t lo = hi / 2;  // fails (or is below 16)
        while (hi - lo > 1) {
            const std::int64_t mid = lo + (hi - lo) / 2;
            if (satisfies_l_condition(q, R, mid))
                hi = mid;
            else
                lo = mid;
        }
        out.value = hi;
        out.log_value = std::log(static_cast<double>(hi));
        return out;
    }

    // Beyond 62 bits: solve y / sqrt(log y) = target for y = log L, the left
    // side being increasing for y > e^{1/2}.
    double ylo = std::log(static_cast<double>(kMaxExact));
    double yhi = ylo;
    while (length_lhs(yhi) < target) yhi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (ylo + yhi);
        if (length_lhs(mid) >= target)
            yhi = mid;
        else
            ylo = mid;
    }
    out.log_value = yhi;
    return out;
}

} // namespace isoclass::experiments

#include "isoclass/lfunctions.hpp"

#include <cmath>
#include <numbers>

#include "isoclass/error.hpp"
#include "isoclass/quadforms.hpp"

namespace isoclass::lfunc {

const char* to_string(LMethod method)
{
    return method == LMethod::truncated ? "truncated" : "class_number_formula";
}

LMethod parse_method(const std::string& name)
{
    if (name == "truncated") return LMethod::truncated;
    if (name == "class_number_formula" || name == "formula") return LMethod::class_number_formula;
    throw DomainError("unknown L method '" + name + "' (expected truncated or class_number_formula)");
}

double l_truncated(const characters::CharacterHandle& h, std::int64_t N)
{
    if (N < 1) throw DomainError("l_truncated requires N >= 1");
    if (h.is_principal())
        throw DomainError("principal character at t = " + std::to_string(h.t()) + ": L(1) diverges");
    // Accumulate small terms last so the float sum is fixed-order.
    long double sum = 0.0L;
    for (std::int64_t n = N; n >= 1; --n) {
        const int chi = h(n);
        if (chi != 0) sum += static_cast<long double>(chi) / static_cast<long double>(n);
    }
    return static_cast<double>(sum);
}

double truncation_tail_bound(std::int64_t modulus, std::int64_t N)
{
    const auto m = static_cast<double>(modulus);
    return 2.0 * std::sqrt(m) * std::log(m) / static_cast<double>(N);
}

double l_exact_fundamental(std::int64_t D_star)
{
    if (!arith::is_fundamental_discriminant(D_star))
        throw DomainError("l_exact_fundamental requires a negative fundamental discriminant, got " +
                          std::to_string(D_star));
    const double h = static_cast<double>(quadforms::class_number(D_star));
    const double w = static_cast<double>(arith::unit_weight(D_star));
    return 2.0 * std::numbers::pi * h / (w * std::sqrt(static_cast<double>(-D_star)));
}

double euler_factor(std::int64_t D_star, std::int64_t f)
{
    double product = 1.0;
    for (const auto& [ell, e] : arith::factorize(f))
        product *= 1.0 - static_cast<double>(arith::chi_disc(D_star, ell)) / static_cast<double>(ell);
    return product;
}

LValueRecord l_values_for_discriminant(std::int64_t D)
{
    LValueRecord rec;
    rec.split = arith::conductor_split(D);
    rec.L_star = l_exact_fundamental(rec.split.D_star);
    rec.euler_product = euler_factor(rec.split.D_star, rec.split.f);
    rec.L_full = rec.L_star * rec.euler_product;
    rec.method = LMethod::class_number_formula;
    return rec;
}

LValueRecord l_star_and_full(std::int64_t q, std::int64_t t)
{
    quadforms::require_ordinary_trace(q, t);
    LValueRecord rec = l_values_for_discriminant(t * t - 4 * q);
    rec.q = q;
    rec.t = t;
    return rec;
}

double class_count_from_l(std::int64_t q, std::int64_t t)
{
    const LValueRecord rec = l_star_and_full(q, t);
    const Rational psi = quadforms::psi_derived(q, t);
    const double delta = static_cast<double>(4 * q - t * t);
    const double psi_value = static_cast<double>(psi.numerator()) / static_cast<double>(psi.denominator());
    return std::sqrt(delta) / (2.0 * std::numbers::pi) * rec.L_star * psi_value;
}

AvgAbsL avg_abs_l(const WindowSpec& window, LMethod method, std::int64_t truncation, Parallelism par)
{
    validate_window(window);
    if (window.R < 2) throw DomainError("avg_abs_l requires R >= 2 (log R > 0 in the envelope)");
    if (method == LMethod::truncated && truncation < 1) throw DomainError("truncation must be >= 1");

    const auto values = parallel_map<double>(static_cast<std::size_t>(window.R), par, [&](std::size_t i) {
        const std::int64_t t = window.first() + static_cast<std::int64_t>(i);
        if (method == LMethod::truncated)
            return std::abs(l_truncated(characters::CharacterHandle(window.q, t, characters::CharacterMode::field_disc),
                                        truncation));
        return std::abs(l_values_for_discriminant(t * t - 4 * window.q).L_full);
    });

    AvgAbsL out;
    for (double v : values) out.sum += v;
    out.average = out.sum / static_cast<double>(window.R);
    const double logq = std::log(static_cast<double>(window.q));
    out.envelope = logq * std::sqrt(std::log(logq) / std::log(static_cast<double>(window.R)));
    return out;
}

double mertens_ratio(const LValueRecord& record)
{
    return (1.0 / record.euler_product) / std::log(std::log(static_cast<double>(record.split.f) + 2.0));
}

} // namespace isoclass::lfunc

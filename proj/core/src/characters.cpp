#include "isoclass/characters.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "isoclass/arith.hpp"
#include "isoclass/error.hpp"

namespace isoclass::characters {

namespace {

constexpr std::int64_t kMaxTabulatedModulus = std::int64_t{1} << 22;

std::int64_t reduce(std::int64_t n, std::int64_t m)
{
    n %= m;
    return n < 0 ? n + m : n;
}

} // namespace

const char* to_string(CharacterMode mode)
{
    return mode == CharacterMode::paper_literal ? "paper_literal" : "field_disc";
}

CharacterMode parse_mode(const std::string& name)
{
    if (name == "paper_literal" || name == "paper" || name == "literal") return CharacterMode::paper_literal;
    if (name == "field_disc" || name == "field") return CharacterMode::field_disc;
    throw DomainError("unknown character mode '" + name + "' (expected paper_literal or field_disc)");
}

CharacterHandle::CharacterHandle(std::int64_t q, std::int64_t t, CharacterMode mode)
    : q_(q), t_(t), delta_(4 * q - t * t), mode_(mode)
{
    arith::require_field_size(q);
    if (t == 0 || t * t >= 4 * q)
        throw DomainError("character needs 0 < |t| < 2 sqrt(q); got t = " + std::to_string(t) + ", q = " +
                          std::to_string(q));
    if (delta_ <= kMaxTabulatedModulus) {
        table_.resize(static_cast<std::size_t>(delta_));
        for (std::int64_t n = 0; n < delta_; ++n) table_[static_cast<std::size_t>(n)] = static_cast<std::int8_t>(evaluate(n));
    }
}

bool CharacterHandle::is_principal() const
{
    return mode_ == CharacterMode::paper_literal && arith::is_square(delta_);
}

int CharacterHandle::evaluate(std::int64_t n) const
{
    if (mode_ == CharacterMode::paper_literal) return arith::kronecker(n, delta_);
    return arith::chi_disc(t_ * t_ - 4 * q_, n);
}

int CharacterHandle::operator()(std::int64_t n) const
{
    // Both constructions are periodic mod delta: delta is odd or divisible
    // by 4, so the chi_2 factors never see a lone factor 2.
    if (!table_.empty()) return table_[static_cast<std::size_t>(reduce(n, delta_))];
    return evaluate(n);
}

int xi(const CharacterHandle& h, std::int64_t n)
{
    return h(n);
}

std::int64_t char_sum(const CharacterHandle& h, std::int64_t N)
{
    if (N < 1) throw DomainError("char_sum requires N >= 1");
    std::int64_t s = 0;
    for (std::int64_t n = 1; n <= N; ++n) s += h(n);
    return s;
}

MaxCharSum max_char_sum(const CharacterHandle& h, std::int64_t L)
{
    if (L < 1) throw DomainError("max_char_sum requires L >= 1");
    std::int64_t s = char_sum(h, L);
    MaxCharSum best{0, -1};
    for (std::int64_t N = L + 1; N <= 2 * L; ++N) {
        s += h(N);
        const std::int64_t v = s < 0 ? -s : s;
        if (v > best.value) best = {N, v};
    }
    return best;
}

AvgMaxCharSum avg_max_char_sum(const WindowSpec& window, std::int64_t L, CharacterMode mode, Parallelism par)
{
    validate_window(window);
    if (L < 1) throw DomainError("avg_max_char_sum requires L >= 1");

    const auto R = static_cast<std::size_t>(window.R);
    const auto maxima = parallel_map<std::int64_t>(R, par, [&](std::size_t i) {
        const std::int64_t t = window.first() + static_cast<std::int64_t>(i);
        return max_char_sum(CharacterHandle(window.q, t, mode), L).value;
    });

    AvgMaxCharSum out;
    for (std::int64_t m : maxima) out.total += m;
    out.average = static_cast<double>(out.total) / static_cast<double>(window.R);
    if (window.R >= 2 && L >= 3) {
        const double logR = std::log(static_cast<double>(window.R));
        const double loglogL = std::log(std::log(static_cast<double>(L)));
        out.envelope = static_cast<double>(L) * std::exp(-0.875 * std::sqrt(logR * loglogL));
    }
    return out;
}

namespace {

int chi_r(std::int64_t v, std::int64_t r, GaussConvention convention)
{
    return convention == GaussConvention::character ? arith::quadratic_character(v, r) : arith::kronecker(v, r);
}

} // namespace

const char* to_string(GaussConvention convention)
{
    return convention == GaussConvention::character ? "character" : "literal";
}

GaussConvention parse_convention(const std::string& name)
{
    if (name == "character") return GaussConvention::character;
    if (name == "literal") return GaussConvention::literal;
    throw DomainError("unknown Gauss sum convention '" + name + "' (expected character or literal)");
}

std::complex<double> gauss_sum(std::int64_t r, GaussConvention convention)
{
    if (r < 1) throw DomainError("gauss_sum requires r >= 1");
    std::complex<double> tau{0.0, 0.0};
    for (std::int64_t v = 1; v <= r; ++v) {
        const int chi = chi_r(v, r, convention);
        if (chi != 0) tau += static_cast<double>(chi) * arith::root_of_unity(r, v);
    }
    return tau;
}

double gauss_twist_residual(std::int64_t v, std::int64_t r, GaussConvention convention)
{
    if (r < 1) throw DomainError("gauss_twist_residual requires r >= 1");
    if (std::gcd(v, r) != 1)
        throw DomainError("gauss_twist_residual requires gcd(v, r) = 1; got v = " + std::to_string(v) +
                          ", r = " + std::to_string(r));
    const std::complex<double> lhs = static_cast<double>(chi_r(v, r, convention)) * gauss_sum(r, convention);
    std::complex<double> rhs{0.0, 0.0};
    const std::int64_t vr = reduce(v, r);
    for (std::int64_t b = 1; b <= r; ++b) {
        const int chi = chi_r(b, r, convention);
        if (chi != 0) rhs += static_cast<double>(chi) * arith::root_of_unity(r, b * vr % r);
    }
    return std::abs(lhs - rhs);
}

double twisted_sum_W(const WindowSpec& window, std::int64_t b, std::int64_t M, CharacterMode mode, Parallelism par)
{
    validate_window(window);
    if (M < 1) throw DomainError("twisted_sum_W requires M >= 1");
    if (b < -M || b > M) throw DomainError("twisted_sum_W requires |b| <= M");

    const auto terms = parallel_map<double>(static_cast<std::size_t>(window.R), par, [&](std::size_t i) {
        const CharacterHandle h(window.q, window.first() + static_cast<std::int64_t>(i), mode);
        std::complex<double> inner{0.0, 0.0};
        for (std::int64_t m = 1; m <= M; ++m) {
            const int chi = h(m);
            if (chi != 0) inner += static_cast<double>(chi) * arith::root_of_unity(M, b * m);
        }
        return std::abs(inner);
    });
    double W = 0.0;
    for (double term : terms) W += term;
    return W;
}

} // namespace isoclass::characters

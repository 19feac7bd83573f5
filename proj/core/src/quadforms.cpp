#include "isoclass/quadforms.hpp"

#include <numeric>
#include <string>

#include "isoclass/error.hpp"

namespace isoclass::quadforms {

namespace {

void require_negative_discriminant(std::int64_t D)
{
    if (D >= 0 || !arith::is_discriminant(D))
        throw DomainError("expected a negative discriminant D = 0, 1 mod 4, got " + std::to_string(D));
}

// Visits the reduced primitive forms of discriminant D in enumeration order.
template <class Visit>
void for_each_reduced(std::int64_t D, Visit&& visit)
{
    const std::int64_t n = -D;
    const std::int64_t a_max = arith::isqrt(n / 3);
    for (std::int64_t a = 1; a <= a_max; ++a) {
        // b has the parity of D.
        for (std::int64_t b = (n % 2 == 0) ? 0 : 1; b <= a; b += 2) {
            const std::int64_t num = b * b + n;
            if (num % (4 * a) != 0) continue;
            const std::int64_t c = num / (4 * a);
            if (c < a) continue;
            if (std::gcd(std::gcd(a, b), c) != 1) continue;
            visit(QuadForm{a, b, c});
            if (b != 0 && b != a && a != c) visit(QuadForm{a, -b, c});
        }
    }
}

} // namespace

bool QuadForm::is_reduced() const
{
    const std::int64_t abs_b = b < 0 ? -b : b;
    if (!(abs_b <= a && a <= c)) return false;
    if ((abs_b == a || a == c) && b < 0) return false;
    return true;
}

std::vector<QuadForm> reduced_forms(std::int64_t D)
{
    require_negative_discriminant(D);
    std::vector<QuadForm> out;
    for_each_reduced(D, [&](const QuadForm& f) { out.push_back(f); });
    return out;
}

std::int64_t class_number(std::int64_t D)
{
    require_negative_discriminant(D);
    std::int64_t h = 0;
    for_each_reduced(D, [&](const QuadForm&) { ++h; });
    return h;
}

std::int64_t kronecker_class_number(std::int64_t D)
{
    const auto split = arith::conductor_split(D);
    std::int64_t sum = 0;
    for (std::int64_t g : arith::divisors(split.f)) sum += class_number(split.D_star * g * g);
    return sum;
}

Rational hurwitz(std::int64_t N)
{
    if (N <= 0 || !arith::is_discriminant(-N))
        throw DomainError("hurwitz requires N > 0 with N = 0, 3 mod 4, got " + std::to_string(N));
    const auto split = arith::conductor_split(-N);
    Rational sum{0};
    for (std::int64_t g : arith::divisors(split.f)) {
        const std::int64_t disc = split.D_star * g * g;
        const std::int64_t h = class_number(disc);
        if (disc == -3)
            sum += Rational(h, 3);
        else if (disc == -4)
            sum += Rational(h, 2);
        else
            sum += h;
    }
    return sum;
}

ClassNumberBundle class_numbers(std::int64_t D)
{
    ClassNumberBundle out;
    out.D = D;
    out.split = arith::conductor_split(D);
    out.h = class_number(D);
    out.h_star = class_number(out.split.D_star);
    out.K = kronecker_class_number(D);
    out.H = hurwitz(-D);
    return out;
}

void require_ordinary_trace(std::int64_t q, std::int64_t t)
{
    const auto [p, k] = arith::require_field_size(q);
    if (t == 0 || t * t >= 4 * q)
        throw DomainError("trace t = " + std::to_string(t) + " outside 0 < |t| < 2 sqrt(" + std::to_string(q) + ")");
    if (t % p == 0)
        throw DomainError("trace t = " + std::to_string(t) + " is supersingular over F_" + std::to_string(q));
}

Rational psi_derived(std::int64_t q, std::int64_t t)
{
    require_ordinary_trace(q, t);
    const auto split = arith::conductor_split(t * t - 4 * q);
    const std::int64_t K = kronecker_class_number(split.D);
    const std::int64_t h_star = class_number(split.D_star);
    return Rational(split.w * K, split.f * h_star);
}

} // namespace isoclass::quadforms

#pragma once

#include <cstdint>
#include <vector>

#include "isoclass/arith.hpp"

namespace isoclass::quadforms {

/// Primitive positive definite form a x^2 + b xy + c y^2.
struct QuadForm
{
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;

    std::int64_t discriminant() const { return b * b - 4 * a * c; }
    bool is_reduced() const;

    friend bool operator==(const QuadForm&, const QuadForm&) = default;
};

/// Reduced primitive forms of discriminant D < 0, ordered by (a, |b|, sign of b
/// descending): |b| <= a <= c with b >= 0 when |b| = a or a = c.
std::vector<QuadForm> reduced_forms(std::int64_t D);

/// h(D), the number of reduced primitive forms.
std::int64_t class_number(std::int64_t D);

/// Sum over g | f of h(g^2 D_star), where D = D_star f^2. For D = t^2 - 4p
/// with p not dividing t this is the number of F_p-isomorphism classes of
/// elliptic curves with trace t.
std::int64_t kronecker_class_number(std::int64_t D);

/// H(N) for N > 0, N = 0, 3 mod 4: as the Kronecker class number of -N but
/// with the discriminant -3 term weighted 1/3 and the -4 term weighted 1/2.
Rational hurwitz(std::int64_t N);

struct ClassNumberBundle
{
    std::int64_t D = 0;
    std::int64_t h = 0;   ///< h(D)
    std::int64_t K = 0;   ///< Kronecker class number
    Rational H{0};        ///< Hurwitz class number of -D
    arith::DiscriminantSplit split;
    std::int64_t h_star = 0;  ///< h(D_star)
};

ClassNumberBundle class_numbers(std::int64_t D);

/// The weight psi(f_t) solved out of I(t) = sqrt(Delta_t)/(2 pi) L*(t) psi:
/// w(D_star) K(t^2 - 4q) / (f_t h(D_star)). Requires q a prime power,
/// 0 < |t| < 2 sqrt(q) and t prime to the characteristic.
Rational psi_derived(std::int64_t q, std::int64_t t);

/// Throws DomainError unless t is an ordinary trace over F_q with
/// 0 < |t| < 2 sqrt(q).
void require_ordinary_trace(std::int64_t q, std::int64_t t);

} // namespace isoclass::quadforms

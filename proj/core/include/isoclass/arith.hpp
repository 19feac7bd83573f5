#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

namespace isoclass {

using Rational = boost::rational<std::int64_t>;

// Largest field size q accepted anywhere. Keeps 4q and t^2 well inside
// int64 and every modular product inside the 128-bit intermediates.
inline constexpr std::int64_t kMaxFieldSize = 2'000'000'000;

} // namespace isoclass

namespace isoclass::arith {

struct PrimePower
{
    std::int64_t prime = 0;
    int exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// floor(sqrt(n)) computed exactly.
std::int64_t isqrt(std::int64_t n);
bool is_square(std::int64_t n);

/// Trial-division factorization of |n|, primes ascending. Empty for |n| <= 1.
std::vector<PrimePower> factorize(std::int64_t n);

std::int64_t totient(std::int64_t n);

/// Positive divisors of n >= 1, ascending.
std::vector<std::int64_t> divisors(std::int64_t n);

/// Decomposes q = p^k with p prime, k >= 1. Throws DomainError otherwise.
PrimePower prime_power_decomposition(std::int64_t q);

/// Throws DomainError unless q is a prime power no larger than kMaxFieldSize.
PrimePower require_field_size(std::int64_t q);

/// Legendre symbol (v/p) for an odd prime p.
int legendre(std::int64_t v, std::int64_t p);

/// Jacobi symbol (a/n) for odd n >= 1.
int jacobi(std::int64_t a, std::int64_t n);

/// chi_2(v): 0 for even v, 1 for v = +-1 mod 8, -1 for v = +-3 mod 8.
int chi2(std::int64_t v);

/// The quadratic character chi_r(v): completely multiplicative in both
/// arguments, the Legendre symbol at odd primes and chi2 at r = 2.
/// Requires r >= 1.
int kronecker(std::int64_t v, std::int64_t r);

/// A genuine character modulo r: kronecker(v, r), except that when 2 || r
/// the factor at 2 is the principal character mod 2 (chi2 has period 8, so
/// it cannot be a character mod r there). Requires r >= 1.
int quadratic_character(std::int64_t v, std::int64_t r);

/// Field character (D/n) of a negative discriminant D = 0, 1 mod 4. Defined
/// for every integer n (with (D/-1) = -1 since D < 0, and (D/0) = 0).
int chi_disc(std::int64_t D, std::int64_t n);

bool is_discriminant(std::int64_t D);
bool is_fundamental_discriminant(std::int64_t D);

/// Number of units of the maximal order of discriminant D_star:
/// 6 at -3, 4 at -4, 2 otherwise.
int unit_weight(std::int64_t D_star);

/// D = D_star * f^2 with D_star fundamental and f maximal.
struct DiscriminantSplit
{
    std::int64_t D = 0;
    std::int64_t D_star = 0;
    std::int64_t f = 1;
    int w = 2;
};

DiscriminantSplit conductor_split(std::int64_t D);

/// e_r(z) = exp(2 pi i z / r). The phase is reduced mod r in exact integer
/// arithmetic before the float conversion.
std::complex<double> root_of_unity(std::int64_t r, std::int64_t z);

/// sum over -r/2 <= b < r/2 of e_r(b z): r when r | z, else 0.
std::complex<double> orthogonality_sum(std::int64_t r, std::int64_t z);

/// Sum_{n=K+1}^{K+L} e_r(b n). Requires L >= 1.
std::complex<double> geometric_esum(std::int64_t r, std::int64_t b, std::int64_t K, std::int64_t L);

/// Explicit-constant majorant min(L, r / (2|b|)) * pi / 2 for b != 0.
double geometric_esum_bound(std::int64_t r, std::int64_t b, std::int64_t L);

} // namespace isoclass::arith

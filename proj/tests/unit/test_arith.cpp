#include <doctest.h>

#include <cmath>
#include <complex>
#include <numeric>

#include "isoclass/arith.hpp"
#include "isoclass/error.hpp"

using namespace isoclass;
using namespace isoclass::arith;

namespace {

// Independent oracle: Euler's criterion at each odd prime of r, the chi_2
// table at 2, multiplied over the factorization found by naive trial division.
int kronecker_oracle(std::int64_t v, std::int64_t r)
{
    int result = 1;
    for (std::int64_t p = 2; r > 1; ++p) {
        while (r % p == 0) {
            r /= p;
            int factor = 0;
            if (p == 2) {
                const std::int64_t m = ((v % 8) + 8) % 8;
                factor = (m == 1 || m == 7) ? 1 : (m == 3 || m == 5) ? -1 : 0;
            } else {
                const std::int64_t a = ((v % p) + p) % p;
                if (a != 0) {
                    std::int64_t e = 1;
                    for (std::int64_t k = 0; k < (p - 1) / 2; ++k) e = e * a % p;
                    factor = e == 1 ? 1 : -1;
                }
            }
            result *= factor;
        }
    }
    return result;
}

bool fundamental_oracle(std::int64_t D)
{
    auto sqfree = [](std::int64_t m) {
        m = m < 0 ? -m : m;
        for (std::int64_t k = 2; k * k <= m; ++k)
            if (m % (k * k) == 0) return false;
        return true;
    };
    const std::int64_t r = ((D % 4) + 4) % 4;
    if (r == 1) return sqfree(D);
    if (r == 0) {
        const std::int64_t m = ((D / 4 % 4) + 4) % 4;
        return (m == 2 || m == 3) && sqfree(D / 4);
    }
    return false;
}

} // namespace

TEST_CASE("kronecker reproduces the chi_2 table and simple values")
{
    CHECK(kronecker(7, 2) == 1);
    CHECK(kronecker(3, 2) == -1);
    CHECK(kronecker(-1, 2) == 1);
    CHECK(kronecker(5, 2) == -1);
    CHECK(kronecker(4, 2) == 0);
    CHECK(kronecker(2, 15) == 1);
    for (std::int64_t r = 1; r <= 60; ++r) CHECK(kronecker(1, r) == 1);
    CHECK_THROWS_AS(kronecker(3, 0), DomainError);
}

TEST_CASE("kronecker agrees with the Euler-criterion oracle")
{
    for (std::int64_t r = 1; r <= 300; ++r)
        for (std::int64_t v = -100; v <= 100; ++v) REQUIRE(kronecker(v, r) == kronecker_oracle(v, r));
}

TEST_CASE("kronecker is completely multiplicative in both arguments")
{
    for (std::int64_t v = 1; v <= 50; ++v)
        for (std::int64_t w = 1; w <= 50; ++w)
            for (std::int64_t r = 1; r <= 50; ++r) REQUIRE(kronecker(v * w, r) == kronecker(v, r) * kronecker(w, r));
    for (std::int64_t v = 1; v <= 50; ++v)
        for (std::int64_t r = 1; r <= 50; ++r)
            for (std::int64_t s = 1; s <= 50; ++s) REQUIRE(kronecker(v, r * s) == kronecker(v, r) * kronecker(v, s));
}

TEST_CASE("kronecker with odd modulus depends only on v mod r")
{
    for (std::int64_t r = 1; r <= 99; r += 2)
        for (std::int64_t v = -3 * r; v <= 3 * r; ++v) REQUIRE(kronecker(v, r) == kronecker(v + r, r));
}

TEST_CASE("kronecker vanishes exactly on common factors")
{
    for (std::int64_t r = 1; r <= 120; ++r)
        for (std::int64_t v = -60; v <= 60; ++v) REQUIRE((kronecker(v, r) == 0) == (std::gcd(v, r) > 1));
}

TEST_CASE("quadratic_character is a character modulo r")
{
    for (std::int64_t r = 1; r <= 200; ++r) {
        for (std::int64_t v = -2 * r; v <= 2 * r; ++v) {
            REQUIRE(quadratic_character(v, r) == quadratic_character(v + r, r));
            REQUIRE((quadratic_character(v, r) == 0) == (std::gcd(v, r) > 1));
        }
        for (std::int64_t a = 1; a <= 30; ++a)
            for (std::int64_t b = 1; b <= 30; ++b)
                REQUIRE(quadratic_character(a * b, r) == quadratic_character(a, r) * quadratic_character(b, r));
        if (r % 4 != 2)
            for (std::int64_t v = 0; v <= r; ++v) REQUIRE(quadratic_character(v, r) == kronecker(v, r));
    }
    // chi2 itself is not periodic mod 2: 1 and 3 disagree.
    CHECK(kronecker(1, 2) != kronecker(3, 2));
    CHECK(quadratic_character(1, 2) == quadratic_character(3, 2));
}

TEST_CASE("chi_disc examples")
{
    CHECK(chi_disc(-4, 1) == 1);
    CHECK(chi_disc(-4, 3) == -1);
    for (std::int64_t n = 1; n <= 50; n += 2) CHECK(chi_disc(-4, n) == ((n % 4 == 1) ? 1 : -1));
    for (std::int64_t n = 1; n <= 100; ++n) CHECK(chi_disc(-19, n) == kronecker(n, 19));
    CHECK(chi_disc(-7, 0) == 0);
    CHECK(chi_disc(-4, 0) == 0);
    CHECK_THROWS_AS(chi_disc(-5, 3), DomainError);
    CHECK_THROWS_AS(chi_disc(-6, 3), DomainError);
    CHECK_THROWS_AS(chi_disc(5, 3), DomainError);
}

TEST_CASE("chi_disc is multiplicative, |D|-periodic and vanishes iff gcd > 1")
{
    for (std::int64_t D = -3; D >= -200; --D) {
        if (!is_discriminant(D)) continue;
        const std::int64_t m = -D;
        for (std::int64_t n = -2 * m; n <= 2 * m; ++n) {
            REQUIRE(chi_disc(D, n) == chi_disc(D, n + m));
            REQUIRE((chi_disc(D, n) == 0) == (std::gcd(n, D) != 1));
        }
        for (std::int64_t a = 1; a <= 30; ++a)
            for (std::int64_t b = 1; b <= 30; ++b) REQUIRE(chi_disc(D, a * b) == chi_disc(D, a) * chi_disc(D, b));
    }
}

TEST_CASE("conductor_split examples")
{
    const auto s19 = conductor_split(-19);
    CHECK(s19.D_star == -19);
    CHECK(s19.f == 1);
    CHECK(s19.w == 2);
    const auto s100 = conductor_split(-100);
    CHECK(s100.D_star == -4);
    CHECK(s100.f == 5);
    CHECK(s100.w == 4);
    const auto s12 = conductor_split(-12);
    CHECK(s12.D_star == -3);
    CHECK(s12.f == 2);
    CHECK(s12.w == 6);
    CHECK_THROWS_AS(conductor_split(0), DomainError);
    CHECK_THROWS_AS(conductor_split(5), DomainError);
    CHECK_THROWS_AS(conductor_split(-6), DomainError);
    CHECK_THROWS_AS(conductor_split(-7 * 4 + 2), DomainError);
}

TEST_CASE("conductor_split round trip with maximal conductor")
{
    for (std::int64_t D = -3; D >= -4000; --D) {
        if (!is_discriminant(D)) continue;
        const auto s = conductor_split(D);
        REQUIRE(s.D_star * s.f * s.f == D);
        REQUIRE(fundamental_oracle(s.D_star));
        REQUIRE(is_fundamental_discriminant(s.D_star));
        // No larger g with g^2 | D leaves a discriminant quotient.
        for (std::int64_t g = s.f + 1; g * g <= -D; ++g)
            if (D % (g * g) == 0) REQUIRE_FALSE(is_discriminant(D / (g * g)));
    }
}

TEST_CASE("is_fundamental_discriminant matches the naive squarefree test")
{
    for (std::int64_t D = -1; D >= -3000; --D) REQUIRE(is_fundamental_discriminant(D) == fundamental_oracle(D));
}

TEST_CASE("root_of_unity")
{
    CHECK(std::abs(root_of_unity(7, 0) - std::complex<double>(1, 0)) < 1e-15);
    CHECK(std::abs(root_of_unity(4, 1) - std::complex<double>(0, 1)) < 1e-15);
    CHECK(std::abs(root_of_unity(4, -1) - std::complex<double>(0, -1)) < 1e-15);
    for (std::int64_t r = 1; r <= 100; ++r)
        for (std::int64_t z = -3 * r; z <= 3 * r; ++z) REQUIRE(std::abs(std::abs(root_of_unity(r, z)) - 1.0) < 1e-12);
    CHECK_THROWS_AS(root_of_unity(0, 1), DomainError);
}

TEST_CASE("orthogonality relation over -r/2 <= b < r/2")
{
    for (std::int64_t r = 1; r <= 50; ++r) {
        for (std::int64_t z = -2 * r; z <= 2 * r; ++z) {
            const auto s = orthogonality_sum(r, z);
            const double expected = (z % r == 0) ? static_cast<double>(r) : 0.0;
            REQUIRE(std::abs(s - std::complex<double>(expected, 0.0)) < 1e-9);
        }
    }
}

TEST_CASE("geometric_esum")
{
    CHECK(std::abs(geometric_esum(10, 0, 3, 7) - std::complex<double>(7, 0)) < 1e-12);
    CHECK(std::abs(geometric_esum(2, 1, 0, 2)) < 1e-12);
    CHECK(std::abs(geometric_esum(100, 1, 0, 100)) < 1e-9);
    CHECK_THROWS_AS(geometric_esum(10, 1, 0, 0), DomainError);

    // Bound min(L, r/(2|b|)) pi/2 for 0 < |b| <= r/2.
    for (std::int64_t r = 2; r <= 40; ++r)
        for (std::int64_t b = -r / 2; b <= r / 2; ++b) {
            if (b == 0) continue;
            for (std::int64_t K = -5; K <= 5; K += 5)
                for (std::int64_t L = 1; L <= 3 * r; L += 7)
                    REQUIRE(std::abs(geometric_esum(r, b, K, L)) <= geometric_esum_bound(r, b, L) + 1e-9);
        }
}

TEST_CASE("integer helpers")
{
    CHECK(is_prime(2));
    CHECK(is_prime(10007));
    CHECK(is_prime(2'000'000'011ULL));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(100));
    CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
    for (std::uint64_t n = 0; n < 2000; ++n) {
        bool naive = n >= 2;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) naive = false;
        REQUIRE(is_prime(n) == naive);
    }
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(15) == 3);
    CHECK(isqrt(16) == 4);
    CHECK(isqrt(4'000'000'000'000'000'000LL) == 2'000'000'000);
    CHECK(totient(1) == 1);
    CHECK(totient(36) == 12);
    CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
    CHECK(prime_power_decomposition(125) == PrimePower{5, 3});
    CHECK_THROWS_AS(prime_power_decomposition(100), DomainError);
    CHECK_THROWS_AS(require_field_size(2'147'483'647), DomainError);
}

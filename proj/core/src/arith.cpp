#include "isoclass/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "int128.hpp"
#include "isoclass/error.hpp"

namespace isoclass::arith {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<detail::u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is exact below 3.3e24.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::int64_t isqrt(std::int64_t n)
{
    if (n < 0) throw DomainError("isqrt of a negative number");
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && static_cast<detail::i128>(r) * r > n) --r;
    while (static_cast<detail::i128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_square(std::int64_t n)
{
    if (n < 0) return false;
    const std::int64_t r = isqrt(n);
    return r * r == n;
}

std::vector<PrimePower> factorize(std::int64_t n)
{
    std::vector<PrimePower> out;
    std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
    if (m <= 1) return out;
    auto strip = [&](std::uint64_t p) {
        if (m % p != 0) return;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        out.push_back({static_cast<std::int64_t>(p), e});
    };
    strip(2);
    strip(3);
    for (std::uint64_t p = 5; p * p <= m; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (m > 1) out.push_back({static_cast<std::int64_t>(m), 1});
    return out;
}

std::int64_t totient(std::int64_t n)
{
    if (n < 1) throw DomainError("totient requires n >= 1");
    std::int64_t phi = n;
    for (const auto& [p, e] : factorize(n)) phi = phi / p * (p - 1);
    return phi;
}

std::vector<std::int64_t> divisors(std::int64_t n)
{
    if (n < 1) throw DomainError("divisors requires n >= 1");
    std::vector<std::int64_t> out{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t base = out.size();
        std::int64_t pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

PrimePower prime_power_decomposition(std::int64_t q)
{
    if (q < 2) throw DomainError("q must be a prime power, got " + std::to_string(q));
    const auto f = factorize(q);
    if (f.size() != 1) throw DomainError("q must be a prime power, got " + std::to_string(q));
    return f.front();
}

PrimePower require_field_size(std::int64_t q)
{
    if (q > kMaxFieldSize)
        throw DomainError("q = " + std::to_string(q) + " exceeds the supported maximum " +
                          std::to_string(kMaxFieldSize));
    return prime_power_decomposition(q);
}

int jacobi(std::int64_t a, std::int64_t n)
{
    if (n < 1 || n % 2 == 0) throw DomainError("jacobi requires odd n >= 1");
    a %= n;
    if (a < 0) a += n;
    int sign = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const std::int64_t r = n % 8;
            if (r == 3 || r == 5) sign = -sign;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) sign = -sign;
        a %= n;
    }
    return n == 1 ? sign : 0;
}

int legendre(std::int64_t v, std::int64_t p)
{
    return jacobi(v, p);
}

int chi2(std::int64_t v)
{
    std::int64_t r = v % 8;
    if (r < 0) r += 8;
    switch (r) {
    case 1:
    case 7:
        return 1;
    case 3:
    case 5:
        return -1;
    default:
        return 0;
    }
}

int kronecker(std::int64_t v, std::int64_t r)
{
    if (r < 1) throw DomainError("kronecker requires modulus r >= 1");
    int result = 1;
    while (r % 2 == 0) {
        result *= chi2(v);
        if (result == 0) return 0;
        r /= 2;
    }
    // The odd part is a product of odd primes, so the Jacobi symbol equals
    // the product of the Legendre factors.
    return result * jacobi(v, r);
}

int quadratic_character(std::int64_t v, std::int64_t r)
{
    if (r < 1) throw DomainError("quadratic_character requires modulus r >= 1");
    if (r % 4 != 2) return kronecker(v, r);
    return v % 2 == 0 ? 0 : kronecker(v, r / 2);
}

bool is_discriminant(std::int64_t D)
{
    const std::int64_t r = ((D % 4) + 4) % 4;
    return r == 0 || r == 1;
}

int chi_disc(std::int64_t D, std::int64_t n)
{
    if (D >= 0 || !is_discriminant(D))
        throw DomainError("chi_disc requires a negative discriminant D = 0, 1 mod 4, got " + std::to_string(D));
    if (n == 0) return 0;
    int result = 1;
    if (n < 0) {
        result = -1;
        n = -n;
    }
    while (n % 2 == 0) {
        // (D/2) is chi2(D) for odd D and 0 for even D.
        result *= chi2(D);
        if (result == 0) return 0;
        n /= 2;
    }
    if (n == 1) return result;
    return result * jacobi(D, n);
}

namespace {

bool squarefree(std::int64_t m)
{
    for (const auto& [p, e] : factorize(m))
        if (e > 1) return false;
    return true;
}

} // namespace

bool is_fundamental_discriminant(std::int64_t D)
{
    if (D >= 0) return false;
    const std::int64_t r = ((D % 4) + 4) % 4;
    if (r == 1) return squarefree(D);
    if (r != 0) return false;
    const std::int64_t m = D / 4;
    const std::int64_t m4 = ((m % 4) + 4) % 4;
    return (m4 == 2 || m4 == 3) && squarefree(m);
}

int unit_weight(std::int64_t D_star)
{
    if (D_star == -3) return 6;
    if (D_star == -4) return 4;
    return 2;
}

DiscriminantSplit conductor_split(std::int64_t D)
{
    if (D >= 0 || !is_discriminant(D))
        throw DomainError("conductor_split requires a negative discriminant D = 0, 1 mod 4, got " +
                          std::to_string(D));

    // Squarefree kernel: D = s * g^2 with s squarefree (sign carried by s).
    std::int64_t s = -1;
    std::int64_t g = 1;
    for (const auto& [p, e] : factorize(D)) {
        for (int k = 0; k < e / 2; ++k) g *= p;
        if (e % 2 == 1) s *= p;
    }

    DiscriminantSplit out;
    out.D = D;
    if (((s % 4) + 4) % 4 == 1) {
        out.D_star = s;
        out.f = g;
    } else {
        // s = 2, 3 mod 4: the fundamental part is 4s, so g must be even.
        out.D_star = 4 * s;
        out.f = g / 2;
    }
    out.w = unit_weight(out.D_star);
    return out;
}

std::complex<double> root_of_unity(std::int64_t r, std::int64_t z)
{
    if (r < 1) throw DomainError("root_of_unity requires r >= 1");
    std::int64_t k = z % r;
    if (k < 0) k += r;
    if (k == 0) return {1.0, 0.0};
    if (4 * k == r) return {0.0, 1.0};
    if (2 * k == r) return {-1.0, 0.0};
    if (4 * k == 3 * r) return {0.0, -1.0};
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(r);
    return std::polar(1.0, angle);
}

std::complex<double> orthogonality_sum(std::int64_t r, std::int64_t z)
{
    if (r < 1) throw DomainError("orthogonality_sum requires r >= 1");
    std::complex<double> sum{0.0, 0.0};
    const std::int64_t zr = z % r;
    for (std::int64_t b = -(r / 2); 2 * b < r; ++b) sum += root_of_unity(r, b * zr);
    return sum;
}

std::complex<double> geometric_esum(std::int64_t r, std::int64_t b, std::int64_t K, std::int64_t L)
{
    if (L < 1) throw DomainError("geometric_esum requires L >= 1");
    if (r < 1) throw DomainError("geometric_esum requires r >= 1");
    std::int64_t step = b % r;
    if (step < 0) step += r;
    std::int64_t phase = static_cast<std::int64_t>((static_cast<detail::i128>(step) * ((K + 1) % r + r)) % r);
    std::complex<double> sum{0.0, 0.0};
    for (std::int64_t n = 0; n < L; ++n) {
        sum += root_of_unity(r, phase);
        phase += step;
        if (phase >= r) phase -= r;
    }
    return sum;
}

double geometric_esum_bound(std::int64_t r, std::int64_t b, std::int64_t L)
{
    if (b == 0) return static_cast<double>(L);
    const double abs_b = std::abs(static_cast<double>(b));
    return std::min(static_cast<double>(L), static_cast<double>(r) / (2.0 * abs_b)) * std::numbers::pi / 2.0;
}

} // namespace isoclass::arith

#include "isoclass/census.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "int128.hpp"
#include "isoclass/error.hpp"

namespace isoclass::census {

namespace {

void require_census_prime(std::int64_t p)
{
    if (p <= 3) throw DomainError("p must be a prime greater than 3, got " + std::to_string(p));
    if (!arith::is_prime(static_cast<std::uint64_t>(p))) throw DomainError("p must be prime, got " + std::to_string(p));
}

std::int64_t reduce(std::int64_t x, std::int64_t p)
{
    x %= p;
    return x < 0 ? x + p : x;
}

std::int64_t primitive_root(std::int64_t p)
{
    const auto factors = arith::factorize(p - 1);
    for (std::int64_t g = 2; g < p; ++g) {
        bool generator = true;
        for (const auto& [ell, e] : factors) {
            if (arith::powmod(g, (p - 1) / ell, p) == 1) {
                generator = false;
                break;
            }
        }
        if (generator) return g;
    }
    throw DomainError("no primitive root found mod " + std::to_string(p));
}

// Sum_x (f(x)/p) for f = x^3 + a x + b, walking f by finite differences.
std::int64_t character_sum(std::int64_t p, std::int64_t a, std::int64_t b, const ResidueTable& chi)
{
    std::int64_t value = b;                  // f(x)
    std::int64_t d1 = reduce(1 + a, p);      // f(x+1) - f(x)
    std::int64_t d2 = 6 % p;                 // d1(x+1) - d1(x) = 6(x+1)
    const std::int64_t d3 = 6 % p;
    std::int64_t sum = 0;
    for (std::int64_t x = 0; x < p; ++x) {
        sum += chi[value];
        value += d1;
        if (value >= p) value -= p;
        d1 += d2;
        if (d1 >= p) d1 -= p;
        d2 += d3;
        if (d2 >= p) d2 -= p;
    }
    return sum;
}

} // namespace

bool is_singular(const CurveEq& curve)
{
    const std::int64_t p = curve.p;
    const std::int64_t a = reduce(curve.a, p);
    const std::int64_t b = reduce(curve.b, p);
    const auto a3 = static_cast<std::int64_t>(static_cast<detail::i128>(a) * a % p * a % p);
    const auto b2 = static_cast<std::int64_t>(static_cast<detail::i128>(b) * b % p);
    return reduce(4 * a3 + 27 * b2, p) == 0;
}

ResidueTable::ResidueTable(std::int64_t p) : p_(p), chi_(static_cast<std::size_t>(p), -1)
{
    chi_[0] = 0;
    for (std::int64_t x = 1; x <= p / 2; ++x) chi_[static_cast<std::size_t>(x * x % p)] = 1;
}

std::int64_t trace_of_curve(const CurveEq& curve)
{
    require_census_prime(curve.p);
    return trace_of_curve(curve, ResidueTable(curve.p));
}

std::int64_t trace_of_curve(const CurveEq& curve, const ResidueTable& residues)
{
    if (residues.prime() != curve.p) throw DomainError("residue table built for a different prime");
    if (is_singular(curve))
        throw DomainError("singular curve: 4a^3 + 27b^2 = 0 mod " + std::to_string(curve.p));
    return -character_sum(curve.p, reduce(curve.a, curve.p), reduce(curve.b, curve.p), residues);
}

std::int64_t TraceTable::count(std::int64_t t) const
{
    if (t < -bound || t > bound) return 0;
    return counts[static_cast<std::size_t>(t + bound)];
}

OrbitCanon::OrbitCanon(std::int64_t p)
    : p_(p),
      index4_(std::gcd<std::int64_t>(4, p - 1)),
      index6_(std::gcd<std::int64_t>(6, p - 1)),
      dlog_(static_cast<std::size_t>(p), 0),
      least4_(static_cast<std::size_t>(index4_), p),
      least6_(static_cast<std::size_t>(index6_), p)
{
    const std::int64_t g = primitive_root(p);
    std::int64_t x = 1;
    for (std::int64_t k = 0; k < p - 1; ++k) {
        dlog_[static_cast<std::size_t>(x)] = k;
        auto& m4 = least4_[static_cast<std::size_t>(k % index4_)];
        auto& m6 = least6_[static_cast<std::size_t>(k % index6_)];
        m4 = std::min(m4, x);
        m6 = std::min(m6, x);
        x = x * g % p;
    }
}

bool OrbitCanon::coset_least(std::int64_t x, const std::vector<std::int64_t>& least) const
{
    const auto index = static_cast<std::int64_t>(least.size());
    return least[static_cast<std::size_t>(dlog_[static_cast<std::size_t>(x)] % index)] == x;
}

bool OrbitCanon::is_canonical(std::int64_t a, std::int64_t b) const
{
    if (a == 0 && b == 0) return false;
    // (0, b): orbit is {(0, u^6 b)}.
    if (a == 0) return coset_least(b, least6_);
    // The first coordinate must be the least element of a (F_p^*)^4; the
    // remaining freedom is u in mu_4, acting on b through u^6 = u^2 = +-1.
    if (!coset_least(a, least4_)) return false;
    if (b == 0 || index4_ == 2) return true;
    return b <= p_ - b;
}

int OrbitCanon::automorphisms(std::int64_t a, std::int64_t b) const
{
    if (a == 0) return static_cast<int>(index6_);
    if (b == 0) return static_cast<int>(index4_);
    return 2;
}

TraceTable census(std::int64_t p, const CensusOptions& options)
{
    require_census_prime(p);
    if (p > options.max_prime)
        throw DomainError("p = " + std::to_string(p) + " exceeds the census maximum " +
                          std::to_string(options.max_prime));

    const ResidueTable chi(p);
    const OrbitCanon canon(p);
    const std::int64_t bound = arith::isqrt(4 * p);

    struct Partial
    {
        std::vector<std::int64_t> counts;
        std::map<int, std::int64_t> by_aut;
    };

    // One work item per first coordinate a; only coset-least a contribute.
    auto partials = parallel_map<Partial>(static_cast<std::size_t>(p), options.parallelism, [&](std::size_t i) {
        const auto a = static_cast<std::int64_t>(i);
        Partial part;
        if (a != 0 && !canon.is_canonical(a, 0)) return part;
        part.counts.assign(static_cast<std::size_t>(2 * bound + 1), 0);
        for (std::int64_t b = 0; b < p; ++b) {
            if (!canon.is_canonical(a, b)) continue;
            const CurveEq curve{p, a, b};
            if (is_singular(curve)) continue;
            const std::int64_t t = -character_sum(p, a, b, chi);
            ++part.counts[static_cast<std::size_t>(t + bound)];
            ++part.by_aut[canon.automorphisms(a, b)];
        }
        return part;
    });

    TraceTable table;
    table.p = p;
    table.bound = bound;
    table.counts.assign(static_cast<std::size_t>(2 * bound + 1), 0);
    for (const auto& part : partials) {
        for (std::size_t k = 0; k < part.counts.size(); ++k) table.counts[k] += part.counts[k];
        for (const auto& [aut, n] : part.by_aut) table.classes_by_aut[aut] += n;
    }
    for (const auto& [aut, n] : table.classes_by_aut) {
        table.total += n;
        table.aut_weighted_total += Rational(n, aut);
    }
    return table;
}

double iota(const TraceTable& table, std::int64_t t)
{
    return static_cast<double>(table.count(t)) / (0.5 * std::sqrt(static_cast<double>(table.p)));
}

Rational model_count_check(const TraceTable& table)
{
    Rational sum{0};
    for (const auto& [aut, n] : table.classes_by_aut) sum += Rational(n * (table.p - 1), aut);
    return sum;
}

} // namespace isoclass::census

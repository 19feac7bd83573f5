#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "isoclass/arith.hpp"
#include "isoclass/parallel.hpp"

namespace isoclass::census {

inline constexpr std::int64_t kDefaultMaxPrime = 200'000;

/// y^2 = x^3 + a x + b over F_p, p > 3 prime.
struct CurveEq
{
    std::int64_t p = 0;
    std::int64_t a = 0;
    std::int64_t b = 0;
};

bool is_singular(const CurveEq& curve);

/// Quadratic character of F_p as a lookup table: chi[x] = (x/p) for 0 <= x < p.
class ResidueTable
{
public:
    explicit ResidueTable(std::int64_t p);

    std::int64_t prime() const { return p_; }
    int operator[](std::int64_t x) const { return chi_[static_cast<std::size_t>(x)]; }

private:
    std::int64_t p_;
    std::vector<std::int8_t> chi_;
};

/// Frobenius trace t = p + 1 - #E(F_p) = -sum_x (x^3 + a x + b / p).
/// Throws DomainError for singular curves or when p is not a prime > 3.
std::int64_t trace_of_curve(const CurveEq& curve);
std::int64_t trace_of_curve(const CurveEq& curve, const ResidueTable& residues);

/// Isomorphism-class census of y^2 = x^3 + ax + b over F_p.
struct TraceTable
{
    std::int64_t p = 0;
    std::int64_t bound = 0;             ///< floor(2 sqrt p)
    std::vector<std::int64_t> counts;   ///< counts[t + bound] = I(t)
    std::int64_t total = 0;             ///< J, number of classes
    Rational aut_weighted_total{0};     ///< sum over classes of 1/#Aut
    std::map<int, std::int64_t> classes_by_aut;  ///< #Aut -> number of classes

    /// I(t); zero outside the Hasse interval.
    std::int64_t count(std::int64_t t) const;
};

struct CensusOptions
{
    std::int64_t max_prime = kDefaultMaxPrime;
    Parallelism parallelism{};
};

/// Canonical-representative test for the action (a, b) -> (u^4 a, u^6 b)
/// of F_p^*. Precomputes discrete logs once so each query is O(1).
class OrbitCanon
{
public:
    explicit OrbitCanon(std::int64_t p);

    /// True iff (a, b) is lexicographically least in its orbit.
    bool is_canonical(std::int64_t a, std::int64_t b) const;

    /// Stabilizer order of (a, b), which is #Aut of the curve.
    int automorphisms(std::int64_t a, std::int64_t b) const;

private:
    bool coset_least(std::int64_t x, const std::vector<std::int64_t>& least) const;

    std::int64_t p_;
    std::int64_t index4_;  // [F_p^* : (F_p^*)^4] = gcd(4, p - 1)
    std::int64_t index6_;  // gcd(6, p - 1)
    std::vector<std::int64_t> dlog_;
    std::vector<std::int64_t> least4_;  // least element per coset of 4th powers
    std::vector<std::int64_t> least6_;
};

TraceTable census(std::int64_t p, const CensusOptions& options = {});

/// iota(t) = I(t) / (0.5 sqrt p).
double iota(const TraceTable& table, std::int64_t t);

/// Sum over classes of (p - 1)/#Aut, i.e. the number of Weierstrass models.
/// Equals p^2 - p.
Rational model_count_check(const TraceTable& table);

} // namespace isoclass::census

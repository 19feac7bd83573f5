#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "isoclass/parallel.hpp"
#include "isoclass/window.hpp"

namespace isoclass::sieve {

/// Default guards keeping the brute-force large-sieve sum to minutes.
struct SieveLimits
{
    std::int64_t max_q = 20011;
    std::int64_t max_R = 64;
    std::int64_t max_N = 4096;
};

/// Coefficients alpha_1..alpha_N against the moduli {Delta(t) : t ~ R}.
class SieveInstance
{
public:
    SieveInstance(WindowSpec window, std::vector<std::complex<double>> coeffs);

    const WindowSpec& window() const { return window_; }
    const std::vector<std::complex<double>>& coeffs() const { return coeffs_; }
    std::int64_t size() const { return static_cast<std::int64_t>(coeffs_.size()); }

    /// Z = sum |alpha_n|^2.
    double energy() const { return energy_; }

private:
    WindowSpec window_;
    std::vector<std::complex<double>> coeffs_;
    double energy_ = 0.0;
};

/// Coefficients with real and imaginary parts uniform in [-1, 1), drawn from
/// a seeded mt19937_64. Same seed, same coefficients on every platform.
std::vector<std::complex<double>> random_coefficients(std::int64_t N, std::uint64_t seed);

/// Throws DomainError when the instance exceeds `limits`.
void check_limits(const SieveInstance& inst, const SieveLimits& limits);

/// T(x) = sum_{n=1}^{N} alpha_n e(n x).
std::complex<double> trig_poly(const SieveInstance& inst, double x);

/// T(a/m) with the phase n a mod m reduced exactly.
std::complex<double> trig_poly_at(const SieveInstance& inst, std::int64_t a, std::int64_t m);

enum class Residues
{
    coprime,  ///< 1 <= a <= Delta(t), gcd(a, Delta(t)) = 1
    all,      ///< 0 <= a < Delta(t)
};

/// sum_{t ~ R} sum_a |T(a / Delta(t))|^2.
double sieve_lhs(const SieveInstance& inst, Residues residues = Residues::coprime, Parallelism par = {});

/// sum_{t ~ R} Delta(t) (the full-residue Parseval total divided by Z).
std::int64_t window_modulus_sum(const WindowSpec& window);

/// sum_{t ~ R} phi(Delta(t)).
std::int64_t window_totient_sum(const WindowSpec& window);

struct SieveEnvelopes
{
    double paper = 0.0;       ///< (qR + N + min(sqrt(R) N + sqrt(q) N^{3/4}, sqrt(N) q)) Z
    double classical = 0.0;   ///< (q^2 + N) Z
    double conjecture = 0.0;  ///< (qR + N) Z
};

SieveEnvelopes sieve_envelopes(const SieveInstance& inst);

/// Number of a / Delta(t), t ~ R, gcd(a, Delta(t)) = 1, with circle
/// distance ||a/Delta(t) - alpha|| <= D. Requires 0 < D <= 1/2.
std::int64_t farey_near_count(const WindowSpec& window, double alpha, double D);

/// G(a, l; c) = sum_{d=1}^{c} e((a d^2 + l d) / c).
std::complex<double> quad_gauss(std::int64_t a, std::int64_t l, std::int64_t c);

/// Number of ordered factorisations k = m_1 ... m_nu with 1 <= m_i <= M.
std::uint64_t multi_divisor(std::int64_t k, int nu, std::int64_t M);

struct GaraevCheck
{
    std::uint64_t lhs = 0;  ///< sum_{k <= M^nu} d_{nu,M}(k)^2
    double rhs = 0.0;       ///< M^nu (e log M / nu + e)^{nu^2}
    bool ok = false;
};

inline constexpr std::int64_t kMaxGaraevSize = 10'000'000;

/// Exact left side by enumeration; requires M^nu <= 10^7.
GaraevCheck garaev_check(int nu, std::int64_t M);

/// rho_{b,nu}(k) = sum over k = m_1 ... m_nu, m_i <= M, of e_M(b (m_1 + ... + m_nu)).
std::complex<double> rho_coeff(std::int64_t b, int nu, std::int64_t M, std::int64_t k);

} // namespace isoclass::sieve

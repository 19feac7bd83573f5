#include "isoclass/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

#include "isoclass/arith.hpp"
#include "int128.hpp"
#include "isoclass/error.hpp"

namespace isoclass::sieve {

namespace {

std::int64_t reduce(std::int64_t x, std::int64_t m)
{
    x %= m;
    return x < 0 ? x + m : x;
}

std::vector<std::complex<double>> twiddles(std::int64_t m)
{
    std::vector<std::complex<double>> table(static_cast<std::size_t>(m));
    for (std::int64_t k = 0; k < m; ++k) table[static_cast<std::size_t>(k)] = arith::root_of_unity(m, k);
    return table;
}

double circle_distance(std::int64_t a, std::int64_t m, double alpha)
{
    const long double x = static_cast<long double>(a) / static_cast<long double>(m) - alpha;
    return static_cast<double>(std::fabs(x - std::nearbyint(x)));
}

// M^nu, or a value above kMaxGaraevSize when it is larger.
std::int64_t capped_power(std::int64_t M, int nu)
{
    std::int64_t out = 1;
    for (int i = 0; i < nu; ++i) {
        out *= M;
        if (out > kMaxGaraevSize) return kMaxGaraevSize + 1;
    }
    return out;
}

void require_factorisation_args(std::int64_t k, int nu, std::int64_t M)
{
    if (k < 1 || nu < 1 || M < 1)
        throw DomainError("factorisation counts require k >= 1, nu >= 1, M >= 1");
}

} // namespace

SieveInstance::SieveInstance(WindowSpec window, std::vector<std::complex<double>> coeffs)
    : window_(window), coeffs_(std::move(coeffs))
{
    validate_window(window_);
    if (coeffs_.empty()) throw DomainError("sieve instance needs N >= 1 coefficients");
    for (const auto& c : coeffs_) energy_ += std::norm(c);
}

std::vector<std::complex<double>> random_coefficients(std::int64_t N, std::uint64_t seed)
{
    if (N < 1) throw DomainError("random_coefficients requires N >= 1");
    std::mt19937_64 gen(seed);
    // Top 53 bits to [0, 1), then to [-1, 1). std::uniform_real_distribution
    // is not pinned across standard libraries.
    auto uniform = [&] { return static_cast<double>(gen() >> 11) * 0x1.0p-53 * 2.0 - 1.0; };
    std::vector<std::complex<double>> out(static_cast<std::size_t>(N));
    for (auto& c : out) {
        const double re = uniform();
        const double im = uniform();
        c = {re, im};
    }
    return out;
}

void check_limits(const SieveInstance& inst, const SieveLimits& limits)
{
    const auto& w = inst.window();
    if (w.q > limits.max_q)
        throw DomainError("sieve instance too large: q = " + std::to_string(w.q) + " > " + std::to_string(limits.max_q));
    if (w.R > limits.max_R)
        throw DomainError("sieve instance too large: R = " + std::to_string(w.R) + " > " + std::to_string(limits.max_R));
    if (inst.size() > limits.max_N)
        throw DomainError("sieve instance too large: N = " + std::to_string(inst.size()) + " > " +
                          std::to_string(limits.max_N));
}

std::complex<double> trig_poly(const SieveInstance& inst, double x)
{
    std::complex<double> sum{0.0, 0.0};
    const auto& alpha = inst.coeffs();
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        const long double nx = static_cast<long double>(i + 1) * x;
        const long double frac = nx - std::floor(nx);
        sum += alpha[i] * std::polar(1.0, static_cast<double>(2.0L * std::numbers::pi_v<long double> * frac));
    }
    return sum;
}

std::complex<double> trig_poly_at(const SieveInstance& inst, std::int64_t a, std::int64_t m)
{
    if (m < 1) throw DomainError("trig_poly_at requires m >= 1");
    const std::int64_t step = reduce(a, m);
    std::int64_t phase = 0;
    std::complex<double> sum{0.0, 0.0};
    for (const auto& c : inst.coeffs()) {
        phase += step;
        if (phase >= m) phase -= m;
        sum += c * arith::root_of_unity(m, phase);
    }
    return sum;
}

double sieve_lhs(const SieveInstance& inst, Residues residues, Parallelism par)
{
    const auto& w = inst.window();
    const auto& alpha = inst.coeffs();
    const auto per_t = parallel_map<double>(static_cast<std::size_t>(w.R), par, [&](std::size_t i) {
        const std::int64_t m = w.delta(w.first() + static_cast<std::int64_t>(i));
        const auto table = twiddles(m);
        double inner = 0.0;
        const std::int64_t a_begin = residues == Residues::coprime ? 1 : 0;
        const std::int64_t a_end = residues == Residues::coprime ? m : m - 1;
        for (std::int64_t a = a_begin; a <= a_end; ++a) {
            if (residues == Residues::coprime && std::gcd(a, m) != 1) continue;
            const std::int64_t step = a % m;
            std::int64_t phase = 0;
            std::complex<double> value{0.0, 0.0};
            for (const auto& c : alpha) {
                phase += step;
                if (phase >= m) phase -= m;
                value += c * table[static_cast<std::size_t>(phase)];
            }
            inner += std::norm(value);
        }
        return inner;
    });
    double total = 0.0;
    for (double v : per_t) total += v;
    return total;
}

std::int64_t window_modulus_sum(const WindowSpec& window)
{
    validate_window(window);
    std::int64_t sum = 0;
    for (std::int64_t t = window.first(); t <= window.last(); ++t) sum += window.delta(t);
    return sum;
}

std::int64_t window_totient_sum(const WindowSpec& window)
{
    validate_window(window);
    std::int64_t sum = 0;
    for (std::int64_t t = window.first(); t <= window.last(); ++t) sum += arith::totient(window.delta(t));
    return sum;
}

SieveEnvelopes sieve_envelopes(const SieveInstance& inst)
{
    const auto q = static_cast<double>(inst.window().q);
    const auto R = static_cast<double>(inst.window().R);
    const auto N = static_cast<double>(inst.size());
    const double Z = inst.energy();
    SieveEnvelopes env;
    env.paper = (q * R + N + std::min(std::sqrt(R) * N + std::sqrt(q) * std::pow(N, 0.75), std::sqrt(N) * q)) * Z;
    env.classical = (q * q + N) * Z;
    env.conjecture = (q * R + N) * Z;
    return env;
}

std::int64_t farey_near_count(const WindowSpec& window, double alpha, double D)
{
    validate_window(window);
    if (!(D > 0.0 && D <= 0.5)) throw DomainError("farey_near_count requires 0 < D <= 1/2");

    std::int64_t count = 0;
    for (std::int64_t t = window.first(); t <= window.last(); ++t) {
        const std::int64_t m = window.delta(t);
        const auto lo = static_cast<std::int64_t>(std::floor((alpha - D) * static_cast<double>(m))) - 1;
        const auto hi = static_cast<std::int64_t>(std::ceil((alpha + D) * static_cast<double>(m))) + 1;
        if (hi - lo + 1 >= m) {
            for (std::int64_t a = 1; a <= m; ++a)
                if (std::gcd(a, m) == 1 && circle_distance(a, m, alpha) <= D) ++count;
            continue;
        }
        for (std::int64_t k = lo; k <= hi; ++k) {
            const std::int64_t a = reduce(k, m) == 0 ? m : reduce(k, m);
            if (std::gcd(a, m) == 1 && circle_distance(a, m, alpha) <= D) ++count;
        }
    }
    return count;
}

std::complex<double> quad_gauss(std::int64_t a, std::int64_t l, std::int64_t c)
{
    if (c < 1) throw DomainError("quad_gauss requires c >= 1");
    const std::int64_t ar = reduce(a, c);
    const std::int64_t lr = reduce(l, c);
    std::complex<double> sum{0.0, 0.0};
    for (std::int64_t d = 1; d <= c; ++d) {
        const auto d2 = static_cast<std::int64_t>(static_cast<detail::i128>(d) * d % c);
        const auto phase = static_cast<std::int64_t>((static_cast<detail::i128>(ar) * d2 + static_cast<detail::i128>(lr) * d) % c);
        sum += arith::root_of_unity(c, phase);
    }
    return sum;
}

std::uint64_t multi_divisor(std::int64_t k, int nu, std::int64_t M)
{
    require_factorisation_args(k, nu, M);
    const auto divs = arith::divisors(k);
    const auto index_of = [&](std::int64_t d) {
        return static_cast<std::size_t>(std::lower_bound(divs.begin(), divs.end(), d) - divs.begin());
    };

    // ways[i] = number of ways to write divs[i] as a product of j factors <= M.
    std::vector<std::uint64_t> ways(divs.size(), 0);
    for (std::size_t i = 0; i < divs.size(); ++i) ways[i] = divs[i] <= M ? 1 : 0;
    for (int j = 2; j <= nu; ++j) {
        std::vector<std::uint64_t> next(divs.size(), 0);
        for (std::size_t i = 0; i < divs.size(); ++i) {
            for (std::int64_t m : divs) {
                if (m > M || m > divs[i]) break;
                if (divs[i] % m == 0) next[i] += ways[index_of(divs[i] / m)];
            }
        }
        ways = std::move(next);
    }
    return ways.back();
}

GaraevCheck garaev_check(int nu, std::int64_t M)
{
    if (nu < 1 || M < 1) throw DomainError("garaev_check requires nu >= 1 and M >= 1");
    const std::int64_t K = capped_power(M, nu);
    if (K > kMaxGaraevSize) throw DomainError("garaev_check instance too large: M^nu > 10^7");

    // counts[k] = d_{j,M}(k), built one factor at a time.
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(K) + 1, 0);
    for (std::int64_t m = 1; m <= M; ++m) counts[static_cast<std::size_t>(m)] = 1;
    std::int64_t reach = M;
    for (int j = 2; j <= nu; ++j) {
        std::vector<std::uint64_t> next(counts.size(), 0);
        for (std::int64_t k = 1; k <= reach; ++k) {
            const std::uint64_t c = counts[static_cast<std::size_t>(k)];
            if (c == 0) continue;
            for (std::int64_t m = 1; m <= M; ++m) next[static_cast<std::size_t>(k * m)] += c;
        }
        counts = std::move(next);
        reach *= M;
    }

    GaraevCheck out;
    for (std::uint64_t c : counts) out.lhs += c * c;
    const double e = std::numbers::e;
    const double base = e * std::log(static_cast<double>(M)) / nu + e;
    out.rhs = static_cast<double>(K) * std::pow(base, static_cast<double>(nu) * nu);
    out.ok = static_cast<double>(out.lhs) <= out.rhs;
    return out;
}

std::complex<double> rho_coeff(std::int64_t b, int nu, std::int64_t M, std::int64_t k)
{
    require_factorisation_args(k, nu, M);
    if (capped_power(M, nu) > kMaxGaraevSize) throw DomainError("rho_coeff instance too large: M^nu > 10^7");

    const auto divs = arith::divisors(k);
    std::complex<double> sum{0.0, 0.0};
    // Ordered factorisations of `rest` into `left` factors <= M; `acc` is the
    // running m_1 + ... mod M.
    auto walk = [&](auto&& self, std::int64_t rest, int left, std::int64_t acc) -> void {
        if (left == 0) {
            if (rest == 1) {
                const auto phase = static_cast<std::int64_t>((static_cast<detail::i128>(reduce(b, M)) * acc) % M);
                sum += arith::root_of_unity(M, phase);
            }
            return;
        }
        for (std::int64_t m : divs) {
            if (m > M || m > rest) break;
            if (rest % m == 0) self(self, rest / m, left - 1, (acc + m) % M);
        }
    };
    walk(walk, k, nu, 0);
    return sum;
}

} // namespace isoclass::sieve

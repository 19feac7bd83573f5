// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Envelope ratios are appended to acceptance_ratios.csv in the
// working directory.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "isoclass/arith.hpp"
#include "isoclass/census.hpp"
#include "isoclass/characters.hpp"
#include "isoclass/experiments.hpp"
#include "isoclass/lfunctions.hpp"
#include "isoclass/parallel.hpp"
#include "isoclass/quadforms.hpp"
#include "isoclass/sieve.hpp"

#ifndef ISOCLASS_CLI_PATH
#error "ISOCLASS_CLI_PATH must name the isoclass executable"
#endif

using namespace isoclass;

namespace {

// Tolerances, pinned.
constexpr double kClosureRelTol = 1e-9;
constexpr double kSpotTol = 1e-4;
constexpr double kGaussTol = 1e-9;
constexpr double kTwistTol = 1e-8;
constexpr double kOrthTol = 1e-9;
constexpr double kParsevalRelTol = 1e-9;
constexpr double kSatoTateRelTol = 0.15;
constexpr double kMuTol = 1e-12;

struct Outcome
{
    bool ok = true;
    std::string detail;
};

std::ofstream ratios_out;

void archive(const std::string& criterion, const std::string& key, double value)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    ratios_out << criterion << ',' << key << ',' << buf << '\n';
}

std::string fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

Outcome census_equivalence()
{
    for (std::int64_t p : {101, 499, 1009}) {
        const auto table = census::census(p);
        for (std::int64_t t = -table.bound; t <= table.bound; ++t) {
            if (t == 0 || t * t >= 4 * p) continue;
            if (table.count(t) != quadforms::kronecker_class_number(t * t - 4 * p))
                return {false, "p=" + std::to_string(p) + " t=" + std::to_string(t)};
        }
    }
    return {true, "p in {101, 499, 1009}, every 0 < |t| < 2 sqrt p"};
}

Outcome model_count()
{
    for (std::int64_t p : {5, 7, 101, 1009})
        if (census::model_count_check(census::census(p)) != Rational(p * p - p))
            return {false, "p=" + std::to_string(p)};
    return {true, "p in {5, 7, 101, 1009}"};
}

Outcome kronecker_hurwitz()
{
    for (std::int64_t p : {5, 101, 1009}) {
        Rational sum{0};
        for (std::int64_t t = -arith::isqrt(4 * p); t * t <= 4 * p; ++t) sum += quadforms::hurwitz(4 * p - t * t);
        if (sum != Rational(2 * p)) return {false, "p=" + std::to_string(p)};
        if (p == 5 && sum != Rational(10)) return {false, "p=5 hand value"};
    }
    return {true, "p in {5, 101, 1009}; p=5 sums to 10"};
}

Outcome closure()
{
    const std::int64_t p = 1009;
    const auto table = census::census(p);
    double worst = 0.0;
    for (std::int64_t t = -table.bound; t <= table.bound; ++t) {
        if (t == 0 || t * t >= 4 * p) continue;
        const auto split = arith::conductor_split(t * t - 4 * p);
        const Rational psi = quadforms::psi_derived(p, t);
        if (psi < Rational(1)) return {false, "psi < 1 at t=" + std::to_string(t)};
        if (split.f == 1 && psi != Rational(split.w)) return {false, "psi != w at t=" + std::to_string(t)};
        const double psi_d = static_cast<double>(psi.numerator()) / static_cast<double>(psi.denominator());
        const double value = std::sqrt(static_cast<double>(4 * p - t * t)) / (2.0 * std::numbers::pi) *
                             lfunc::l_exact_fundamental(split.D_star) * psi_d;
        const double I = static_cast<double>(table.count(t));
        worst = std::max(worst, std::abs(value - I) / I);
    }
    return {worst <= kClosureRelTol, "max relative error " + fmt(worst) + " at p=1009"};
}

Outcome l_consistency()
{
    const std::int64_t p = 101;
    constexpr std::int64_t N = 1'000'000;
    double worst = 0.0;
    for (std::int64_t t = -arith::isqrt(4 * p); t * t < 4 * p; ++t) {
        if (t == 0) continue;
        const auto rec = lfunc::l_star_and_full(p, t);
        const characters::CharacterHandle h(p, t, characters::CharacterMode::field_disc);
        const double delta = static_cast<double>(h.modulus());
        const double bound = 2.0 * std::sqrt(delta) * std::log(delta) / static_cast<double>(N);
        const double err = std::abs(lfunc::l_truncated(h, N) - rec.L_star * rec.euler_product);
        if (err > bound) return {false, "t=" + std::to_string(t) + " error " + fmt(err) + " > " + fmt(bound)};
        worst = std::max(worst, err / bound);
    }
    const double s4 = std::abs(lfunc::l_exact_fundamental(-4) - std::numbers::pi / 4);
    const double s19 = std::abs(lfunc::l_exact_fundamental(-19) - std::numbers::pi / std::sqrt(19.0));
    if (s4 > kSpotTol || s19 > kSpotTol) return {false, "spot values"};
    return {true, "worst error / tail bound " + fmt(worst)};
}

Outcome gauss()
{
    double worst = 0.0;
    for (std::int64_t r = 2; r <= 2000; ++r) {
        const double excess = std::abs(characters::gauss_sum(r)) - std::sqrt(static_cast<double>(r));
        if (excess > kGaussTol) return {false, "r=" + std::to_string(r)};
        worst = std::max(worst, excess);
    }
    std::mt19937_64 gen(20240601);
    int checked = 0;
    double worst_twist = 0.0;
    while (checked < 100) {
        const auto r = static_cast<std::int64_t>(gen() % 500) + 1;
        const auto v = static_cast<std::int64_t>(gen() % 2000) - 1000;
        if (std::gcd(v, r) != 1) continue;
        const double res = characters::gauss_twist_residual(v, r);
        if (res > kTwistTol * static_cast<double>(r)) return {false, "twist v=" + std::to_string(v) + " r=" + std::to_string(r)};
        worst_twist = std::max(worst_twist, res / static_cast<double>(r));
        ++checked;
    }
    // Reported, not asserted: the chi_2 table read literally at 2 || r.
    std::string literal_excess;
    for (std::int64_t r = 2; r <= 2000; ++r)
        if (r % 4 == 2 &&
            std::abs(characters::gauss_sum(r, characters::GaussConvention::literal)) > std::sqrt(static_cast<double>(r)) + kGaussTol)
            literal_excess += (literal_excess.empty() ? "" : " ") + std::to_string(r);
    return {true, "max |tau_r| - sqrt r = " + fmt(worst) + ", max residual/r = " + fmt(worst_twist) +
                      "; literal chi_2 exceeds sqrt r at r = " + (literal_excess.empty() ? "none" : literal_excess)};
}

Outcome orthogonality_parseval()
{
    for (std::int64_t r = 1; r <= 50; ++r)
        for (std::int64_t z = -2 * r; z <= 2 * r; ++z) {
            const double expected = z % r == 0 ? static_cast<double>(r) : 0.0;
            if (std::abs(arith::orthogonality_sum(r, z) - std::complex<double>(expected, 0.0)) > kOrthTol)
                return {false, "orthogonality r=" + std::to_string(r) + " z=" + std::to_string(z)};
        }
    std::mt19937_64 gen(7);
    const Parallelism workers{std::max(1u, std::thread::hardware_concurrency())};
    double worst = 0.0;
    const std::vector<WindowSpec> windows{{101, 3}, {1009, 8}, {1009, 16}, {10007, 20}};
    for (int i = 0; i < 20; ++i) {
        const auto& w = windows[static_cast<std::size_t>(i) % windows.size()];
        const std::int64_t min_delta = w.delta(w.last());
        const auto N = static_cast<std::int64_t>(gen() % static_cast<std::uint64_t>(std::min<std::int64_t>(min_delta, 512))) + 1;
        const sieve::SieveInstance inst(w, sieve::random_coefficients(N, gen()));
        const auto errors = parallel_map<double>(static_cast<std::size_t>(w.R), workers, [&](std::size_t k) {
            const std::int64_t m = w.delta(w.first() + static_cast<std::int64_t>(k));
            double inner = 0.0;
            for (std::int64_t a = 0; a < m; ++a) inner += std::norm(sieve::trig_poly_at(inst, a, m));
            const double expected = static_cast<double>(m) * inst.energy();
            return std::abs(inner - expected) / expected;
        });
        for (double rel : errors) {
            if (rel > kParsevalRelTol) return {false, "Parseval instance " + std::to_string(i)};
            worst = std::max(worst, rel);
        }
    }
    return {true, "r <= 50; 20 seeded instances, worst Parseval rel error " + fmt(worst)};
}

Outcome garaev()
{
    for (int nu = 1; nu <= 3; ++nu)
        for (std::int64_t M = 2; M <= 32; ++M) {
            const auto g = sieve::garaev_check(nu, M);
            archive("8", "nu=" + std::to_string(nu) + ";M=" + std::to_string(M), static_cast<double>(g.lhs) / g.rhs);
            if (!g.ok) return {false, "nu=" + std::to_string(nu) + " M=" + std::to_string(M)};
        }
    const auto hand = sieve::garaev_check(2, 4);
    if (hand.lhs != 32) return {false, "(2, 4) lhs = " + std::to_string(hand.lhs)};
    return {true, "nu in 1..3, M in 2..32; (2, 4) lhs = 32"};
}

Outcome theorem_desk_scale()
{
    const auto table = census::census(10007);
    std::string detail;
    bool ok = true;
    for (std::int64_t R : {8, 16, 32, 64}) {
        const auto row = experiments::theorem_window_average(WindowSpec{10007, R}, table);
        archive("9", "R=" + std::to_string(R) + ";statistic", row.statistic);
        archive("9", "R=" + std::to_string(R) + ";ratio", row.ratio);
        detail += "R=" + std::to_string(R) + ": stat " + fmt(row.statistic) + " ratio " + fmt(row.ratio) + "; ";
        if (!(row.statistic >= 0.2 && row.statistic <= 5.0 && row.ratio < 1.0)) ok = false;
    }
    const auto parts = experiments::dyadic_partition_counts(table);
    std::int64_t from_parts = std::accumulate(parts.begin(), parts.end(), std::int64_t{0});
    std::int64_t direct = 0;
    for (std::int64_t t = 2; t <= table.bound; ++t) direct += table.count(t);
    if (from_parts != direct) {
        ok = false;
        detail += "partition mismatch";
    } else {
        detail += "partition exact";
    }
    return {ok, detail};
}

Outcome sato_tate()
{
    if (std::abs(experiments::mu_density(-1, 1) - 1.0) > kMuTol || std::abs(experiments::mu_density(0, 1) - 0.5) > kMuTol)
        return {false, "mu_density spot values"};
    const auto table = census::census(10007);
    bool ok = true;
    std::string detail = "c = " + fmt(experiments::sato_tate_calibration(table)) + "; ";
    const std::vector<std::pair<double, double>> windows{{-1.0, -0.5}, {-0.5, 0.0}, {0.0, 0.5}, {0.5, 1.0}};
    for (const auto& [a, b] : windows) {
        const auto row = experiments::sato_tate_compare(table, a, b);
        const double rel = std::abs(row.ratio - 1.0);
        archive("10", "alpha=" + fmt(a) + ";beta=" + fmt(b), row.ratio);
        detail += "(" + fmt(a) + "," + fmt(b) + ") " + fmt(row.ratio) + " ";
        if (!(rel <= kSatoTateRelTol)) ok = false;
    }
    return {ok, detail};
}

Outcome char_sum_average()
{
    const WindowSpec w{1009, 8};
    const std::int64_t L = 64;
    std::string detail;
    for (auto mode : {characters::CharacterMode::paper_literal, characters::CharacterMode::field_disc}) {
        std::int64_t naive = 0;
        for (std::int64_t t = w.first(); t <= w.last(); ++t) {
            const std::int64_t delta = w.delta(t);
            std::int64_t best = 0;
            for (std::int64_t N = L + 1; N <= 2 * L; ++N) {
                std::int64_t s = 0;
                for (std::int64_t n = 1; n <= N; ++n)
                    s += mode == characters::CharacterMode::paper_literal ? arith::kronecker(n, delta)
                                                                          : arith::chi_disc(-delta, n);
                best = std::max(best, std::abs(s));
            }
            naive += best;
        }
        const auto result = characters::avg_max_char_sum(w, L, mode);
        if (result.total != naive) return {false, std::string(characters::to_string(mode)) + " total mismatch"};
        const double ratio = result.envelope ? result.average / *result.envelope : std::nan("");
        archive("11", characters::to_string(mode), ratio);
        detail += std::string(characters::to_string(mode)) + " avg " + fmt(result.average) + " ratio " + fmt(ratio) + "; ";
    }
    return {true, detail};
}

std::string slurp(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome determinism()
{
    const std::vector<std::string> commands{
        "census --p 1009",
        "theorem --p 10007 --r 8,16,32,64 --mirror",
        "satotate --p 10007",
        "charsum --q 1009 --r 8 --l 64",
        "lfunc --q 1009 --n 20000 --r 8",
        "sieve --q 1009 --r 8 --n 128 --seed 42",
        "gauss --r-max 500 --seed 3",
        "divisor",
        "psi --q 1009",
    };
    const auto dir = std::filesystem::temp_directory_path() / "isoclass_acceptance";
    std::filesystem::create_directories(dir);
    int index = 0;
    for (const auto& cmd : commands) {
        for (const char* format : {"csv", "json"}) {
            std::string outputs[2];
            int slot = 0;
            for (int threads : {1, 4}) {
                const auto path = dir / ("run" + std::to_string(index) + "_" + std::to_string(threads) + "." + format);
                const std::string line = std::string("\"") + ISOCLASS_CLI_PATH + "\" " + cmd + " --format " + format +
                                         " --threads " + std::to_string(threads) + " --out \"" + path.string() +
                                         "\" > /dev/null";
                if (std::system(line.c_str()) != 0) return {false, "command failed: " + cmd};
                outputs[slot++] = slurp(path);
            }
            if (outputs[0].empty() || outputs[0] != outputs[1]) return {false, "outputs differ: " + cmd + " " + format};
            ++index;
        }
    }
    return {true, std::to_string(index) + " command/format pairs byte-identical across threads 1 and 4"};
}

} // namespace

int main()
{
    ratios_out.open("acceptance_ratios.csv");
    ratios_out << "criterion,key,value\n";

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"census / class-number equivalence", census_equivalence},
        {"model count", model_count},
        {"Kronecker-Hurwitz relation", kronecker_hurwitz},
        {"class-number closure", closure},
        {"L-value consistency", l_consistency},
        {"Gauss sums", gauss},
        {"orthogonality / Parseval", orthogonality_parseval},
        {"Garaev bound", garaev},
        {"dyadic window average", theorem_desk_scale},
        {"Sato-Tate windows", sato_tate},
        {"character-sum averages", char_sum_average},
        {"CLI determinism", determinism},
    };

    int failures = 0;
    int number = 0;
    for (const auto& [name, check] : criteria) {
        ++number;
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = check();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %2d %-36s %s (%.2fs)\n", outcome.ok ? "PASS" : "FAIL", number, name.c_str(),
                    outcome.detail.c_str(), secs);
        std::fflush(stdout);
        if (!outcome.ok) ++failures;
    }
    std::printf("%d/%d criteria passed\n", number - failures, number);
    return failures == 0 ? 0 : 1;
}

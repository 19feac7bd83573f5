#pragma once

#include <cstdint>
#include <string>

#include "isoclass/arith.hpp"
#include "isoclass/characters.hpp"
#include "isoclass/parallel.hpp"
#include "isoclass/window.hpp"

namespace isoclass::lfunc {

enum class LMethod
{
    truncated,
    class_number_formula,
};

const char* to_string(LMethod method);
LMethod parse_method(const std::string& name);

struct LValueRecord
{
    std::int64_t q = 0;
    std::int64_t t = 0;
    arith::DiscriminantSplit split;
    double L_star = 0.0;         ///< L(1, chi*) for the fundamental character
    double L_full = 0.0;         ///< L(1, chi_t) for the order of discriminant t^2 - 4q
    double euler_product = 1.0;  ///< prod_{l | f} (1 - chi*(l)/l)
    LMethod method = LMethod::class_number_formula;
};

/// sum_{n <= N} xi(n)/n. Throws DomainError for a principal character.
double l_truncated(const characters::CharacterHandle& h, std::int64_t N);

/// Majorant 2 sqrt(m) ln(m) / N for |L(1) - l_truncated(N)| with modulus m.
double truncation_tail_bound(std::int64_t modulus, std::int64_t N);

/// 2 pi h(D_star) / (w(D_star) sqrt|D_star|). Requires a fundamental D_star < 0.
double l_exact_fundamental(std::int64_t D_star);

/// prod over primes l | f of (1 - (D_star/l)/l).
double euler_factor(std::int64_t D_star, std::int64_t f);

/// L values of the field character at an ordinary trace t over F_q.
LValueRecord l_star_and_full(std::int64_t q, std::int64_t t);

/// L(1, (D/.)) for any negative discriminant, via the class number formula
/// and the Euler factor over the conductor.
LValueRecord l_values_for_discriminant(std::int64_t D);

/// (sqrt(Delta_t) / 2 pi) L*(t) psi(f_t). Reproduces I(t) for ordinary t.
double class_count_from_l(std::int64_t q, std::int64_t t);

struct AvgAbsL
{
    double average = 0.0;   ///< (1/R) sum_{t ~ R} |L(t)|
    double sum = 0.0;       ///< sum_{t ~ R} |L(t)|
    double envelope = 0.0;  ///< log q sqrt(log log q / log R)
};

/// Dyadic average of |L(1, chi_t)| over t ~ R using the field character.
/// `truncation` is the number of terms for LMethod::truncated. Requires R >= 2.
AvgAbsL avg_abs_l(const WindowSpec& window, LMethod method, std::int64_t truncation = 100'000,
                  Parallelism par = {});

/// Empirical constant C in 1/euler_product <= C log log(f + 2).
double mertens_ratio(const LValueRecord& record);

} // namespace isoclass::lfunc

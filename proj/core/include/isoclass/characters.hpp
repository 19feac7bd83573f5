#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isoclass/parallel.hpp"
#include "isoclass/window.hpp"

namespace isoclass::characters {

enum class CharacterMode
{
    paper_literal,  ///< n -> chi_{Delta(t)}(n), the kronecker() construction with n on top
    field_disc,     ///< n -> (t^2 - 4q / n), the character of the CM order
};

const char* to_string(CharacterMode mode);
CharacterMode parse_mode(const std::string& name);

/// The quadratic character xi_t attached to a trace t over F_q.
/// Values over one period are tabulated when the modulus is small enough.
class CharacterHandle
{
public:
    CharacterHandle(std::int64_t q, std::int64_t t, CharacterMode mode);

    std::int64_t q() const { return q_; }
    std::int64_t t() const { return t_; }
    std::int64_t delta() const { return delta_; }  ///< 4q - t^2
    CharacterMode mode() const { return mode_; }

    /// Period of n -> xi(n). Equal to delta in both modes.
    std::int64_t modulus() const { return delta_; }

    /// The literal construction is principal exactly when delta is a square.
    bool is_principal() const;

    int operator()(std::int64_t n) const;

private:
    int evaluate(std::int64_t n) const;

    std::int64_t q_;
    std::int64_t t_;
    std::int64_t delta_;
    CharacterMode mode_;
    std::vector<std::int8_t> table_;
};

int xi(const CharacterHandle& h, std::int64_t n);

/// S_t(N) = sum_{n=1}^{N} xi(n).
std::int64_t char_sum(const CharacterHandle& h, std::int64_t N);

struct MaxCharSum
{
    std::int64_t N_star = 0;
    std::int64_t value = 0;
};

/// max over L < N <= 2L of |S_t(N)|, smallest maximizer.
MaxCharSum max_char_sum(const CharacterHandle& h, std::int64_t L);

struct AvgMaxCharSum
{
    std::int64_t total = 0;   ///< sum over t ~ R of max_{N ~ L} |S_t(N)|
    double average = 0.0;     ///< total / R
    /// L exp(-(7/8) sqrt(log R log log L)); needs R >= 2 and L >= 3.
    std::optional<double> envelope;
};

/// Dyadic average (1/R) sum_{t ~ R} max_{N ~ L} |S_t(N)|.
AvgMaxCharSum avg_max_char_sum(const WindowSpec& window, std::int64_t L, CharacterMode mode, Parallelism par = {});

/// Which chi_r a Gauss sum uses. The two differ only when 2 || r.
enum class GaussConvention
{
    character,  ///< arith::quadratic_character, a character mod r
    literal,    ///< arith::kronecker with the chi_2 table at every factor 2
};

const char* to_string(GaussConvention convention);
GaussConvention parse_convention(const std::string& name);

/// tau_r = sum_{v=1}^{r} chi_r(v) e_r(v).
std::complex<double> gauss_sum(std::int64_t r, GaussConvention convention = GaussConvention::character);

/// |chi_r(v) tau_r - sum_{b=1}^{r} chi_r(b) e_r(bv)|; requires gcd(v, r) = 1.
double gauss_twist_residual(std::int64_t v, std::int64_t r, GaussConvention convention = GaussConvention::character);

/// W_b = sum_{t ~ R} |sum_{m=1}^{M} xi_t(m) e_M(b m)|. Requires |b| <= M.
double twisted_sum_W(const WindowSpec& window, std::int64_t b, std::int64_t M, CharacterMode mode,
                     Parallelism par = {});

} // namespace isoclass::characters

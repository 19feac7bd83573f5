#pragma once

#include <cstdint>

namespace isoclass {

/// A dyadic trace window t ~ R, i.e. the integers R < t <= 2R, over F_q.
/// Valid when 0 < R < 2R < 2 sqrt(q), equivalently 1 <= R and R^2 < q.
struct WindowSpec
{
    std::int64_t q = 0;
    std::int64_t R = 0;

    std::int64_t first() const { return R + 1; }
    std::int64_t last() const { return 2 * R; }

    /// 4q - t^2 for a trace in the window.
    std::int64_t delta(std::int64_t t) const { return 4 * q - t * t; }
};

/// Throws DomainError when q is not a supported prime power or the window
/// leaves the range 0 < R < 2R < 2 sqrt(q).
void validate_window(const WindowSpec& w);

} // namespace isoclass

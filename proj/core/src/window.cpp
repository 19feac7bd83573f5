#include "isoclass/window.hpp"

#include <string>

#include "isoclass/arith.hpp"
#include "isoclass/error.hpp"

namespace isoclass {

void validate_window(const WindowSpec& w)
{
    arith::require_field_size(w.q);
    if (w.R < 1 || w.R * w.R >= w.q)
        throw DomainError("window R = " + std::to_string(w.R) + " violates 0 < R < 2R < 2 sqrt(q) for q = " +
                          std::to_string(w.q));
}

} // namespace isoclass

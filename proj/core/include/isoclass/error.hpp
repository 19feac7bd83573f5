#pragma once

#include <stdexcept>
#include <string>

namespace isoclass {

// A violated mathematical precondition: non-prime modulus, invalid window,
// singular curve, oversized instance. Callers map this to "domain error".
class DomainError : public std::domain_error
{
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

} // namespace isoclass

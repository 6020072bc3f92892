#pragma once

#include <stdexcept>
#include <string>

namespace radlat {

class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define RADLAT_ERROR(Name)                                                   \
    struct Name : Error {                                                    \
        explicit Name(const std::string& msg) : Error(#Name, msg) {}         \
    }

RADLAT_ERROR(NotAPoset);
RADLAT_ERROR(NotALattice);
RADLAT_ERROR(SizeLimitExceeded);
RADLAT_ERROR(NotComparable);
RADLAT_ERROR(NotStrongerThanOrder);
RADLAT_ERROR(InternalEquivalenceMismatch);
RADLAT_ERROR(NoWitness);
RADLAT_ERROR(NotAnROrder);
RADLAT_ERROR(ParseError);
RADLAT_ERROR(NoUniqueRadical);
RADLAT_ERROR(NotEquivariant);
RADLAT_ERROR(AxiomsNotSatisfied);
RADLAT_ERROR(InputError);

#undef RADLAT_ERROR

} // namespace radlat

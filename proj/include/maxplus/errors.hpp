#pragma once

#include <stdexcept>
#include <string>

namespace maxplus {

// Base of every error raised by the library. `kind()` is the stable,
// machine-readable name used in CLI error reports.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define MAXPLUS_DEFINE_ERROR(Name)                                            \
    class Name : public Error {                                               \
    public:                                                                   \
        explicit Name(const std::string& what) : Error(#Name, what) {}        \
    };

MAXPLUS_DEFINE_ERROR(DimensionError)
MAXPLUS_DEFINE_ERROR(OverflowError)
MAXPLUS_DEFINE_ERROR(DomainError)
MAXPLUS_DEFINE_ERROR(ResourceExceeded)
MAXPLUS_DEFINE_ERROR(NotSolvable)
MAXPLUS_DEFINE_ERROR(NotReconstructible)
MAXPLUS_DEFINE_ERROR(SpecError)
MAXPLUS_DEFINE_ERROR(ConstraintViolation)
MAXPLUS_DEFINE_ERROR(IoError)

#undef MAXPLUS_DEFINE_ERROR

}  // namespace maxplus

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trisectrix {

enum class Errc {
    ParallelLines,
    OriginHasNoAngle,
    DistinctOrigins,
    AllCoefficientsZero,
    OutOfDomain,
    OutOfRange,
    BadRange,
    NoTraceRoot,
    BracketFailure,
    EmptyIntersection,
    IoError,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the Errc codes so
/// callers (and the CLI exit-status mapping) can branch on the kind.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace trisectrix

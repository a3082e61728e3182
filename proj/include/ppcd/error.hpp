#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ppcd {

enum class Errc {
    GenusTooSmall,
    NotPerfect,
    Crossing,
    IntraRegionChord,
    BadGapIndex,
    ChordNotInDiagram,
    SamePoint,
    LeafLengthViolation,
    IntervalOutOfRange,
    InvalidPairing,
    OffsetOutOfRange,
    ParityViolation,
    RangeViolation,
    Unclassifiable,
    NonPositive,
    TooFewTangles,
    NotExpandable,
    GenusMismatch,
    NotAdmissible,
    UnclassifiableFace,
    Schema,
};

std::string_view to_string(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above so that
// callers (the CLI in particular) can map them to exit statuses.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace ppcd

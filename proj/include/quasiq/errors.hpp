#pragma once

#include <stdexcept>
#include <string>

namespace quasiq {

// Distinct defect classes so callers can map a rejected input to a precise diagnostic.
enum class ValidationDefect {
    DimensionMismatch,
    NotHermitian,
    TraceNotOne,
    NotPositive,
    ImaginaryResidue,
};

class ValidationError : public std::runtime_error {
public:
    ValidationError(ValidationDefect defect, const std::string& what)
        : std::runtime_error(what), defect_(defect) {}

    ValidationDefect defect() const noexcept { return defect_; }

private:
    ValidationDefect defect_;
};

// A requested computation picture cannot handle the given subsystem layout
// (e.g. the all-qubit shortcut on a qutrit register).
class PictureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Structurally malformed input: unreadable file, bad JSON, wrong schema.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace quasiq

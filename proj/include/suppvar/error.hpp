#pragma once

#include <stdexcept>
#include <string>

namespace suppvar {

// All library failures carry a stable machine-readable kind next to the
// human-readable message. Kinds in use: InvalidField, InvalidParams,
// NonSplitSimple, NonSplitEnd, MissingHopf, RadicalFailure, Inconclusive,
// CacheCorrupt, ZeroClass, OddDegree, LiftFailure, ZeroProduct,
// SequenceTooShort, Disagreement, Internal.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace suppvar

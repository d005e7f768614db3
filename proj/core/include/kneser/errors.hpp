#pragma once

#include <stdexcept>
#include <string>

namespace kneser {

// Malformed or out-of-contract input (bad JSON, vertex out of range, ...).
struct InvalidInput : std::runtime_error {
    explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

// An instance exceeds a configured size cap. Callers may retry with a larger
// cap; the message names the cap and the offending size.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// An internal step of a constructive pipeline failed a property it is
// guaranteed to have. Indicates a bug (or a falsified guarantee), never bad
// user input. The message names the failing step.
struct ClaimFailure : std::logic_error {
    explicit ClaimFailure(const std::string& what) : std::logic_error(what) {}
};

} // namespace kneser

#ifndef SUBHIT_ERRORS_HPP
#define SUBHIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace subhit {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input file or pattern name. CLI maps this to exit code 2.
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Instance falls outside the supported pattern classes. Exit code 3.
struct UnsupportedPatternError : Error {
    explicit UnsupportedPatternError(const std::string& msg) : Error(msg) {}
};

// A configured resource cap would be exceeded. The message names the cap.
struct ResourceLimitError : Error {
    explicit ResourceLimitError(const std::string& msg) : Error(msg) {}
};

// Caller broke a documented precondition (mismatched annotations, labels
// out of range, decomposition not covering the graph, ...).
struct ContractViolationError : Error {
    explicit ContractViolationError(const std::string& msg) : Error(msg) {}
};

// Always-on invariant check; unlike assert it survives release builds.
inline void contract_check(bool ok, const std::string& msg) {
    if (!ok) throw ContractViolationError(msg);
}

} // namespace subhit

#endif

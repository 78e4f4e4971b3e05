#ifndef CHERN_ERRORS_HPP
#define CHERN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chern {

// Input could not be parsed (bad JSON, malformed rational, unknown name).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A structural invariant of a value is violated (bad ring presentation,
// inhomogeneous Chern class, singular basis matrix).
struct InvariantError : std::runtime_error {
    explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

// An operation was called outside its stated domain.
struct PreconditionError : std::invalid_argument {
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace chern

#endif

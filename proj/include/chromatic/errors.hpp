#pragma once

#include <stdexcept>
#include <string>

namespace chromatic {

// Thrown when a computation would exceed a configured size cap
// (vertex cap for chromatic polynomials, ground-set cap for the
// brute-force partition oracle).
struct cap_exceeded : std::runtime_error {
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Malformed graph-spec string or other unparsable textual input.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// verify_identity() called with an id outside the catalog.
struct unknown_identity : std::runtime_error {
    explicit unknown_identity(const std::string& what) : std::runtime_error(what) {}
};

// A triangular recurrence produced a negative entry; the log-concavity /
// Polya-frequency framework only applies to nonnegative tables.
struct negative_entry : std::runtime_error {
    explicit negative_entry(const std::string& what) : std::runtime_error(what) {}
};

// An "exact" division had a nonzero remainder.  Signals an implementation
// bug (the identities guarantee divisibility), never expected input.
struct nondivisible : std::logic_error {
    explicit nondivisible(const std::string& what) : std::logic_error(what) {}
};

// Negative value passed to a check defined on nonnegative sequences.
struct negative_input : std::invalid_argument {
    explicit negative_input(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace chromatic

#pragma once

#include <stdexcept>
#include <string>

namespace kempe {

// Thrown when a construction that is mathematically guaranteed to succeed
// fails anyway (no matching bridge, failed Hall condition, an assembled
// minor that does not validate). Catching one of these in a test or a
// search campaign is the headline event: it means a counterexample
// candidate or an implementation bug, never a routine error.
class theorem_violation : public std::runtime_error {
public:
    explicit theorem_violation(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by enumeration/oracle routines when their deadline hook fires.
// Campaign drivers convert this into an "inconclusive" verdict.
class deadline_exceeded : public std::runtime_error {
public:
    explicit deadline_exceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kempe

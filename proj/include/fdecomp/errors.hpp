#pragma once

#include <stdexcept>
#include <string>

namespace fdecomp {

// Malformed rule documents or CLI rule shorthands.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Recurrence synthesis requested for a rule outside the periodic class.
struct unsupported_rule : std::runtime_error {
    explicit unsupported_rule(const std::string& what) : std::runtime_error(what) {}
};

// A synthesized recurrence failed its internal verification.
struct synthesis_error : std::runtime_error {
    explicit synthesis_error(const std::string& what) : std::runtime_error(what) {}
};

// The exhaustive decomposition oracle exceeded its node budget.
struct budget_exceeded : std::runtime_error {
    explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fdecomp

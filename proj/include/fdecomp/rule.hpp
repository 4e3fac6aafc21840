#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace fdecomp {

enum class RuleKind { constant, periodic, factorial_bins, table };
enum class TableExtension { repeat_last, zero };

/**
 * Finite description of a legality function f : N0 -> N0. Choosing a_n for a
 * decomposition forbids the f(n) sequence terms immediately before it.
 *
 * Immutable after construction; evaluation is pure and safe to call
 * concurrently.
 */
class FRule {
public:
    static FRule constant(std::size_t value);
    static FRule periodic(std::vector<std::size_t> pattern);
    static FRule factorial_bins();
    static FRule table(std::vector<std::size_t> values,
                       TableExtension extension = TableExtension::repeat_last);

    // f(n) = max{1, n mod b}, pattern (1,1,2,...,b-1). Requires b >= 3.
    static FRule bbin(std::size_t b);
    // Base-b positional system, pattern (0,1,...,b-2). Requires b >= 2.
    static FRule base(std::size_t b);

    // Inline shorthand: "constant:1", "periodic:1,1,2", "factorial",
    // "bbin:3", "base:5", "table:0,1,2" or "table:0,1,2:zero".
    static FRule parse(const std::string& text);
    static FRule from_json(const nlohmann::json& doc);
    nlohmann::json to_json() const;
    // Canonical shorthand naming the stored rule (round-trips through parse).
    std::string spec_string() const;

    std::size_t operator()(std::size_t n) const;

    RuleKind kind() const { return kind_; }
    // Constant and periodic rules admit recurrence synthesis.
    bool is_periodic() const {
        return kind_ == RuleKind::constant || kind_ == RuleKind::periodic;
    }
    std::size_t period() const;     // 1 for constant; pattern length for periodic
    std::size_t max_value() const;  // sup of f over one period
    const std::vector<std::size_t>& pattern() const { return values_; }

    bool operator==(const FRule&) const = default;

private:
    FRule(RuleKind kind, std::vector<std::size_t> values, TableExtension ext);

    RuleKind kind_;
    std::vector<std::size_t> values_;  // constant: {c}; periodic/table: entries
    TableExtension extension_ = TableExtension::repeat_last;
};

}  // namespace fdecomp

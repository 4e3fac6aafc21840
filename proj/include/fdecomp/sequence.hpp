#pragma once

#include <cstddef>
#include <deque>

#include "fdecomp/numeric.hpp"
#include "fdecomp/rule.hpp"

namespace fdecomp {

/**
 * The f-sequence {a_n} of a rule: a_0 = 1 and
 *
 *     a_n = a_{n-1} + a_{n-1-f(n-1)}   for n >= 1,
 *
 * where a term with negative index contributes the constant 1. Terms grow
 * exponentially and are kept as arbitrary-precision integers in an
 * extend-only cache (deque, so references to cached terms stay valid while
 * the cache grows).
 *
 * Concurrency contract: reads of already-materialized terms are safe while no
 * extension is running; extension must be serialized by the caller. Callers
 * that want parallel reads should materialize(n_max) once up front.
 */
class FSequence {
public:
    explicit FSequence(FRule rule) : rule_(std::move(rule)) {}

    const FRule& rule() const { return rule_; }

    // a_n, extending the cache as needed.
    const BigInt& term(std::size_t n);

    // Unique m with a_m <= x < a_{m+1}. Requires x >= 1.
    std::size_t index_of_floor(const BigInt& x);

    void materialize(std::size_t n);
    std::size_t cached() const { return terms_.size(); }

private:
    FRule rule_;
    std::deque<BigInt> terms_;
};

}  // namespace fdecomp

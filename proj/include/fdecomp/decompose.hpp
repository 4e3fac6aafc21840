#pragma once

#include <cstddef>
#include <vector>

#include "fdecomp/numeric.hpp"
#include "fdecomp/sequence.hpp"

namespace fdecomp {

/**
 * A legal f-decomposition: strictly decreasing indices n_1 > n_2 > ... with
 * value = sum a_{n_i} and n_{i+1} <= n_i - f(n_i) - 1 for consecutive
 * entries. The empty index list represents 0.
 */
struct Decomposition {
    std::vector<std::size_t> indices;
    BigInt value;

    bool operator==(const Decomposition&) const = default;
};

// Greedy decomposition (repeatedly subtract the largest term <= remainder).
// Total and unique for every x >= 0.
Decomposition decompose(FSequence& seq, const BigInt& x);

// Legality of a strictly decreasing index list; throws std::invalid_argument
// if the list is not strictly decreasing.
bool is_legal(const FRule& rule, const std::vector<std::size_t>& indices);

BigInt recompose(FSequence& seq, const std::vector<std::size_t>& indices);

inline constexpr std::size_t kDefaultOracleBudget = 10'000'000;

/**
 * Exhaustive oracle: every legal strictly-decreasing index list over
 * {0..max_index} summing to x, found by DFS with the legality window and a
 * densest-chain bound as pruning. Throws budget_exceeded past the node cap.
 * Kept independent of decompose() so uniqueness checks have two routes.
 */
std::vector<std::vector<std::size_t>> all_legal_decompositions(
    FSequence& seq, const BigInt& x, std::size_t max_index,
    std::size_t budget = kDefaultOracleBudget);

}  // namespace fdecomp

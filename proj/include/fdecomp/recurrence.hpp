#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fdecomp/linalg.hpp"
#include "fdecomp/numeric.hpp"
#include "fdecomp/poly.hpp"
#include "fdecomp/rule.hpp"
#include "fdecomp/sequence.hpp"

namespace fdecomp {

/**
 * Integer linear recurrence s_n = c_1 s_{n-1} + ... + c_k s_{n-k}, holding
 * for all n >= valid_from (valid_from >= k so every index exists).
 */
struct LinearRecurrence {
    std::vector<BigInt> coefficients;  // c_1..c_k, c_k != 0
    std::size_t valid_from = 0;

    std::size_t order() const { return coefficients.size(); }
    bool operator==(const LinearRecurrence&) const = default;
};

// x^k - c_1 x^{k-1} - ... - c_k.
IntPoly characteristic_polynomial(const LinearRecurrence& rec);

// Smallest multiple b of the rule's period with b >= f(n) + 1 for all n.
// Throws unsupported_rule for non-periodic rules.
std::size_t synthesis_stride(const FRule& rule);

/**
 * One residue class of the stride-b elimination. Each v_j encodes the
 * defining relation for a_{n-j} (entries at positions j, j+1, j+1+f) in a
 * vector of dimension b^2+1; the loop cancels "bad" coordinates (nonzero
 * entries at non-multiples of b), recording w_i and the truncations u_i.
 * A dependence among the u_i yields lambda, and the shifted combination
 * sum_i lambda_i T_b^{b-1-i}(w_i) is supported on multiples of b only.
 */
struct ResidueElimination {
    std::size_t residue = 0;
    std::vector<std::vector<BigInt>> w;
    std::vector<std::vector<BigInt>> u;
    std::optional<RatVector> lambda;  // unset when some w_i is already clean
    std::vector<BigInt> combined;     // content 1, first nonzero entry positive
    IntPoly stride_charpoly;          // recurrence of the residue subsequence
};

ResidueElimination eliminate_residue(const FRule& rule, std::size_t b,
                                     std::size_t residue);

/**
 * Synthesizes a recurrence satisfied by the whole f-sequence of a periodic
 * rule: per-residue eliminations give stride recurrences, their
 * characteristic polynomials are multiplied and inflated by x -> x^b, and
 * the result is read off as an integer recurrence (valid from b^2 + order,
 * past every transient the construction can introduce). The result is
 * verified against the sequence before returning; failure throws
 * synthesis_error. Use minimal_recurrence to reduce to the minimal relation.
 */
LinearRecurrence synthesize_recurrence(const FRule& rule);

/**
 * Least order k <= max_order whose exact linear system is solved by integer
 * coefficients valid on every supplied term from index 2k+2 on; valid_from is
 * then tightened by scanning downward. Requires terms.size() >= 3*max_order+4
 * (solve window + a verification span that rules out pseudo-recurrences).
 * Returns nullopt when no order fits.
 */
std::optional<LinearRecurrence> minimal_recurrence(
    const std::vector<BigInt>& terms, std::size_t max_order);

// Exact check of rec against seq for valid_from <= n <= valid_from + horizon.
bool verify_recurrence(FSequence& seq, const LinearRecurrence& rec,
                       std::size_t horizon);

/**
 * Bounded search for a monic multiple q(x) * charpoly(x) of degree h whose
 * non-leading coefficients are all <= 0 (the shape of a recurrence with
 * nonnegative coefficients). Feasibility at each h is decided exactly over
 * the rationals. Infeasibility up to max_degree is a bounded certificate,
 * not a proof for all degrees.
 */
struct NonnegativeSearchResult {
    bool feasible = false;
    std::size_t degree = 0;       // witness degree h, or max_degree searched
    std::vector<Rat> multiplier;  // q ascending, monic (empty if infeasible)
};

NonnegativeSearchResult nonnegative_multiple_search(const IntPoly& charpoly,
                                                    std::size_t max_degree);

}  // namespace fdecomp

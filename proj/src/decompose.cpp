#include "fdecomp/decompose.hpp"

#include <stdexcept>

#include "fdecomp/errors.hpp"

namespace fdecomp {

Decomposition decompose(FSequence& seq, const BigInt& x) {
    if (x < 0) throw std::invalid_argument("decompose requires x >= 0");
    Decomposition d;
    d.value = x;
    BigInt rest = x;
    while (rest > 0) {
        const std::size_t m = seq.index_of_floor(rest);
        d.indices.push_back(m);
        rest -= seq.term(m);
    }
    return d;
}

bool is_legal(const FRule& rule, const std::vector<std::size_t>& indices) {
    for (std::size_t i = 0; i + 1 < indices.size(); ++i) {
        if (indices[i + 1] >= indices[i]) {
            throw std::invalid_argument("is_legal requires strictly decreasing indices");
        }
    }
    for (std::size_t i = 0; i + 1 < indices.size(); ++i) {
        const std::size_t n = indices[i];
        // next index must satisfy next <= n - f(n) - 1
        if (indices[i + 1] + rule(n) + 1 > n) return false;
    }
    return true;
}

BigInt recompose(FSequence& seq, const std::vector<std::size_t>& indices) {
    BigInt sum = 0;
    for (std::size_t n : indices) sum += seq.term(n);
    return sum;
}

namespace {

struct OracleSearch {
    FSequence& seq;
    const FRule& rule;
    std::vector<BigInt> max_sum;  // largest legal sum over indices {0..j}
    std::vector<std::vector<std::size_t>> found;
    std::vector<std::size_t> current;
    std::size_t nodes = 0;
    std::size_t budget;

    // jmax < 0 means no further indices may be chosen.
    void run(const BigInt& rest, long long jmax) {
        if (++nodes > budget) {
            throw budget_exceeded("decomposition oracle exceeded its node budget");
        }
        if (rest == 0) {
            found.push_back(current);
            return;
        }
        for (long long j = jmax; j >= 0; --j) {
            const std::size_t ju = static_cast<std::size_t>(j);
            if (seq.term(ju) > rest) continue;
            if (rest > max_sum[ju]) break;  // no legal subset of {0..j} reaches rest
            current.push_back(ju);
            run(rest - seq.term(ju), j - static_cast<long long>(rule(ju)) - 1);
            current.pop_back();
        }
    }
};

}  // namespace

std::vector<std::vector<std::size_t>> all_legal_decompositions(FSequence& seq,
                                                               const BigInt& x,
                                                               std::size_t max_index,
                                                               std::size_t budget) {
    if (x < 0) throw std::invalid_argument("all_legal_decompositions requires x >= 0");
    const FRule& rule = seq.rule();
    OracleSearch search{seq, rule, {}, {}, {}, 0, budget};
    search.max_sum.resize(max_index + 1);
    for (std::size_t j = 0; j <= max_index; ++j) {
        const std::size_t window = rule(j) + 1;
        BigInt with_j = seq.term(j);
        if (window <= j) with_j += search.max_sum[j - window];
        search.max_sum[j] = j > 0 ? std::max(search.max_sum[j - 1], with_j) : with_j;
    }
    search.run(x, static_cast<long long>(max_index));
    return search.found;
}

}  // namespace fdecomp

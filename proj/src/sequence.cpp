#include "fdecomp/sequence.hpp"

#include <algorithm>
#include <stdexcept>

namespace fdecomp {

const BigInt& FSequence::term(std::size_t n) {
    materialize(n);
    return terms_[n];
}

void FSequence::materialize(std::size_t n) {
    if (terms_.empty()) terms_.emplace_back(1);
    while (terms_.size() <= n) {
        const std::size_t m = terms_.size();  // computing a_m
        const std::size_t fv = rule_(m - 1);
        // index m-1-f(m-1); negative indices contribute the constant 1
        if (fv >= m) {
            terms_.push_back(terms_[m - 1] + 1);
        } else {
            terms_.push_back(terms_[m - 1] + terms_[m - 1 - fv]);
        }
    }
}

std::size_t FSequence::index_of_floor(const BigInt& x) {
    if (x < 1) throw std::invalid_argument("index_of_floor requires x >= 1");
    materialize(1);
    while (terms_.back() <= x) materialize(terms_.size());
    auto it = std::upper_bound(terms_.begin(), terms_.end(), x);
    return static_cast<std::size_t>(it - terms_.begin()) - 1;
}

}  // namespace fdecomp

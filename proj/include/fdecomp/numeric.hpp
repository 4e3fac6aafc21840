#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace fdecomp {

// Arbitrary-precision integer and exact rational. GMP canonicalizes rationals
// produced by arithmetic (reduced, positive denominator); rationals assembled
// from raw numerator/denominator pairs must go through make_rat.
using BigInt = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const BigInt& num, const BigInt& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

inline std::string to_decimal(const BigInt& z) { return z.get_str(); }

// "p/q" in lowest terms, or plain "p" when the denominator is 1.
inline std::string to_fraction_string(const Rat& q) { return q.get_str(); }

}  // namespace fdecomp

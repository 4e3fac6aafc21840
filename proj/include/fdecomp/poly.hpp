#pragma once

#include <string>
#include <vector>

#include "fdecomp/numeric.hpp"

namespace fdecomp {

/**
 * Integer polynomial with coefficients stored ascending by degree:
 * coefficients[i] multiplies x^i. The zero polynomial is the empty list, so a
 * non-empty coefficient vector always has a nonzero leading entry.
 */
struct IntPoly {
    std::vector<BigInt> coefficients;

    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);

    bool is_zero() const { return coefficients.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    long degree() const { return static_cast<long>(coefficients.size()) - 1; }
    const BigInt& leading() const { return coefficients.back(); }
    bool is_monic() const { return !is_zero() && leading() == 1; }

    BigInt eval(const BigInt& t) const;

    bool operator==(const IntPoly&) const = default;
    std::string to_string() const;  // e.g. "x^6 - 4*x^3 + 1"
};

IntPoly poly_mul(const IntPoly& p, const IntPoly& q);

// p(x^b): coefficient of x^{b*i} is coefficients[i], everything else zero.
IntPoly poly_inflate(const IntPoly& p, std::size_t b);

// True when divisor divides dividend exactly over the rationals.
bool poly_divides(const IntPoly& divisor, const IntPoly& dividend);

}  // namespace fdecomp

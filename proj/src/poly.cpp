#include "fdecomp/poly.hpp"

#include <sstream>

namespace fdecomp {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coefficients(std::move(coeffs)) {
    while (!coefficients.empty() && coefficients.back() == 0) {
        coefficients.pop_back();
    }
}

BigInt IntPoly::eval(const BigInt& t) const {
    BigInt acc = 0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
        acc = acc * t + *it;
    }
    return acc;
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coefficients.size(); i-- > 0;) {
        const BigInt& c = coefficients[i];
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || i == 0) os << mag.get_str();
        if (i > 0) {
            if (mag != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

IntPoly poly_mul(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero()) return IntPoly{};
    std::vector<BigInt> r(p.coefficients.size() + q.coefficients.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < p.coefficients.size(); ++i) {
        if (p.coefficients[i] == 0) continue;
        for (std::size_t j = 0; j < q.coefficients.size(); ++j) {
            r[i + j] += p.coefficients[i] * q.coefficients[j];
        }
    }
    return IntPoly(std::move(r));
}

IntPoly poly_inflate(const IntPoly& p, std::size_t b) {
    if (p.is_zero()) return IntPoly{};
    std::vector<BigInt> r((p.coefficients.size() - 1) * b + 1, BigInt(0));
    for (std::size_t i = 0; i < p.coefficients.size(); ++i) {
        r[i * b] = p.coefficients[i];
    }
    return IntPoly(std::move(r));
}

bool poly_divides(const IntPoly& divisor, const IntPoly& dividend) {
    if (divisor.is_zero()) return dividend.is_zero();
    if (dividend.is_zero()) return true;
    if (dividend.degree() < divisor.degree()) return false;
    std::vector<Rat> rem(dividend.coefficients.size());
    for (std::size_t i = 0; i < rem.size(); ++i) rem[i] = Rat(dividend.coefficients[i]);
    const Rat lead(divisor.leading());
    while (rem.size() >= divisor.coefficients.size()) {
        Rat factor = rem.back() / lead;
        std::size_t shift = rem.size() - divisor.coefficients.size();
        for (std::size_t i = 0; i < divisor.coefficients.size(); ++i) {
            rem[shift + i] -= factor * Rat(divisor.coefficients[i]);
        }
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        if (rem.empty()) return true;
    }
    return rem.empty();
}

}  // namespace fdecomp

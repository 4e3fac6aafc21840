#include "fdecomp/recurrence.hpp"

#include <algorithm>
#include <stdexcept>

#include "fdecomp/errors.hpp"
#include "fdecomp/feasibility.hpp"

namespace fdecomp {

IntPoly characteristic_polynomial(const LinearRecurrence& rec) {
    const std::size_t k = rec.order();
    std::vector<BigInt> p(k + 1, BigInt(0));
    p[k] = 1;
    for (std::size_t i = 1; i <= k; ++i) p[k - i] = -rec.coefficients[i - 1];
    return IntPoly(std::move(p));
}

std::size_t synthesis_stride(const FRule& rule) {
    if (!rule.is_periodic()) {
        throw unsupported_rule("recurrence synthesis requires a constant or periodic rule, got '" +
                               rule.spec_string() + "'");
    }
    const std::size_t p = rule.period();
    const std::size_t need = rule.max_value() + 1;
    std::size_t b = p;
    while (b < need) b += p;
    return b;
}

namespace {

// v_j encodes a_{n-j} - a_{n-j-1} - a_{n-j-1-f(n-j-1)} = 0 for n ≡ r (mod b):
// +1 at j, -1 at j+1, -1 at j+1+f (the last two coincide when f = 0).
std::vector<BigInt> build_v(const FRule& rule, std::size_t b, std::size_t r, std::size_t j,
                            std::size_t dim) {
    const long long rep = static_cast<long long>(r) - static_cast<long long>(j) - 1;
    const long long bl = static_cast<long long>(b);
    const std::size_t fv = rule(static_cast<std::size_t>(((rep % bl) + bl) % bl));
    std::vector<BigInt> v(dim, BigInt(0));
    v[j] += 1;
    v[j + 1] -= 1;
    v[j + 1 + fv] -= 1;
    return v;
}

bool all_zero(const std::vector<BigInt>& v) {
    return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
}

void normalize_combined(std::vector<BigInt>& v) {
    BigInt g = 0;
    for (const BigInt& x : v) g = gcd(g, x);
    if (g == 0) return;
    int sign = 0;
    for (const BigInt& x : v) {
        if (x != 0) {
            sign = sgn(x);
            break;
        }
    }
    if (sign < 0) g = -g;
    for (BigInt& x : v) x /= g;
}

}  // namespace

ResidueElimination eliminate_residue(const FRule& rule, std::size_t b, std::size_t residue) {
    const std::size_t dim = b * b + 1;
    ResidueElimination out;
    out.residue = residue;

    std::vector<BigInt> w = build_v(rule, b, residue, 0, dim);
    out.w.push_back(w);
    out.u.emplace_back(w.begin() + 1, w.begin() + b);

    bool clean = all_zero(out.u.back());
    if (!clean) {
        for (std::size_t i = 1; i < b && !clean; ++i) {
            // cancel coordinates strictly between (i-1)b and ib, left to right
            for (std::size_t j = (i - 1) * b + 1; j < i * b; ++j) {
                if (w[j] == 0) continue;
                const BigInt factor = w[j];
                const std::vector<BigInt> vj = build_v(rule, b, residue, j, dim);
                for (std::size_t t = 0; t < dim; ++t) w[t] -= factor * vj[t];
            }
            out.w.push_back(w);
            out.u.emplace_back(w.begin() + i * b + 1, w.begin() + (i + 1) * b);
            clean = all_zero(out.u.back());
        }
    }

    if (clean) {
        out.combined = out.w.back();
    } else {
        // b truncations of dimension b-1 must be dependent
        std::vector<RatVector> u_rat;
        for (const auto& u : out.u) {
            RatVector v(u.size());
            for (std::size_t i = 0; i < u.size(); ++i) v[i] = Rat(u[i]);
            u_rat.push_back(std::move(v));
        }
        auto lambda = nullspace_combination(u_rat);
        if (!lambda) {
            throw synthesis_error("elimination failed: truncations reported independent");
        }
        out.lambda = lambda;
        out.combined.assign(dim, BigInt(0));
        for (std::size_t i = 0; i < out.w.size(); ++i) {
            const Rat& l = (*lambda)[i];
            if (l == 0) continue;
            const BigInt li(l.get_num());  // lambda is normalized to integers
            const std::size_t shift = b * (b - 1 - i);
            for (std::size_t t = 0; t + shift < dim; ++t) {
                out.combined[t + shift] += li * out.w[i][t];
            }
        }
    }
    normalize_combined(out.combined);

    // read off the stride recurrence: support must sit on multiples of b
    long j0 = -1, j1 = -1;
    for (std::size_t t = 0; t < dim; ++t) {
        if (out.combined[t] == 0) continue;
        if (t % b != 0) {
            throw synthesis_error("elimination left a bad coordinate at index " + std::to_string(t));
        }
        if (j0 < 0) j0 = static_cast<long>(t / b);
        j1 = static_cast<long>(t / b);
    }
    if (j0 < 0) throw synthesis_error("elimination produced the zero vector");
    std::vector<BigInt> charpoly(static_cast<std::size_t>(j1 - j0) + 1, BigInt(0));
    for (long j = j0; j <= j1; ++j) {
        charpoly[static_cast<std::size_t>(j1 - j)] = out.combined[static_cast<std::size_t>(j) * b];
    }
    out.stride_charpoly = IntPoly(std::move(charpoly));
    return out;
}

LinearRecurrence synthesize_recurrence(const FRule& rule) {
    const std::size_t b = synthesis_stride(rule);

    IntPoly product(std::vector<BigInt>{BigInt(1)});
    for (std::size_t r = 0; r < b; ++r) {
        product = poly_mul(product, eliminate_residue(rule, b, r).stride_charpoly);
    }
    IntPoly charpoly = poly_inflate(product, b);

    LinearRecurrence rec;
    if (charpoly.is_monic()) {
        const std::size_t k = static_cast<std::size_t>(charpoly.degree());
        rec.coefficients.resize(k);
        for (std::size_t i = 1; i <= k; ++i) rec.coefficients[i - 1] = -charpoly.coefficients[k - i];
        rec.valid_from = b * b + k;
    } else {
        // Non-monic product: fall back to the minimal integer recurrence,
        // whose characteristic polynomial divides this one.
        const std::size_t k = static_cast<std::size_t>(charpoly.degree());
        FSequence seq(rule);
        std::vector<BigInt> terms;
        const std::size_t need = 3 * k + 4 + b * b;
        terms.reserve(need);
        for (std::size_t n = 0; n < need; ++n) terms.push_back(seq.term(n));
        auto minimal = minimal_recurrence(terms, k);
        if (!minimal) {
            throw synthesis_error("non-monic characteristic polynomial and no integer recurrence found");
        }
        rec = *minimal;
    }

    FSequence seq(rule);
    if (!verify_recurrence(seq, rec, 300)) {
        throw synthesis_error("synthesized recurrence failed verification for rule '" +
                              rule.spec_string() + "'");
    }
    return rec;
}

namespace {

bool holds_at(const std::vector<BigInt>& terms, const std::vector<BigInt>& coeffs, std::size_t n) {
    BigInt sum = 0;
    for (std::size_t i = 1; i <= coeffs.size(); ++i) sum += coeffs[i - 1] * terms[n - i];
    return sum == terms[n];
}

}  // namespace

std::optional<LinearRecurrence> minimal_recurrence(const std::vector<BigInt>& terms,
                                                   std::size_t max_order) {
    const std::size_t n_terms = terms.size();
    if (max_order == 0) throw std::invalid_argument("minimal_recurrence: max_order must be positive");
    if (n_terms < 3 * max_order + 4) {
        throw std::invalid_argument("minimal_recurrence: need at least 3*max_order+4 terms");
    }
    for (std::size_t k = 1; k <= max_order; ++k) {
        // solve on the k+2 most recent rows, past any initial transient
        std::vector<RatVector> rows;
        RatVector rhs;
        for (std::size_t n = n_terms - k - 2; n < n_terms; ++n) {
            RatVector row(k);
            for (std::size_t i = 1; i <= k; ++i) row[i - 1] = Rat(terms[n - i]);
            rows.push_back(std::move(row));
            rhs.push_back(Rat(terms[n]));
        }
        auto sol = solve_linear_system(rows, rhs);
        if (!sol) continue;
        std::vector<BigInt> coeffs(k);
        bool integral = true;
        for (std::size_t i = 0; i < k; ++i) {
            if (!is_integral((*sol)[i])) {
                integral = false;
                break;
            }
            coeffs[i] = BigInt((*sol)[i].get_num());
        }
        if (!integral || coeffs[k - 1] == 0) continue;
        // pseudo-recurrence guard: must hold on every term beyond the window
        bool ok = true;
        for (std::size_t n = 2 * k + 2; n < n_terms && ok; ++n) ok = holds_at(terms, coeffs, n);
        if (!ok) continue;
        std::size_t valid_from = std::min(2 * k + 2, n_terms);
        while (valid_from > k && holds_at(terms, coeffs, valid_from - 1)) --valid_from;
        return LinearRecurrence{std::move(coeffs), valid_from};
    }
    return std::nullopt;
}

bool verify_recurrence(FSequence& seq, const LinearRecurrence& rec, std::size_t horizon) {
    const std::size_t k = rec.order();
    if (k == 0 || rec.valid_from < k) {
        throw std::invalid_argument("verify_recurrence: valid_from must be at least the order");
    }
    seq.materialize(rec.valid_from + horizon);
    for (std::size_t n = rec.valid_from; n <= rec.valid_from + horizon; ++n) {
        BigInt sum = 0;
        for (std::size_t i = 1; i <= k; ++i) sum += rec.coefficients[i - 1] * seq.term(n - i);
        if (sum != seq.term(n)) return false;
    }
    return true;
}

NonnegativeSearchResult nonnegative_multiple_search(const IntPoly& charpoly,
                                                    std::size_t max_degree) {
    if (charpoly.is_zero() || charpoly.degree() < 1) {
        throw std::invalid_argument("nonnegative_multiple_search: need a polynomial of degree >= 1");
    }
    const std::size_t d = static_cast<std::size_t>(charpoly.degree());
    if (max_degree < d) {
        throw std::invalid_argument("nonnegative_multiple_search: max_degree below polynomial degree");
    }
    // normalize monic over the rationals
    std::vector<Rat> c(d + 1);
    const Rat lead(charpoly.leading());
    for (std::size_t i = 0; i <= d; ++i) c[i] = Rat(charpoly.coefficients[i]) / lead;

    for (std::size_t h = d; h <= max_degree; ++h) {
        const std::size_t m = h - d;  // q = q_0 + ... + q_{m-1} x^{m-1} + x^m
        std::vector<LinearConstraint> constraints;
        constraints.reserve(h);
        for (std::size_t t = 0; t < h; ++t) {
            LinearConstraint con;
            con.coefficients.assign(m, Rat(0));
            con.constant = 0;
            for (std::size_t j = 0; j <= m && j <= t; ++j) {
                const std::size_t i = t - j;
                if (i > d) continue;
                if (j < m) {
                    con.coefficients[j] += c[i];
                } else {
                    con.constant += c[i];  // contribution of the fixed q_m = 1
                }
            }
            constraints.push_back(std::move(con));
        }
        auto point = feasible_point(constraints, m);
        if (point) {
            NonnegativeSearchResult res;
            res.feasible = true;
            res.degree = h;
            res.multiplier = std::move(*point);
            res.multiplier.push_back(Rat(1));
            return res;
        }
    }
    return NonnegativeSearchResult{false, max_degree, {}};
}

}  // namespace fdecomp

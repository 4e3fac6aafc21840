#include "fdecomp/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace fdecomp {

void normalize_primitive(RatVector& v) {
    BigInt den_lcm = 1;
    for (const Rat& q : v) {
        den_lcm = lcm(den_lcm, q.get_den());
    }
    BigInt g = 0;
    std::vector<BigInt> ints(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        ints[i] = BigInt(v[i].get_num() * (den_lcm / v[i].get_den()));
        g = gcd(g, ints[i]);
    }
    if (g == 0) return;
    int sign = 0;
    for (const BigInt& z : ints) {
        if (z != 0) {
            sign = sgn(z);
            break;
        }
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = Rat(ints[i] / (sign < 0 ? -g : g));
    }
}

namespace {

struct Echelon {
    std::vector<RatVector> m;            // reduced rows
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
};

// Reduced row echelon form with first-nonzero pivot selection.
Echelon rref(std::vector<RatVector> m) {
    Echelon e;
    const std::size_t nrows = m.size();
    const std::size_t ncols = nrows == 0 ? 0 : m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
        std::size_t pr = row;
        while (pr < nrows && m[pr][col] == 0) ++pr;
        if (pr == nrows) continue;
        std::swap(m[row], m[pr]);
        const Rat pivot = m[row][col];
        for (auto& x : m[row]) x /= pivot;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            const Rat f = m[i][col];
            for (std::size_t j = col; j < ncols; ++j) m[i][j] -= f * m[row][j];
        }
        e.pivots.emplace_back(row, col);
        ++row;
    }
    e.m = std::move(m);
    return e;
}

}  // namespace

std::optional<RatVector> nullspace_combination(const std::vector<RatVector>& vectors) {
    const std::size_t m = vectors.size();
    if (m == 0) return std::nullopt;
    const std::size_t d = vectors[0].size();
    for (const auto& v : vectors) {
        if (v.size() != d) throw std::invalid_argument("nullspace_combination: dimension mismatch");
    }
    // Columns are the input vectors; a nullspace element of this matrix is a
    // vanishing combination.
    std::vector<RatVector> a(d, RatVector(m));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < m; ++j) a[i][j] = vectors[j][i];
    }
    Echelon e = rref(std::move(a));
    std::vector<bool> is_pivot(m, false);
    for (auto [r, c] : e.pivots) is_pivot[c] = true;
    std::size_t free_col = m;
    for (std::size_t c = 0; c < m; ++c) {
        if (!is_pivot[c]) {
            free_col = c;
            break;
        }
    }
    if (free_col == m) return std::nullopt;  // columns independent (m <= d)
    RatVector lambda(m, Rat(0));
    lambda[free_col] = 1;
    for (auto [r, c] : e.pivots) lambda[c] = -e.m[r][free_col];
    normalize_primitive(lambda);
    return lambda;
}

std::optional<RatVector> solve_linear_system(const std::vector<RatVector>& rows,
                                             const RatVector& rhs) {
    const std::size_t nrows = rows.size();
    if (rhs.size() != nrows) throw std::invalid_argument("solve_linear_system: shape mismatch");
    const std::size_t nvars = nrows == 0 ? 0 : rows[0].size();
    std::vector<RatVector> aug(nrows, RatVector(nvars + 1));
    for (std::size_t i = 0; i < nrows; ++i) {
        if (rows[i].size() != nvars) throw std::invalid_argument("solve_linear_system: ragged rows");
        for (std::size_t j = 0; j < nvars; ++j) aug[i][j] = rows[i][j];
        aug[i][nvars] = rhs[i];
    }
    Echelon e = rref(std::move(aug));
    for (auto [r, c] : e.pivots) {
        if (c == nvars) return std::nullopt;  // pivot in the rhs column: inconsistent
    }
    RatVector x(nvars, Rat(0));
    for (auto [r, c] : e.pivots) x[c] = e.m[r][nvars];
    return x;
}

}  // namespace fdecomp

#include "fdecomp/feasibility.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fdecomp {

namespace {

// Canonical form for deduplication: scale so the first nonzero coefficient
// has absolute value 1 (scaling by a positive factor preserves the
// constraint).
std::vector<Rat> canonical_key(const LinearConstraint& c) {
    std::vector<Rat> key = c.coefficients;
    key.push_back(c.constant);
    for (const Rat& q : key) {
        if (q != 0) {
            Rat scale = abs(q);
            for (Rat& x : key) x /= scale;
            break;
        }
    }
    return key;
}

}  // namespace

std::optional<RatVector> fourier_motzkin_feasible(std::vector<LinearConstraint> constraints,
                                                  std::size_t nvars,
                                                  std::size_t max_constraints) {
    struct Stage {
        std::size_t var;
        std::vector<LinearConstraint> pos;  // upper bounds on var
        std::vector<LinearConstraint> neg;  // lower bounds on var
    };
    std::vector<Stage> stages;

    for (std::size_t v = 0; v < nvars; ++v) {
        Stage stage{v, {}, {}};
        std::vector<LinearConstraint> rest;
        for (auto& c : constraints) {
            if (c.coefficients[v] > 0) {
                stage.pos.push_back(std::move(c));
            } else if (c.coefficients[v] < 0) {
                stage.neg.push_back(std::move(c));
            } else {
                rest.push_back(std::move(c));
            }
        }
        std::set<std::vector<Rat>> seen;
        std::vector<LinearConstraint> next;
        auto add = [&](LinearConstraint&& c) {
            bool all_zero = std::all_of(c.coefficients.begin(), c.coefficients.end(),
                                        [](const Rat& q) { return q == 0; });
            if (all_zero && c.constant <= 0) return true;  // trivially satisfied
            if (all_zero) return false;                    // 0 <= negative: infeasible
            if (seen.insert(canonical_key(c)).second) next.push_back(std::move(c));
            return true;
        };
        bool ok = true;
        for (auto& c : rest) {
            if (!add(std::move(c))) ok = false;
        }
        // combine each upper bound with each lower bound
        for (const auto& p : stage.pos) {
            for (const auto& n : stage.neg) {
                const Rat a = p.coefficients[v];   // > 0
                const Rat b = -n.coefficients[v];  // > 0
                LinearConstraint c;
                c.coefficients.resize(nvars);
                for (std::size_t j = 0; j < nvars; ++j) {
                    c.coefficients[j] = b * p.coefficients[j] + a * n.coefficients[j];
                }
                c.coefficients[v] = 0;
                c.constant = b * p.constant + a * n.constant;
                if (!add(std::move(c))) ok = false;
            }
            if (next.size() > max_constraints) {
                throw std::length_error("Fourier-Motzkin constraint blowup");
            }
        }
        stages.push_back(std::move(stage));
        if (!ok) return std::nullopt;
        constraints = std::move(next);
    }
    for (const auto& c : constraints) {
        if (c.constant > 0) return std::nullopt;
    }
    // back-substitute a witness, latest eliminated variable first
    RatVector x(nvars, Rat(0));
    for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
        const std::size_t v = it->var;
        bool has_lo = false, has_hi = false;
        Rat lo, hi;
        auto partial = [&](const LinearConstraint& c) {
            Rat s = c.constant;
            for (std::size_t j = 0; j < nvars; ++j) {
                if (j != v && c.coefficients[j] != 0) s += c.coefficients[j] * x[j];
            }
            return s;
        };
        for (const auto& c : it->neg) {
            Rat bound = partial(c) / -c.coefficients[v];
            if (!has_lo || bound > lo) lo = bound;
            has_lo = true;
        }
        for (const auto& c : it->pos) {
            Rat bound = -partial(c) / c.coefficients[v];
            if (!has_hi || bound < hi) hi = bound;
            has_hi = true;
        }
        if (has_lo && has_hi) {
            x[v] = (lo + hi) / 2;
        } else if (has_lo) {
            x[v] = lo;
        } else if (has_hi) {
            x[v] = hi;
        }
    }
    return x;
}

std::optional<RatVector> simplex_feasible(const std::vector<LinearConstraint>& constraints,
                                          std::size_t nvars) {
    const std::size_t m = constraints.size();
    if (m == 0) return RatVector(nvars, Rat(0));
    // Columns: x+ (nvars), x- (nvars), slack (m), artificial (m), then rhs.
    const std::size_t n_cols = 2 * nvars + 2 * m;
    std::vector<RatVector> t(m, RatVector(n_cols + 1, Rat(0)));
    std::vector<std::size_t> basis(m);
    std::vector<bool> artificial_col(n_cols, false);
    std::size_t n_artificial = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = constraints[i];
        // coefficients . x + slack = -constant, slack >= 0
        Rat rhs = -c.constant;
        int s = rhs < 0 ? -1 : 1;
        for (std::size_t j = 0; j < nvars; ++j) {
            t[i][j] = s * c.coefficients[j];
            t[i][nvars + j] = -s * c.coefficients[j];
        }
        t[i][2 * nvars + i] = s;  // slack
        t[i][n_cols] = s * rhs;
        if (s == 1) {
            basis[i] = 2 * nvars + i;  // slack is basic
        } else {
            const std::size_t a_col = 2 * nvars + m + n_artificial++;
            t[i][a_col] = 1;
            artificial_col[a_col] = true;
            basis[i] = a_col;
        }
    }

    auto reduced_costs = [&]() {
        RatVector r(n_cols, Rat(0));
        for (std::size_t j = 0; j < n_cols; ++j) {
            Rat rc = artificial_col[j] ? Rat(1) : Rat(0);
            for (std::size_t i = 0; i < m; ++i) {
                if (artificial_col[basis[i]]) rc -= t[i][j];
            }
            r[j] = rc;
        }
        return r;
    };

    while (true) {
        RatVector r = reduced_costs();
        std::size_t enter = n_cols;
        for (std::size_t j = 0; j < n_cols; ++j) {  // Bland: lowest index
            if (r[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == n_cols) break;  // optimal
        std::size_t leave = m;
        Rat best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rat ratio = t[i][n_cols] / t[i][enter];
            if (leave == m || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) break;  // unbounded; cannot occur in phase 1
        const Rat pivot = t[leave][enter];
        for (auto& x : t[leave]) x /= pivot;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const Rat f = t[i][enter];
            for (std::size_t j = 0; j <= n_cols; ++j) t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    Rat objective = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (artificial_col[basis[i]]) objective += t[i][n_cols];
    }
    if (objective != 0) return std::nullopt;
    RatVector x(nvars, Rat(0));
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < nvars) {
            x[basis[i]] += t[i][n_cols];
        } else if (basis[i] < 2 * nvars) {
            x[basis[i] - nvars] -= t[i][n_cols];
        }
    }
    return x;
}

std::optional<RatVector> feasible_point(const std::vector<LinearConstraint>& constraints,
                                        std::size_t nvars) {
    if (nvars <= 40) {
        try {
            return fourier_motzkin_feasible(constraints, nvars);
        } catch (const std::length_error&) {
            // fall through to simplex
        }
    }
    return simplex_feasible(constraints, nvars);
}

}  // namespace fdecomp

#include "fdecomp/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace fdecomp {

CountTable CountTable::bbin(std::size_t b, std::size_t n_max) {
    if (b < 3) throw std::invalid_argument("count table requires bin width b >= 3");
    std::vector<std::vector<BigInt>> rows;
    rows.reserve(n_max + 1);
    rows.push_back({BigInt(1)});
    for (std::size_t n = 1; n <= n_max; ++n) {
        std::vector<BigInt> row(n + 1, BigInt(0));
        for (std::size_t k = 0; k <= n; ++k) {
            // p_{n,k} = p_{n-1,k} + b p_{n-1,k-1} - p_{n-2,k-2}
            if (k <= n - 1) row[k] += rows[n - 1][k];
            if (k >= 1 && k - 1 <= n - 1) row[k] += BigInt(b) * rows[n - 1][k - 1];
            if (n >= 2 && k >= 2 && k - 2 <= n - 2) row[k] -= rows[n - 2][k - 2];
        }
        rows.push_back(std::move(row));
    }
    return CountTable(b, std::move(rows));
}

CountTable CountTable::factorial(std::size_t n_max) {
    std::vector<std::vector<BigInt>> rows;
    rows.reserve(n_max + 1);
    std::vector<BigInt> poly{BigInt(1)};  // prod_{i=1}^{n} (1 + i y)
    rows.push_back(poly);
    for (std::size_t i = 1; i <= n_max; ++i) {
        std::vector<BigInt> next(poly.size() + 1, BigInt(0));
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k] += poly[k];
            next[k + 1] += BigInt(i) * poly[k];
        }
        poly = std::move(next);
        rows.push_back(poly);
    }
    return CountTable(0, std::move(rows));
}

BigInt CountTable::total(std::size_t n) const {
    BigInt sum = 0;
    for (const BigInt& v : row(n)) sum += v;
    return sum;
}

MomentSummary moments(const CountTable& table, std::size_t n) {
    const auto& row = table.row(n);
    BigInt total = 0, first = 0, second = 0;
    for (std::size_t k = 0; k < row.size(); ++k) {
        total += row[k];
        first += BigInt(k) * row[k];
        second += BigInt(k) * BigInt(k) * row[k];
    }
    MomentSummary m;
    m.n = n;
    m.mean = make_rat(first, total);
    m.variance = make_rat(second, total) - m.mean * m.mean;
    return m;
}

BigFloat gf_closed_form_gn(std::size_t b, std::size_t n, const Rat& y) {
    if (b < 3) throw std::invalid_argument("closed-form g_n requires b >= 3");
    if (y <= 0) throw std::invalid_argument("closed-form g_n requires y > 0");
    const BigFloat yy(y.get_mpq_t());
    const BigFloat bf(static_cast<unsigned long>(b));
    const BigFloat disc = (bf * bf - 4) * yy * yy + 2 * bf * yy + 1;
    const BigFloat root = sqrt(disc);
    const BigFloat base = bf * yy + 1;
    const unsigned power = static_cast<unsigned>(n) + 1;
    const BigFloat numer = pow(base + root, power) - pow(base - root, power);
    return numer / (pow(BigFloat(2), power) * root);
}

MomentSlopes closed_form_moment_slopes(std::size_t b) {
    if (b < 3) throw std::invalid_argument("moment slopes require b >= 3");
    const double bd = static_cast<double>(b);
    const double s = std::sqrt(bd * bd + 2 * bd - 3);
    MomentSlopes slopes;
    slopes.mean_slope = (bd * bd + bd - 4 + bd * s) / (s * (1 + bd + s));
    slopes.variance_slope = (bd * bd + bd - 4) / std::pow(bd * bd + 2 * bd - 3, 1.5);
    return slopes;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

DistributionReport standardized_distribution(const CountTable& table, std::size_t n) {
    const MomentSummary m = moments(table, n);
    if (m.variance == 0) {
        throw std::domain_error("standardized_distribution: degenerate row (sigma = 0)");
    }
    const double mu = m.mean.get_d();
    const double sigma = std::sqrt(m.variance.get_d());
    const auto& row = table.row(n);
    const BigInt total = table.total(n);

    DistributionReport report;
    report.n = n;
    report.points.reserve(row.size());
    report.probabilities.reserve(row.size());
    double ks = 0.0;
    BigInt cum = 0;
    for (std::size_t k = 0; k < row.size(); ++k) {
        const double before = make_rat(cum, total).get_d();
        cum += row[k];
        const double after = make_rat(cum, total).get_d();
        const double z = (static_cast<double>(k) - mu) / sigma;
        const double target = normal_cdf(z);
        ks = std::max({ks, std::fabs(before - target), std::fabs(after - target)});
        report.points.push_back(z);
        report.probabilities.push_back(after - before);
    }
    report.ks_statistic = ks;
    return report;
}

MomentSummary factorial_digit_moments(std::size_t n) {
    // digit position i carries a value in {0..i-1}; positions 1..n+1 cover
    // integers in [0, (n+1)!)
    MomentSummary m;
    m.n = n;
    m.mean = 0;
    m.variance = 0;
    for (std::size_t i = 1; i <= n + 1; ++i) {
        m.mean += make_rat(BigInt(i - 1), BigInt(i));
        m.variance += make_rat(BigInt(i - 1), BigInt(i) * BigInt(i));
    }
    return m;
}

BigInt stirling_first_kind(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::vector<BigInt> row{BigInt(1)};  // c(0, .)
    for (std::size_t m = 0; m < n; ++m) {
        // c(m+1, j) = m c(m, j) + c(m, j-1)
        std::vector<BigInt> next(m + 2, BigInt(0));
        for (std::size_t j = 0; j < row.size(); ++j) {
            next[j] += BigInt(m) * row[j];
            next[j + 1] += row[j];
        }
        row = std::move(next);
    }
    return row[k];
}

}  // namespace fdecomp

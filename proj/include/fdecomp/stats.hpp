#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "fdecomp/numeric.hpp"

namespace fdecomp {

// 40 decimal digits (~133-bit significand) for closed-form evaluation.
using BigFloat = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<40>>;

/**
 * Exact table of p_{n,k}: the number of integers whose decomposition uses
 * exactly k summands drawn from the first n bins. Row n covers k = 0..n.
 *
 * b-bin mode fills the two-variable recurrence
 *     p_{n,k} = p_{n-1,k} + b p_{n-1,k-1} - p_{n-2,k-2},   p_{0,0} = 1,
 * so that row n sums to a_{bn}. Factorial mode keeps the coefficients of
 * prod_{i=1}^{n} (1 + i y), so row n sums to (n+1)!.
 *
 * Construction is sequential (row n needs rows n-1, n-2); reads after
 * construction are safe concurrently.
 */
class CountTable {
public:
    static CountTable bbin(std::size_t b, std::size_t n_max);  // requires b >= 3
    static CountTable factorial(std::size_t n_max);

    bool is_factorial() const { return b_ == 0; }
    std::size_t bin_width() const { return b_; }  // 0 in factorial mode
    std::size_t n_max() const { return rows_.size() - 1; }
    const std::vector<BigInt>& row(std::size_t n) const { return rows_.at(n); }
    BigInt total(std::size_t n) const;

private:
    CountTable(std::size_t b, std::vector<std::vector<BigInt>> rows)
        : b_(b), rows_(std::move(rows)) {}

    std::size_t b_;
    std::vector<std::vector<BigInt>> rows_;
};

struct MomentSummary {
    std::size_t n = 0;
    Rat mean;
    Rat variance;
};

// Exact mean and variance of the summand count on row n.
MomentSummary moments(const CountTable& table, std::size_t n);

// g_n(y) = ((by+1+sqrt(D))^{n+1} - (by+1-sqrt(D))^{n+1}) / (2^{n+1} sqrt(D))
// with D = (b^2-4)y^2 + 2by + 1, evaluated in high precision. Requires b >= 3
// and y > 0.
BigFloat gf_closed_form_gn(std::size_t b, std::size_t n, const Rat& y);

struct MomentSlopes {
    double mean_slope = 0;
    double variance_slope = 0;
};

// Linear-growth slopes of mean and variance for the b-bin system.
MomentSlopes closed_form_moment_slopes(std::size_t b);

/**
 * Row n standardized by its own exact mean and standard deviation, plus the
 * Kolmogorov-Smirnov sup-distance to the standard normal CDF (evaluated at
 * every jump from both sides). Throws std::domain_error when the row is
 * degenerate (sigma = 0, i.e. n = 0).
 */
struct DistributionReport {
    std::size_t n = 0;
    std::vector<double> points;         // (k - mu_n) / sigma_n
    std::vector<double> probabilities;  // p_{n,k} / total
    double ks_statistic = 0;
};

DistributionReport standardized_distribution(const CountTable& table, std::size_t n);

// Exact factorial-system moments from the digit model: position i carries a
// digit in {0..i-1}, so mean = sum_{i=1}^{n+1} (i-1)/i and
// variance = sum_{i=1}^{n+1} (i-1)/i^2. Equals moments() of the factorial
// table row n.
MomentSummary factorial_digit_moments(std::size_t n);

// Unsigned Stirling numbers of the first kind, c(n+1,k) = n c(n,k) + c(n,k-1)
// with c(0,0) = 1; zero for k > n.
BigInt stirling_first_kind(std::size_t n, std::size_t k);

double normal_cdf(double x);

}  // namespace fdecomp

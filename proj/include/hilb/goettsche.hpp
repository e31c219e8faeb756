#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace hilb {

struct InvalidBetti : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Truncated power series in (t, q) with integer coefficients; q-order is
/// the truncation, the t-range follows from it (degree <= 4n at weight n).
class BivariateSeries {
public:
    BivariateSeries(int n_max, int t_max);

    int n_max() const { return n_max_; }
    int t_max() const { return t_max_; }
    mpz_class& coeff(int n, int d) { return c_[idx(n, d)]; }
    const mpz_class& coeff(int n, int d) const { return c_[idx(n, d)]; }

    BivariateSeries operator*(const BivariateSeries& o) const;

    /// (1 - t^a q^b)^{-e} or (1 + t^a q^b)^{e} truncated; e >= 0.
    static BivariateSeries geometric_factor(int a, int b, int e, bool plus, int n_max, int t_max);

private:
    std::size_t idx(int n, int d) const {
        return static_cast<std::size_t>(n) * (t_max_ + 1) + d;
    }
    int n_max_, t_max_;
    std::vector<mpz_class> c_;
};

/// Betti table of the punctual Hilbert schemes from the classical product
/// formula: rows[n][d] = b_d(X^[n]) for n <= n_max, d <= 4n.
std::vector<std::vector<mpz_class>> poincare_series(const std::array<int, 5>& betti, int n_max);

/// Euler characteristics chi(X^[n]) as coefficients of prod (1-q^m)^{-e}.
std::vector<mpz_class> euler_series(long e, int n_max);

}  // namespace hilb

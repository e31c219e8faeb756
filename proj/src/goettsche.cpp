#include "hilb/goettsche.hpp"

namespace hilb {

BivariateSeries::BivariateSeries(int n_max, int t_max)
    : n_max_(n_max), t_max_(t_max), c_((n_max + 1) * (t_max + 1)) {}

BivariateSeries BivariateSeries::operator*(const BivariateSeries& o) const {
    BivariateSeries r(n_max_, t_max_);
    for (int n1 = 0; n1 <= n_max_; ++n1)
        for (int d1 = 0; d1 <= t_max_; ++d1) {
            const mpz_class& a = coeff(n1, d1);
            if (a == 0) continue;
            for (int n2 = 0; n1 + n2 <= n_max_; ++n2)
                for (int d2 = 0; d1 + d2 <= t_max_; ++d2) {
                    const mpz_class& b = o.coeff(n2, d2);
                    if (b != 0) r.coeff(n1 + n2, d1 + d2) += a * b;
                }
        }
    return r;
}

BivariateSeries BivariateSeries::geometric_factor(int a, int b, int e, bool plus, int n_max,
                                                  int t_max) {
    BivariateSeries r(n_max, t_max);
    r.coeff(0, 0) = 1;
    if (e == 0) return r;
    if (plus) {
        // (1 + t^a q^b)^e, binomial expansion
        mpz_class binom = 1;
        for (int k = 1; k <= e; ++k) {
            binom = binom * (e - k + 1) / k;
            if (k * b > n_max || k * a > t_max) break;
            r.coeff(k * b, k * a) = binom;
        }
        return r;
    }
    // (1 - t^a q^b)^{-e}: coefficients C(e-1+k, k)
    mpz_class binom = 1;
    for (int k = 1;; ++k) {
        binom = binom * (e - 1 + k) / k;
        if (k * b > n_max || k * a > t_max) break;
        r.coeff(k * b, k * a) = binom;
    }
    return r;
}

std::vector<std::vector<mpz_class>> poincare_series(const std::array<int, 5>& betti, int n_max) {
    if (betti[0] != 1 || betti[4] != 1 || betti[1] != betti[3])
        throw InvalidBetti("need b0 = b4 = 1 and b1 = b3");
    for (int b : betti)
        if (b < 0) throw InvalidBetti("negative Betti number");
    const int t_max = 4 * n_max;
    BivariateSeries prod(n_max, t_max);
    prod.coeff(0, 0) = 1;
    for (int m = 1; m <= n_max; ++m) {
        for (int d = 0; d <= 4; ++d) {
            int a = 2 * m - 2 + d;
            bool odd = d % 2 != 0;
            if (betti[d] == 0) continue;
            prod = prod * BivariateSeries::geometric_factor(a, m, betti[d], odd, n_max, t_max);
        }
    }
    std::vector<std::vector<mpz_class>> rows(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        rows[n].resize(4 * n + 1);
        for (int d = 0; d <= 4 * n; ++d) rows[n][d] = prod.coeff(n, d);
    }
    return rows;
}

std::vector<mpz_class> euler_series(long e, int n_max) {
    // prod_m (1-q^m)^{-e}; e may be negative (then the factors invert).
    // Work with the logarithmic recurrence via partition-sum convolution:
    // simply multiply factor by factor with exact integer coefficients.
    std::vector<mpz_class> c(n_max + 1);
    c[0] = 1;
    for (int m = 1; m <= n_max; ++m) {
        // multiply by (1 - q^m)^{-e} = sum_k C(e-1+k, k) q^{mk} (e >= 0)
        // for e < 0 it is (1-q^m)^{|e|} = sum_k (-1)^k C(|e|,k) q^{mk}
        std::vector<mpz_class> f(n_max + 1);
        f[0] = 1;
        if (e >= 0) {
            mpz_class binom = 1;
            for (int k = 1; m * k <= n_max; ++k) {
                binom = binom * (e - 1 + k) / k;
                f[m * k] = binom;
            }
        } else {
            long a = -e;
            mpz_class binom = 1;
            for (int k = 1; m * k <= n_max && k <= a; ++k) {
                binom = binom * (a - k + 1) / k;
                f[m * k] = (k % 2 == 0) ? binom : -binom;
            }
        }
        std::vector<mpz_class> out(n_max + 1);
        for (int i = 0; i <= n_max; ++i) {
            if (c[i] == 0) continue;
            for (int j = 0; i + j <= n_max; ++j)
                if (f[j] != 0) out[i + j] += c[i] * f[j];
        }
        c = std::move(out);
    }
    return c;
}

}  // namespace hilb

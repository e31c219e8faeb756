#include "hilb/linalg.hpp"

#include <stdexcept>

namespace hilb {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matmul shape mismatch");
    RatMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (hilb::is_zero(a)) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Rat& b = o.at(k, j);
                if (!hilb::is_zero(b)) r.at(i, j) += a * b;
            }
        }
    return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape");
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape");
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
}

RatMatrix RatMatrix::scaled(const Rat& s) const {
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * s;
    return r;
}

bool RatMatrix::is_zero() const {
    for (const auto& x : data_)
        if (!hilb::is_zero(x)) return false;
    return true;
}

std::vector<Rat> RatMatrix::apply(const std::vector<Rat>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matvec shape mismatch");
    std::vector<Rat> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rat acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) {
            const Rat& a = at(i, j);
            if (!hilb::is_zero(a) && !hilb::is_zero(v[j])) acc += a * v[j];
        }
        r[i] = acc;
    }
    return r;
}

RatSolver::RatSolver(RatMatrix a) : n_(a.rows()), lu_(std::move(a)) {
    if (lu_.cols() != n_) throw std::invalid_argument("solver needs square matrix");
    perm_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) perm_[i] = i;
    for (std::size_t k = 0; k < n_; ++k) {
        std::size_t piv = k;
        while (piv < n_ && hilb::is_zero(lu_.at(perm_[piv], k))) ++piv;
        if (piv == n_) {
            singular_ = true;
            return;
        }
        std::swap(perm_[k], perm_[piv]);
        const Rat& p = lu_.at(perm_[k], k);
        for (std::size_t i = k + 1; i < n_; ++i) {
            Rat& e = lu_.at(perm_[i], k);
            if (is_zero(e)) continue;
            Rat f = e / p;
            e = f;  // store multiplier
            for (std::size_t j = k + 1; j < n_; ++j) {
                const Rat& u = lu_.at(perm_[k], j);
                if (!is_zero(u)) lu_.at(perm_[i], j) -= f * u;
            }
        }
    }
}

std::vector<Rat> RatSolver::solve(const std::vector<Rat>& b) const {
    if (singular_) throw std::runtime_error("solve on singular system");
    std::vector<Rat> y(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        Rat acc = b[perm_[i]];
        for (std::size_t j = 0; j < i; ++j) {
            const Rat& l = lu_.at(perm_[i], j);
            if (!is_zero(l) && !is_zero(y[j])) acc -= l * y[j];
        }
        y[i] = acc;
    }
    std::vector<Rat> x(n_);
    for (std::size_t ii = n_; ii-- > 0;) {
        Rat acc = y[ii];
        for (std::size_t j = ii + 1; j < n_; ++j) {
            const Rat& u = lu_.at(perm_[ii], j);
            if (!is_zero(u) && !is_zero(x[j])) acc -= u * x[j];
        }
        x[ii] = acc / lu_.at(perm_[ii], ii);
    }
    return x;
}

std::size_t rank(RatMatrix a) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && is_zero(a.at(piv, c))) ++piv;
        if (piv == a.rows()) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(r, j), a.at(piv, j));
        Rat p = a.at(r, c);
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            if (is_zero(a.at(i, c))) continue;
            Rat f = a.at(i, c) / p;
            for (std::size_t j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
        }
        ++r;
    }
    return r;
}

RatMatrix inverse(const RatMatrix& a) {
    RatSolver s(a);
    if (s.singular()) throw std::runtime_error("inverse of singular matrix");
    std::size_t n = a.rows();
    RatMatrix inv(n, n);
    std::vector<Rat> e(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::fill(e.begin(), e.end(), Rat(0));
        e[j] = 1;
        auto col = s.solve(e);
        for (std::size_t i = 0; i < n; ++i) inv.at(i, j) = col[i];
    }
    return inv;
}

Rat determinant(RatMatrix a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("det of non-square");
    std::size_t n = a.rows();
    Rat det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && is_zero(a.at(piv, k))) ++piv;
        if (piv == n) return Rat(0);
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
            det = -det;
        }
        det *= a.at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (is_zero(a.at(i, k))) continue;
            Rat f = a.at(i, k) / a.at(k, k);
            for (std::size_t j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
        }
    }
    return det;
}

bool SpanTracker::add(const std::vector<Rat>& v) {
    if (v.size() != dim_) throw std::invalid_argument("span dim mismatch");
    std::vector<Rat> row = v;
    std::vector<Rat> combo(accepted_.size() + 1, Rat(0));
    combo.back() = 1;
    for (std::size_t i = 0; i < reduced_.size(); ++i) {
        const Rat& lead = row[pivot_col_[i]];
        if (is_zero(lead)) continue;
        Rat f = lead / reduced_[i][pivot_col_[i]];
        for (std::size_t j = 0; j < dim_; ++j)
            if (!is_zero(reduced_[i][j])) row[j] -= f * reduced_[i][j];
        for (std::size_t j = 0; j < combo_[i].size(); ++j)
            if (!is_zero(combo_[i][j])) combo[j] -= f * combo_[i][j];
    }
    std::size_t piv = dim_;
    for (std::size_t j = 0; j < dim_; ++j)
        if (!is_zero(row[j])) {
            piv = j;
            break;
        }
    if (piv == dim_) return false;
    accepted_.push_back(v);
    reduced_.push_back(std::move(row));
    pivot_col_.push_back(piv);
    combo.resize(accepted_.size(), Rat(0));
    combo_.push_back(std::move(combo));
    for (auto& c : combo_) c.resize(accepted_.size(), Rat(0));
    return true;
}

bool SpanTracker::coordinates(const std::vector<Rat>& v, std::vector<Rat>& coords) const {
    std::vector<Rat> row = v;
    std::vector<Rat> combo(accepted_.size(), Rat(0));
    for (std::size_t i = 0; i < reduced_.size(); ++i) {
        const Rat& lead = row[pivot_col_[i]];
        if (is_zero(lead)) continue;
        Rat f = lead / reduced_[i][pivot_col_[i]];
        for (std::size_t j = 0; j < dim_; ++j)
            if (!is_zero(reduced_[i][j])) row[j] -= f * reduced_[i][j];
        for (std::size_t j = 0; j < combo_[i].size(); ++j)
            if (!is_zero(combo_[i][j])) combo[j] += f * combo_[i][j];
    }
    for (std::size_t j = 0; j < dim_; ++j)
        if (!is_zero(row[j])) return false;
    coords = std::move(combo);
    return true;
}

std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> rows, std::size_t cols) {
    const std::uint64_t p = kRankPrime;
    auto mulmod = [p](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>((__uint128_t)a * b % p);
    };
    auto powmod = [&](std::uint64_t b, std::uint64_t e) {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, b);
            b = mulmod(b, b);
            e >>= 1;
        }
        return r;
    };
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        std::uint64_t inv = powmod(rows[r][c], p - 2);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            std::uint64_t f = mulmod(rows[i][c], inv);
            for (std::size_t j = c; j < cols; ++j) {
                std::uint64_t sub = mulmod(f, rows[r][j]);
                rows[i][j] = (rows[i][j] + p - sub) % p;
            }
        }
        ++r;
    }
    return r;
}

}  // namespace hilb

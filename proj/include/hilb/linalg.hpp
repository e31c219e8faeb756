#pragma once

#include <cstdint>
#include <vector>

#include "hilb/rational.hpp"

namespace hilb {

/// Dense rational matrix, row-major. Sizes here are small (a few hundred);
/// plain Gaussian elimination over Q is exact and fast enough.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    static RatMatrix identity(std::size_t n);

    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatMatrix scaled(const Rat& s) const;
    bool is_zero() const;

    std::vector<Rat> apply(const std::vector<Rat>& v) const;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> data_;
};

/// LU-style exact solver: factors once, solves many right-hand sides.
/// Only square nonsingular systems; singular() reports failure instead of
/// throwing so callers can treat degeneracy as data.
class RatSolver {
public:
    explicit RatSolver(RatMatrix a);
    bool singular() const { return singular_; }
    /// Solves A x = b. Undefined if singular().
    std::vector<Rat> solve(const std::vector<Rat>& b) const;

private:
    std::size_t n_;
    RatMatrix lu_;
    std::vector<std::size_t> perm_;
    bool singular_ = false;
};

std::size_t rank(RatMatrix a);
RatMatrix inverse(const RatMatrix& a);  // throws on singular
Rat determinant(RatMatrix a);

/// Incremental exact row-space tracker: feed vectors, learn which extend the
/// span, and solve for coordinates of new vectors in the accepted set.
class SpanTracker {
public:
    explicit SpanTracker(std::size_t dim) : dim_(dim) {}
    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return accepted_.size(); }

    /// Returns true (and records the vector) iff v extends the current span.
    bool add(const std::vector<Rat>& v);

    /// Coordinates of v in the accepted vectors; empty optional-like flag via
    /// second return if v is outside the span.
    bool coordinates(const std::vector<Rat>& v, std::vector<Rat>& coords) const;

private:
    std::size_t dim_;
    // reduced rows + the accepted originals expressed over them
    std::vector<std::vector<Rat>> reduced_;       // echelon rows
    std::vector<std::size_t> pivot_col_;          // pivot of reduced_[i]
    std::vector<std::vector<Rat>> combo_;         // reduced_[i] = sum combo_[i][j] * accepted_[j]
    std::vector<std::vector<Rat>> accepted_;
};

/// Rank over F_p with p = 2^61 - 1; full rank mod p certifies full rank
/// over Q. Rows are given already reduced mod p.
std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> rows, std::size_t cols);

constexpr std::uint64_t kRankPrime = 2305843009213693951ull;  // 2^61 - 1

}  // namespace hilb

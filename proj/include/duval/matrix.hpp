#pragma once

#include "duval/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace duval {

// Dense matrix of exact rationals. Dimensions are fixed at construction.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

struct RankNullspace {
    std::size_t rank;
    // One vector per free column, in increasing free-column order. Each vector
    // has integer entries of content 1 with a positive first nonzero entry.
    std::vector<std::vector<Rational>> basis;
};

// Exact rank and nullspace basis. Rows are scaled to integers, then eliminated
// fraction-free (Bareiss) with first-nonzero pivoting in column order, so the
// result is deterministic.
RankNullspace rank_and_nullspace(const RationalMatrix& m);

// An entry whose denominator vanishes modulo the chosen prime.
class BadReductionError : public std::runtime_error {
public:
    BadReductionError(std::size_t row, std::size_t col, long prime);
    std::size_t row, col;
    long prime;
};

// Rank of the matrix reduced modulo `prime`; at most the exact rank.
std::size_t rank_modular(const RationalMatrix& m, long prime);

}  // namespace duval

#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <vector>

#include "conlab/rational.hpp"

namespace conlab {

// Dense rational matrix. Everything in this library is small (at most a few
// hundred entries), so no sparse representation is attempted.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(std::vector<std::vector<Rational>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Rational& operator()(std::size_t i, std::size_t j) { return at(i, j); }
    const Rational& operator()(std::size_t i, std::size_t j) const { return at(i, j); }

    std::vector<Rational> row(std::size_t i) const;
    RatMatrix transposed() const;

    std::vector<Rational> apply(const std::vector<Rational>& v) const; // M*v

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

// Exact rank over the rationals, via fraction-free (Bareiss) elimination on
// the denominator-cleared integer matrix.
std::size_t rank(const RatMatrix& m);

// Basis of the right kernel {v : M v = 0}; empty when the kernel is zero.
std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m);

// True iff v lies in the row span of M.
bool row_space_membership(const RatMatrix& m, const std::vector<Rational>& v);

// Incremental reduced row echelon form over the rationals. Rows are kept
// pivot-normalized (leading coefficient 1) and fully reduced against each
// other, so membership tests reduce to "does the residual vanish".
class RowReducer {
public:
    explicit RowReducer(std::size_t width) : width_(width) {}

    std::size_t width() const { return width_; }
    std::size_t rank() const { return rows_.size(); }

    // Residual of v after reduction against the current basis.
    std::vector<Rational> reduce(std::vector<Rational> v) const;

    // Inserts v if independent; returns whether the rank grew.
    bool insert(std::vector<Rational> v);

    bool contains(const std::vector<Rational>& v) const;

    // Basis rows ordered by pivot column.
    std::vector<std::vector<Rational>> sorted_rows() const;

    const std::vector<std::vector<Rational>>& rows() const { return rows_; }

private:
    std::size_t width_;
    std::map<std::size_t, std::size_t> pivot_of_col_;
    std::vector<std::vector<Rational>> rows_;
};

} // namespace conlab

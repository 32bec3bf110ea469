#ifndef ABSEQ_INTMATRIX_HPP
#define ABSEQ_INTMATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>

#include "abseq/ints.hpp"

namespace abseq {

// Dense integer matrix with exact arbitrary-precision entries.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
    static IntMatrix diagonal(const IntVec& d);
    static IntMatrix from_columns(std::size_t rows, const std::vector<IntVec>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const IntMatrix& o) const = default;

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix scaled(const Int& c) const;
    IntVec apply(const IntVec& v) const;   // matrix * column vector
    IntMatrix transposed() const;

    IntVec column(std::size_t j) const;
    IntVec row(std::size_t i) const;
    void set_column(std::size_t j, const IntVec& v);

    // columns [j0, j1) as a new matrix
    IntMatrix column_range(std::size_t j0, std::size_t j1) const;
    // horizontal concatenation [this | o]
    IntMatrix hcat(const IntMatrix& o) const;
    // vertical concatenation [this; o]
    IntMatrix vcat(const IntMatrix& o) const;
    // row selection (new matrix whose rows are this's rows at the given indices)
    IntMatrix select_rows(const std::vector<std::size_t>& idx) const;
    IntMatrix select_cols(const std::vector<std::size_t>& idx) const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& c);  // row dst += c * row src
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& c);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    std::string to_string() const;

private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

} // namespace abseq

#endif

#include "abseq/intmatrix.hpp"

#include <sstream>

namespace abseq {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.resize(rows_ * cols_);
    std::size_t i = 0;
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("ragged initializer");
        std::size_t j = 0;
        for (long v : r)
            at(i, j++) = v;
        ++i;
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const IntVec& d)
{
    IntMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        m.at(i, i) = d[i];
    return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVec>& cols)
{
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows)
            throw std::invalid_argument("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i)
            m.at(i, j) = cols[j][i];
    }
    return m;
}

bool IntMatrix::is_zero() const
{
    for (const Int& v : data_)
        if (v != 0)
            return false;
    return true;
}

bool IntMatrix::is_identity() const
{
    if (rows_ != cols_)
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0))
                return false;
    return true;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const
{
    if (cols_ != o.rows_)
        throw std::invalid_argument("dimension mismatch in matrix product");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("dimension mismatch in matrix sum");
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        r.data_[i] = data_[i] + o.data_[i];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("dimension mismatch in matrix difference");
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        r.data_[i] = data_[i] - o.data_[i];
    return r;
}

IntMatrix IntMatrix::scaled(const Int& c) const
{
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        r.data_[i] = data_[i] * c;
    return r;
}

IntVec IntMatrix::apply(const IntVec& v) const
{
    if (v.size() != cols_)
        throw std::invalid_argument("dimension mismatch in matrix apply");
    IntVec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0)
                r[i] += at(i, j) * v[j];
    return r;
}

IntMatrix IntMatrix::transposed() const
{
    IntMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r.at(j, i) = at(i, j);
    return r;
}

IntVec IntMatrix::column(std::size_t j) const
{
    IntVec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = at(i, j);
    return v;
}

IntVec IntMatrix::row(std::size_t i) const
{
    IntVec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j)
        v[j] = at(i, j);
    return v;
}

void IntMatrix::set_column(std::size_t j, const IntVec& v)
{
    if (v.size() != rows_)
        throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i)
        at(i, j) = v[i];
}

IntMatrix IntMatrix::column_range(std::size_t j0, std::size_t j1) const
{
    IntMatrix r(rows_, j1 - j0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = j0; j < j1; ++j)
            r.at(i, j - j0) = at(i, j);
    return r;
}

IntMatrix IntMatrix::hcat(const IntMatrix& o) const
{
    if (rows_ != o.rows_ && cols_ != 0 && o.cols_ != 0)
        throw std::invalid_argument("row count mismatch in hcat");
    std::size_t rr = cols_ ? rows_ : o.rows_;
    if (cols_ && o.cols_ && rows_ != o.rows_)
        throw std::invalid_argument("row count mismatch in hcat");
    IntMatrix r(rr, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_ && cols_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < o.rows_ && o.cols_; ++i)
        for (std::size_t j = 0; j < o.cols_; ++j)
            r.at(i, cols_ + j) = o.at(i, j);
    return r;
}

IntMatrix IntMatrix::vcat(const IntMatrix& o) const
{
    if (rows_ && o.rows_ && cols_ != o.cols_)
        throw std::invalid_argument("column count mismatch in vcat");
    std::size_t cc = rows_ ? cols_ : o.cols_;
    IntMatrix r(rows_ + o.rows_, cc);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < o.cols_; ++j)
            r.at(rows_ + i, j) = o.at(i, j);
    return r;
}

IntMatrix IntMatrix::select_rows(const std::vector<std::size_t>& idx) const
{
    IntMatrix r(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r.at(i, j) = at(idx[i], j);
    return r;
}

IntMatrix IntMatrix::select_cols(const std::vector<std::size_t>& idx) const
{
    IntMatrix r(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j)
            r.at(i, j) = at(i, idx[j]);
    return r;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i)
        std::swap(at(i, a), at(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& c)
{
    if (c == 0) return;
    for (std::size_t j = 0; j < cols_; ++j)
        at(dst, j) += c * at(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& c)
{
    if (c == 0) return;
    for (std::size_t i = 0; i < rows_; ++i)
        at(i, dst) += c * at(i, src);
}

void IntMatrix::negate_row(std::size_t i)
{
    for (std::size_t j = 0; j < cols_; ++j)
        at(i, j) = -at(i, j);
}

void IntMatrix::negate_col(std::size_t j)
{
    for (std::size_t i = 0; i < rows_; ++i)
        at(i, j) = -at(i, j);
}

std::string IntMatrix::to_string() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? " " : "") << at(i, j).get_str();
    }
    os << "]";
    return os.str();
}

} // namespace abseq

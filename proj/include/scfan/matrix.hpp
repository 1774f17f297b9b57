#pragma once

#include "scfan/errors.hpp"
#include "scfan/numeric.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace scfan {

// Dense integer matrix, row-major. A matrix with r rows and c columns
// represents a Z-linear map Z^c -> Z^r; the j-th column is the image of e_j.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    // cols is explicit so an empty row list still carries its ambient width.
    static IntMatrix from_rows(std::size_t cols, const std::vector<Vec>& rows) {
        IntMatrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw DimensionMismatch("row width does not match column count");
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    static IntMatrix from_columns(std::size_t rows, const std::vector<Vec>& cols) {
        IntMatrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw DimensionMismatch("column height does not match row count");
            for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec row(std::size_t i) const {
        Vec r(cols_);
        for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
        return r;
    }

    Vec column(std::size_t j) const {
        Vec c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
        return c;
    }

    std::vector<Vec> row_list() const {
        std::vector<Vec> rs;
        rs.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) rs.push_back(row(i));
        return rs;
    }

    std::vector<Vec> column_list() const {
        std::vector<Vec> cs;
        cs.reserve(cols_);
        for (std::size_t j = 0; j < cols_; ++j) cs.push_back(column(j));
        return cs;
    }

    // M * x
    Vec apply(const Vec& x) const {
        if (x.size() != cols_) throw DimensionMismatch("vector length does not match matrix columns");
        Vec y(rows_, Int(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
        return y;
    }

    IntMatrix mul(const IntMatrix& other) const {
        if (cols_ != other.rows_) throw DimensionMismatch("matrix product shape");
        IntMatrix m(rows_, other.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& a = at(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < other.cols_; ++j) m.at(i, j) += a * other.at(k, j);
            }
        return m;
    }

    IntMatrix transpose() const {
        IntMatrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    bool operator==(const IntMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }
    bool operator!=(const IntMatrix& other) const { return !(*this == other); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

// Block-diagonal sum: acts as (x, y) |-> (A x, B y).
inline IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return m;
}

}  // namespace scfan

#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

namespace synthtree {

/// Dense row-major matrix of doubles. Plain value type, no aliasing tricks.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    double& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }
    double operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }

    std::span<double> row(std::size_t i) {
        assert(i < rows_);
        return {data_.data() + i * cols_, cols_};
    }
    std::span<const double> row(std::size_t i) const {
        assert(i < rows_);
        return {data_.data() + i * cols_, cols_};
    }

    void append_row(std::span<const double> values) {
        assert(cols_ == 0 || values.size() == cols_);
        if (cols_ == 0) cols_ = values.size();
        data_.insert(data_.end(), values.begin(), values.end());
        ++rows_;
    }

    /// Rows of this matrix selected by index, in the given order.
    Matrix take_rows(std::span<const int> indices) const {
        Matrix out(indices.size(), cols_);
        for (std::size_t k = 0; k < indices.size(); ++k) {
            auto src = row(static_cast<std::size_t>(indices[k]));
            std::copy(src.begin(), src.end(), out.row(k).begin());
        }
        return out;
    }

    std::vector<double> column(std::size_t j) const {
        std::vector<double> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
        return out;
    }

    const std::vector<double>& storage() const { return data_; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Vertical concatenation; all inputs must agree on column count (empty inputs skipped).
inline Matrix vstack(std::span<const Matrix* const> parts) {
    Matrix out;
    for (const Matrix* m : parts) {
        if (!m || m->rows() == 0) continue;
        for (std::size_t i = 0; i < m->rows(); ++i) out.append_row(m->row(i));
    }
    return out;
}

}  // namespace synthtree

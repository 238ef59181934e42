#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace configcomplex {

// Dense row-major matrix of exact 64-bit integers. All arithmetic is checked.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<std::int64_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const std::int64_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::vector<std::int64_t> row_vector(std::size_t r) const;

    void append_row(std::span<const std::int64_t> values);
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row[dst] -= q * row[src]
    void sub_row_multiple(std::size_t dst, std::size_t src, std::int64_t q);
    // col[dst] -= q * col[src]
    void sub_col_multiple(std::size_t dst, std::size_t src, std::int64_t q);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

    IntMatrix transposed() const;
    // Leading columns [0, n).
    IntMatrix left_columns(std::size_t n) const;
    bool is_zero() const;
    bool is_diagonal() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace configcomplex

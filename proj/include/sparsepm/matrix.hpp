#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sparsepm/field.hpp"

namespace sparsepm {

// Dense row-major matrix over a shared field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldPtr field, std::size_t n);
  // Throws DimensionMismatch on ragged input and IndexOutOfRange on an entry
  // outside the field.
  static Matrix from_rows(FieldPtr field, const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  const Field& field() const noexcept { return *field_; }

  Scalar operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Scalar> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> data() const noexcept { return data_; }

  Matrix transpose() const;
  bool is_identity() const noexcept;
  std::size_t nonzeros() const noexcept;

  bool operator==(const Matrix& other) const noexcept;

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix matmul(const Matrix& a, const Matrix& b);
std::vector<Scalar> matvec(const Matrix& a, std::span<const Scalar> v);

// Gauss-Jordan with first-nonzero pivoting. Throws Singular.
Matrix invert(const Matrix& a);
std::size_t rank(const Matrix& a);
// Solves a x = b for square invertible a.
std::vector<Scalar> solve(const Matrix& a, std::span<const Scalar> b);

// Entry (i, j) = xs[i]^(j+1). Throws DuplicateEvaluationPoint on repeated or
// zero points.
Matrix vandermonde(std::span<const Scalar> xs, std::size_t cols, FieldPtr field);

Matrix submatrix(const Matrix& a, std::span<const std::size_t> row_ids,
                 std::span<const std::size_t> col_ids);
Matrix row_select(const Matrix& a, std::span<const std::size_t> row_ids);
Matrix col_range(const Matrix& a, std::size_t first, std::size_t count);

std::vector<std::size_t> iota_ids(std::size_t first, std::size_t count);

// Text format: "rows cols q" header, then one line per row of decimal values.
// q = 256 denotes GF(2^8) with the default polynomial.
std::string to_text(const Matrix& m);
Matrix parse_text(std::string_view text);

}  // namespace sparsepm

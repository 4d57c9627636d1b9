#include "sparsepm/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace sparsepm {

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) {
    throw Error(Errc::FieldMismatch, a.field().name() + " vs " + b.field().name());
  }
}

// Reduces `work` in place to reduced row echelon form over its first
// `pivot_cols` columns; returns the pivot column of each pivot row.
std::vector<std::size_t> row_reduce(Matrix& work, std::size_t pivot_cols) {
  const Field& f = work.field();
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < pivot_cols && pivot_row < work.rows(); ++col) {
    std::size_t found = pivot_row;
    while (found < work.rows() && work(found, col) == 0) ++found;
    if (found == work.rows()) continue;
    if (found != pivot_row) {
      std::swap_ranges(work.row(found).begin(), work.row(found).end(), work.row(pivot_row).begin());
    }
    const Scalar scale = f.inv(work(pivot_row, col));
    for (Scalar& v : work.row(pivot_row)) v = f.mul(v, scale);
    for (std::size_t r = 0; r < work.rows(); ++r) {
      const Scalar factor = work(r, col);
      if (r == pivot_row || factor == 0) continue;
      auto dst = work.row(r);
      auto src = work.row(pivot_row);
      for (std::size_t c = 0; c < work.cols(); ++c) {
        if (src[c] != 0) dst[c] = f.sub(dst[c], f.mul(factor, src[c]));
      }
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return pivots;
}

}  // namespace

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(Errc::DimensionMismatch, "ragged row " + std::to_string(r));
    for (std::size_t c = 0; c < cols; ++c) {
      if (!field->contains(rows[r][c])) {
        throw Error(Errc::IndexOutOfRange, "entry " + std::to_string(rows[r][c]) + " outside " + field->name());
      }
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool Matrix::is_identity() const noexcept {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if ((*this)(r, c) != (r == c ? 1u : 0u)) return false;
    }
  }
  return true;
}

std::size_t Matrix::nonzeros() const noexcept {
  return static_cast<std::size_t>(std::count_if(data_.begin(), data_.end(), [](Scalar v) { return v != 0; }));
}

bool Matrix::operator==(const Matrix& other) const noexcept {
  if (rows_ != other.rows_ || cols_ != other.cols_ || data_ != other.data_) return false;
  if (field_ == other.field_) return true;
  return field_ && other.field_ && *field_ == *other.field_;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) {
    throw Error(Errc::DimensionMismatch, "matmul " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                             " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  const Field& f = a.field();
  Matrix out(a.field_ptr(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto dst = out.row(i);
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Scalar coeff = a(i, l);
      if (coeff == 0) continue;
      auto src = b.row(l);
      for (std::size_t j = 0; j < b.cols(); ++j) dst[j] = f.add(dst[j], f.mul(coeff, src[j]));
    }
  }
  return out;
}

std::vector<Scalar> matvec(const Matrix& a, std::span<const Scalar> v) {
  if (a.cols() != v.size()) throw Error(Errc::DimensionMismatch, "matvec length");
  const Field& f = a.field();
  std::vector<Scalar> out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Scalar acc = 0;
    auto row = a.row(i);
    for (std::size_t j = 0; j < v.size(); ++j) acc = f.add(acc, f.mul(row[j], v[j]));
    out[i] = acc;
  }
  return out;
}

Matrix invert(const Matrix& a) {
  if (a.rows() != a.cols()) throw Error(Errc::DimensionMismatch, "invert needs a square matrix");
  const std::size_t n = a.rows();
  Matrix work(a.field_ptr(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    std::copy(a.row(r).begin(), a.row(r).end(), work.row(r).begin());
    work(r, n + r) = 1;
  }
  if (row_reduce(work, n).size() != n) throw Error(Errc::Singular, "matrix is singular");
  Matrix inverse(a.field_ptr(), n, n);
  for (std::size_t r = 0; r < n; ++r) {
    std::copy(work.row(r).begin() + static_cast<std::ptrdiff_t>(n), work.row(r).end(), inverse.row(r).begin());
  }
  return inverse;
}

std::size_t rank(const Matrix& a) {
  Matrix work = a;
  return row_reduce(work, a.cols()).size();
}

std::vector<Scalar> solve(const Matrix& a, std::span<const Scalar> b) {
  if (a.rows() != a.cols() || a.rows() != b.size()) throw Error(Errc::DimensionMismatch, "solve dimensions");
  const std::size_t n = a.rows();
  Matrix work(a.field_ptr(), n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    std::copy(a.row(r).begin(), a.row(r).end(), work.row(r).begin());
    work(r, n) = b[r];
  }
  if (row_reduce(work, n).size() != n) throw Error(Errc::Singular, "system is singular");
  std::vector<Scalar> x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = work(r, n);
  return x;
}

Matrix vandermonde(std::span<const Scalar> xs, std::size_t cols, FieldPtr field) {
  std::set<Scalar> seen;
  for (Scalar x : xs) {
    if (x == 0 || !field->contains(x) || !seen.insert(x).second) {
      throw Error(Errc::DuplicateEvaluationPoint, "evaluation point " + std::to_string(x));
    }
  }
  Matrix m(field, xs.size(), cols);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Scalar power = xs[i];
    for (std::size_t j = 0; j < cols; ++j) {
      m(i, j) = power;
      power = field->mul(power, xs[i]);
    }
  }
  return m;
}

Matrix submatrix(const Matrix& a, std::span<const std::size_t> row_ids, std::span<const std::size_t> col_ids) {
  Matrix out(a.field_ptr(), row_ids.size(), col_ids.size());
  for (std::size_t r = 0; r < row_ids.size(); ++r) {
    if (row_ids[r] >= a.rows()) throw Error(Errc::IndexOutOfRange, "row " + std::to_string(row_ids[r]));
    for (std::size_t c = 0; c < col_ids.size(); ++c) {
      if (col_ids[c] >= a.cols()) throw Error(Errc::IndexOutOfRange, "column " + std::to_string(col_ids[c]));
      out(r, c) = a(row_ids[r], col_ids[c]);
    }
  }
  return out;
}

Matrix row_select(const Matrix& a, std::span<const std::size_t> row_ids) {
  const auto cols = iota_ids(0, a.cols());
  return submatrix(a, row_ids, cols);
}

Matrix col_range(const Matrix& a, std::size_t first, std::size_t count) {
  const auto rows = iota_ids(0, a.rows());
  const auto cols = iota_ids(first, count);
  return submatrix(a, rows, cols);
}

std::vector<std::size_t> iota_ids(std::size_t first, std::size_t count) {
  std::vector<std::size_t> ids(count);
  std::iota(ids.begin(), ids.end(), first);
  return ids;
}

std::string to_text(const Matrix& m) {
  std::ostringstream os;
  os << m.rows() << ' ' << m.cols() << ' ' << m.field().order() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c != 0) os << ' ';
      os << m(r, c);
    }
    os << '\n';
  }
  return os.str();
}

Matrix parse_text(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::size_t rows = 0, cols = 0;
  std::uint64_t q = 0;
  if (!(is >> rows >> cols >> q)) throw Error(Errc::Parse, "matrix header must be 'rows cols q'");
  FieldPtr field;
  if (q == 256) {
    field = make_gf256();
  } else if (q < (1ull << 31)) {
    field = make_prime_field(static_cast<std::uint32_t>(q));
  } else {
    throw Error(Errc::Parse, "field order " + std::to_string(q) + " is not supported");
  }
  Matrix m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      std::uint64_t v = 0;
      if (!(is >> v)) throw Error(Errc::Parse, "truncated matrix body");
      if (v >= q) throw Error(Errc::Parse, "entry " + std::to_string(v) + " outside the field");
      m(r, c) = static_cast<Scalar>(v);
    }
  }
  std::string extra;
  if (is >> extra) throw Error(Errc::Parse, "trailing data after matrix body");
  return m;
}

}  // namespace sparsepm

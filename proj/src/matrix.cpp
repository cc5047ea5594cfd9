#include "hmorita/matrix.hpp"

#include "hmorita/errors.hpp"

#include <sstream>
#include <utility>

namespace hmorita {

namespace {

std::string shape(std::size_t rows, std::size_t cols) {
  return std::to_string(rows) + "x" + std::to_string(cols);
}

void require_same_shape(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeMismatch(shape(a.rows(), a.cols()) + " vs " + shape(b.rows(), b.cols()));
  }
}

}  // namespace

Matrix::Matrix(AlgebraHandle algebra, std::size_t rows, std::size_t cols)
    : algebra_(std::move(algebra)), rows_(rows), cols_(cols) {
  if (!algebra_) throw InvalidDescriptor("matrix without algebra");
  entries_.assign(rows * cols, Element::zero(algebra_));
}

Matrix::Matrix(AlgebraHandle algebra, std::size_t rows, std::size_t cols, std::vector<Element> entries)
    : algebra_(std::move(algebra)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (!algebra_) throw InvalidDescriptor("matrix without algebra");
  if (entries_.size() != rows * cols) {
    throw ShapeMismatch("expected " + std::to_string(rows * cols) + " entries for " + shape(rows, cols) +
                        ", got " + std::to_string(entries_.size()));
  }
  for (const auto& e : entries_) require_same_algebra(algebra_, e.algebra());
}

Matrix Matrix::identity(const AlgebraHandle& algebra, std::size_t n) {
  return scalar(algebra, n, Element::one(algebra));
}

Matrix Matrix::scalar(const AlgebraHandle& algebra, std::size_t n, const Element& q) {
  Matrix out(algebra, n, n);
  for (std::size_t t = 0; t < n; ++t) out.entries_[t * n + t] = q;
  return out;
}

Matrix Matrix::unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j, const AlgebraHandle& algebra) {
  Matrix out(algebra, rows, cols);
  out.set(i, j, Element::one(algebra));
  return out;
}

Matrix Matrix::diagonal(const AlgebraHandle& algebra, const std::vector<Element>& diag) {
  const std::size_t n = diag.size();
  Matrix out(algebra, n, n);
  for (std::size_t t = 0; t < n; ++t) out.set(t + 1, t + 1, diag[t]);
  return out;
}

Matrix Matrix::from_blocks(const std::vector<std::vector<Matrix>>& blocks) {
  if (blocks.empty() || blocks.front().empty()) throw ShapeMismatch("empty block grid");
  const AlgebraHandle& algebra = blocks.front().front().algebra();
  std::size_t rows = 0;
  std::size_t cols = 0;
  for (const auto& block : blocks.front()) cols += block.cols();
  for (const auto& row : blocks) {
    if (row.size() != blocks.front().size()) throw ShapeMismatch("ragged block grid");
    rows += row.front().rows();
  }
  Matrix out(algebra, rows, cols);
  std::size_t row_offset = 0;
  for (const auto& row : blocks) {
    std::size_t col_offset = 0;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const Matrix& block = row[c];
      require_same_algebra(algebra, block.algebra());
      if (block.rows() != row.front().rows() || block.cols() != blocks.front()[c].cols()) {
        throw ShapeMismatch("block shapes do not tile");
      }
      for (std::size_t i = 1; i <= block.rows(); ++i) {
        for (std::size_t j = 1; j <= block.cols(); ++j) out.set(row_offset + i, col_offset + j, block.at(i, j));
      }
      col_offset += block.cols();
    }
    row_offset += row.front().rows();
  }
  return out;
}

std::size_t Matrix::offset(std::size_t i, std::size_t j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) {
    throw IndexOutOfRange("index (" + std::to_string(i) + ", " + std::to_string(j) + ") outside " +
                          shape(rows_, cols_));
  }
  return (i - 1) * cols_ + (j - 1);
}

const Element& Matrix::at(std::size_t i, std::size_t j) const { return entries_[offset(i, j)]; }

void Matrix::set(std::size_t i, std::size_t j, Element value) {
  require_same_algebra(algebra_, value.algebra());
  entries_[offset(i, j)] = std::move(value);
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

Matrix Matrix::operator-() const {
  Matrix out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  require_same_algebra(algebra_, rhs.algebra_);
  require_same_shape(*this, rhs);
  for (std::size_t t = 0; t < entries_.size(); ++t) entries_[t] += rhs.entries_[t];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  require_same_algebra(algebra_, rhs.algebra_);
  require_same_shape(*this, rhs);
  for (std::size_t t = 0; t < entries_.size(); ++t) entries_[t] -= rhs.entries_[t];
  return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  require_same_algebra(lhs.algebra_, rhs.algebra_);
  if (lhs.cols_ != rhs.rows_) {
    throw ShapeMismatch("cannot multiply " + shape(lhs.rows_, lhs.cols_) + " by " + shape(rhs.rows_, rhs.cols_));
  }
  Matrix out(lhs.algebra_, lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t t = 0; t < lhs.cols_; ++t) {
      const Element& left = lhs.entries_[i * lhs.cols_ + t];
      if (left.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Element& right = rhs.entries_[t * rhs.cols_ + j];
        if (right.is_zero()) continue;
        out.entries_[i * rhs.cols_ + j] += left * right;
      }
    }
  }
  return out;
}

bool operator==(const Matrix& lhs, const Matrix& rhs) {
  return same_algebra(lhs.algebra_, rhs.algebra_) && lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ &&
         lhs.entries_ == rhs.entries_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 1; i <= rows_; ++i) {
    os << (i == 1 ? "[" : ", [");
    for (std::size_t j = 1; j <= cols_; ++j) os << (j == 1 ? "" : ", ") << at(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix bar_transpose(const Matrix& a) {
  Matrix out(a.algebra(), a.cols(), a.rows());
  for (std::size_t i = 1; i <= a.rows(); ++i) {
    for (std::size_t j = 1; j <= a.cols(); ++j) out.set(j, i, a.at(i, j).conj());
  }
  return out;
}

Matrix scale_left(const Element& c, const Matrix& a) {
  require_same_algebra(c.algebra(), a.algebra());
  std::vector<Element> entries;
  entries.reserve(a.entries().size());
  for (const auto& e : a.entries()) entries.push_back(c * e);
  return Matrix(a.algebra(), a.rows(), a.cols(), std::move(entries));
}

Matrix scale_right(const Matrix& a, const Element& c) {
  require_same_algebra(c.algebra(), a.algebra());
  std::vector<Element> entries;
  entries.reserve(a.entries().size());
  for (const auto& e : a.entries()) entries.push_back(e * c);
  return Matrix(a.algebra(), a.rows(), a.cols(), std::move(entries));
}

Matrix scale(const ExactRational& q, const Matrix& a) {
  std::vector<Element> entries;
  entries.reserve(a.entries().size());
  for (const auto& e : a.entries()) entries.push_back(q * e);
  return Matrix(a.algebra(), a.rows(), a.cols(), std::move(entries));
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  require_same_algebra(a.algebra(), b.algebra());
  return Matrix::from_blocks({{a, Matrix(a.algebra(), a.rows(), b.cols())},
                              {Matrix(a.algebra(), b.rows(), a.cols()), b}});
}

Matrix inverse(const Matrix& a) {
  if (!a.is_square()) throw ShapeMismatch("inverse of non-square " + shape(a.rows(), a.cols()));
  const std::size_t n = a.rows();
  const AlgebraHandle& algebra = a.algebra();

  // Rows of the augmented system [A | I], transformed by left row operations.
  std::vector<std::vector<Element>> left(n), right(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      left[i].push_back(a.at(i + 1, j + 1));
      right[i].push_back(i == j ? Element::one(algebra) : Element::zero(algebra));
    }
  }

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    bool saw_zero_divisor = false;
    for (std::size_t r = col; r < n; ++r) {
      if (left[r][col].is_zero()) continue;
      if (left[r][col].norm().is_zero()) {
        saw_zero_divisor = true;
        continue;
      }
      pivot = r;
      break;
    }
    if (pivot == n) {
      if (saw_zero_divisor) {
        throw NotDivision("column " + std::to_string(col + 1) + " has only zero divisors as pivot candidates");
      }
      throw Singular("no pivot in column " + std::to_string(col + 1));
    }
    std::swap(left[col], left[pivot]);
    std::swap(right[col], right[pivot]);

    const Element pivot_inv = left[col][col].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      left[col][j] = pivot_inv * left[col][j];
      right[col][j] = pivot_inv * right[col][j];
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || left[r][col].is_zero()) continue;
      const Element factor = left[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        left[r][j] -= factor * left[col][j];
        right[r][j] -= factor * right[col][j];
      }
    }
  }

  std::vector<Element> entries;
  entries.reserve(n * n);
  for (auto& row : right) {
    for (auto& e : row) entries.push_back(std::move(e));
  }
  Matrix out(algebra, n, n, std::move(entries));
  const Matrix id = Matrix::identity(algebra, n);
  if (!(a * out == id) || !(out * a == id)) {
    throw InvariantViolation("elimination produced a matrix that is not a two-sided inverse");
  }
  return out;
}

bool is_invertible(const Matrix& a) {
  try {
    inverse(a);
    return true;
  } catch (const Singular&) {
    return false;
  } catch (const NotDivision&) {
    return false;
  }
}

}  // namespace hmorita

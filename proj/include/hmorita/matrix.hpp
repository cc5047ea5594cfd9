#pragma once

#include "hmorita/algebra.hpp"

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace hmorita {

/// Dense rectangular matrix over a division algebra D.
///
/// Public indices are 1-based, matching the usual e_{ij} conventions. Products
/// keep the left factor on the left in every entry sum, which matters once D is
/// noncommutative.
class Matrix {
 public:
  /// Zero matrix.
  Matrix(AlgebraHandle algebra, std::size_t rows, std::size_t cols);
  /// Row-major entries; throws ShapeMismatch/DescriptorMismatch on bad input.
  Matrix(AlgebraHandle algebra, std::size_t rows, std::size_t cols, std::vector<Element> entries);

  static Matrix identity(const AlgebraHandle& algebra, std::size_t n);
  /// Scalar multiple q * I_n of the identity.
  static Matrix scalar(const AlgebraHandle& algebra, std::size_t n, const Element& q);
  /// The matrix with 1 at (i, j) and zero elsewhere. Throws IndexOutOfRange.
  static Matrix unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j,
                     const AlgebraHandle& algebra);
  static Matrix diagonal(const AlgebraHandle& algebra, const std::vector<Element>& diag);
  /// Builds a matrix from a grid of equally-shaped blocks per block row/column.
  static Matrix from_blocks(const std::vector<std::vector<Matrix>>& blocks);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const AlgebraHandle& algebra() const { return algebra_; }
  std::span<const Element> entries() const { return entries_; }

  /// 1-based access. Throws IndexOutOfRange.
  const Element& at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, Element value);

  bool is_zero() const;

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);

  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
  friend bool operator==(const Matrix& lhs, const Matrix& rhs);

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << m.to_string(); }

 private:
  std::size_t offset(std::size_t i, std::size_t j) const;

  AlgebraHandle algebra_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> entries_;
};

/// result(j, i) = conj(A(i, j)).
Matrix bar_transpose(const Matrix& a);

/// Every entry multiplied on the left by c.
Matrix scale_left(const Element& c, const Matrix& a);
/// Every entry multiplied on the right by c.
Matrix scale_right(const Matrix& a, const Element& c);
Matrix scale(const ExactRational& q, const Matrix& a);

/// diag(a, b) with zero off-diagonal blocks.
Matrix block_diagonal(const Matrix& a, const Matrix& b);

/// Two-sided inverse by Gauss-Jordan elimination using left row operations only,
/// so it is valid over any division ring. Throws ShapeMismatch for non-square
/// input, Singular when a column has no nonzero pivot candidate, and NotDivision
/// when the only candidates are zero divisors.
Matrix inverse(const Matrix& a);

/// True when inverse(a) succeeds.
bool is_invertible(const Matrix& a);

}  // namespace hmorita

#pragma once

#include "hmorita/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace hmorita {

enum class AlgebraKind { RationalField, QuadraticExtension, Quaternion };

/// A division algebra D over Q together with its standard involution:
///   - Q with the identity,
///   - Q(sqrt d) with sqrt d -> -sqrt d,
///   - the quaternion algebra (a,b)_Q (i^2 = a, j^2 = b, k = ij = -ji) with
///     x0 + x1 i + x2 j + x3 k -> x0 - x1 i - x2 j - x3 k.
///
/// Whether (a,b)_Q is actually a division algebra is not decided here; element
/// inversion throws NotDivision when it hits a zero divisor.
class AlgebraDescriptor {
 public:
  static std::shared_ptr<const AlgebraDescriptor> rational();
  /// d must be squarefree and different from 0 and 1. Throws InvalidDescriptor.
  static std::shared_ptr<const AlgebraDescriptor> quadratic(std::int64_t d);
  /// a and b must be nonzero. Throws InvalidDescriptor.
  static std::shared_ptr<const AlgebraDescriptor> quaternion(ExactRational a, ExactRational b);

  AlgebraKind kind() const { return kind_; }
  std::size_t dimension() const;
  std::int64_t d() const { return d_; }
  const ExactRational& a() const { return a_; }
  const ExactRational& b() const { return b_; }

  /// Human-readable name, e.g. "Q", "Q(sqrt(-1))", "(-1,-3)_Q".
  std::string name() const;

  friend bool operator==(const AlgebraDescriptor& lhs, const AlgebraDescriptor& rhs) {
    return lhs.kind_ == rhs.kind_ && lhs.d_ == rhs.d_ && lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
  }

 private:
  AlgebraDescriptor(AlgebraKind kind, std::int64_t d, ExactRational a, ExactRational b)
      : kind_(kind), d_(d), a_(std::move(a)), b_(std::move(b)) {}

  AlgebraKind kind_;
  std::int64_t d_;
  ExactRational a_;
  ExactRational b_;
};

using AlgebraHandle = std::shared_ptr<const AlgebraDescriptor>;

/// True when both handles denote the same algebra (pointer or value equality).
bool same_algebra(const AlgebraHandle& lhs, const AlgebraHandle& rhs);

/// Throws DescriptorMismatch unless same_algebra(lhs, rhs).
void require_same_algebra(const AlgebraHandle& lhs, const AlgebraHandle& rhs);

/// An element of D in coordinates: (x0) for Q, (x0, x1) for x0 + x1 sqrt d,
/// (x0, x1, x2, x3) for x0 + x1 i + x2 j + x3 k.
class Element {
 public:
  /// Throws ShapeMismatch if the coordinate count does not match the algebra.
  Element(AlgebraHandle algebra, std::vector<ExactRational> coords);

  static Element zero(const AlgebraHandle& algebra);
  static Element one(const AlgebraHandle& algebra);
  static Element from_rational(const AlgebraHandle& algebra, const ExactRational& q);

  const AlgebraHandle& algebra() const { return algebra_; }
  std::span<const ExactRational> coords() const { return coords_; }
  const ExactRational& coord(std::size_t index) const { return coords_.at(index); }

  bool is_zero() const;
  bool is_one() const;
  bool is_central() const;

  /// The standard involution of the algebra.
  Element conj() const;
  /// x * conj(x), which lies in Q for all three families.
  ExactRational norm() const;
  /// Throws DivisionByZero for 0 and NotDivision for a nonzero element of norm 0.
  Element inverse() const;

  Element operator-() const;
  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);

  friend Element operator+(Element lhs, const Element& rhs) { return lhs += rhs; }
  friend Element operator-(Element lhs, const Element& rhs) { return lhs -= rhs; }
  friend Element operator*(const Element& lhs, const Element& rhs);
  friend Element operator*(const ExactRational& q, const Element& x);

  friend bool operator==(const Element& lhs, const Element& rhs);

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Element& x) { return os << x.to_string(); }

 private:
  AlgebraHandle algebra_;
  std::vector<ExactRational> coords_;
};

inline Element conj(const Element& x) { return x.conj(); }

}  // namespace hmorita

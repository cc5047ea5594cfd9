#pragma once

#include "hmorita/matrix.hpp"

#include <memory>

namespace hmorita {

/// A sign +1 / -1. Used for epsilon and epsilon0.
enum class Sign : int { Plus = 1, Minus = -1 };

inline Sign operator*(Sign lhs, Sign rhs) {
  return static_cast<int>(lhs) * static_cast<int>(rhs) > 0 ? Sign::Plus : Sign::Minus;
}
inline int to_int(Sign s) { return static_cast<int>(s); }
inline ExactRational to_rational(Sign s) { return ExactRational(to_int(s)); }
inline Matrix operator*(Sign s, const Matrix& m) { return s == Sign::Plus ? m : -m; }

/// The adjoint involution X -> S conj(X)^t S^{-1} on M_n(D) of a nonsingular
/// epsilon0-hermitian form with matrix S. epsilon0 is read off from S, never
/// supplied.
class InvolutionSpec {
 public:
  /// Throws ShapeMismatch, Singular, NotDivision or NotEpsilonHermitian.
  static InvolutionSpec from_S(Matrix s);
  /// The spec with S = I_n, whose involution is plain bar-transpose.
  static InvolutionSpec bar_transpose(const AlgebraHandle& algebra, std::size_t n);

  std::size_t n() const { return s_.rows(); }
  const Matrix& S() const { return s_; }
  const Matrix& S_inv() const { return s_inv_; }
  Sign epsilon0() const { return epsilon0_; }
  const AlgebraHandle& algebra() const { return s_.algebra(); }

  /// S conj(X)^t S^{-1}. Throws ShapeMismatch or DescriptorMismatch.
  Matrix apply(const Matrix& x) const;

  /// Same S (hence the same involution and the same scaling).
  friend bool operator==(const InvolutionSpec& lhs, const InvolutionSpec& rhs) { return lhs.s_ == rhs.s_; }

 private:
  InvolutionSpec(Matrix s, Matrix s_inv, Sign epsilon0)
      : s_(std::move(s)), s_inv_(std::move(s_inv)), epsilon0_(epsilon0) {}

  Matrix s_;
  Matrix s_inv_;
  Sign epsilon0_;
};

using InvolutionHandle = std::shared_ptr<const InvolutionSpec>;

inline InvolutionHandle make_involution(Matrix s) {
  return std::make_shared<const InvolutionSpec>(InvolutionSpec::from_S(std::move(s)));
}

}  // namespace hmorita

#include "hmorita/involution.hpp"

#include "hmorita/errors.hpp"

namespace hmorita {

InvolutionSpec InvolutionSpec::from_S(Matrix s) {
  if (!s.is_square()) throw ShapeMismatch("S must be square");
  Matrix s_inv = inverse(s);
  const Matrix s_bar_t = hmorita::bar_transpose(s);
  Sign epsilon0 = Sign::Plus;
  if (s_bar_t == s) {
    epsilon0 = Sign::Plus;
  } else if (s_bar_t == -s) {
    epsilon0 = Sign::Minus;
  } else {
    throw NotEpsilonHermitian("conj(S)^t is neither S nor -S");
  }
  return InvolutionSpec(std::move(s), std::move(s_inv), epsilon0);
}

InvolutionSpec InvolutionSpec::bar_transpose(const AlgebraHandle& algebra, std::size_t n) {
  return from_S(Matrix::identity(algebra, n));
}

Matrix InvolutionSpec::apply(const Matrix& x) const {
  require_same_algebra(algebra(), x.algebra());
  if (x.rows() != n() || x.cols() != n()) {
    throw ShapeMismatch("involution on M_" + std::to_string(n()) + " applied to a " + std::to_string(x.rows()) +
                        "x" + std::to_string(x.cols()) + " matrix");
  }
  return s_ * hmorita::bar_transpose(x) * s_inv_;
}

}  // namespace hmorita

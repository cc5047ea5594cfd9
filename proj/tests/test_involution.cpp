#include "hmorita/errors.hpp"
#include "hmorita/involution.hpp"
#include "hmorita/random.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace hmorita;
using namespace hmorita::testing;

TEST(InvolutionSpec, DetectsEpsilon0) {
  for (const auto& alg : all_families()) {
    EXPECT_EQ(InvolutionSpec::from_S(Matrix::identity(alg, 3)).epsilon0(), Sign::Plus);
  }
  const auto rat = AlgebraDescriptor::rational();
  EXPECT_EQ(InvolutionSpec::from_S(int_mat(rat, {{0, 1}, {-1, 0}})).epsilon0(), Sign::Minus);
  const auto ham = AlgebraDescriptor::quaternion(-1, -1);
  EXPECT_EQ(InvolutionSpec::from_S(int_mat(ham, {{1, 0}, {0, -1}})).epsilon0(), Sign::Plus);
  const Quaternions h(ham);
  EXPECT_EQ(InvolutionSpec::from_S(Matrix::diagonal(ham, {h.i, h.j})).epsilon0(), Sign::Minus);
}

TEST(InvolutionSpec, RejectsBadS) {
  const auto rat = AlgebraDescriptor::rational();
  EXPECT_THROW(InvolutionSpec::from_S(int_mat(rat, {{1, 2}, {2, 4}})), Singular);
  EXPECT_THROW(InvolutionSpec::from_S(int_mat(rat, {{1, 2}, {3, 4}})), NotEpsilonHermitian);
  EXPECT_THROW(InvolutionSpec::from_S(Matrix(rat, 2, 3)), ShapeMismatch);
  const Quaternions h(AlgebraDescriptor::quaternion(-1, -1));
  // diag(1, i): conj^t gives diag(1, -i), neither S nor -S.
  EXPECT_THROW(InvolutionSpec::from_S(Matrix::diagonal(h.alg, {h.one, h.i})), NotEpsilonHermitian);
}

TEST(InvolutionSpec, ApplySymplecticExample) {
  const auto rat = AlgebraDescriptor::rational();
  const auto spec = InvolutionSpec::from_S(int_mat(rat, {{0, 1}, {-1, 0}}));
  // S X^t S^{-1} with X = [[1,2],[3,4]], multiplied out by hand.
  EXPECT_EQ(spec.apply(int_mat(rat, {{1, 2}, {3, 4}})), int_mat(rat, {{4, -2}, {-3, 1}}));
  EXPECT_THROW(spec.apply(Matrix(rat, 3, 3)), ShapeMismatch);
  EXPECT_THROW(spec.apply(Matrix(AlgebraDescriptor::quadratic(2), 2, 2)), DescriptorMismatch);
}

TEST(InvolutionSpec, IdentitySIsBarTranspose) {
  Rng rng(31);
  const auto alg = AlgebraDescriptor::quaternion(-1, -3);
  const auto spec = InvolutionSpec::bar_transpose(alg, 3);
  for (int t = 0; t < 20; ++t) {
    const Matrix x = rng.matrix(alg, 3, 3);
    EXPECT_EQ(spec.apply(x), bar_transpose(x));
  }
}

TEST(InvolutionProperties, AxiomsAndScalarAmbiguity) {
  Rng rng(32);
  for (const auto& alg : all_families()) {
    for (Sign eps0 : {Sign::Plus, Sign::Minus}) {
      for (std::size_t n = 1; n <= 3; ++n) {
        if (alg->kind() == AlgebraKind::RationalField && eps0 == Sign::Minus && n % 2 == 1) continue;
        const auto spec = InvolutionSpec::from_S(rng.involution_matrix(alg, n, eps0));
        ASSERT_EQ(spec.epsilon0(), eps0);
        ASSERT_EQ(spec.S() * spec.S_inv(), Matrix::identity(alg, n));
        for (const auto& lambda : {q(2), q(3), q(-1, 2)}) {
          const auto scaled = InvolutionSpec::from_S(scale(lambda, spec.S()));
          ASSERT_EQ(scaled.epsilon0(), spec.epsilon0());
          for (int t = 0; t < 5; ++t) {
            const Matrix x = rng.matrix(alg, n, n);
            ASSERT_EQ(scaled.apply(x), spec.apply(x));
          }
        }
        for (int t = 0; t < 10; ++t) {
          const Matrix x = rng.matrix(alg, n, n);
          const Matrix y = rng.matrix(alg, n, n);
          ASSERT_EQ(spec.apply(spec.apply(x)), x);
          ASSERT_EQ(spec.apply(x * y), spec.apply(y) * spec.apply(x));
          const Matrix c = Matrix::scalar(alg, n, Element::from_rational(alg, rng.rational()));
          ASSERT_EQ(spec.apply(c), c);
        }
      }
    }
  }
}

#include "hmorita/errors.hpp"
#include "hmorita/matrix.hpp"
#include "hmorita/random.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace hmorita;
using namespace hmorita::testing;

TEST(Matrix, UnitMatrixProductIdentity) {
  const auto alg = AlgebraDescriptor::quaternion(-1, -1);
  // k = 2, n = 3: e_{1 2} (2x3) times E_{2 3} (3x3) is e_{1 3}.
  EXPECT_EQ(Matrix::unit(2, 3, 1, 2, alg) * Matrix::unit(3, 3, 2, 3, alg), Matrix::unit(2, 3, 1, 3, alg));
}

TEST(Matrix, UnitMatrixLayout) {
  const auto rat = AlgebraDescriptor::rational();
  EXPECT_EQ(Matrix::unit(2, 2, 1, 2, rat), int_mat(rat, {{0, 1}, {0, 0}}));
  EXPECT_THROW(Matrix::unit(2, 2, 0, 1, rat), IndexOutOfRange);
  EXPECT_THROW(Matrix::unit(2, 2, 3, 1, rat), IndexOutOfRange);
  EXPECT_THROW(Matrix::unit(2, 3, 1, 4, rat), IndexOutOfRange);
}

TEST(Matrix, QuaternionProducts) {
  const Quaternions h(AlgebraDescriptor::quaternion(-1, -1));
  EXPECT_EQ(mat(h.alg, {{h.i}}) * mat(h.alg, {{h.j}}), mat(h.alg, {{h.k}}));
  EXPECT_EQ(mat(h.alg, {{h.j}}) * mat(h.alg, {{h.i}}), mat(h.alg, {{-h.k}}));
  EXPECT_EQ(scale_left(h.i, mat(h.alg, {{h.j}})), mat(h.alg, {{h.k}}));
  EXPECT_EQ(scale_right(mat(h.alg, {{h.j}}), h.i), mat(h.alg, {{-h.k}}));
}

TEST(Matrix, ShapeAndDescriptorErrors) {
  const auto a = AlgebraDescriptor::rational();
  const auto b = AlgebraDescriptor::quadratic(2);
  EXPECT_THROW(Matrix(a, 2, 3) * Matrix(a, 2, 3), ShapeMismatch);
  EXPECT_THROW(Matrix(a, 2, 2) + Matrix(a, 2, 3), ShapeMismatch);
  EXPECT_THROW(Matrix(a, 2, 2) * Matrix(b, 2, 2), DescriptorMismatch);
  EXPECT_THROW(Matrix(a, 2, 2, {Element::one(a)}), ShapeMismatch);
}

TEST(Matrix, AdditiveStructure) {
  Rng rng(3);
  const auto alg = AlgebraDescriptor::quaternion(-1, -3);
  const Matrix a = rng.matrix(alg, 2, 3);
  EXPECT_TRUE((a + (-a)).is_zero());
  EXPECT_EQ(scale_left(Element::one(alg), a), a);
}

TEST(Matrix, BarTranspose) {
  const Quaternions h(AlgebraDescriptor::quaternion(-1, -1));
  // e_{if} in D^{kxn} goes to e'_{fi} in D^{nxk}.
  EXPECT_EQ(bar_transpose(Matrix::unit(2, 3, 2, 3, h.alg)), Matrix::unit(3, 2, 3, 2, h.alg));
  EXPECT_EQ(bar_transpose(mat(h.alg, {{h.i, h.one}})), mat(h.alg, {{-h.i}, {h.one}}));
  const auto rat = AlgebraDescriptor::rational();
  EXPECT_EQ(bar_transpose(int_mat(rat, {{1, 2, 3}, {4, 5, 6}})), int_mat(rat, {{1, 4}, {2, 5}, {3, 6}}));
}

TEST(Matrix, UnitMatrixRowAndColumnSelection) {
  Rng rng(5);
  const auto alg = AlgebraDescriptor::quaternion(-1, -1);
  const std::size_t n = 3;
  for (int t = 0; t < 10; ++t) {
    const Matrix c = rng.matrix(alg, n, n);
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        const Matrix left = Matrix::unit(n, n, i, j, alg) * c;
        const Matrix right = c * Matrix::unit(n, n, i, j, alg);
        for (std::size_t r = 1; r <= n; ++r) {
          for (std::size_t s = 1; s <= n; ++s) {
            // E_ij C: row j of C moved to row i.
            EXPECT_EQ(left.at(r, s), r == i ? c.at(j, s) : Element::zero(alg));
            // C E_ij: column i of C moved to column j.
            EXPECT_EQ(right.at(r, s), s == j ? c.at(r, i) : Element::zero(alg));
          }
        }
      }
    }
  }
}

TEST(Matrix, UnitIdentitiesExhaustive) {
  const auto alg = AlgebraDescriptor::quaternion(-1, -1);
  for (std::size_t k = 1; k <= 4; ++k) {
    for (std::size_t n = 1; n <= 4; ++n) {
      for (std::size_t i = 1; i <= k; ++i) {
        for (std::size_t f = 1; f <= n; ++f) {
          for (std::size_t l = 1; l <= n; ++l) {
            ASSERT_EQ(Matrix::unit(k, n, i, f, alg) * Matrix::unit(n, n, f, l, alg), Matrix::unit(k, n, i, l, alg));
          }
          if (i <= n) {
            ASSERT_EQ(Matrix::unit(k, n, i, i, alg) * Matrix::unit(n, n, i, f, alg), Matrix::unit(k, n, i, f, alg));
          }
        }
      }
    }
  }
}

TEST(Matrix, InverseExamples) {
  const Quaternions h(AlgebraDescriptor::quaternion(-1, -1));
  EXPECT_EQ(inverse(Matrix::identity(h.alg, 3)), Matrix::identity(h.alg, 3));
  EXPECT_EQ(inverse(Matrix::diagonal(h.alg, {h.i, h.j})), Matrix::diagonal(h.alg, {-h.i, -h.j}));

  const Matrix m = mat(h.alg, {{h.one, h.i}, {h.j, h.k}});
  const Matrix m_inv = inverse(m);
  EXPECT_EQ(m * m_inv, Matrix::identity(h.alg, 2));
  EXPECT_EQ(m_inv * m, Matrix::identity(h.alg, 2));
  // Hand elimination: R2 - j R1 = [0, 2k], then R2 <- (-k/2) R2 and R1 <- R1 - i R2.
  const Element half(h.alg, {q(1, 2), 0, 0, 0});
  EXPECT_EQ(m_inv, mat(h.alg, {{half, -(half * h.j)}, {-(half * h.i), -(half * h.k)}}));
}

TEST(Matrix, InverseErrors) {
  const auto rat = AlgebraDescriptor::rational();
  EXPECT_THROW(inverse(int_mat(rat, {{1, 2}, {2, 4}})), Singular);
  EXPECT_THROW(inverse(Matrix(rat, 2, 3)), ShapeMismatch);
  const Quaternions split(AlgebraDescriptor::quaternion(1, 1));
  EXPECT_THROW(inverse(mat(split.alg, {{split.one + split.i}})), NotDivision);
}

TEST(Matrix, InverseNeedsRowSwap) {
  const auto alg = AlgebraDescriptor::quadratic(-1);
  const Matrix m = mat(alg, {{Element::zero(alg), el(alg, {0, 1})}, {el(alg, {1, 1}), Element::one(alg)}});
  const Matrix inv = inverse(m);
  EXPECT_EQ(m * inv, Matrix::identity(alg, 2));
}

TEST(MatrixProperties, RingLaws) {
  Rng rng(21);
  for (const auto& alg : all_families()) {
    for (int t = 0; t < 40; ++t) {
      const std::size_t r = 1 + rng.below(3);
      const std::size_t s = 1 + rng.below(3);
      const std::size_t u = 1 + rng.below(3);
      const std::size_t v = 1 + rng.below(3);
      const Matrix a = rng.matrix(alg, r, s);
      const Matrix b = rng.matrix(alg, s, u);
      const Matrix c = rng.matrix(alg, u, v);
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(bar_transpose(a * b), bar_transpose(b) * bar_transpose(a));
      ASSERT_EQ(bar_transpose(bar_transpose(a)), a);
      ASSERT_EQ(Matrix::identity(alg, r) * a, a);
      ASSERT_EQ(a * Matrix::identity(alg, s), a);
    }
  }
}

TEST(MatrixProperties, InverseIsTwoSided) {
  Rng rng(22);
  for (const auto& alg : all_families()) {
    for (int t = 0; t < 30; ++t) {
      const std::size_t n = 1 + rng.below(4);
      const Matrix a = rng.matrix(alg, n, n);
      try {
        const Matrix inv = inverse(a);
        ASSERT_EQ(a * inv, Matrix::identity(alg, n));
        ASSERT_EQ(inv * a, Matrix::identity(alg, n));
      } catch (const Singular&) {
      }
    }
  }
}

TEST(Matrix, FromBlocks) {
  const auto rat = AlgebraDescriptor::rational();
  const Matrix a = int_mat(rat, {{1, 2}});
  const Matrix b = int_mat(rat, {{3}});
  EXPECT_EQ(block_diagonal(a, b), int_mat(rat, {{1, 2, 0}, {0, 0, 3}}));
  EXPECT_THROW(Matrix::from_blocks({{a}, {b}}), ShapeMismatch);
}

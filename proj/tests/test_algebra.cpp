#include "hmorita/algebra.hpp"
#include "hmorita/errors.hpp"
#include "hmorita/random.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace hmorita;
using namespace hmorita::testing;

namespace {

// Quaternion product expanded over the basis table of (a,b)_Q, written out
// independently of the closed-form coordinates used by the library.
Element table_product(const Element& x, const Element& y) {
  const AlgebraHandle& alg = x.algebra();
  const ExactRational a = alg->a();
  const ExactRational b = alg->b();
  struct Cell {
    ExactRational coef;
    int index;
  };
  const Cell table[4][4] = {
      {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
      {{1, 1}, {a, 0}, {1, 3}, {a, 2}},
      {{1, 2}, {-1, 3}, {b, 0}, {-b, 1}},
      {{1, 3}, {-a, 2}, {b, 1}, {-(a * b), 0}},
  };
  std::vector<ExactRational> out(4);
  for (int s = 0; s < 4; ++s) {
    for (int t = 0; t < 4; ++t) {
      out[table[s][t].index] += table[s][t].coef * x.coord(s) * y.coord(t);
    }
  }
  return Element(alg, out);
}

}  // namespace

TEST(AlgebraDescriptor, Validation) {
  EXPECT_THROW(AlgebraDescriptor::quadratic(0), InvalidDescriptor);
  EXPECT_THROW(AlgebraDescriptor::quadratic(1), InvalidDescriptor);
  EXPECT_THROW(AlgebraDescriptor::quadratic(4), InvalidDescriptor);
  EXPECT_THROW(AlgebraDescriptor::quadratic(-12), InvalidDescriptor);
  EXPECT_THROW(AlgebraDescriptor::quadratic(18), InvalidDescriptor);
  EXPECT_NO_THROW(AlgebraDescriptor::quadratic(-1));
  EXPECT_NO_THROW(AlgebraDescriptor::quadratic(30));
  EXPECT_NO_THROW(AlgebraDescriptor::quadratic(2147483647));  // prime
  EXPECT_THROW(AlgebraDescriptor::quaternion(0, 1), InvalidDescriptor);
  EXPECT_THROW(AlgebraDescriptor::quaternion(1, 0), InvalidDescriptor);
  EXPECT_EQ(*AlgebraDescriptor::quaternion(-1, -1), *AlgebraDescriptor::quaternion(-1, -1));
  EXPECT_FALSE(*AlgebraDescriptor::quaternion(-1, -1) == *AlgebraDescriptor::quaternion(-1, -3));
}

TEST(Element, CoordinateCountMustMatch) {
  EXPECT_THROW(Element(AlgebraDescriptor::quadratic(2), {1}), ShapeMismatch);
}

TEST(Element, QuaternionRelations) {
  const Quaternions h(AlgebraDescriptor::quaternion(-1, -1));
  EXPECT_EQ(h.i * h.j, h.k);
  EXPECT_EQ(h.j * h.i, -h.k);
  EXPECT_EQ(h.i * h.i, -h.one);
  EXPECT_EQ(h.k * h.k, -h.one);
}

TEST(Element, QuadraticProduct) {
  const auto alg = AlgebraDescriptor::quadratic(5);
  EXPECT_EQ(el(alg, {1, 1}) * el(alg, {1, -1}), scalar(alg, -4));
}

TEST(Element, Conjugation) {
  const auto rat = AlgebraDescriptor::rational();
  EXPECT_EQ(el(rat, {q(3, 2)}).conj(), el(rat, {q(3, 2)}));
  const auto quad = AlgebraDescriptor::quadratic(5);
  EXPECT_EQ(el(quad, {1, 2}).conj(), el(quad, {1, -2}));
  const auto ham = AlgebraDescriptor::quaternion(-1, -1);
  EXPECT_EQ(el(ham, {1, 1, 1, 1}).conj(), el(ham, {1, -1, -1, -1}));
}

TEST(Element, Inverse) {
  const auto ham = AlgebraDescriptor::quaternion(-1, -1);
  EXPECT_EQ(el(ham, {1, 1, 0, 0}).inverse(), el(ham, {q(1, 2), q(-1, 2), 0, 0}));
  const auto quad = AlgebraDescriptor::quadratic(2);
  EXPECT_EQ(el(quad, {0, 1}).inverse(), el(quad, {0, q(1, 2)}));
  const auto split = AlgebraDescriptor::quaternion(1, 1);
  EXPECT_THROW(el(split, {1, 1, 0, 0}).inverse(), NotDivision);
  EXPECT_THROW(Element::zero(ham).inverse(), DivisionByZero);
}

TEST(Element, EmbeddingAndCentrality) {
  const Quaternions h(AlgebraDescriptor::quaternion(-1, -1));
  EXPECT_EQ(Element::from_rational(h.alg, 1), el(h.alg, {1, 0, 0, 0}));
  EXPECT_FALSE(h.i.is_central());
  EXPECT_TRUE(scalar(h.alg, 7).is_central());
  EXPECT_EQ(h.i + h.j, el(h.alg, {0, 1, 1, 0}));
  EXPECT_TRUE(el(AlgebraDescriptor::quadratic(2), {3, 4}).is_central());
}

TEST(Element, DescriptorMismatch) {
  const auto a = AlgebraDescriptor::quaternion(-1, -1);
  const auto b = AlgebraDescriptor::quaternion(-1, -3);
  EXPECT_THROW(Element::one(a) * Element::one(b), DescriptorMismatch);
  EXPECT_THROW(Element::one(a) + Element::one(b), DescriptorMismatch);
}

TEST(Element, Printing) {
  const Quaternions h(AlgebraDescriptor::quaternion(-1, -1));
  EXPECT_EQ(el(h.alg, {1, -1, q(1, 2), 0}).to_string(), "1 - i + 1/2*j");
  EXPECT_EQ(el(AlgebraDescriptor::quadratic(5), {0, 2}).to_string(), "2*sqrt(5)");
  EXPECT_EQ(Element::zero(h.alg).to_string(), "0");
}

TEST(ElementProperties, ProductMatchesBasisTable) {
  Rng rng(11);
  for (const auto& alg : {AlgebraDescriptor::quaternion(-1, -1), AlgebraDescriptor::quaternion(-1, -3),
                          AlgebraDescriptor::quaternion(2, 5), AlgebraDescriptor::quaternion(q(3, 2), -7)}) {
    for (int t = 0; t < 200; ++t) {
      const Element x = rng.element(alg);
      const Element y = rng.element(alg);
      ASSERT_EQ(x * y, table_product(x, y)) << alg->name() << " x=" << x << " y=" << y;
    }
  }
}

TEST(ElementProperties, InvolutionIsAntiAutomorphism) {
  Rng rng(12);
  auto families = all_families();
  families.push_back(AlgebraDescriptor::quaternion(2, 5));
  for (const auto& alg : families) {
    for (int t = 0; t < 200; ++t) {
      const Element x = rng.element(alg);
      const Element y = rng.element(alg);
      const Element z = rng.element(alg);
      ASSERT_EQ((x * y).conj(), y.conj() * x.conj()) << alg->name();
      ASSERT_EQ(x.conj().conj(), x);
      ASSERT_EQ((x * y) * z, x * (y * z));
      ASSERT_EQ(x * (y + z), x * y + x * z);
      const Element r = Element::from_rational(alg, rng.rational());
      ASSERT_EQ(r.conj(), r);
      ASSERT_EQ(x * x.conj(), Element::from_rational(alg, x.norm()));
      ASSERT_EQ((x * y).norm(), x.norm() * y.norm());
      if (!x.is_zero() && !x.norm().is_zero()) {
        ASSERT_TRUE((x * x.inverse()).is_one());
        ASSERT_TRUE((x.inverse() * x).is_one());
      }
    }
  }
}

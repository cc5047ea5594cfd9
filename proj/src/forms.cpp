#include "hmorita/forms.hpp"

#include "hmorita/errors.hpp"
#include "hmorita/random.hpp"

#include <algorithm>

namespace hmorita {

namespace {

// Fixed stream for the random probe pairs of the OverMnD_Star symmetry test.
constexpr std::uint64_t kSymmetryProbeSeed = 0x6d6f72697461ULL;
constexpr int kSymmetryRandomProbes = 20;
constexpr std::size_t kSymmetryUnitProbeLimit = 3;

void require_square(const Matrix& gram) {
  if (!gram.is_square()) {
    throw ShapeMismatch("Gram matrix must be square, got " + std::to_string(gram.rows()) + "x" +
                        std::to_string(gram.cols()));
  }
}

void require_argument_shape(const FormRecord& form, const Matrix& x, const char* which) {
  require_same_algebra(form.algebra(), x.algebra());
  if (x.rows() != form.k() || x.cols() != form.n()) {
    throw ShapeMismatch(std::string("argument ") + which + " must be " + std::to_string(form.k()) + "x" +
                        std::to_string(form.n()) + ", got " + std::to_string(x.rows()) + "x" +
                        std::to_string(x.cols()));
  }
}

bool symmetric_on(const FormRecord& form, Sign sign, const Matrix& x, const Matrix& y) {
  return evaluate(form, y, x) == sign * form.value_involution(evaluate(form, x, y));
}

bool star_symmetry_by_probes(const FormRecord& form, Sign sign) {
  const std::size_t k = form.k();
  const std::size_t n = form.n();
  const AlgebraHandle& alg = form.algebra();
  const std::size_t limit = std::min({k, n, kSymmetryUnitProbeLimit});
  for (std::size_t i = 1; i <= limit; ++i) {
    for (std::size_t j = 1; j <= limit; ++j) {
      if (!symmetric_on(form, sign, Matrix::unit(k, n, i, i, alg), Matrix::unit(k, n, j, j, alg))) return false;
      for (std::size_t f = 1; f <= limit; ++f) {
        for (std::size_t g = 1; g <= limit; ++g) {
          if (!symmetric_on(form, sign, Matrix::unit(k, n, i, f, alg), Matrix::unit(k, n, j, g, alg))) {
            return false;
          }
        }
      }
    }
  }
  Rng rng(kSymmetryProbeSeed);
  for (int t = 0; t < kSymmetryRandomProbes; ++t) {
    const Matrix x = rng.matrix(alg, k, n);
    const Matrix y = rng.matrix(alg, k, n);
    if (!symmetric_on(form, sign, x, y)) return false;
  }
  return true;
}

// h = S conj(x)^t T y is eps-hermitian for * exactly when conj(T)^t = epsilon0 eps T,
// so construction checks the Gram; check_symmetry still decides by probes.
bool gram_has_sign(const FormRecord& form, Sign eps) {
  const Sign sign = gram_sign(form.side(), form.involution(), eps);
  return bar_transpose(form.gram()) == sign * form.gram();
}

void validate_epsilon(const FormRecord& form) {
  if (form.epsilon() && !gram_has_sign(form, *form.epsilon())) {
    throw NotEpsilonHermitian("form over " + to_string(form.side()) + " is not " +
                              epsilon_to_string(form.epsilon()) + "-hermitian");
  }
}

bool same_involution(const FormRecord& f, const FormRecord& g) {
  if (f.n() != g.n()) return false;
  if (f.side() != Side::OverMnD_Star) return true;
  return *f.involution() == *g.involution();
}

}  // namespace

std::string to_string(Side side) {
  switch (side) {
    case Side::OverD: return "D";
    case Side::OverMnD_BarT: return "MnD_bar_t";
    case Side::OverMnD_Star: return "MnD_star";
  }
  return {};
}

std::string to_string(Symmetry symmetry) {
  switch (symmetry) {
    case Symmetry::Hermitian: return "hermitian";
    case Symmetry::SkewHermitian: return "skew-hermitian";
    case Symmetry::SesquilinearOnly: return "sesquilinear";
  }
  return {};
}

std::string epsilon_to_string(const Epsilon& eps) {
  if (!eps) return "none";
  return *eps == Sign::Plus ? "1" : "-1";
}

FormRecord FormRecord::over_d(Matrix gram, Epsilon eps) {
  require_square(gram);
  FormRecord form(Side::OverD, std::move(gram), 1, eps, nullptr);
  validate_epsilon(form);
  return form;
}

FormRecord FormRecord::over_bar_t(Matrix gram, std::size_t n, Epsilon eps) {
  require_square(gram);
  if (n == 0) throw ShapeMismatch("n must be positive");
  FormRecord form(Side::OverMnD_BarT, std::move(gram), n, eps, nullptr);
  validate_epsilon(form);
  return form;
}

FormRecord FormRecord::over_star(Matrix gram, InvolutionHandle involution, Epsilon eps) {
  require_square(gram);
  if (!involution) throw SideMismatch("a form over (M_n(D), *) needs its involution");
  require_same_algebra(gram.algebra(), involution->algebra());
  const std::size_t n = involution->n();
  FormRecord form(Side::OverMnD_Star, std::move(gram), n, eps, std::move(involution));
  validate_epsilon(form);
  return form;
}

Matrix FormRecord::value_involution(const Matrix& value) const {
  if (side_ == Side::OverMnD_Star) return involution_->apply(value);
  return bar_transpose(value);
}

bool operator==(const FormRecord& lhs, const FormRecord& rhs) {
  if (lhs.side_ != rhs.side_ || lhs.n_ != rhs.n_ || lhs.epsilon_ != rhs.epsilon_ || !(lhs.gram_ == rhs.gram_)) {
    return false;
  }
  if (lhs.side_ == Side::OverMnD_Star) return *lhs.involution_ == *rhs.involution_;
  return true;
}

Matrix evaluate(const FormRecord& form, const Matrix& x, const Matrix& y) {
  require_argument_shape(form, x, "x");
  require_argument_shape(form, y, "y");
  Matrix value = bar_transpose(x) * form.gram() * y;
  if (form.side() == Side::OverMnD_Star) return form.involution()->S() * value;
  return value;
}

FormEvaluator gram_evaluator(const FormRecord& form) {
  return [form](const Matrix& x, const Matrix& y) { return evaluate(form, x, y); };
}

bool satisfies_symmetry(const FormRecord& form, Sign sign) {
  if (form.side() == Side::OverMnD_Star) return star_symmetry_by_probes(form, sign);
  return bar_transpose(form.gram()) == sign * form.gram();
}

Symmetry check_symmetry(const FormRecord& form) {
  if (satisfies_symmetry(form, Sign::Plus)) return Symmetry::Hermitian;
  if (satisfies_symmetry(form, Sign::Minus)) return Symmetry::SkewHermitian;
  return Symmetry::SesquilinearOnly;
}

bool check_sesquilinear(const FormRecord& form, std::uint64_t seed, int trials) {
  Rng rng(seed);
  const AlgebraHandle& alg = form.algebra();
  const std::size_t k = form.k();
  const std::size_t n = form.n();
  for (int t = 0; t < trials; ++t) {
    const Matrix x = rng.matrix(alg, k, n);
    const Matrix x2 = rng.matrix(alg, k, n);
    const Matrix y = rng.matrix(alg, k, n);
    const Matrix alpha = rng.matrix(alg, n, n);
    const Matrix hxy = evaluate(form, x, y);
    if (!(evaluate(form, x + x2, y) == hxy + evaluate(form, x2, y))) return false;
    if (!(evaluate(form, y, x + x2) == evaluate(form, y, x) + evaluate(form, y, x2))) return false;
    if (!(evaluate(form, x * alpha, y) == form.value_involution(alpha) * hxy)) return false;
    if (!(evaluate(form, x, y * alpha) == hxy * alpha)) return false;
  }
  return true;
}

bool is_nonsingular(const FormRecord& form) { return is_invertible(form.gram()); }

FormRecord orthogonal_sum(const FormRecord& f, const FormRecord& g) {
  if (f.side() != g.side() || !same_involution(f, g)) {
    throw SideMismatch("orthogonal sum of forms over different rings with involution");
  }
  if (f.epsilon() != g.epsilon()) {
    throw EpsilonMismatch("orthogonal sum of " + epsilon_to_string(f.epsilon()) + " and " +
                          epsilon_to_string(g.epsilon()) + " forms");
  }
  Matrix gram = block_diagonal(f.gram(), g.gram());
  switch (f.side()) {
    case Side::OverD: return FormRecord::over_d(std::move(gram), f.epsilon());
    case Side::OverMnD_BarT: return FormRecord::over_bar_t(std::move(gram), f.n(), f.epsilon());
    case Side::OverMnD_Star: return FormRecord::over_star(std::move(gram), f.involution(), f.epsilon());
  }
  throw SideMismatch("unknown side");
}

namespace {

FormRecord with_gram(const FormShape& shape, Matrix gram, Epsilon eps) {
  switch (shape.side) {
    case Side::OverD: return FormRecord::over_d(std::move(gram), eps);
    case Side::OverMnD_BarT: return FormRecord::over_bar_t(std::move(gram), shape.n, eps);
    case Side::OverMnD_Star: return FormRecord::over_star(std::move(gram), shape.involution, eps);
  }
  throw SideMismatch("unknown side");
}

}  // namespace

FormRecord hyperbolic(std::size_t rank, Sign eps, const FormShape& shape) {
  const AlgebraHandle alg = shape.side == Side::OverMnD_Star && shape.involution ? shape.involution->algebra()
                                                                                  : shape.algebra;
  if (shape.side == Side::OverMnD_Star && !shape.involution) {
    throw SideMismatch("hyperbolic form over (M_n(D), *) needs its involution");
  }
  Matrix block = [&] {
    if (shape.side != Side::OverMnD_Star) {
      return Matrix::from_blocks({{Matrix(alg, 1, 1), Matrix::identity(alg, 1)},
                                  {eps * Matrix::identity(alg, 1), Matrix(alg, 1, 1)}});
    }
    const Matrix& s_inv = shape.involution->S_inv();
    const std::size_t n = shape.involution->n();
    return Matrix::from_blocks({{Matrix(alg, n, n), s_inv}, {eps * s_inv, Matrix(alg, n, n)}});
  }();
  Matrix gram(alg, 0, 0);
  for (std::size_t r = 0; r < rank; ++r) gram = block_diagonal(gram, block);
  return with_gram(shape, std::move(gram), eps);
}

FormRecord congruence(const FormRecord& form, const Matrix& q) {
  require_same_algebra(form.algebra(), q.algebra());
  if (q.rows() != form.k() || q.cols() != form.k()) {
    throw ShapeMismatch("congruence matrix must be " + std::to_string(form.k()) + "x" + std::to_string(form.k()));
  }
  if (!is_invertible(q)) throw Singular("congruence matrix is not invertible");
  Matrix gram = bar_transpose(q) * form.gram() * q;
  FormShape shape{form.side(), form.algebra(), form.k(), form.n(), form.involution()};
  return with_gram(shape, std::move(gram), form.epsilon());
}

Sign gram_sign(Side side, const InvolutionHandle& involution, Sign eps) {
  if (side == Side::OverMnD_Star) return involution->epsilon0() * eps;
  return eps;
}

FormRecord random_form(const FormShape& shape, Epsilon eps, std::uint64_t seed) {
  if (shape.side == Side::OverMnD_Star && !shape.involution) {
    throw SideMismatch("random form over (M_n(D), *) needs its involution");
  }
  const AlgebraHandle alg = shape.involution ? shape.involution->algebra() : shape.algebra;
  Rng rng(seed);
  Matrix gram = eps ? rng.epsilon_hermitian(alg, shape.k, gram_sign(shape.side, shape.involution, *eps))
                    : rng.matrix(alg, shape.k, shape.k);
  return with_gram(shape, std::move(gram), eps);
}

}  // namespace hmorita

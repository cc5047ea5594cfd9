#include "hmorita/morita.hpp"

#include "hmorita/errors.hpp"

#include <algorithm>
#include <sstream>

namespace hmorita {

namespace {

constexpr std::size_t kDefaultVerificationRange = 2;

std::string bool_string(bool value) { return value ? "true" : "false"; }

Epsilon times(Sign s, const Epsilon& eps) {
  if (!eps) return std::nullopt;
  return s * *eps;
}

Matrix probe(const FormEvaluator& h, std::size_t k, std::size_t n, const AlgebraHandle& algebra, std::size_t i,
             std::size_t f, std::size_t j, std::size_t g) {
  Matrix value = h(Matrix::unit(k, n, i, f, algebra), Matrix::unit(k, n, j, g, algebra));
  if (value.rows() != n || value.cols() != n) {
    throw InconsistentEvaluator("evaluator returned a " + std::to_string(value.rows()) + "x" +
                                std::to_string(value.cols()) + " value, expected " + std::to_string(n) + "x" +
                                std::to_string(n));
  }
  require_same_algebra(algebra, value.algebra());
  return value;
}

}  // namespace

std::string serialize_report(const EquivalenceReport& report) {
  std::ostringstream os;
  os << "input_side: " << to_string(report.input_side) << "\n"
     << "output_side: " << to_string(report.output_side) << "\n"
     << "input_epsilon: " << epsilon_to_string(report.input_epsilon) << "\n"
     << "output_epsilon: " << epsilon_to_string(report.output_epsilon) << "\n"
     << "witness: " << (report.witness ? report.witness->to_string() : "none") << "\n"
     << "exact_roundtrip: " << bool_string(report.exact_roundtrip) << "\n"
     << "depends_on_s_choice: " << bool_string(report.depends_on_s_choice) << "\n";
  return os.str();
}

FormRecord scale_form(const FormRecord& form) {
  if (form.side() != Side::OverMnD_Star) {
    throw SideMismatch("scale_form expects a form over (M_n(D), *), got " + to_string(form.side()));
  }
  // S^{-1} (S conj(x)^t T y) = conj(x)^t T y.
  const Epsilon out = times(form.involution()->epsilon0(), form.epsilon());
  try {
    return FormRecord::over_bar_t(form.gram(), form.n(), out);
  } catch (const NotEpsilonHermitian& e) {
    throw InvariantViolation(std::string("scaled form lost its symmetry: ") + e.what());
  }
}

FormRecord unscale_form(const FormRecord& form, const InvolutionHandle& involution) {
  if (form.side() != Side::OverMnD_BarT) {
    throw SideMismatch("unscale_form expects a form over (M_n(D), -^t), got " + to_string(form.side()));
  }
  if (!involution || involution->n() != form.n()) throw SideMismatch("involution size does not match the form");
  const Epsilon out = times(involution->epsilon0(), form.epsilon());
  try {
    return FormRecord::over_star(form.gram(), involution, out);
  } catch (const NotEpsilonHermitian& e) {
    throw InvariantViolation(std::string("unscaled form lost its symmetry: ") + e.what());
  }
}

std::size_t probe_column(std::size_t i, std::size_t n) { return (i - 1) % n + 1; }

Matrix extract_gram(const FormEvaluator& h, std::size_t k, std::size_t n, const AlgebraHandle& algebra,
                    ProbeMode mode) {
  if (k == 0 || n == 0) throw ShapeMismatch("extract_gram needs k, n >= 1");
  Matrix b(algebra, k, k);
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t j = 1; j <= k; ++j) {
      const std::size_t f = probe_column(i, n);
      const std::size_t g = probe_column(j, n);
      const Matrix value = probe(h, k, n, algebra, i, f, j, g);
      const Element m = value.at(f, g);
      if (!(value == scale_left(m, Matrix::unit(n, n, f, g, algebra)))) {
        throw InconsistentEvaluator("base probe for (" + std::to_string(i) + ", " + std::to_string(j) +
                                    ") has a nonzero entry outside (" + std::to_string(f) + ", " +
                                    std::to_string(g) + ")");
      }
      b.set(i, j, m);
    }
  }

  const std::size_t range = mode == ProbeMode::Strict ? n : std::min(n, kDefaultVerificationRange);
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t j = 1; j <= k; ++j) {
      for (std::size_t f = 1; f <= range; ++f) {
        for (std::size_t g = 1; g <= range; ++g) {
          const Matrix value = probe(h, k, n, algebra, i, f, j, g);
          if (!(value == scale_left(b.at(i, j), Matrix::unit(n, n, f, g, algebra)))) {
            throw InconsistentEvaluator("h(e_" + std::to_string(i) + std::to_string(f) + ", e_" +
                                        std::to_string(j) + std::to_string(g) +
                                        ") is not b_ij E_fg; the evaluator is not -^t-sesquilinear");
          }
        }
      }
    }
  }
  return b;
}

FormRecord lift_form(const FormRecord& phi, std::size_t n) {
  if (phi.side() != Side::OverD) throw SideMismatch("lift_form expects a form over (D, -)");
  return FormRecord::over_bar_t(phi.gram(), n, phi.epsilon());
}

FormRecord extract_form(const FormRecord& form, ProbeMode mode) {
  if (form.side() != Side::OverMnD_BarT) throw SideMismatch("extract_form expects a form over (M_n(D), -^t)");
  Matrix b = extract_gram(gram_evaluator(form), form.k(), form.n(), form.algebra(), mode);
  try {
    return FormRecord::over_d(std::move(b), form.epsilon());
  } catch (const NotEpsilonHermitian& e) {
    throw InvariantViolation(std::string("extracted Gram lost its symmetry: ") + e.what());
  }
}

Reduction morita_reduce(const FormRecord& form, ProbeMode mode) {
  FormRecord reduced = extract_form(scale_form(form), mode);
  EquivalenceReport report;
  report.input_side = form.side();
  report.output_side = reduced.side();
  report.input_epsilon = form.epsilon();
  report.output_epsilon = reduced.epsilon();
  report.exact_roundtrip = morita_lift(reduced, form.involution()) == form;
  report.depends_on_s_choice = true;
  return {std::move(reduced), std::move(report)};
}

FormRecord morita_reduce_fused(const FormRecord& form) {
  if (form.side() != Side::OverMnD_Star) throw SideMismatch("morita_reduce expects a form over (M_n(D), *)");
  return FormRecord::over_d(form.gram(), times(form.involution()->epsilon0(), form.epsilon()));
}

FormRecord morita_lift(const FormRecord& phi, const InvolutionHandle& involution) {
  if (!involution) throw SideMismatch("morita_lift needs an involution");
  return unscale_form(lift_form(phi, involution->n()), involution);
}

FormRecord rescale_involution(const FormRecord& form, const ExactRational& lambda) {
  if (form.side() != Side::OverMnD_Star) throw SideMismatch("rescale_involution expects a form over (M_n(D), *)");
  const ExactRational inv = lambda.inverse();
  auto involution = make_involution(scale(lambda, form.involution()->S()));
  return FormRecord::over_star(scale(inv, form.gram()), std::move(involution), form.epsilon());
}

HyperbolicTransport hyperbolic_transport(const InvolutionHandle& involution, Sign eps) {
  const AlgebraHandle& alg = involution->algebra();
  const std::size_t n = involution->n();
  const Matrix zero(alg, n, n);
  const Matrix id = Matrix::identity(alg, n);
  const FormShape shape{Side::OverMnD_Star, alg, 2 * n, n, involution};

  HyperbolicTransport out{
      .scaled_gram = scale_form(hyperbolic(1, eps, shape)).gram(),
      .witness = block_diagonal(id, involution->S()),
      .transported_gram = Matrix(alg, 0, 0),
      .expected_gram = Matrix::from_blocks({{zero, id}, {(involution->epsilon0() * eps) * id, zero}}),
      .output_epsilon = involution->epsilon0() * eps,
  };
  out.transported_gram = bar_transpose(out.witness) * out.scaled_gram * out.witness;
  return out;
}

}  // namespace hmorita

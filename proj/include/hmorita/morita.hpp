#pragma once

#include "hmorita/forms.hpp"

#include <optional>
#include <string>

namespace hmorita {

/// Sign bookkeeping for one application of a correspondence.
struct EquivalenceReport {
  Side input_side = Side::OverMnD_Star;
  Side output_side = Side::OverD;
  Epsilon input_epsilon;
  Epsilon output_epsilon;
  /// Congruence witness, when the operation produces one.
  std::optional<Matrix> witness;
  bool exact_roundtrip = false;
  /// The result depends on the chosen S, which is only fixed up to a rational
  /// multiple by the involution.
  bool depends_on_s_choice = false;
};

/// One "key: value" line per field, no trailing spaces.
std::string serialize_report(const EquivalenceReport& report);

/// (x, y) -> S^{-1} h(x, y). With h = S conj(x)^t T y the result is the
/// OverMnD_BarT form with Gram T; an eps-hermitian input becomes
/// epsilon0*eps-hermitian (validated), a sesquilinear one stays sesquilinear.
/// Throws SideMismatch unless form is OverMnD_Star.
FormRecord scale_form(const FormRecord& form);

/// Left inverse of scale_form for the given involution. Throws SideMismatch
/// unless form is OverMnD_BarT with n matching the involution.
FormRecord unscale_form(const FormRecord& form, const InvolutionHandle& involution);

enum class ProbeMode {
  /// Verification probes h(e_if, e_jg) for f, g <= min(n, 2).
  Default,
  /// Verification probes for every f, g <= n.
  Strict,
};

/// Column used to probe row i of D^{kxn}: i itself when i <= n, otherwise
/// wrapped into 1..n.
std::size_t probe_column(std::size_t i, std::size_t n);

/// Recovers B with h(x, y) = conj(x)^t B y from a black-box -^t-sesquilinear
/// form on D^{kxn}, using only evaluations of h on unit matrices.
///
/// For each i, j the base probe h(e_{if}, e_{jg}) with f = probe_column(i),
/// g = probe_column(j) must be zero except at (f, g); that entry is B(i, j).
/// Verification probes then check h(e_{if}, e_{jg}) = B(i, j) E_{fg} over the
/// range selected by `mode`. Throws InconsistentEvaluator on any violation.
Matrix extract_gram(const FormEvaluator& h, std::size_t k, std::size_t n, const AlgebraHandle& algebra,
                    ProbeMode mode = ProbeMode::Default);

/// The form (x, y) -> conj(x)^t B y on D^{kxn} for phi over D with Gram B.
/// Throws SideMismatch unless phi is OverD.
FormRecord lift_form(const FormRecord& phi, std::size_t n);

/// Inverse of lift_form: extract the Gram of an OverMnD_BarT form through its
/// evaluator. The epsilon label is carried over.
FormRecord extract_form(const FormRecord& form, ProbeMode mode = ProbeMode::Default);

struct Reduction {
  FormRecord form;
  EquivalenceReport report;
};

/// extract_form(scale_form(form)): a form over (M_n(D), *) to one over (D, -),
/// with output epsilon = epsilon0 * input epsilon.
Reduction morita_reduce(const FormRecord& form, ProbeMode mode = ProbeMode::Default);

/// Shortcut for morita_reduce: under the S conj(x)^t T y parameterization the
/// reduced Gram is T itself. Kept separate so the factored route stays tested.
FormRecord morita_reduce_fused(const FormRecord& form);

/// unscale_form(lift_form(phi, n), involution).
FormRecord morita_lift(const FormRecord& phi, const InvolutionHandle& involution);

/// Re-expresses a form over (M_n(D), *) with S replaced by lambda S. The
/// involution and every value h(x, y) are unchanged; the stored Gram becomes
/// T / lambda. Throws DivisionByZero for lambda = 0.
FormRecord rescale_involution(const FormRecord& form, const ExactRational& lambda);

/// Transport of the hyperbolic plane over (M_n(D), *) along the scaling.
struct HyperbolicTransport {
  /// Gram of the scaled form over (M_n(D), -^t): [[0, S^-1], [eps S^-1, 0]].
  Matrix scaled_gram;
  /// diag(I, S).
  Matrix witness;
  /// conj(witness)^t scaled_gram witness.
  Matrix transported_gram;
  /// [[0, I], [epsilon0 eps I, 0]].
  Matrix expected_gram;
  Sign output_epsilon = Sign::Plus;

  bool exact() const { return transported_gram == expected_gram; }
};

HyperbolicTransport hyperbolic_transport(const InvolutionHandle& involution, Sign eps);

}  // namespace hmorita

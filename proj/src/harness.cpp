#include "hmorita/harness.hpp"

#include "hmorita/errors.hpp"
#include "hmorita/random.hpp"

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

namespace hmorita {

namespace {

constexpr int kSetupAttempts = 8;
constexpr int kRandomPairs = 5;

struct TrialContext {
  AlgebraHandle algebra;
  std::size_t n = 1;
  std::size_t k = 1;
  Sign epsilon0 = Sign::Plus;
  Sign epsilon = Sign::Plus;
  InvolutionHandle involution;
};

AlgebraHandle draw_algebra(Rng& rng) {
  switch (rng.below(7)) {
    case 0: return AlgebraDescriptor::rational();
    case 1: return AlgebraDescriptor::quadratic(-1);
    case 2: return AlgebraDescriptor::quadratic(2);
    case 3: return AlgebraDescriptor::quadratic(5);
    case 4: return AlgebraDescriptor::quaternion(-1, -1);
    case 5: return AlgebraDescriptor::quaternion(-1, -3);
    default: return AlgebraDescriptor::quaternion(2, 5);
  }
}

Sign draw_sign(Rng& rng) { return rng.coin() ? Sign::Plus : Sign::Minus; }

// Over Q the involution is trivial, so skew matrices of odd size are singular.
std::size_t admissible_size(const AlgebraHandle& algebra, Sign sign, std::size_t size) {
  if (algebra->kind() == AlgebraKind::RationalField && sign == Sign::Minus && size % 2 == 1) return 2;
  return size;
}

TrialContext draw_context(Rng& rng) {
  TrialContext ctx;
  ctx.algebra = draw_algebra(rng);
  ctx.epsilon0 = draw_sign(rng);
  ctx.epsilon = draw_sign(rng);
  ctx.n = admissible_size(ctx.algebra, ctx.epsilon0, 1 + rng.below(3));
  ctx.k = admissible_size(ctx.algebra, ctx.epsilon0 * ctx.epsilon, 1 + rng.below(3));
  ctx.involution = make_involution(rng.involution_matrix(ctx.algebra, ctx.n, ctx.epsilon0));
  return ctx;
}

FormShape star_shape(const TrialContext& ctx) {
  return FormShape{Side::OverMnD_Star, ctx.algebra, ctx.k, ctx.n, ctx.involution};
}

FormShape shape_on(const TrialContext& ctx, Side side) {
  return FormShape{side, ctx.algebra, ctx.k, side == Side::OverD ? 1 : ctx.n,
                   side == Side::OverMnD_Star ? ctx.involution : nullptr};
}

// Nonsingular random form; the Gram of a random eps-hermitian draw is singular
// only on a thin set, so a handful of reseeds suffices.
FormRecord nonsingular_form(const FormShape& shape, Epsilon eps, Rng& rng) {
  for (int attempt = 0; attempt < kSetupAttempts; ++attempt) {
    FormRecord f = random_form(shape, eps, rng.next());
    if (is_nonsingular(f)) return f;
  }
  throw Singular("no nonsingular form drawn");
}

Matrix extract_with_structure_check(const FormRecord& form, ProbeMode mode) {
  const std::size_t n = form.n();
  const FormEvaluator base = gram_evaluator(form);
  // Every probe on unit matrices e_{if}, e_{jg} must be supported on (f, g) alone.
  FormEvaluator watched = [&](const Matrix& x, const Matrix& y) {
    Matrix value = base(x, y);
    std::size_t f = 0;
    std::size_t g = 0;
    for (std::size_t i = 1; i <= x.rows(); ++i) {
      for (std::size_t c = 1; c <= n; ++c) {
        if (!x.at(i, c).is_zero()) f = c;
        if (!y.at(i, c).is_zero()) g = c;
      }
    }
    for (std::size_t r = 1; r <= n; ++r) {
      for (std::size_t c = 1; c <= n; ++c) {
        if ((r != f || c != g) && !value.at(r, c).is_zero()) {
          throw InvariantViolation("probe value has a nonzero entry outside its (f, g) slot");
        }
      }
    }
    return value;
  };
  return extract_gram(watched, form.k(), n, form.algebra(), mode);
}

using Check = std::function<bool(const TrialContext&, Rng&, std::string&)>;

struct NamedCheck {
  const char* name;
  Check check;
};

std::vector<NamedCheck> build_checks(ProbeMode mode) {
  std::vector<NamedCheck> checks;

  checks.push_back({"scale_sign_law", [](const TrialContext& ctx, Rng& rng, std::string& why) {
    const FormRecord f = nonsingular_form(star_shape(ctx), ctx.epsilon, rng);
    const Symmetry expected =
        ctx.epsilon0 * ctx.epsilon == Sign::Plus ? Symmetry::Hermitian : Symmetry::SkewHermitian;
    const Symmetry got = check_symmetry(scale_form(f));
    if (got != expected) why = "scaled form is " + to_string(got) + ", expected " + to_string(expected);
    return got == expected;
  }});

  checks.push_back({"scale_is_s_inverse_times_h", [](const TrialContext& ctx, Rng& rng, std::string& why) {
    const FormRecord f = random_form(star_shape(ctx), std::nullopt, rng.next());
    const FormRecord scaled = scale_form(f);
    for (int t = 0; t < kRandomPairs; ++t) {
      const Matrix x = rng.matrix(ctx.algebra, ctx.k, ctx.n);
      const Matrix y = rng.matrix(ctx.algebra, ctx.k, ctx.n);
      if (!(evaluate(scaled, x, y) == ctx.involution->S_inv() * evaluate(f, x, y))) {
        why = "scaled evaluator differs from S^-1 h";
        return false;
      }
    }
    if (!check_sesquilinear(scaled, rng.next(), kRandomPairs)) {
      why = "scaled sesquilinear form fails the -^t sesquilinearity probes";
      return false;
    }
    return true;
  }});

  checks.push_back({"unscale_roundtrip", [](const TrialContext& ctx, Rng& rng, std::string& why) {
    const Epsilon eps = rng.coin() ? Epsilon(ctx.epsilon) : std::nullopt;
    const FormRecord f = random_form(star_shape(ctx), eps, rng.next());
    const bool ok = unscale_form(scale_form(f), ctx.involution) == f;
    if (!ok) why = "unscale(scale(f)) != f";
    return ok;
  }});

  checks.push_back({"involution_axioms", [](const TrialContext& ctx, Rng& rng, std::string& why) {
    const InvolutionSpec& inv = *ctx.involution;
    const Matrix x = rng.matrix(ctx.algebra, ctx.n, ctx.n);
    const Matrix y = rng.matrix(ctx.algebra, ctx.n, ctx.n);
    const Matrix q = Matrix::scalar(ctx.algebra, ctx.n, Element::from_rational(ctx.algebra, rng.rational()));
    if (!(inv.apply(inv.apply(x)) == x)) why = "involution is not of order two";
    else if (!(inv.apply(x * y) == inv.apply(y) * inv.apply(x))) why = "involution is not an anti-automorphism";
    else if (!(inv.apply(q) == q)) why = "involution moves a rational scalar matrix";
    return why.empty();
  }});

  checks.push_back({"evaluator_symmetry", [](const TrialContext& ctx, Rng& rng, std::string& why) {
    const FormRecord f = random_form(star_shape(ctx), ctx.epsilon, rng.next());
    for (int t = 0; t < kRandomPairs; ++t) {
      const Matrix x = rng.matrix(ctx.algebra, ctx.k, ctx.n);
      const Matrix y = rng.matrix(ctx.algebra, ctx.k, ctx.n);
      if (!(evaluate(f, y, x) == ctx.epsilon * ctx.involution->apply(evaluate(f, x, y)))) {
        why = "h(y,x) != eps h(x,y)^*";
        return false;
      }
    }
    return true;
  }});

  checks.push_back({"sesquilinearity", [](const TrialContext& ctx, Rng& rng, std::string& why) {
    const FormRecord f = random_form(star_shape(ctx), std::nullopt, rng.next());
    const bool ok = check_sesquilinear(f, rng.next(), kRandomPairs);
    if (!ok) why = "*-sesquilinearity probe failed";
    return ok;
  }});

  checks.push_back({"extract_recovers_gram", [mode](const TrialContext& ctx, Rng& rng, std::string& why) {
    const Epsilon eps = rng.coin() ? Epsilon(ctx.epsilon) : std::nullopt;
    const FormRecord f = random_form(shape_on(ctx, Side::OverMnD_BarT), eps, rng.next());
    const Matrix b = extract_with_structure_check(f, mode);
    if (!(b == f.gram())) {
      why = "extracted Gram differs from the stored one";
      return false;
    }
    if (eps && !(bar_transpose(b) == *eps * b)) {
      why = "extracted Gram is not eps-hermitian";
      return false;
    }
    return true;
  }});

  checks.push_back({"reduce_sign_law", [mode](const TrialContext& ctx, Rng& rng, std::string& why) {
    const FormRecord f = nonsingular_form(star_shape(ctx), ctx.epsilon, rng);
    const Reduction r = morita_reduce(f, mode);
    const Sign expected = ctx.epsilon0 * ctx.epsilon;
    if (r.report.output_epsilon != Epsilon(expected)) why = "report carries the wrong output epsilon";
    else if (!satisfies_symmetry(r.form, expected)) why = "reduced form is not eps0*eps-hermitian";
    else if (!(r.form == morita_reduce_fused(f))) why = "factored and fused reductions differ";
    return why.empty();
  }});

  checks.push_back({"reduce_lift_roundtrip", [mode](const TrialContext& ctx, Rng& rng, std::string& why) {
    const Epsilon eps = rng.coin() ? Epsilon(ctx.epsilon) : std::nullopt;
    const FormRecord f = random_form(star_shape(ctx), eps, rng.next());
    const Reduction r = morita_reduce(f, mode);
    if (!(morita_lift(r.form, ctx.involution) == f)) why = "lift(reduce(f)) != f";
    else if (!r.report.exact_roundtrip) why = "report claims an inexact round trip";
    return why.empty();
  }});

  checks.push_back({"lift_reduce_roundtrip", [mode](const TrialContext& ctx, Rng& rng, std::string& why) {
    const Epsilon eps = rng.coin() ? Epsilon(ctx.epsilon0 * ctx.epsilon) : std::nullopt;
    const FormRecord phi = random_form(shape_on(ctx, Side::OverD), eps, rng.next());
    const bool ok = morita_reduce(morita_lift(phi, ctx.involution), mode).form == phi;
    if (!ok) why = "reduce(lift(phi)) != phi";
    return ok;
  }});

  checks.push_back({"orthogonal_sum_functoriality", [mode](const TrialContext& ctx, Rng& rng, std::string& why) {
    const FormRecord f = random_form(star_shape(ctx), ctx.epsilon, rng.next());
    FormShape other = star_shape(ctx);
    other.k = admissible_size(ctx.algebra, ctx.epsilon0 * ctx.epsilon, 1 + rng.below(3));
    const FormRecord g = random_form(other, ctx.epsilon, rng.next());
    const FormRecord lhs = morita_reduce(orthogonal_sum(f, g), mode).form;
    const FormRecord rhs = orthogonal_sum(morita_reduce(f, mode).form, morita_reduce(g, mode).form);
    const bool ok = lhs == rhs;
    if (!ok) why = "reduce(f + g) != reduce(f) + reduce(g)";
    return ok;
  }});

  checks.push_back({"isometry_transport", [mode](const TrialContext& ctx, Rng& rng, std::string& why) {
    const FormRecord f = random_form(shape_on(ctx, Side::OverMnD_BarT), ctx.epsilon, rng.next());
    const Matrix q = rng.invertible_matrix(ctx.algebra, ctx.k);
    const Matrix lhs = extract_form(congruence(f, q), mode).gram();
    const Matrix rhs = bar_transpose(q) * extract_form(f, mode).gram() * q;
    const bool ok = lhs == rhs;
    if (!ok) why = "extract(Q-congruent form) != conj(Q)^t B Q";
    return ok;
  }});

  checks.push_back({"congruence_respects_sums", [](const TrialContext& ctx, Rng& rng, std::string& why) {
    const FormShape shape = shape_on(ctx, Side::OverD);
    const FormRecord f = random_form(shape, ctx.epsilon, rng.next());
    const FormRecord g = random_form(shape, ctx.epsilon, rng.next());
    const Matrix qf = rng.invertible_matrix(ctx.algebra, f.k());
    const Matrix qg = rng.invertible_matrix(ctx.algebra, g.k());
    const bool ok = congruence(orthogonal_sum(f, g), block_diagonal(qf, qg)) ==
                    orthogonal_sum(congruence(f, qf), congruence(g, qg));
    if (!ok) why = "congruence does not commute with orthogonal sums";
    return ok;
  }});

  checks.push_back({"hyperbolic_transport", [](const TrialContext& ctx, Rng&, std::string& why) {
    const HyperbolicTransport t = hyperbolic_transport(ctx.involution, ctx.epsilon);
    if (!t.exact()) why = "conj(W)^t [[0,S^-1],[eps S^-1,0]] W != [[0,1],[eps0 eps,0]]";
    return t.exact();
  }});

  checks.push_back({"lambda_rescaling", [mode](const TrialContext& ctx, Rng& rng, std::string& why) {
    static const std::array<ExactRational, 3> kLambdas{ExactRational(2), ExactRational(3), ExactRational(-1, 2)};
    const ExactRational& lambda = kLambdas[rng.below(kLambdas.size())];
    const FormRecord f = random_form(star_shape(ctx), ctx.epsilon, rng.next());
    const FormRecord g = rescale_involution(f, lambda);
    if (g.involution()->epsilon0() != ctx.epsilon0) {
      why = "rescaled S changed epsilon0";
      return false;
    }
    for (int t = 0; t < kRandomPairs; ++t) {
      const Matrix x = rng.matrix(ctx.algebra, ctx.n, ctx.n);
      if (!(g.involution()->apply(x) == ctx.involution->apply(x))) {
        why = "S and lambda S define different involutions";
        return false;
      }
      const Matrix u = rng.matrix(ctx.algebra, ctx.k, ctx.n);
      const Matrix v = rng.matrix(ctx.algebra, ctx.k, ctx.n);
      if (!(evaluate(g, u, v) == evaluate(f, u, v))) {
        why = "re-expressed form has different values";
        return false;
      }
    }
    const bool ok = morita_reduce(g, mode).form.gram() == scale(lambda.inverse(), morita_reduce(f, mode).form.gram());
    if (!ok) why = "reduced Gram is not scaled by 1/lambda";
    return ok;
  }});

  return checks;
}

}  // namespace

bool FuzzReport::ok() const {
  for (const auto& t : invariants) {
    if (t.failed != 0) return false;
  }
  return true;
}

const std::vector<std::string>& fuzz_invariant_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& c : build_checks(ProbeMode::Default)) out.emplace_back(c.name);
    return out;
  }();
  return names;
}

FuzzReport run_fuzz(std::uint64_t seed, std::size_t trials, ProbeMode mode) {
  const std::vector<NamedCheck> checks = build_checks(mode);
  FuzzReport report;
  report.seed = seed;
  report.trials = trials;
  for (const auto& c : checks) {
    InvariantTally tally;
    tally.name = c.name;
    report.invariants.push_back(std::move(tally));
  }

  for (std::size_t trial = 0; trial < trials; ++trial) {
    Rng rng = Rng::for_trial(seed, trial);
    std::optional<TrialContext> ctx;
    std::string setup_error;
    for (int attempt = 0; attempt < kSetupAttempts && !ctx; ++attempt) {
      try {
        ctx = draw_context(rng);
      } catch (const MathError& e) {
        setup_error = e.what();
      }
    }
    if (!ctx) {
      report.notes.push_back("trial " + std::to_string(trial) + " skipped: " + setup_error);
      for (auto& t : report.invariants) ++t.skipped;
      continue;
    }

    for (std::size_t c = 0; c < checks.size(); ++c) {
      InvariantTally& tally = report.invariants[c];
      std::string why;
      bool passed = false;
      try {
        passed = checks[c].check(*ctx, rng, why);
      } catch (const NotDivision& e) {
        // Zero divisor in a split algebra: not a failure of the invariant.
        ++tally.skipped;
        report.notes.push_back("trial " + std::to_string(trial) + " " + tally.name + " skipped: " + e.what());
        continue;
      } catch (const Singular& e) {
        ++tally.skipped;
        report.notes.push_back("trial " + std::to_string(trial) + " " + tally.name + " skipped: " + e.what());
        continue;
      } catch (const Error& e) {
        why = e.what();
      }
      if (passed) {
        ++tally.passed;
      } else {
        ++tally.failed;
        if (tally.first_failure.empty()) {
          tally.first_failure = "trial " + std::to_string(trial) + " (seed " + std::to_string(seed) + ", " +
                                ctx->algebra->name() + ", n=" + std::to_string(ctx->n) +
                                ", k=" + std::to_string(ctx->k) + "): " + why;
        }
      }
    }
  }
  return report;
}

std::string serialize_fuzz_report(const FuzzReport& report) {
  std::ostringstream os;
  os << "seed: " << report.seed << "\n"
     << "trials: " << report.trials << "\n";
  for (const auto& t : report.invariants) {
    os << "invariant " << t.name << ": " << (t.failed == 0 ? "pass" : "FAIL") << " (passed " << t.passed
       << ", failed " << t.failed << ", skipped " << t.skipped << ")\n";
    if (!t.first_failure.empty()) os << "  first_failure: " << t.first_failure << "\n";
  }
  for (const auto& note : report.notes) os << "note: " << note << "\n";
  os << "result: " << (report.ok() ? "pass" : "FAIL") << "\n";
  return os.str();
}

}  // namespace hmorita

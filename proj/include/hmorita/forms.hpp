#pragma once

#include "hmorita/involution.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace hmorita {

/// Which ring with involution a form takes values in.
///   OverD        : D^k x D^k -> D,                 h(x,y) = conj(x)^t B y
///   OverMnD_BarT : D^{kxn} x D^{kxn} -> M_n(D),    h(x,y) = conj(x)^t B y   (involution -^t)
///   OverMnD_Star : D^{kxn} x D^{kxn} -> M_n(D),    h(x,y) = S conj(x)^t T y (involution *)
enum class Side { OverD, OverMnD_BarT, OverMnD_Star };

enum class Symmetry { Hermitian, SkewHermitian, SesquilinearOnly };

/// nullopt means "merely sesquilinear".
using Epsilon = std::optional<Sign>;

std::string to_string(Side side);
std::string to_string(Symmetry symmetry);
std::string epsilon_to_string(const Epsilon& eps);

/// Black-box view of a form on D^{kxn}: a pair of kxn matrices to an nxn matrix.
using FormEvaluator = std::function<Matrix(const Matrix&, const Matrix&)>;

/// A sesquilinear or epsilon-hermitian form stored by its Gram data together
/// with the involution it is hermitian with respect to. Construction validates
/// the declared epsilon and throws NotEpsilonHermitian when it does not hold.
class FormRecord {
 public:
  static FormRecord over_d(Matrix gram, Epsilon eps);
  static FormRecord over_bar_t(Matrix gram, std::size_t n, Epsilon eps);
  static FormRecord over_star(Matrix gram, InvolutionHandle involution, Epsilon eps);

  Side side() const { return side_; }
  /// Module rank parameter: D^k for OverD, D^{kxn} otherwise.
  std::size_t k() const { return gram_.rows(); }
  /// Matrix size of the value ring; 1 for OverD.
  std::size_t n() const { return n_; }
  const Matrix& gram() const { return gram_; }
  const Epsilon& epsilon() const { return epsilon_; }
  /// Non-null exactly for OverMnD_Star.
  const InvolutionHandle& involution() const { return involution_; }
  const AlgebraHandle& algebra() const { return gram_.algebra(); }

  /// The involution of the value ring: -^t on M_n(D) (conj on D), or * for OverMnD_Star.
  Matrix value_involution(const Matrix& value) const;

  /// Same side, Gram, epsilon, n and S.
  friend bool operator==(const FormRecord& lhs, const FormRecord& rhs);

 private:
  FormRecord(Side side, Matrix gram, std::size_t n, Epsilon eps, InvolutionHandle involution)
      : side_(side), gram_(std::move(gram)), n_(n), epsilon_(eps), involution_(std::move(involution)) {}

  Side side_;
  Matrix gram_;
  std::size_t n_;
  Epsilon epsilon_;
  InvolutionHandle involution_;
};

/// OverD / OverMnD_BarT: conj(x)^t gram y.  OverMnD_Star: S conj(x)^t gram y.
/// x and y are kxn (kx1 for OverD). Throws ShapeMismatch or DescriptorMismatch.
Matrix evaluate(const FormRecord& form, const Matrix& x, const Matrix& y);

/// Evaluator backed by the stored Gram data.
FormEvaluator gram_evaluator(const FormRecord& form);

/// Does h(y,x) = sign * involution(h(x,y)) hold? Exact on the Gram for OverD and
/// OverMnD_BarT; by probes for OverMnD_Star.
bool satisfies_symmetry(const FormRecord& form, Sign sign);

/// Hermitian takes precedence when both signs hold (only the zero form).
Symmetry check_symmetry(const FormRecord& form);

/// Randomized checks of biadditivity and of
///   h(x a, y) = inv(a) h(x, y),  h(x, y a) = h(x, y) a
/// for a in M_n(D) (D for OverD), where inv is the side's involution.
bool check_sesquilinear(const FormRecord& form, std::uint64_t seed, int trials = 20);

/// Gram invertible.
bool is_nonsingular(const FormRecord& form);

/// Block-diagonal Gram. Throws SideMismatch (different side, n or S) or
/// EpsilonMismatch.
FormRecord orthogonal_sum(const FormRecord& f, const FormRecord& g);

/// Shape of the module a form lives on; used by constructors that have no Gram yet.
struct FormShape {
  Side side = Side::OverD;
  AlgebraHandle algebra;
  std::size_t k = 1;
  /// Ignored for OverD; taken from the involution for OverMnD_Star.
  std::size_t n = 1;
  /// Required for OverMnD_Star.
  InvolutionHandle involution;
};

/// Hyperbolic form of the given rank.
///   OverD, OverMnD_BarT: `rank` diagonal blocks [[0,1],[eps,0]] with entries in D (k = 2 rank).
///   OverMnD_Star: the hyperbolic form on A^{2 rank}, A = M_n(D); in the
///     S conj(x)^t T y parameterization each block is T = [[0, S^-1],[eps S^-1, 0]] (k = 2 n rank).
/// shape.k is ignored.
FormRecord hyperbolic(std::size_t rank, Sign eps, const FormShape& shape);

/// The form (x, y) -> h(Q x, Q y), Gram conj(Q)^t gram Q. Throws Singular or ShapeMismatch.
FormRecord congruence(const FormRecord& form, const Matrix& q);

/// Deterministic in `seed`. With eps set, the Gram is M + s conj(M)^t where s is
/// eps (OverD, OverMnD_BarT) or epsilon0 * eps (OverMnD_Star), so the result is
/// eps-hermitian by construction. No nonsingularity guarantee.
FormRecord random_form(const FormShape& shape, Epsilon eps, std::uint64_t seed);

/// The sign the Gram must carry for the form to be eps-hermitian: eps itself, or
/// epsilon0 * eps on the OverMnD_Star side.
Sign gram_sign(Side side, const InvolutionHandle& involution, Sign eps);

}  // namespace hmorita

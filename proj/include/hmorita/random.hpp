#pragma once

#include "hmorita/involution.hpp"

#include <cstdint>
#include <random>

namespace hmorita {

/// Deterministic generator of small exact test data. Draws depend only on the
/// seed; the mapping from raw 64-bit words to values avoids the
/// implementation-defined std distributions so runs are reproducible across
/// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream for trial `index` of a run seeded with `seed`.
  static Rng for_trial(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
  bool coin() { return (next() & 1U) != 0; }

  /// p/q with |p| <= 3 and q in {1, 2, 3}.
  ExactRational rational();
  ExactRational nonzero_rational();
  Element element(const AlgebraHandle& algebra);
  Element nonzero_element(const AlgebraHandle& algebra);
  Matrix matrix(const AlgebraHandle& algebra, std::size_t rows, std::size_t cols);
  /// Random square matrix that passed inverse(); throws Singular after 64 misses.
  Matrix invertible_matrix(const AlgebraHandle& algebra, std::size_t n);
  /// M + sign * conj(M)^t for random M.
  Matrix epsilon_hermitian(const AlgebraHandle& algebra, std::size_t n, Sign sign);
  /// Invertible epsilon0-hermitian S, suitable for InvolutionSpec::from_S.
  /// Throws Singular when none is found (e.g. odd n, sign -1 over Q).
  Matrix involution_matrix(const AlgebraHandle& algebra, std::size_t n, Sign epsilon0);

 private:
  std::mt19937_64 engine_;
};

}  // namespace hmorita

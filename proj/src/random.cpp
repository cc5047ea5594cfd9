#include "hmorita/random.hpp"

#include "hmorita/errors.hpp"

namespace hmorita {

namespace {

constexpr int kMaxAttempts = 64;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31U);
}

}  // namespace

Rng Rng::for_trial(std::uint64_t seed, std::uint64_t index) {
  return Rng(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x5851f42d4c957f2dULL)));
}

ExactRational Rng::rational() {
  const auto num = static_cast<std::int64_t>(below(7)) - 3;
  const auto den = static_cast<std::int64_t>(below(3)) + 1;
  return ExactRational(num, den);
}

ExactRational Rng::nonzero_rational() {
  for (;;) {
    ExactRational q = rational();
    if (!q.is_zero()) return q;
  }
}

Element Rng::element(const AlgebraHandle& algebra) {
  std::vector<ExactRational> coords;
  coords.reserve(algebra->dimension());
  for (std::size_t t = 0; t < algebra->dimension(); ++t) coords.push_back(rational());
  return Element(algebra, std::move(coords));
}

Element Rng::nonzero_element(const AlgebraHandle& algebra) {
  for (;;) {
    Element x = element(algebra);
    if (!x.is_zero()) return x;
  }
}

Matrix Rng::matrix(const AlgebraHandle& algebra, std::size_t rows, std::size_t cols) {
  std::vector<Element> entries;
  entries.reserve(rows * cols);
  for (std::size_t t = 0; t < rows * cols; ++t) entries.push_back(element(algebra));
  return Matrix(algebra, rows, cols, std::move(entries));
}

Matrix Rng::invertible_matrix(const AlgebraHandle& algebra, std::size_t n) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Matrix m = matrix(algebra, n, n);
    if (is_invertible(m)) return m;
  }
  throw Singular("no invertible " + std::to_string(n) + "x" + std::to_string(n) + " matrix drawn");
}

Matrix Rng::epsilon_hermitian(const AlgebraHandle& algebra, std::size_t n, Sign sign) {
  const Matrix m = matrix(algebra, n, n);
  return m + sign * bar_transpose(m);
}

Matrix Rng::involution_matrix(const AlgebraHandle& algebra, std::size_t n, Sign epsilon0) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Matrix s = epsilon_hermitian(algebra, n, epsilon0);
    if (is_invertible(s)) return s;
  }
  throw Singular("no invertible " + std::string(epsilon0 == Sign::Plus ? "hermitian" : "skew-hermitian") +
                 " S of size " + std::to_string(n) + " over " + algebra->name());
}

}  // namespace hmorita

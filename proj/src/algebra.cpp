#include "hmorita/algebra.hpp"

#include "hmorita/errors.hpp"

#include <sstream>

namespace hmorita {

namespace {

bool is_squarefree(std::int64_t d) {
  // |d| fits in uint64 even for INT64_MIN.
  std::uint64_t m = d < 0 ? static_cast<std::uint64_t>(-(d + 1)) + 1 : static_cast<std::uint64_t>(d);
  for (std::uint64_t p = 2; p <= m / p; ++p) {
    if (m % p != 0) continue;
    m /= p;
    if (m % p == 0) return false;
  }
  return true;
}

}  // namespace

AlgebraHandle AlgebraDescriptor::rational() {
  static const AlgebraHandle instance(new AlgebraDescriptor(AlgebraKind::RationalField, 0, 0, 0));
  return instance;
}

AlgebraHandle AlgebraDescriptor::quadratic(std::int64_t d) {
  if (d == 0 || d == 1) throw InvalidDescriptor("quadratic parameter d must differ from 0 and 1");
  if (d == INT64_MIN) throw InvalidDescriptor("quadratic parameter out of range");
  if (!is_squarefree(d)) {
    throw InvalidDescriptor("quadratic parameter d = " + std::to_string(d) + " is not squarefree");
  }
  return AlgebraHandle(new AlgebraDescriptor(AlgebraKind::QuadraticExtension, d, 0, 0));
}

AlgebraHandle AlgebraDescriptor::quaternion(ExactRational a, ExactRational b) {
  if (a.is_zero() || b.is_zero()) throw InvalidDescriptor("quaternion parameters must be nonzero");
  return AlgebraHandle(new AlgebraDescriptor(AlgebraKind::Quaternion, 0, std::move(a), std::move(b)));
}

std::size_t AlgebraDescriptor::dimension() const {
  switch (kind_) {
    case AlgebraKind::RationalField: return 1;
    case AlgebraKind::QuadraticExtension: return 2;
    case AlgebraKind::Quaternion: return 4;
  }
  return 0;
}

std::string AlgebraDescriptor::name() const {
  switch (kind_) {
    case AlgebraKind::RationalField: return "Q";
    case AlgebraKind::QuadraticExtension: return "Q(sqrt(" + std::to_string(d_) + "))";
    case AlgebraKind::Quaternion: return "(" + a_.to_string() + "," + b_.to_string() + ")_Q";
  }
  return {};
}

bool same_algebra(const AlgebraHandle& lhs, const AlgebraHandle& rhs) {
  return lhs == rhs || (lhs && rhs && *lhs == *rhs);
}

void require_same_algebra(const AlgebraHandle& lhs, const AlgebraHandle& rhs) {
  if (!same_algebra(lhs, rhs)) {
    throw DescriptorMismatch((lhs ? lhs->name() : "<null>") + " vs " + (rhs ? rhs->name() : "<null>"));
  }
}

Element::Element(AlgebraHandle algebra, std::vector<ExactRational> coords)
    : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  if (!algebra_) throw InvalidDescriptor("element without algebra");
  if (coords_.size() != algebra_->dimension()) {
    throw ShapeMismatch("element of " + algebra_->name() + " needs " + std::to_string(algebra_->dimension()) +
                        " coordinates, got " + std::to_string(coords_.size()));
  }
}

Element Element::zero(const AlgebraHandle& algebra) {
  return Element(algebra, std::vector<ExactRational>(algebra->dimension()));
}

Element Element::one(const AlgebraHandle& algebra) { return from_rational(algebra, 1); }

Element Element::from_rational(const AlgebraHandle& algebra, const ExactRational& q) {
  std::vector<ExactRational> coords(algebra->dimension());
  coords[0] = q;
  return Element(algebra, std::move(coords));
}

bool Element::is_zero() const {
  for (const auto& c : coords_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool Element::is_one() const {
  if (!coords_[0].is_one()) return false;
  for (std::size_t t = 1; t < coords_.size(); ++t) {
    if (!coords_[t].is_zero()) return false;
  }
  return true;
}

bool Element::is_central() const {
  if (algebra_->kind() != AlgebraKind::Quaternion) return true;
  return coords_[1].is_zero() && coords_[2].is_zero() && coords_[3].is_zero();
}

Element Element::conj() const {
  Element out = *this;
  for (std::size_t t = 1; t < out.coords_.size(); ++t) out.coords_[t] = -out.coords_[t];
  return out;
}

ExactRational Element::norm() const {
  const auto& x = coords_;
  switch (algebra_->kind()) {
    case AlgebraKind::RationalField:
      return x[0] * x[0];
    case AlgebraKind::QuadraticExtension:
      return x[0] * x[0] - ExactRational(algebra_->d()) * x[1] * x[1];
    case AlgebraKind::Quaternion: {
      const auto& a = algebra_->a();
      const auto& b = algebra_->b();
      return x[0] * x[0] - a * x[1] * x[1] - b * x[2] * x[2] + a * b * x[3] * x[3];
    }
  }
  return {};
}

Element Element::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in " + algebra_->name());
  const ExactRational n = norm();
  if (n.is_zero()) {
    throw NotDivision("element " + to_string() + " of " + algebra_->name() + " has norm 0");
  }
  return n.inverse() * conj();
}

Element Element::operator-() const {
  Element out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

Element& Element::operator+=(const Element& rhs) {
  require_same_algebra(algebra_, rhs.algebra_);
  for (std::size_t t = 0; t < coords_.size(); ++t) coords_[t] += rhs.coords_[t];
  return *this;
}

Element& Element::operator-=(const Element& rhs) {
  require_same_algebra(algebra_, rhs.algebra_);
  for (std::size_t t = 0; t < coords_.size(); ++t) coords_[t] -= rhs.coords_[t];
  return *this;
}

Element operator*(const Element& lhs, const Element& rhs) {
  require_same_algebra(lhs.algebra_, rhs.algebra_);
  const auto& x = lhs.coords_;
  const auto& y = rhs.coords_;
  const AlgebraDescriptor& alg = *lhs.algebra_;
  switch (alg.kind()) {
    case AlgebraKind::RationalField:
      return Element(lhs.algebra_, {x[0] * y[0]});
    case AlgebraKind::QuadraticExtension: {
      const ExactRational d(alg.d());
      return Element(lhs.algebra_, {x[0] * y[0] + d * x[1] * y[1], x[0] * y[1] + x[1] * y[0]});
    }
    case AlgebraKind::Quaternion: {
      // i^2 = a, j^2 = b, k^2 = -ab, ij = -ji = k, jk = -kj = -b i, ki = -ik = -a j.
      const auto& a = alg.a();
      const auto& b = alg.b();
      return Element(lhs.algebra_,
                     {x[0] * y[0] + a * x[1] * y[1] + b * x[2] * y[2] - a * b * x[3] * y[3],
                      x[0] * y[1] + x[1] * y[0] - b * x[2] * y[3] + b * x[3] * y[2],
                      x[0] * y[2] + x[2] * y[0] + a * x[1] * y[3] - a * x[3] * y[1],
                      x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1]});
    }
  }
  return Element::zero(lhs.algebra_);
}

Element operator*(const ExactRational& q, const Element& x) {
  Element out = x;
  for (auto& c : out.coords_) c *= q;
  return out;
}

bool operator==(const Element& lhs, const Element& rhs) {
  return same_algebra(lhs.algebra_, rhs.algebra_) && lhs.coords_ == rhs.coords_;
}

std::string Element::to_string() const {
  static constexpr const char* kQuaternionBasis[] = {"", "i", "j", "k"};
  const std::string root = "sqrt(" + std::to_string(algebra_->d()) + ")";
  std::ostringstream os;
  bool first = true;
  for (std::size_t t = 0; t < coords_.size(); ++t) {
    if (coords_[t].is_zero()) continue;
    const std::string basis = algebra_->kind() == AlgebraKind::Quaternion ? kQuaternionBasis[t] : (t == 0 ? "" : root);
    if (!first) os << (coords_[t].sign() < 0 ? " - " : " + ");
    else if (coords_[t].sign() < 0) os << "-";
    const ExactRational magnitude = coords_[t].sign() < 0 ? -coords_[t] : coords_[t];
    if (t == 0 || !magnitude.is_one()) os << magnitude;
    if (t != 0 && !magnitude.is_one()) os << "*";
    os << basis;
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace hmorita

#include "hmorita/rational.hpp"

#include "hmorita/errors.hpp"

#include <algorithm>
#include <cctype>

namespace hmorita {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

ExactRational::ExactRational(std::int64_t value) {
  // mpz_class has no portable int64 constructor; go through the string form.
  value_ = mpq_class(mpz_class(std::to_string(value)));
}

ExactRational::ExactRational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw DivisionByZero("rational with zero denominator");
  value_ = mpq_class(mpz_class(std::to_string(numerator)), mpz_class(std::to_string(denominator)));
  value_.canonicalize();
}

ExactRational::ExactRational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

ExactRational ExactRational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return ExactRational(mpq_class(n, d));
}

std::string ExactRational::to_string() const { return value_.get_str(10); }
std::string ExactRational::numerator_string() const { return value_.get_num().get_str(10); }
std::string ExactRational::denominator_string() const { return value_.get_den().get_str(10); }

ExactRational ExactRational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of rational zero");
  return ExactRational(mpq_class(1) / value_);
}

ExactRational ExactRational::operator-() const { return ExactRational(mpq_class(-value_)); }

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

}  // namespace hmorita

#include "opf/rational.hpp"

#include <cctype>

#include "opf/error.hpp"

namespace opf {

namespace {

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class to_mpz(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!valid_integer(num)) throw Error("malformed rational '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(to_mpz(num), mpz_class(1));
  std::string_view den = text.substr(slash + 1);
  if (!valid_integer(den)) throw Error("malformed rational '" + std::string(text) + "'");
  return Rational(to_mpz(num), to_mpz(den));
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_str();
}

std::string Rational::to_fraction_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

}  // namespace opf

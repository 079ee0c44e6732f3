#pragma once

#include <gmpxx.h>

#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

namespace opf {

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I v) : value_(mpz_class(static_cast<long>(v))) {}  // NOLINT
  Rational(long num, long den);
  explicit Rational(mpq_class v);
  Rational(const mpz_class& num, const mpz_class& den);

  /// Accepts "n", "-n", "n/d" (d != 0). Throws opf::Error otherwise.
  static Rational parse(std::string_view text);

  const mpq_class& value() const noexcept { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const noexcept { return sgn(value_) == 0; }
  bool is_integer() const noexcept { return value_.get_den() == 1; }
  int sign() const noexcept { return sgn(value_); }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);
  Rational operator-() const;

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }

  /// "3", "-1/2"
  std::string to_string() const;
  /// Always "num/den", as used by the JSON interchange format.
  std::string to_fraction_string() const;

 private:
  mpq_class value_{0};
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace opf

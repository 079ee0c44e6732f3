#pragma once

#include <concepts>
#include <ostream>
#include <string>
#include <vector>

#include "opf/rational.hpp"

namespace opf {

/// Polynomial in the deformation parameter λ with rational coefficients.
/// Stored densely, index = power of λ, trailing zeros trimmed.
class LambdaPoly {
 public:
  LambdaPoly() = default;
  LambdaPoly(Rational c);  // NOLINT
  template <std::integral I>
  LambdaPoly(I c) : LambdaPoly(Rational(c)) {}  // NOLINT
  explicit LambdaPoly(std::vector<Rational> coeffs);

  /// The monomial λ.
  static LambdaPoly lambda();

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  Rational coeff(std::size_t power) const;
  bool is_zero() const noexcept { return coeffs_.empty(); }

  Rational eval(const Rational& at) const;

  LambdaPoly& operator+=(const LambdaPoly& o);
  LambdaPoly& operator-=(const LambdaPoly& o);
  LambdaPoly& operator*=(const LambdaPoly& o);
  LambdaPoly operator-() const;

  friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
  friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }
  friend LambdaPoly operator*(LambdaPoly a, const LambdaPoly& b) { return a *= b; }
  friend bool operator==(const LambdaPoly& a, const LambdaPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// "1 + 2λ - λ^2"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

inline Rational eval_lambda(const LambdaPoly& p, const Rational& at) { return p.eval(at); }

inline std::ostream& operator<<(std::ostream& os, const LambdaPoly& p) { return os << p.to_string(); }

}  // namespace opf

#include "opf/lambda_poly.hpp"

#include <algorithm>

namespace opf {

LambdaPoly::LambdaPoly(Rational c) {
  if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

LambdaPoly::LambdaPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

LambdaPoly LambdaPoly::lambda() { return LambdaPoly(std::vector<Rational>{0, 1}); }

void LambdaPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational LambdaPoly::coeff(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational LambdaPoly::eval(const Rational& at) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

LambdaPoly& LambdaPoly::operator-=(const LambdaPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

LambdaPoly& LambdaPoly::operator*=(const LambdaPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

LambdaPoly LambdaPoly::operator-() const {
  LambdaPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string LambdaPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    bool negative = c.sign() < 0;
    Rational mag = negative ? -c : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    bool unit = mag == Rational(1);
    if (i == 0 || !unit) out += mag.to_string();
    if (i >= 1) out += "λ";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace opf

#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace opf {

/// Finite formal sum of basis elements with exact scalar coefficients.
///
/// Zero coefficients are never stored. `Basis` must be totally ordered and
/// expose a canonical `to_string(const Basis&)` found by ADL; `Scalar` is
/// Rational or LambdaPoly. Mixing basis kinds is rejected at compile time.
template <class Basis, class Scalar>
class LinComb {
 public:
  using basis_type = Basis;
  using scalar_type = Scalar;
  using container_type = std::map<Basis, Scalar>;
  using const_iterator = typename container_type::const_iterator;

  LinComb() = default;
  explicit LinComb(Basis b, Scalar c = Scalar(1)) { add_term(b, c); }

  void add_term(const Basis& b, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Scalar coeff(const Basis& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Scalar() : it->second;
  }

  bool contains(const Basis& b) const { return terms_.count(b) != 0; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const container_type& terms() const noexcept { return terms_; }

  std::vector<Basis> support() const {
    std::vector<Basis> out;
    out.reserve(terms_.size());
    for (const auto& [b, c] : terms_) out.push_back(b);
    return out;
  }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
  }

  LinComb& operator-=(const LinComb& o) {
    for (const auto& [b, c] : o.terms_) add_term(b, -c);
    return *this;
  }

  LinComb& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [b, c] : terms_) c *= s;
    return *this;
  }

  LinComb operator-() const {
    LinComb r = *this;
    for (auto& [b, c] : r.terms_) c = -c;
    return r;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(LinComb a, const Scalar& s) { return a *= s; }
  friend LinComb operator*(const Scalar& s, LinComb a) { return a *= s; }
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

  /// Apply `f` to every coefficient, e.g. to specialise λ.
  template <class F>
  auto map_scalars(F f) const -> LinComb<Basis, decltype(f(std::declval<Scalar>()))> {
    LinComb<Basis, decltype(f(std::declval<Scalar>()))> out;
    for (const auto& [b, c] : terms_) out.add_term(b, f(c));
    return out;
  }

  /// Terms as (canonical string, coefficient) sorted by the string.
  std::vector<std::pair<std::string, Scalar>> sorted_terms() const {
    std::vector<std::pair<std::string, Scalar>> out;
    out.reserve(terms_.size());
    for (const auto& [b, c] : terms_) out.emplace_back(to_string(b), c);
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
  }

 private:
  container_type terms_;
};

template <class B, class S>
LinComb<B, S> lincomb_add(const LinComb<B, S>& x, const LinComb<B, S>& y) {
  return x + y;
}

template <class B, class S>
LinComb<B, S> lincomb_scale(const S& s, const LinComb<B, S>& x) {
  return s * x;
}

template <class B, class S>
std::vector<B> lincomb_support(const LinComb<B, S>& x) {
  return x.support();
}

/// Extend a basis-level product bilinearly: sum over pairs of c_x c_y f(b_x, b_y).
template <class B1, class B2, class S, class F>
auto bilinear(const LinComb<B1, S>& x, const LinComb<B2, S>& y, F&& f)
    -> decltype(f(std::declval<const B1&>(), std::declval<const B2&>())) {
  decltype(f(std::declval<const B1&>(), std::declval<const B2&>())) out;
  for (const auto& [bx, cx] : x)
    for (const auto& [by, cy] : y) {
      auto part = f(bx, by);
      S c = cx * cy;
      for (const auto& [b, k] : part) out.add_term(b, c * k);
    }
  return out;
}

/// Human-readable sum in canonical-string order: "1(2) + 2(1)", "-1/2*(o,o)".
template <class B, class S>
std::string format_lincomb(const LinComb<B, S>& x) {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [basis, c] : x.sorted_terms()) {
    std::string coeff = c.to_string();
    bool negative = !coeff.empty() && coeff.front() == '-' && coeff.find_first_of("+ ") == std::string::npos;
    if (negative) coeff.erase(0, 1);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (coeff != "1") {
      bool compound = coeff.find(' ') != std::string::npos;
      out += compound ? "(" + coeff + ")*" : coeff + "*";
    }
    out += basis;
  }
  return out;
}

}  // namespace opf

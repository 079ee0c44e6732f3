#include "opf/series.hpp"

#include <iomanip>
#include <sstream>

#include "opf/error.hpp"

namespace opf {

namespace {

template <class F>
PowerSeries series_from(SeriesKind kind, int order, F dim) {
  DimSeries d{kind, {}};
  for (int n = 1; n <= order; ++n) d.dims.push_back(dim(n));
  return d.to_power_series();
}

Rational big(long long v) { return Rational(v); }

Rational factorial_r(int n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r, mpz_class(1));
}

Rational pow_rational(int base, int exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
  return Rational(r, mpz_class(1));
}

Rational catalan_r(int n) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(2 * n), static_cast<unsigned long>(n));
  return Rational(r, mpz_class(n + 1));
}

Rational double_factorial_r(int k) {
  mpz_class r = 1;
  for (int i = k; i > 1; i -= 2) r *= i;
  return Rational(r, mpz_class(1));
}

}  // namespace

std::string series_kind_name(SeriesKind k) { return k == SeriesKind::EGS ? "EGS" : "OGS"; }

PowerSeries::PowerSeries(SeriesKind kind, int order) : kind_(kind) {
  if (order < 1) throw Error("power series order must be at least 1");
  c_.assign(static_cast<std::size_t>(order), Rational(0));
}

PowerSeries::PowerSeries(SeriesKind kind, std::vector<Rational> coeffs) : kind_(kind), c_(std::move(coeffs)) {
  if (c_.empty()) throw Error("power series order must be at least 1");
}

PowerSeries PowerSeries::identity(SeriesKind kind, int order) {
  PowerSeries p(kind, order);
  p.c_[0] = Rational(1);
  return p;
}

const Rational& PowerSeries::coeff(int n) const {
  if (n < 1 || n > order()) throw Error("coefficient index " + std::to_string(n) + " outside [1," + std::to_string(order()) + "]");
  return c_[static_cast<std::size_t>(n - 1)];
}

void PowerSeries::set_coeff(int n, Rational v) {
  if (n < 1 || n > order()) throw Error("coefficient index " + std::to_string(n) + " outside [1," + std::to_string(order()) + "]");
  c_[static_cast<std::size_t>(n - 1)] = std::move(v);
}

void PowerSeries::require_compatible(const PowerSeries& o, const char* what) const {
  if (kind_ != o.kind_)
    throw Error(std::string(what) + ": cannot mix " + series_kind_name(kind_) + " and " + series_kind_name(o.kind_));
  if (order() != o.order()) throw Error(std::string(what) + ": orders differ");
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
  require_compatible(o, "series sum");
  PowerSeries r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = r.c_[i] + o.c_[i];
  return r;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
  require_compatible(o, "series difference");
  PowerSeries r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = r.c_[i] - o.c_[i];
  return r;
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
  require_compatible(o, "series product");
  const int n = order();
  PowerSeries r(kind_, n);
  for (int i = 1; i < n; ++i) {
    if (coeff(i).is_zero()) continue;
    for (int j = 1; i + j <= n; ++j)
      if (!o.coeff(j).is_zero()) r.c_[static_cast<std::size_t>(i + j - 1)] = r.coeff(i + j) + coeff(i) * o.coeff(j);
  }
  return r;
}

std::string PowerSeries::to_string() const {
  std::string out;
  for (int n = 1; n <= order(); ++n) {
    const Rational& c = coeff(n);
    if (c.is_zero()) continue;
    std::string mono = n == 1 ? "t" : "t^" + std::to_string(n);
    std::string body = c == Rational(1) || c == Rational(-1) ? mono : (c.sign() < 0 ? (-c).to_string() : c.to_string()) + mono;
    if (out.empty())
      out = (c.sign() < 0 ? "-" : "") + body;
    else
      out += (c.sign() < 0 ? " - " : " + ") + body;
  }
  return (out.empty() ? "0" : out) + " + O(t^" + std::to_string(order() + 1) + ")";
}

PowerSeries ps_compose(const PowerSeries& f, const PowerSeries& g) {
  if (f.kind() != g.kind())
    throw Error("ps_compose: cannot mix " + series_kind_name(f.kind()) + " and " + series_kind_name(g.kind()));
  if (f.order() != g.order()) throw Error("ps_compose: orders differ");
  // Horner: f(g) = c_1 g + g (c_2 g + g (c_3 g + ...)).
  const int n = f.order();
  PowerSeries acc(f.kind(), n);
  for (int k = n; k >= 1; --k) {
    PowerSeries scaled = g;
    for (int i = 1; i <= n; ++i) scaled.set_coeff(i, g.coeff(i) * f.coeff(k));
    acc = scaled + g * acc;
  }
  return acc;
}

PowerSeries ps_reverse(const PowerSeries& g) {
  if (g.coeff(1).is_zero()) throw Error("ps_reverse: linear coefficient is zero");
  const int n = g.order();
  PowerSeries h(g.kind(), n);
  const Rational inv = Rational(1) / g.coeff(1);
  h.set_coeff(1, inv);
  // g(h) agrees with t through order m-1; the t^m coefficient is linear in
  // h_m with slope g_1, so one division fixes it.
  for (int m = 2; m <= n; ++m) {
    Rational excess = ps_compose(g, h).coeff(m);
    h.set_coeff(m, Rational(0) - excess * inv);
  }
  return h;
}

bool DimSeries::all_integral() const {
  for (const auto& d : dims)
    if (!d.is_integer()) return false;
  return true;
}

bool DimSeries::all_nonnegative() const {
  for (const auto& d : dims)
    if (d.sign() < 0) return false;
  return true;
}

PowerSeries DimSeries::to_power_series() const {
  std::vector<Rational> c;
  c.reserve(dims.size());
  for (std::size_t i = 0; i < dims.size(); ++i)
    c.push_back(kind == SeriesKind::EGS ? dims[i] / factorial_r(static_cast<int>(i + 1)) : dims[i]);
  return PowerSeries(kind, std::move(c));
}

DimSeries DimSeries::from_power_series(const PowerSeries& p) {
  DimSeries d{p.kind(), {}};
  for (int n = 1; n <= p.order(); ++n)
    d.dims.push_back(p.kind() == SeriesKind::EGS ? p.coeff(n) * factorial_r(n) : p.coeff(n));
  return d;
}

std::vector<long long> DimSeries::as_integers() const {
  std::vector<long long> out;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (!dims[i].is_integer()) throw Error("dimension at arity " + std::to_string(i + 1) + " is not an integer: " + dims[i].to_string());
    if (!dims[i].numerator().fits_slong_p()) throw Error("dimension at arity " + std::to_string(i + 1) + " overflows");
    out.push_back(dims[i].numerator().get_si());
  }
  return out;
}

std::string DimSeries::table() const {
  std::size_t width = 3;
  for (const auto& d : dims) width = std::max(width, d.to_string().size());
  std::ostringstream os;
  os << std::setw(3) << "n" << "  " << std::setw(static_cast<int>(width)) << "dim" << "   (" << series_kind_name(kind) << ")\n";
  for (std::size_t i = 0; i < dims.size(); ++i)
    os << std::setw(3) << i + 1 << "  " << std::setw(static_cast<int>(width)) << dims[i].to_string() << '\n';
  return os.str();
}


PowerSeries f_prelie(int order) {
  return series_from(SeriesKind::EGS, order, [](int n) { return pow_rational(n, n - 1); });
}
PowerSeries f_commag(int order) {
  return series_from(SeriesKind::EGS, order, [](int n) { return double_factorial_r(2 * n - 3); });
}
PowerSeries f_dend(int order) {
  return series_from(SeriesKind::EGS, order, [](int n) { return factorial_r(n) * catalan_r(n); });
}
PowerSeries f_mag(int order) {
  return series_from(SeriesKind::OGS, order, [](int n) { return catalan_r(n - 1); });
}
PowerSeries f_as(int order) {
  return series_from(SeriesKind::OGS, order, [](int) { return big(1); });
}

DimSeries x_dims(int order) {
  return DimSeries::from_power_series(ps_compose(f_prelie(order), ps_reverse(f_commag(order))));
}
DimSeries y_dims(int order) {
  return DimSeries::from_power_series(ps_compose(f_dend(order), ps_reverse(f_commag(order))));
}
DimSeries z_dims(int order) {
  return DimSeries::from_power_series(ps_compose(ps_reverse(f_commag(order)), x_dims(order).to_power_series()));
}

bool dup_split_check(int order, bool perturb_t3) {
  PowerSeries mag = f_mag(order);
  if (perturb_t3 && order >= 3) mag.set_coeff(3, mag.coeff(3) + Rational(1));
  PowerSeries lhs = ps_compose(f_as(order), mag);
  PowerSeries rhs = series_from(SeriesKind::OGS, order, [](int n) { return catalan_r(n); });
  return lhs == rhs;
}

ClosedFormReport y_closed_form_report(int order) {
  ClosedFormReport r{{}, y_dims(order).dims, true, true, 0, 0};
  // a_k = 3 a_{k-1} + a_{k-3}, a_0 = 1.
  for (int k = 0; k < order; ++k) {
    Rational a = k == 0 ? Rational(1) : Rational(3) * r.closed_form[static_cast<std::size_t>(k - 1)];
    if (k >= 3) a = a + r.closed_form[static_cast<std::size_t>(k - 3)];
    r.closed_form.push_back(a);
  }
  for (int n = 1; n <= order; ++n) {
    const Rational& c = r.closed_form[static_cast<std::size_t>(n - 1)];
    const Rational& y = r.y[static_cast<std::size_t>(n - 1)];
    if (r.matches_ogs && !(y == c)) r.matches_ogs = false, r.first_mismatch_ogs = n;
    if (r.matches_egs && !(y / factorial_r(n) == c)) r.matches_egs = false, r.first_mismatch_egs = n;
  }
  return r;
}

}  // namespace opf

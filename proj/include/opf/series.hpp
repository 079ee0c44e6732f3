#pragma once

#include <string>
#include <vector>

#include "opf/rational.hpp"

namespace opf {

enum class SeriesKind { EGS, OGS };

std::string series_kind_name(SeriesKind k);

/// Truncated series c_1 t + ... + c_N t^N. The constant term is always zero.
class PowerSeries {
 public:
  PowerSeries(SeriesKind kind, int order);
  PowerSeries(SeriesKind kind, std::vector<Rational> coeffs);  // coeffs[i] is c_{i+1}

  /// The identity series t.
  static PowerSeries identity(SeriesKind kind, int order);

  SeriesKind kind() const { return kind_; }
  int order() const { return static_cast<int>(c_.size()); }
  const Rational& coeff(int n) const;  // 1 <= n <= order
  void set_coeff(int n, Rational v);

  PowerSeries operator+(const PowerSeries& o) const;
  PowerSeries operator-(const PowerSeries& o) const;
  PowerSeries operator*(const PowerSeries& o) const;  // truncated at order
  bool operator==(const PowerSeries& o) const = default;

  std::string to_string() const;

 private:
  void require_compatible(const PowerSeries& o, const char* what) const;

  SeriesKind kind_;
  std::vector<Rational> c_;
};

/// f(g(t)) truncated at the common order. Mixing EGS and OGS throws.
PowerSeries ps_compose(const PowerSeries& f, const PowerSeries& g);

/// Compositional inverse, solved one order at a time. Throws when c_1 = 0.
PowerSeries ps_reverse(const PowerSeries& g);

/// Per-arity dimensions dims[0] = dim(1), ... with the generating-series
/// convention that produced them.
struct DimSeries {
  SeriesKind kind;
  std::vector<Rational> dims;

  bool all_integral() const;
  bool all_nonnegative() const;
  PowerSeries to_power_series() const;
  static DimSeries from_power_series(const PowerSeries& p);
  /// Throws if some entry is not an integer.
  std::vector<long long> as_integers() const;
  std::string table() const;  // aligned "n  dim" rows
};

PowerSeries f_prelie(int order);   // EGS, n^{n-1}
PowerSeries f_commag(int order);   // EGS, (2n-3)!!
PowerSeries f_dend(int order);     // EGS, n! Catalan(n)
PowerSeries f_mag(int order);      // OGS, Catalan(n-1)
PowerSeries f_as(int order);       // OGS, 1

DimSeries x_dims(int order);  // f_preLie o reverse(f_ComMag)
DimSeries y_dims(int order);  // f_Dend o reverse(f_ComMag)
DimSeries z_dims(int order);  // reverse(f_ComMag) o f_X

/// f_As o f_Mag == Catalan series, to the given order. `perturb_t3` adds 1 to
/// the t^3 coefficient of f_Mag, as a negative control.
bool dup_split_check(int order, bool perturb_t3 = false);

/// Compares y_dims with the coefficients of 1/(1 - 3t - t^3) under both
/// readings: OGS (dim_n against the coefficient of t^{n-1}) and EGS
/// (dim_n / n! against the same coefficient).
struct ClosedFormReport {
  std::vector<Rational> closed_form;  // coefficients of t^0..t^{order-1}
  std::vector<Rational> y;
  bool matches_ogs;
  bool matches_egs;
  int first_mismatch_ogs;  // arity n, or 0 if none
  int first_mismatch_egs;
};

ClosedFormReport y_closed_form_report(int order);

}  // namespace opf

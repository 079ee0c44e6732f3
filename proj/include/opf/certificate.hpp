#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "opf/rational.hpp"

namespace opf {

enum class CertMap { Phi, PhiTilde, ComMagToMag, MagToDend };

CertMap parse_cert_map(std::string_view name);
std::string_view cert_map_name(CertMap m);

/// Exact-rank evidence that a map is injective on its arity-n component.
struct RankCertificate {
  std::string map;
  int n = 0;
  std::size_t source_dim = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
  std::size_t eliminated_cols = 0;  // columns the exact elimination ran on
  bool injective = false;  // rank == source_dim
  std::optional<Rational> lambda;
};

struct CertificateOptions {
  Rational lambda = Rational(1);  // only used by MagToDend
  unsigned jobs = 1;
  int max_n = 6;
  std::size_t max_entries = 40'000'000;  // elimination budget, 0 = none
};

/// One row per source basis element (enumerated), one column per target basis
/// element, rank computed exactly over Q. A modular elimination proposes pivot
/// columns, preferring type-A trees (Φ, Φ̃) or normalized terms (ComMag→Mag);
/// the exact rank is then computed on those columns, and on every column if
/// that falls short of full row rank. Throws ResourceError when n > max_n.
RankCertificate injectivity_certificate(CertMap map, int n, const CertificateOptions& opts = {});

}  // namespace opf

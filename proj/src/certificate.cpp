#include "opf/certificate.hpp"

#include <algorithm>
#include <map>

#include "opf/enumerate.hpp"
#include "opf/error.hpp"
#include "opf/maps.hpp"
#include "opf/matrix.hpp"
#include "opf/parallel.hpp"

namespace opf {

CertMap parse_cert_map(std::string_view name) {
  if (name == "phi") return CertMap::Phi;
  if (name == "phi-tilde" || name == "phi_tilde") return CertMap::PhiTilde;
  if (name == "commag-to-mag" || name == "commag_to_mag") return CertMap::ComMagToMag;
  if (name == "mag-to-dend" || name == "mag_to_dend") return CertMap::MagToDend;
  throw Error("unknown map '" + std::string(name) + "'");
}

std::string_view cert_map_name(CertMap m) {
  switch (m) {
    case CertMap::Phi: return "phi";
    case CertMap::PhiTilde: return "phi-tilde";
    case CertMap::ComMagToMag: return "commag-to-mag";
    case CertMap::MagToDend: return "mag-to-dend";
  }
  return "?";
}

namespace {

constexpr std::uint64_t kPrime = 2147483647;

// Rows of a map's matrix as primitive integer vectors, built a chunk at a
// time so that only the sparse rows stay in memory.
struct Rows {
  std::vector<IntRow> rows;
  std::vector<char> preferred;  // per column
};

template <class Basis, class Image, class Keep>
Rows build_rows(std::size_t count, unsigned jobs, std::size_t budget, Image image_of, Keep keep) {
  Rows out;
  std::size_t entries = 0;
  out.rows.reserve(count);
  std::map<Basis, std::size_t> column;
  const std::size_t chunk = 64 * std::max(1u, jobs);
  for (std::size_t lo = 0; lo < count; lo += chunk) {
    const std::size_t hi = std::min(count, lo + chunk);
    auto images = parallel_map(hi - lo, jobs, [&](std::size_t i) { return image_of(lo + i); });
    for (auto& img : images) {
      mpz_class lcm = 1;
      for (const auto& [b, c] : img) {
        mpz_class den = c.denominator();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
      }
      IntRow row;
      row.reserve(img.size());
      for (const auto& [b, c] : img) {
        auto [it, fresh] = column.try_emplace(b, column.size());
        if (fresh) out.preferred.push_back(keep(b) ? 1 : 0);
        row.emplace_back(it->second, c.numerator() * (lcm / c.denominator()));
      }
      std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      entries += row.size();
      if (budget && entries > budget)
        throw ResourceError("matrix passed " + std::to_string(budget) + " entries while building rows");
      out.rows.push_back(std::move(row));
      img = {};
    }
  }
  return out;
}

std::vector<IntRow> restrict_to(const std::vector<IntRow>& rows, const std::vector<std::size_t>& keep_cols,
                                std::size_t cols) {
  std::vector<std::size_t> compact(cols, cols);
  for (std::size_t k = 0; k < keep_cols.size(); ++k) compact[keep_cols[k]] = k;
  std::vector<IntRow> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    IntRow r;
    for (const auto& [c, v] : row)
      if (compact[c] != cols) r.emplace_back(compact[c], v);
    std::sort(r.begin(), r.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    out.push_back(std::move(r));
  }
  return out;
}

// Exact rank, eliminating on as few columns as possible. A modular pass picks
// candidate pivot columns (the preferred ones first); if the rows restricted
// to them reach full row rank exactly, that is full row rank of the whole
// matrix. Otherwise the exact elimination runs on every column.
RankCertificate certify_rows(Rows m, std::size_t target_dim, std::size_t budget) {
  const std::size_t cols = m.preferred.size();
  if (cols > target_dim) throw Error("image leaves the target component");
  RankCertificate cert;
  cert.source_dim = m.rows.size();
  cert.rows = m.rows.size();
  cert.cols = target_dim;

  std::vector<std::size_t> preferred;
  for (std::size_t c = 0; c < cols; ++c)
    if (m.preferred[c]) preferred.push_back(c);
  std::vector<std::size_t> candidates;
  if (!preferred.empty()) {
    auto piv = pivot_columns_mod_p(restrict_to(m.rows, preferred, cols), preferred.size(), kPrime, budget);
    if (piv.size() == cert.rows)
      for (std::size_t k : piv) candidates.push_back(preferred[k]);
  }
  if (candidates.empty()) {
    auto piv = pivot_columns_mod_p(m.rows, cols, kPrime, budget);
    if (piv.size() == cert.rows) candidates = std::move(piv);
  }
  if (!candidates.empty()) {
    std::sort(candidates.begin(), candidates.end());
    cert.eliminated_cols = candidates.size();
    cert.rank = integer_rank(restrict_to(m.rows, candidates, cols), candidates.size(), budget);
  }
  if (cert.rank < cert.rows) {
    cert.eliminated_cols = cols;
    cert.rank = integer_rank(std::move(m.rows), std::max<std::size_t>(cols, 1), budget);
  }
  cert.injective = cert.rank == cert.source_dim;
  return cert;
}

}  // namespace

RankCertificate injectivity_certificate(CertMap map, int n, const CertificateOptions& opts) {
  if (n < 1) throw Error("arity must be >= 1");
  if (n > opts.max_n)
    throw ResourceError("refusing n=" + std::to_string(n) + " for " + std::string(cert_map_name(map)) +
                        " (bound " + std::to_string(opts.max_n) + ")");
  RankCertificate cert;
  switch (map) {
    case CertMap::Phi:
    case CertMap::PhiTilde: {
      auto source = enumerate_commag(n);
      auto rows = build_rows<RootedTree>(
          source.size(), opts.jobs, opts.max_entries,
          [&](std::size_t i) { return map == CertMap::Phi ? phi(source[i]) : phi_tilde(source[i]); },
          [](const RootedTree& t) { return is_type_a(t); });
      cert = certify_rows(std::move(rows), int_pow(n, n - 1), opts.max_entries);
      break;
    }
    case CertMap::ComMagToMag: {
      auto source = enumerate_commag(n);
      auto rows = build_rows<BinaryTerm>(
          source.size(), opts.jobs, opts.max_entries, [&](std::size_t i) { return commag_to_mag(source[i]); },
          [](const BinaryTerm& t) { return is_normalized(t); });
      cert = certify_rows(std::move(rows), factorial(n) * catalan(n - 1), opts.max_entries);
      break;
    }
    case CertMap::MagToDend: {
      auto source = enumerate_mag_planar(n);
      auto rows = build_rows<PlanarBinaryTree>(
          source.size(), opts.jobs, opts.max_entries, [&](std::size_t i) { return at_lambda(mag_to_dend(source[i]), opts.lambda); },
          [](const PlanarBinaryTree&) { return true; });
      cert = certify_rows(std::move(rows), catalan(n), opts.max_entries);
      cert.lambda = opts.lambda;
      break;
    }
  }
  cert.map = std::string(cert_map_name(map));
  cert.n = n;
  return cert;
}

}  // namespace opf

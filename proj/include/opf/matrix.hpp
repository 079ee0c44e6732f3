#pragma once

#include <cstddef>
#include <cstdint>
#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

#include "opf/rational.hpp"

namespace opf {

/// Sparse matrix over the rationals; rows are maps col -> nonzero entry.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  /// Setting zero erases the entry. Throws opf::Error on out-of-range indices.
  void set(std::size_t r, std::size_t c, const Rational& v);
  Rational get(std::size_t r, std::size_t c) const;
  const std::map<std::size_t, Rational>& row(std::size_t r) const { return data_.at(r); }
  std::size_t nonzeros() const;

  RationalMatrix transpose() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::map<std::size_t, Rational>> data_;
};

/// Exact rank over Q. Each row is cleared to a primitive integer vector. Rows
/// owning a column no other row meets are retired without arithmetic; when
/// none is left, the sparsest row is eliminated fraction-free on its column
/// met by the fewest rows.
std::size_t rank(const RationalMatrix& m);

/// Sparse integer row: (column, nonzero value) pairs, columns distinct.
using IntRow = std::vector<std::pair<std::size_t, mpz_class>>;

/// Exact rank of integer rows over Q. Same elimination as rank(); used
/// directly when rows are too many to stage as Rationals.
/// Both eliminations throw ResourceError once more than `max_entries` entries
/// (0 = no limit) are stored, fill-in included.
std::size_t integer_rank(std::vector<IntRow> rows, std::size_t cols, std::size_t max_entries = 0);

/// Pivot columns of the same elimination run modulo the prime q. The rows
/// restricted to these columns are independent mod q, hence over Q. Only used
/// to choose columns; ranks are always recomputed exactly.
std::vector<std::size_t> pivot_columns_mod_p(const std::vector<IntRow>& rows, std::size_t cols,
                                             std::uint64_t q = 2147483647, std::size_t max_entries = 0);

}  // namespace opf

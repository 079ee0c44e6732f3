#include "opf/matrix.hpp"

#include <algorithm>
#include <utility>

#include "opf/error.hpp"

namespace opf {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows) {}

void RationalMatrix::set(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= rows_ || c >= cols_) throw Error("matrix index out of range");
  if (v.is_zero())
    data_[r].erase(c);
  else
    data_[r][c] = v;
}

Rational RationalMatrix::get(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw Error("matrix index out of range");
  auto it = data_[r].find(c);
  return it == data_[r].end() ? Rational(0) : it->second;
}

std::size_t RationalMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& row : data_) n += row.size();
  return n;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) t.data_[c][r] = v;
  return t;
}

namespace {


void make_primitive(IntRow& row) {
  if (row.empty()) return;
  mpz_class g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

IntRow integer_row(const std::map<std::size_t, Rational>& row) {
  mpz_class lcm = 1;
  for (const auto& [c, v] : row) {
    mpz_class den = v.denominator();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
  }
  IntRow out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) {
    mpz_class scaled = v.numerator() * (lcm / v.denominator());
    out.emplace_back(c, std::move(scaled));
  }
  make_primitive(out);
  return out;
}

template <class V>
const V* find_entry(const std::vector<std::pair<std::size_t, V>>& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

// target <- p*target - a*pivot, where a is target's entry in the pivot column.
// Reports columns gained (fill-in) and lost (cancellation).
IntRow eliminate(const IntRow& target, const mpz_class& a, const IntRow& pivot, const mpz_class& p,
                 std::vector<std::size_t>& gained, std::vector<std::size_t>& lost) {
  IntRow out;
  out.reserve(target.size() + pivot.size());
  auto i = target.begin();
  auto j = pivot.begin();
  while (i != target.end() || j != pivot.end()) {
    if (j == pivot.end() || (i != target.end() && i->first < j->first)) {
      out.emplace_back(i->first, p * i->second);
      ++i;
    } else if (i == target.end() || j->first < i->first) {
      out.emplace_back(j->first, -a * j->second);
      gained.push_back(j->first);
      ++j;
    } else {
      mpz_class v = p * i->second - a * j->second;
      if (v != 0)
        out.emplace_back(i->first, std::move(v));
      else
        lost.push_back(i->first);
      ++i;
      ++j;
    }
  }
  make_primitive(out);
  return out;
}

using ModRow = std::vector<std::pair<std::size_t, std::uint64_t>>;

// Same update modulo a prime q: target <- target - (a/p)*pivot.
struct ModField {
  std::uint64_t q;

  std::uint64_t inverse(std::uint64_t x) const {
    std::uint64_t r = 1, e = q - 2;
    for (; e; e >>= 1, x = x * x % q)
      if (e & 1) r = r * x % q;
    return r;
  }

  ModRow eliminate(const ModRow& target, std::uint64_t a, const ModRow& pivot, std::uint64_t p,
                   std::vector<std::size_t>& gained, std::vector<std::size_t>& lost) const {
    const std::uint64_t f = q - a * inverse(p) % q;
    ModRow out;
    out.reserve(target.size() + pivot.size());
    auto i = target.begin();
    auto j = pivot.begin();
    while (i != target.end() || j != pivot.end()) {
      if (j == pivot.end() || (i != target.end() && i->first < j->first)) {
        out.push_back(*i);
        ++i;
      } else if (i == target.end() || j->first < i->first) {
        out.emplace_back(j->first, f * j->second % q);
        gained.push_back(j->first);
        ++j;
      } else {
        std::uint64_t v = (i->second + f * j->second) % q;
        if (v != 0)
          out.emplace_back(i->first, v);
        else
          lost.push_back(i->first);
        ++i;
        ++j;
      }
    }
    return out;
  }
};

struct IntegerRing {
  IntRow eliminate(const IntRow& target, const mpz_class& a, const IntRow& pivot, const mpz_class& p,
                   std::vector<std::size_t>& gained, std::vector<std::size_t>& lost) const {
    return opf::eliminate(target, a, pivot, p, gained, lost);
  }
};

// Sparse elimination shared by the exact and modular paths. Rows must be
// sorted by column with nonzero entries. Returns the pivot columns in order.
template <class V, class Ring>
std::vector<std::size_t> sparse_pivots(std::vector<std::vector<std::pair<std::size_t, V>>> rows, std::size_t cols,
                                       const Ring& ring, std::size_t max_entries) {
  std::size_t stored = 0;
  for (const auto& row : rows) stored += row.size();
  auto check_budget = [&] {
    if (max_entries && stored > max_entries)
      throw ResourceError("rank elimination passed " + std::to_string(max_entries) + " stored entries");
  };
  check_budget();
  // rows_in[c] lists rows that may hold column c (stale ids are skipped);
  // count[c] is exact over active rows.
  std::vector<std::vector<std::size_t>> rows_in(cols);
  std::vector<std::size_t> count(cols, 0);
  std::vector<char> active(rows.size(), 0);
  std::size_t remaining = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) continue;
    active[r] = 1;
    ++remaining;
    for (const auto& [c, v] : rows[r]) {
      rows_in[c].push_back(r);
      ++count[c];
    }
  }
  auto holds = [&](std::size_t r, std::size_t c) { return active[r] && find_entry(rows[r], c) != nullptr; };

  std::vector<std::size_t> singles;
  for (std::size_t c = 0; c < cols; ++c)
    if (count[c] == 1) singles.push_back(c);

  auto retire = [&](std::size_t r) {
    active[r] = 0;
    --remaining;
    for (const auto& [c, v] : rows[r])
      if (--count[c] == 1) singles.push_back(c);
  };

  std::vector<std::size_t> pivots;
  std::vector<std::size_t> gained, lost;
  while (remaining > 0) {
    // A column met by one row only: that row is independent of the rest and
    // leaves without any arithmetic.
    if (!singles.empty()) {
      std::size_t c = singles.back();
      singles.pop_back();
      if (count[c] != 1) continue;
      for (std::size_t r : rows_in[c])
        if (holds(r, c)) {
          pivots.push_back(c);
          retire(r);
          stored -= rows[r].size();
          std::vector<std::pair<std::size_t, V>>().swap(rows[r]);
          break;
        }
      continue;
    }

    // Otherwise eliminate: sparsest active row, its column met by the fewest rows.
    std::size_t pr = rows.size();
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (active[r] && (pr == rows.size() || rows[r].size() < rows[pr].size())) pr = r;
    std::size_t col = rows[pr].front().first;
    for (const auto& [c, v] : rows[pr])
      if (count[c] < count[col]) col = c;
    pivots.push_back(col);
    retire(pr);
    const auto& pivot = rows[pr];
    const V p = *find_entry(pivot, col);

    std::vector<std::size_t> touched = std::move(rows_in[col]);
    rows_in[col].clear();
    for (std::size_t r : touched) {
      if (!holds(r, col)) continue;
      gained.clear();
      lost.clear();
      stored -= rows[r].size();
      rows[r] = ring.eliminate(rows[r], *find_entry(rows[r], col), pivot, p, gained, lost);
      stored += rows[r].size();
      check_budget();
      for (std::size_t c : gained) {
        rows_in[c].push_back(r);
        ++count[c];
      }
      for (std::size_t c : lost)
        if (--count[c] == 1) singles.push_back(c);
      if (rows[r].empty()) {
        active[r] = 0;
        --remaining;
      }
    }
    for (const auto& [c, v] : pivot)
      if (count[c] == 1) singles.push_back(c);
    stored -= rows[pr].size();
    std::vector<std::pair<std::size_t, V>>().swap(rows[pr]);
  }
  return pivots;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
  std::vector<IntRow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    IntRow row = integer_row(m.row(r));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return integer_rank(std::move(rows), m.cols());
}

std::size_t integer_rank(std::vector<IntRow> rows, std::size_t cols, std::size_t max_entries) {
  for (auto& row : rows) {
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k].first >= cols) throw Error("matrix column out of range");
      if (row[k].second == 0 || (k > 0 && row[k].first == row[k - 1].first))
        throw Error("integer row has a zero or repeated entry");
    }
    make_primitive(row);
  }

  return sparse_pivots(std::move(rows), cols, IntegerRing{}, max_entries).size();
}

std::vector<std::size_t> pivot_columns_mod_p(const std::vector<IntRow>& rows, std::size_t cols, std::uint64_t q,
                                             std::size_t max_entries) {
  if (q < 3 || q >= (std::uint64_t{1} << 32)) throw Error("modulus must be an odd prime below 2^32");
  std::vector<ModRow> reduced;
  reduced.reserve(rows.size());
  mpz_class m;
  for (const auto& row : rows) {
    ModRow out;
    out.reserve(row.size());
    for (const auto& [c, v] : row) {
      if (c >= cols) throw Error("matrix column out of range");
      mpz_fdiv_r_ui(m.get_mpz_t(), v.get_mpz_t(), q);
      if (m != 0) out.emplace_back(c, m.get_ui());
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    reduced.push_back(std::move(out));
  }
  return sparse_pivots(std::move(reduced), cols, ModField{q}, max_entries);
}

}  // namespace opf

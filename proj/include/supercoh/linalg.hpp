#ifndef SUPERCOH_LINALG_HPP
#define SUPERCOH_LINALG_HPP

#include <supercoh/errors.hpp>
#include <supercoh/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace supercoh {

/// Sparse exact matrix, stored column by column. No zero is ever stored.
class RationalMatrix {
 public:
  using Column = std::map<std::size_t, Rational>;

  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }

  std::size_t nnz() const noexcept {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
  }

  void set(std::size_t r, std::size_t c, const Rational& value) {
    check(r, c);
    if (value == 0) columns_[c].erase(r);
    else columns_[c][r] = value;
  }

  void add(std::size_t r, std::size_t c, const Rational& value) {
    check(r, c);
    if (value == 0) return;
    auto [it, inserted] = columns_[c].try_emplace(r, value);
    if (!inserted) {
      it->second += value;
      if (it->second == 0) columns_[c].erase(it);
    }
  }

  Rational at(std::size_t r, std::size_t c) const {
    check(r, c);
    auto it = columns_[c].find(r);
    return it == columns_[c].end() ? Rational(0) : it->second;
  }

  const Column& column(std::size_t c) const { return columns_.at(c); }

  bool is_zero() const noexcept {
    return std::all_of(columns_.begin(), columns_.end(), [](const Column& c) { return c.empty(); });
  }

  RationalMatrix transpose() const {
    RationalMatrix t(cols(), rows_);
    for (std::size_t c = 0; c < cols(); ++c)
      for (const auto& [r, v] : columns_[c]) t.columns_[r][c] = v;
    return t;
  }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
    RationalMatrix out(a.rows(), b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c)
      for (const auto& [k, bv] : b.columns_[c])
        for (const auto& [r, av] : a.columns_[k]) out.add(r, c, av * bv);
    return out;
  }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  void check(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols()) throw std::out_of_range("matrix index");
  }

  std::size_t rows_ = 0;
  std::vector<Column> columns_;
};

namespace detail {

using IntegerRow = std::vector<std::pair<std::uint32_t, Integer>>;

/// Rows over the integers after scaling every column by the lcm of its denominators.
inline std::vector<IntegerRow> integer_rows(const RationalMatrix& m) {
  std::vector<IntegerRow> rows(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Integer lcm = 1;
    for (const auto& [r, v] : m.column(c)) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
    for (const auto& [r, v] : m.column(c))
      rows[r].emplace_back(static_cast<std::uint32_t>(c), Integer(v.get_num() * (lcm / v.get_den())));
  }
  return rows;  // columns were visited in order, so each row is sorted
}

inline void make_primitive(IntegerRow& row) {
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

} // namespace detail

/// Exact rank over the rationals.
///
/// Fraction-free sparse elimination over the integers: a row r is reduced by
/// the pivot row p as r <- (a/g) r - (b/g) p with a, b the two entries in the
/// pivot column and g = gcd(a, b), and every updated row is divided by its
/// content. The pivot row is the active row with the fewest nonzeros; within
/// it the pivot column is the one shared with the fewest other rows (a
/// Markowitz fill-in estimate). Ties go to the lowest index, so the run is
/// deterministic.
inline std::size_t rank(const RationalMatrix& matrix) {
  auto rows = detail::integer_rows(matrix);
  std::vector<std::set<std::uint32_t>> column_rows(matrix.cols());
  std::set<std::pair<std::size_t, std::uint32_t>> queue;  // (nnz, row)
  for (std::uint32_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) continue;
    queue.emplace(rows[r].size(), r);
    for (const auto& [c, v] : rows[r]) column_rows[c].insert(r);
  }

  std::size_t rank = 0;
  detail::IntegerRow merged;
  while (!queue.empty()) {
    const auto p = queue.begin()->second;
    queue.erase(queue.begin());
    const auto& pivot_row = rows[p];
    if (pivot_row.empty()) continue;

    std::size_t best = 0;
    for (std::size_t k = 1; k < pivot_row.size(); ++k)
      if (column_rows[pivot_row[k].first].size() < column_rows[pivot_row[best].first].size()) best = k;
    const std::uint32_t pc = pivot_row[best].first;
    const Integer pivot = pivot_row[best].second;
    ++rank;

    for (const auto& [c, v] : pivot_row) column_rows[c].erase(p);
    const std::vector<std::uint32_t> targets(column_rows[pc].begin(), column_rows[pc].end());

    for (const std::uint32_t r : targets) {
      auto& row = rows[r];
      queue.erase({row.size(), r});
      auto hit = std::lower_bound(row.begin(), row.end(), pc,
                                  [](const auto& e, std::uint32_t c) { return e.first < c; });
      Integer g;
      mpz_gcd(g.get_mpz_t(), pivot.get_mpz_t(), hit->second.get_mpz_t());
      const Integer a = pivot / g, b = hit->second / g;

      merged.clear();
      auto x = row.begin();
      auto y = pivot_row.begin();
      while (x != row.end() || y != pivot_row.end()) {
        if (y == pivot_row.end() || (x != row.end() && x->first < y->first)) {
          merged.emplace_back(x->first, a * x->second);
          ++x;
        } else if (x == row.end() || y->first < x->first) {
          column_rows[y->first].insert(r);
          merged.emplace_back(y->first, -b * y->second);
          ++y;
        } else {
          Integer v = a * x->second - b * y->second;
          if (v == 0) column_rows[x->first].erase(r);
          else merged.emplace_back(x->first, std::move(v));
          ++x;
          ++y;
        }
      }
      detail::make_primitive(merged);
      row.swap(merged);
      if (!row.empty()) queue.emplace(row.size(), r);
    }
    rows[p].clear();
  }
  return rank;
}

inline std::size_t kernel_dim(const RationalMatrix& matrix) { return matrix.cols() - rank(matrix); }

/// Debug dump: header "rows cols nnz", then "row col numerator/denominator"
/// per entry, sorted by row and then column.
inline void write_matrix(std::ostream& os, const RationalMatrix& m) {
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, const Rational*>> entries;
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.column(c)) entries.push_back({{r, c}, &v});
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  os << m.rows() << ' ' << m.cols() << ' ' << entries.size() << '\n';
  for (const auto& [rc, v] : entries)
    os << rc.first << ' ' << rc.second << ' ' << v->get_num().get_str() << '/'
       << v->get_den().get_str() << '\n';
}

inline RationalMatrix read_matrix(std::istream& is) {
  std::size_t rows = 0, cols = 0, nnz = 0;
  if (!(is >> rows >> cols >> nnz)) throw ParseError("matrix dump: bad header", 1);
  RationalMatrix m(rows, cols);
  for (std::size_t k = 0; k < nnz; ++k) {
    std::size_t r = 0, c = 0;
    std::string text;
    if (!(is >> r >> c >> text)) throw ParseError("matrix dump: truncated", k + 2);
    auto value = parse_rational(text);
    if (!value || r >= rows || c >= cols) throw ParseError("matrix dump: bad entry", k + 2);
    m.set(r, c, *value);
  }
  return m;
}

} // namespace supercoh

#endif

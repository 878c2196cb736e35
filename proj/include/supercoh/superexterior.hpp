#ifndef SUPERCOH_SUPEREXTERIOR_HPP
#define SUPERCOH_SUPEREXTERIOR_HPP

#include <supercoh/algebra.hpp>
#include <supercoh/combinatorics.hpp>
#include <supercoh/rational.hpp>

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace supercoh {

/// Superdimension (dim V_0, dim V_1) of the space the monomials live over.
struct SuperSpaceDims {
  std::size_t even_count = 0;
  std::size_t odd_count = 0;

  friend bool operator==(const SuperSpaceDims&, const SuperSpaceDims&) = default;
};

inline constexpr std::size_t kMaxEvenGenerators = 64;

/// Normal-form basis element e_I (x) o^alpha of the super-exterior algebra:
/// an increasing set of even generators followed by an exponent vector over
/// the odd generators. Even generators anticommute, odd ones commute.
class SuperMonomial {
 public:
  SuperMonomial() = default;

  /// The unit monomial over a space with the given number of odd generators.
  explicit SuperMonomial(std::size_t odd_count) : odd_(odd_count, 0) {}

  SuperMonomial(std::uint64_t even_mask, std::vector<std::uint32_t> odd_exponents)
      : even_mask_(even_mask), odd_(std::move(odd_exponents)) {}

  static SuperMonomial unit(const SuperSpaceDims& dims) { return SuperMonomial(dims.odd_count); }

  static SuperMonomial even_generator(const SuperSpaceDims& dims, std::size_t i) {
    if (i >= dims.even_count) throw std::out_of_range("even generator index");
    return {std::uint64_t{1} << i, std::vector<std::uint32_t>(dims.odd_count, 0)};
  }

  static SuperMonomial odd_generator(const SuperSpaceDims& dims, std::size_t j, std::uint32_t power = 1) {
    if (j >= dims.odd_count) throw std::out_of_range("odd generator index");
    std::vector<std::uint32_t> exps(dims.odd_count, 0);
    exps[j] = power;
    return {0, std::move(exps)};
  }

  /// Builds from an explicit even index set, which must be strictly increasing.
  static SuperMonomial from(const SuperSpaceDims& dims, std::span<const std::size_t> even_set,
                            std::vector<std::uint32_t> odd_exponents) {
    if (odd_exponents.size() != dims.odd_count) throw std::invalid_argument("odd exponent length");
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < even_set.size(); ++k) {
      if (even_set[k] >= dims.even_count) throw std::out_of_range("even generator index");
      if (k > 0 && even_set[k] <= even_set[k - 1])
        throw std::invalid_argument("even set must be strictly increasing");
      mask |= std::uint64_t{1} << even_set[k];
    }
    return {mask, std::move(odd_exponents)};
  }

  std::uint64_t even_mask() const noexcept { return even_mask_; }
  std::span<const std::uint32_t> odd_exponents() const noexcept { return odd_; }
  std::size_t odd_count() const noexcept { return odd_.size(); }

  std::vector<std::size_t> even_set() const {
    std::vector<std::size_t> out;
    for (std::uint64_t m = even_mask_; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  bool contains_even(std::size_t i) const noexcept { return (even_mask_ >> i) & 1U; }
  std::uint32_t odd_power(std::size_t j) const { return odd_.at(j); }

  std::size_t even_degree() const noexcept { return std::popcount(even_mask_); }
  std::size_t odd_degree() const noexcept {
    return std::accumulate(odd_.begin(), odd_.end(), std::size_t{0});
  }
  /// Z-degree.
  std::size_t degree() const noexcept { return even_degree() + odd_degree(); }
  /// Z2-degree.
  Parity parity() const noexcept { return odd_degree() % 2 ? Parity::odd : Parity::even; }

  /// The generator factors in normal order: even indices ascending, then each
  /// odd index repeated by its exponent. Odd indices are offset by even_count.
  std::vector<std::size_t> factors(std::size_t even_count) const {
    auto out = even_set();
    for (std::size_t j = 0; j < odd_.size(); ++j) out.insert(out.end(), odd_[j], even_count + j);
    return out;
  }

  friend bool operator==(const SuperMonomial&, const SuperMonomial&) = default;
  friend auto operator<=>(const SuperMonomial&, const SuperMonomial&) = default;

 private:
  std::uint64_t even_mask_ = 0;
  std::vector<std::uint32_t> odd_;
};

inline std::ostream& operator<<(std::ostream& os, const SuperMonomial& m) {
  bool first = true;
  for (auto i : m.even_set()) {
    os << (first ? "" : "*") << 'e' << i + 1;
    first = false;
  }
  for (std::size_t j = 0; j < m.odd_count(); ++j) {
    if (!m.odd_power(j)) continue;
    os << (first ? "" : "*") << 'o' << j + 1;
    if (m.odd_power(j) > 1) os << '^' << m.odd_power(j);
    first = false;
  }
  if (first) os << '1';
  return os;
}

/// Product of two monomials in normal form, with its sign, or nullopt when a
/// repeated even generator kills the term.
inline std::optional<std::pair<SuperMonomial, int>> multiply(const SuperMonomial& a,
                                                            const SuperMonomial& b) {
  if (a.odd_count() != b.odd_count()) throw std::invalid_argument("wedge: odd dimension mismatch");
  const std::uint64_t left = a.even_mask(), right = b.even_mask();
  if (left & right) return std::nullopt;
  // Moving e_J left across o^alpha: one -1 per (odd factor, even factor) crossing.
  std::size_t swaps = std::popcount(right) * a.odd_degree();
  // Merging e_I and e_J: count pairs i in I, j in J with i > j.
  for (std::uint64_t m = right; m; m &= m - 1) {
    const int j = std::countr_zero(m);
    swaps += j == 63 ? 0 : std::popcount(left >> (j + 1));
  }
  std::vector<std::uint32_t> exps(a.odd_exponents().begin(), a.odd_exponents().end());
  for (std::size_t j = 0; j < exps.size(); ++j) exps[j] += b.odd_exponents()[j];
  return std::pair{SuperMonomial(left | right, std::move(exps)), swaps % 2 ? -1 : 1};
}

/// Sparse rational combination of monomials, homogeneous in both gradings.
class SuperElement {
 public:
  using Terms = std::map<SuperMonomial, Rational>;

  SuperElement() = default;
  SuperElement(const SuperMonomial& m, Rational c = 1) { add(m, std::move(c)); }

  static SuperElement one(const SuperSpaceDims& dims) { return SuperElement(SuperMonomial::unit(dims)); }

  void add(const SuperMonomial& m, const Rational& c) {
    if (c == 0) return;
    if (!terms_.empty()) {
      const auto& ref = terms_.begin()->first;
      if (ref.degree() != m.degree() || ref.parity() != m.parity())
        throw std::invalid_argument("SuperElement: inhomogeneous term");
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational coefficient(const SuperMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Degree of the (homogeneous) element; 0 for the zero element.
  std::size_t degree() const noexcept { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }
  Parity parity() const noexcept {
    return terms_.empty() ? Parity::even : terms_.begin()->first.parity();
  }

  SuperElement& operator+=(const SuperElement& other) {
    for (const auto& [m, c] : other.terms_) add(m, c);
    return *this;
  }
  SuperElement& operator-=(const SuperElement& other) {
    for (const auto& [m, c] : other.terms_) add(m, -c);
    return *this;
  }
  SuperElement& operator*=(const Rational& s) {
    if (s == 0) terms_.clear();
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend SuperElement operator+(SuperElement a, const SuperElement& b) { return a += b; }
  friend SuperElement operator-(SuperElement a, const SuperElement& b) { return a -= b; }
  friend SuperElement operator*(const Rational& s, SuperElement a) { return a *= s; }
  friend SuperElement operator-(SuperElement a) { return a *= Rational(-1); }
  friend bool operator==(const SuperElement&, const SuperElement&) = default;

 private:
  Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const SuperElement& x) {
  if (x.is_zero()) return os << '0';
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    Rational a = abs(c);
    if (a != 1) os << a.get_str() << '*';
    os << m;
  }
  return os;
}

inline SuperElement wedge(const SuperElement& a, const SuperElement& b) {
  SuperElement out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      if (auto prod = multiply(ma, mb)) out.add(prod->first, prod->second * ca * cb);
  return out;
}

/// dim of the degree-q part: sum_p C(n, q-p) s_m(p).
inline std::uint64_t graded_dim(const SuperSpaceDims& dims, int q) {
  if (q < 0) return 0;
  std::int64_t total = 0;
  for (int p = 0; p <= q; ++p)
    total += binomial(static_cast<std::int64_t>(dims.even_count), q - p) *
             sym_dim(static_cast<std::int64_t>(dims.odd_count), p);
  return static_cast<std::uint64_t>(total);
}

/// All monomials of degree q. Order: even degree descending; then even sets
/// lexicographically as increasing index lists; then odd exponent vectors in
/// decreasing lexicographic order (o1^2 before o1*o2 before o2^2). Every
/// matrix builder uses this order.
inline std::vector<SuperMonomial> enumerate_basis(const SuperSpaceDims& dims, int q) {
  std::vector<SuperMonomial> out;
  if (q < 0) return out;
  if (dims.even_count > kMaxEvenGenerators) throw std::invalid_argument("too many even generators");
  out.reserve(graded_dim(dims, q));

  const auto uq = static_cast<std::size_t>(q);
  for (std::size_t q0 = std::min(uq, dims.even_count) + 1; q0-- > 0;) {
    const std::size_t q1 = uq - q0;

    std::vector<std::vector<std::uint32_t>> odd_parts;
    if (dims.odd_count == 0) {
      if (q1 == 0) odd_parts.emplace_back();
    } else {
      std::vector<std::uint32_t> cur(dims.odd_count, 0);
      auto fill = [&](auto&& self, std::size_t slot, std::uint32_t rest) -> void {
        if (slot + 1 == dims.odd_count) {
          cur[slot] = rest;
          odd_parts.push_back(cur);
          return;
        }
        for (std::uint32_t e = rest + 1; e-- > 0;) {
          cur[slot] = e;
          self(self, slot + 1, rest - e);
        }
      };
      fill(fill, 0, static_cast<std::uint32_t>(q1));
    }
    if (odd_parts.empty()) continue;

    std::vector<std::size_t> subset(q0);
    auto emit = [&](std::uint64_t mask) {
      for (const auto& exps : odd_parts) out.emplace_back(mask, exps);
    };
    auto choose = [&](auto&& self, std::size_t pos, std::size_t start, std::uint64_t mask) -> void {
      if (pos == q0) {
        emit(mask);
        return;
      }
      for (std::size_t i = start; i + (q0 - pos) <= dims.even_count; ++i)
        self(self, pos + 1, i + 1, mask | (std::uint64_t{1} << i));
    };
    choose(choose, 0, 0, 0);
  }
  return out;
}

/// Index of every monomial of enumerate_basis(dims, q).
inline std::map<SuperMonomial, std::size_t> basis_index(std::span<const SuperMonomial> basis) {
  std::map<SuperMonomial, std::size_t> index;
  for (std::size_t k = 0; k < basis.size(); ++k) index.emplace(basis[k], k);
  return index;
}

using SmallMatrix = std::vector<std::vector<Rational>>;

/// Exact determinant by Gaussian elimination over the rationals.
inline Rational determinant(SmallMatrix a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

namespace detail {

// Expansion along the first remaining row; `used` marks consumed columns.
inline Rational permanent_rec(const SmallMatrix& a, std::size_t row, std::uint64_t used,
                              std::map<std::uint64_t, Rational>& memo) {
  const std::size_t n = a.size();
  if (row == n) return 1;
  if (auto it = memo.find(used); it != memo.end()) return it->second;
  Rational sum = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if ((used >> j) & 1U || a[row][j] == 0) continue;
    sum += a[row][j] * permanent_rec(a, row + 1, used | (std::uint64_t{1} << j), memo);
  }
  memo.emplace(used, sum);
  return sum;
}

inline SmallMatrix minor_of(const SmallMatrix& a, std::size_t row, std::size_t col) {
  SmallMatrix m;
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (r == row) continue;
    auto& line = m.emplace_back();
    for (std::size_t c = 0; c < a.size(); ++c)
      if (c != col) line.push_back(a[r][c]);
  }
  return m;
}

} // namespace detail

/// Permanent of a square matrix by Laplace-style expansion along `row`:
/// sum_j a[row][j] * perm(minor(row, j)). Every choice of row gives the same value.
inline Rational permanent(const SmallMatrix& a, std::size_t row = 0) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n > 64) throw std::invalid_argument("permanent: matrix too large");
  if (row >= n) throw std::out_of_range("permanent: row");
  if (row == 0) {
    std::map<std::uint64_t, Rational> memo;
    return detail::permanent_rec(a, 0, 0, memo);
  }
  Rational sum = 0;
  for (std::size_t j = 0; j < n; ++j)
    if (a[row][j] != 0) sum += a[row][j] * permanent(detail::minor_of(a, row, j));
  return sum;
}

/// Evaluation matrices <f_i, a_j> of a dual monomial against a primal one,
/// the even block first and the odd block second. Dual bases: <f_i, a_j> = delta_ij.
inline std::pair<SmallMatrix, SmallMatrix> evaluation_matrices(const SuperMonomial& alpha,
                                                               const SuperMonomial& u) {
  auto square = [](const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    SmallMatrix m(rows.size(), std::vector<Rational>(cols.size(), 0));
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c)
        if (rows[r] == cols[c]) m[r][c] = 1;
    return m;
  };
  auto odd_list = [](const SuperMonomial& m) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < m.odd_count(); ++j) out.insert(out.end(), m.odd_power(j), j);
    return out;
  };
  return {square(alpha.even_set(), u.even_set()), square(odd_list(alpha), odd_list(u))};
}

/// <alpha, u>: zero unless the even and odd degrees agree, otherwise the
/// determinant of the even evaluation matrix times the permanent of the odd one.
inline Rational dual_pairing(const SuperMonomial& alpha, const SuperMonomial& u) {
  if (alpha.odd_count() != u.odd_count()) throw std::invalid_argument("dual_pairing: dimension mismatch");
  if (alpha.even_degree() != u.even_degree() || alpha.odd_degree() != u.odd_degree()) return 0;
  auto [even, odd] = evaluation_matrices(alpha, u);
  Rational d = determinant(std::move(even));
  if (d == 0) return 0;
  return d * permanent(odd);
}

/// Bilinear extension of dual_pairing.
inline Rational dual_pairing(const SuperElement& alpha, const SuperElement& u) {
  Rational sum = 0;
  for (const auto& [ma, ca] : alpha.terms())
    for (const auto& [mu, cu] : u.terms()) {
      Rational p = dual_pairing(ma, mu);
      if (p != 0) sum += ca * cu * p;
    }
  return sum;
}

} // namespace supercoh

#endif

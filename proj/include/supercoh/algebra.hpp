#ifndef SUPERCOH_ALGEBRA_HPP
#define SUPERCOH_ALGEBRA_HPP

#include <supercoh/errors.hpp>
#include <supercoh/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace supercoh {

/// Z2-degree of a homogeneous element.
enum class Parity : std::uint8_t { even = 0, odd = 1 };

constexpr Parity operator+(Parity a, Parity b) noexcept {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

constexpr int bit(Parity p) noexcept { return static_cast<int>(p); }

/// (-1)^(|a||b|)
constexpr int koszul_sign(Parity a, Parity b) noexcept { return (bit(a) & bit(b)) ? -1 : 1; }

struct Generator {
  std::string name;
  std::size_t index = 0;
  Parity parity = Parity::even;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Sparse image of a bracket of two basis elements: k -> c_ij^k.
using BracketImage = std::map<std::size_t, Rational>;

/// One structure constant c_ij^k. Used to feed the algebra constructor.
struct StructureConstant {
  std::size_t left;
  std::size_t right;
  std::size_t result;
  Rational value;
};

/// A finite-dimensional Lie superalgebra given by structure constants on a
/// homogeneous basis. Only brackets with left <= right are stored; the other
/// half is always derived through super skew-symmetry, so the stored data can
/// never disagree with itself. Axioms are not checked here, see validate().
class LieSuperalgebra {
 public:
  using PairKey = std::pair<std::size_t, std::size_t>;

  LieSuperalgebra(std::string name, const std::vector<std::pair<std::string, Parity>>& generators,
                  const std::vector<StructureConstant>& constants)
      : name_(std::move(name)) {
    std::set<std::string> seen;
    for (const auto& [gen_name, parity] : generators) {
      if (gen_name.empty()) throw std::invalid_argument("empty generator name");
      if (!seen.insert(gen_name).second)
        throw std::invalid_argument("duplicate generator name '" + gen_name + "'");
      generators_.push_back({gen_name, generators_.size(), parity});
    }
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> keys;
    for (const auto& c : constants) {
      const std::size_t n = generators_.size();
      if (c.left >= n || c.right >= n || c.result >= n)
        throw std::invalid_argument("structure constant index out of range");
      Rational value = c.value;
      std::size_t i = c.left, j = c.right;
      if (i > j) {
        // c_ij = -(-1)^{|i||j|} c_ji
        value *= -koszul_sign(parity(i), parity(j));
        std::swap(i, j);
      }
      if (!keys.insert({i, j, c.result}).second)
        throw std::invalid_argument("structure constant for (" + generators_[i].name + ", " +
                                    generators_[j].name + ") -> " +
                                    generators_[c.result].name + " given twice");
      if (value == 0) continue;
      brackets_[{i, j}][c.result] = value;
    }
  }

  const std::string& name() const noexcept { return name_; }
  std::span<const Generator> generators() const noexcept { return generators_; }
  std::size_t dimension() const noexcept { return generators_.size(); }
  Parity parity(std::size_t k) const { return generators_.at(k).parity; }

  /// (dim g_0, dim g_1)
  std::pair<std::size_t, std::size_t> superdim() const noexcept {
    std::size_t odd = 0;
    for (const auto& g : generators_) odd += bit(g.parity);
    return {generators_.size() - odd, odd};
  }

  std::optional<std::size_t> find(std::string_view gen_name) const {
    for (const auto& g : generators_)
      if (g.name == gen_name) return g.index;
    return std::nullopt;
  }

  /// Stored half of the bracket table, keyed by (i, j) with i <= j.
  const std::map<PairKey, BracketImage>& stored_brackets() const noexcept { return brackets_; }

  /// [a_i, a_j] for any i, j.
  BracketImage bracket(std::size_t i, std::size_t j) const {
    const bool swapped = i > j;
    auto it = brackets_.find(swapped ? PairKey{j, i} : PairKey{i, j});
    if (it == brackets_.end()) return {};
    BracketImage image = it->second;
    if (swapped) {
      const int s = -koszul_sign(parity(i), parity(j));
      for (auto& [k, c] : image) c *= s;
    }
    return image;
  }

  Rational coefficient(std::size_t i, std::size_t j, std::size_t k) const {
    auto image = bracket(i, j);
    auto it = image.find(k);
    return it == image.end() ? Rational(0) : it->second;
  }

  friend bool operator==(const LieSuperalgebra& a, const LieSuperalgebra& b) {
    return a.name_ == b.name_ && a.generators_ == b.generators_ && a.brackets_ == b.brackets_;
  }

 private:
  std::string name_;
  std::vector<Generator> generators_;
  std::map<PairKey, BracketImage> brackets_;
};

struct Violation {
  enum class Kind { skew_symmetry, parity, jacobi };
  Kind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

namespace detail {

inline void accumulate(BracketImage& into, const BracketImage& from, const Rational& scale) {
  for (const auto& [k, c] : from) {
    auto& slot = into[k];
    slot += scale * c;
    if (slot == 0) into.erase(k);
  }
}

/// [a_i, v] for a linear combination v.
inline BracketImage bracket_with(const LieSuperalgebra& g, std::size_t i, const BracketImage& v) {
  BracketImage out;
  for (const auto& [k, c] : v) accumulate(out, g.bracket(i, k), c);
  return out;
}

} // namespace detail

/// Checks skew-symmetry of stored self-brackets, parity homogeneity and the
/// super Jacobi identity on every basis triple. Violations are returned, not thrown.
inline ValidationReport validate(const LieSuperalgebra& g) {
  ValidationReport report;
  const auto gens = g.generators();
  auto name = [&](std::size_t k) { return gens[k].name; };

  for (const auto& [key, image] : g.stored_brackets()) {
    const auto [i, j] = key;
    // c_ii = -c_ii when a_i is even.
    if (i == j && g.parity(i) == Parity::even)
      report.violations.push_back({Violation::Kind::skew_symmetry,
                                   "even generator " + name(i) +
                                       " has a nonzero self-bracket"});
    for (const auto& [k, c] : image) {
      if (g.parity(k) != g.parity(i) + g.parity(j))
        report.violations.push_back({Violation::Kind::parity,
                                     "[" + name(i) + ", " + name(j) + "] has a component along " +
                                         name(k) + " of the wrong parity"});
    }
  }

  const std::size_t n = g.dimension();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const Parity pa = g.parity(a), pb = g.parity(b), pc = g.parity(c);
        BracketImage sum;
        detail::accumulate(sum, detail::bracket_with(g, a, g.bracket(b, c)), koszul_sign(pa, pc));
        detail::accumulate(sum, detail::bracket_with(g, b, g.bracket(c, a)), koszul_sign(pb, pa));
        detail::accumulate(sum, detail::bracket_with(g, c, g.bracket(a, b)), koszul_sign(pc, pb));
        if (!sum.empty())
          report.violations.push_back({Violation::Kind::jacobi, "super Jacobi fails on (" + name(a) +
                                                                   ", " + name(b) + ", " + name(c) +
                                                                   ")"});
      }
  return report;
}

namespace detail {

inline LieSuperalgebra checked(LieSuperalgebra g) {
  auto report = validate(g);
  if (!report.ok()) throw ValidationError(g.name() + ": " + report.violations.front().message);
  return g;
}

} // namespace detail

/// Heisenberg superalgebra with even center. Basis order
/// z, x_1..x_{2n} (even), y_1..y_m (odd); [x_i, x_{n+i}] = z, [y_j, y_j] = z.
inline LieSuperalgebra make_heisenberg_even(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("make_heisenberg_even: need n >= 1 and m >= 1");
  std::vector<std::pair<std::string, Parity>> gens{{"z", Parity::even}};
  for (int i = 1; i <= 2 * n; ++i) gens.emplace_back("x" + std::to_string(i), Parity::even);
  for (int j = 1; j <= m; ++j) gens.emplace_back("y" + std::to_string(j), Parity::odd);
  std::vector<StructureConstant> constants;
  const auto un = static_cast<std::size_t>(n);
  for (std::size_t i = 1; i <= un; ++i) constants.push_back({i, un + i, 0, 1});
  for (std::size_t j = 1; j <= static_cast<std::size_t>(m); ++j)
    constants.push_back({2 * un + j, 2 * un + j, 0, 1});
  return detail::checked(LieSuperalgebra("h_" + std::to_string(n) + "_" + std::to_string(m),
                                         gens, constants));
}

/// Heisenberg superalgebra with odd center. Basis order
/// x_1..x_n (even), y_1..y_n, z (odd); [x_i, y_i] = z.
inline LieSuperalgebra make_heisenberg_odd(int n) {
  if (n < 1) throw std::invalid_argument("make_heisenberg_odd: need n >= 1");
  std::vector<std::pair<std::string, Parity>> gens;
  for (int i = 1; i <= n; ++i) gens.emplace_back("x" + std::to_string(i), Parity::even);
  for (int i = 1; i <= n; ++i) gens.emplace_back("y" + std::to_string(i), Parity::odd);
  gens.emplace_back("z", Parity::odd);
  std::vector<StructureConstant> constants;
  const auto un = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i < un; ++i) constants.push_back({i, un + i, 2 * un, 1});
  return detail::checked(LieSuperalgebra("h_" + std::to_string(n), gens, constants));
}

} // namespace supercoh

#endif

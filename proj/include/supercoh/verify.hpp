#ifndef SUPERCOH_VERIFY_HPP
#define SUPERCOH_VERIFY_HPP

#include <supercoh/algebra.hpp>
#include <supercoh/cohomology.hpp>
#include <supercoh/differential.hpp>
#include <supercoh/errors.hpp>
#include <supercoh/formulas.hpp>
#include <supercoh/io.hpp>
#include <supercoh/linalg.hpp>

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace supercoh {

enum class Family { even, odd };

inline std::optional<Family> parse_family(std::string_view s) {
  if (s == "even") return Family::even;
  if (s == "odd") return Family::odd;
  return std::nullopt;
}

constexpr std::string_view to_string(Family f) noexcept { return f == Family::even ? "even" : "odd"; }

struct VerifyGrid {
  int n_min = 1;
  int n_max = 1;
  int m_min = 1;
  int m_max = 1;  // ignored for the odd family
  int q_max = 0;
  std::size_t column_cap = kDefaultColumnCap;
};

/// One formula value set against the rank oracle. For the psi kernel checks
/// q holds t and l is the power of z*; l is 0 everywhere else.
struct Comparison {
  int n = 0;
  int m = 0;
  int q = 0;
  int l = 0;
  std::string formula;
  std::int64_t formula_value = 0;
  std::int64_t oracle_value = 0;

  bool matches() const noexcept { return formula_value == oracle_value; }
};

struct VerifyResult {
  Family family = Family::even;
  VerifyGrid grid;
  std::vector<Comparison> comparisons;
  std::vector<Comparison> mismatches;
  std::chrono::steady_clock::duration elapsed{};

  /// Only the even formula and the proof-level odd formula are binding;
  /// the displayed odd formula and the psi kernels are reported.
  bool failed() const {
    for (const auto& c : mismatches)
      if (c.formula == to_string(Method::formula_even) || c.formula == to_string(Method::formula_odd_proof))
        return true;
    return false;
  }

  /// Grid points (n, q) where the displayed odd formula disagrees with the oracle.
  std::vector<Comparison> displayed_deviations() const {
    std::vector<Comparison> out;
    for (const auto& c : mismatches)
      if (c.formula == to_string(Method::formula_odd_displayed)) out.push_back(c);
    return out;
  }
};

inline constexpr std::string_view kKerPsiFormula = "ker-psi";
inline constexpr int kPsiPowers = 3;

/// Compares the closed forms of one family with the rank oracle over the grid.
/// Refuses up front with ResourceError if any matrix would exceed the cap.
inline VerifyResult verify_family(Family family, const VerifyGrid& grid) {
  if (grid.n_min < 1 || grid.n_max < grid.n_min || grid.q_max < 0 ||
      (family == Family::even && (grid.m_min < 1 || grid.m_max < grid.m_min)))
    throw std::invalid_argument("verify: empty or invalid grid");
  const auto start = std::chrono::steady_clock::now();
  VerifyResult result{family, grid, {}, {}, {}};

  auto record = [&](Comparison c) {
    if (!c.matches()) result.mismatches.push_back(c);
    result.comparisons.push_back(std::move(c));
  };
  auto refuse_if_large = [&](std::uint64_t cols, int n, int m, int q) {
    if (cols > grid.column_cap) {
      std::string at = "(n=" + std::to_string(n) + (family == Family::even ? ", m=" + std::to_string(m) : "") +
                       ", q=" + std::to_string(q) + ")";
      throw ResourceError("verify: " + std::to_string(cols) + " columns at " + at + " exceeds the cap of " +
                          std::to_string(grid.column_cap));
    }
  };

  if (family == Family::even) {
    for (int n = grid.n_min; n <= grid.n_max; ++n)
      for (int m = grid.m_min; m <= grid.m_max; ++m)
        for (int q = 0; q <= grid.q_max; ++q)
          refuse_if_large(graded_dim({2 * static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(m)}, q), n, m, q);
    for (int n = grid.n_min; n <= grid.n_max; ++n)
      for (int m = grid.m_min; m <= grid.m_max; ++m) {
        const auto table = betti_table(make_heisenberg_even(n, m), grid.q_max, grid.column_cap);
        for (const auto& r : table)
          record({n, m, r.q, 0, std::string(to_string(Method::formula_even)), formulas::dim_H_even(n, m, r.q),
                  static_cast<std::int64_t>(r.dim_cohomology)});
      }
  } else {
    for (int n = grid.n_min; n <= grid.n_max; ++n)
      for (int q = 0; q <= grid.q_max; ++q)
        refuse_if_large(graded_dim({static_cast<std::size_t>(n), static_cast<std::size_t>(n) + 1}, q), n, 0, q);
    for (int n = grid.n_min; n <= grid.n_max; ++n) {
      const auto table = betti_table(make_heisenberg_odd(n), grid.q_max, grid.column_cap);
      for (const auto& r : table) {
        const auto oracle = static_cast<std::int64_t>(r.dim_cohomology);
        record({n, 0, r.q, 0, std::string(to_string(Method::formula_odd_proof)), formulas::dim_H_odd_proof(n, r.q),
                oracle});
        record({n, 0, r.q, 0, std::string(to_string(Method::formula_odd_displayed)),
                formulas::dim_H_odd_displayed(n, r.q), oracle});
      }
      for (int t = 0; t <= grid.q_max; ++t)
        for (int l = 1; l <= kPsiPowers; ++l)
          record({n, 0, t, l, std::string(kKerPsiFormula), formulas::ker_psi_dim(t, n),
                  static_cast<std::int64_t>(kernel_dim(psi_matrix(t, n, l, grid.column_cap)))});
    }
  }
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

/// Serializes everything except the elapsed time, so output is reproducible.
inline std::string emit_verify(const VerifyResult& v, Format format) {
  std::ostringstream os;
  auto row_json = [](const Comparison& c) {
    return nlohmann::ordered_json{{"n", c.n},
                                  {"m", c.m},
                                  {"q", c.q},
                                  {"l", c.l},
                                  {"formula", c.formula},
                                  {"formula_value", c.formula_value},
                                  {"oracle_value", c.oracle_value},
                                  {"match", c.matches()}};
  };
  switch (format) {
    case Format::json: {
      nlohmann::ordered_json doc;
      doc["family"] = std::string(to_string(v.family));
      doc["grid"] = {{"n_min", v.grid.n_min}, {"n_max", v.grid.n_max}, {"m_min", v.grid.m_min},
                     {"m_max", v.grid.m_max}, {"q_max", v.grid.q_max}};
      doc["failed"] = v.failed();
      doc["mismatches"] = nlohmann::ordered_json::array();
      for (const auto& c : v.mismatches) doc["mismatches"].push_back(row_json(c));
      doc["comparisons"] = nlohmann::ordered_json::array();
      for (const auto& c : v.comparisons) doc["comparisons"].push_back(row_json(c));
      os << doc.dump(2) << '\n';
      break;
    }
    case Format::csv:
      os << "n,m,q,l,formula,formula_value,oracle_value,match\n";
      for (const auto& c : v.comparisons)
        os << c.n << ',' << c.m << ',' << c.q << ',' << c.l << ',' << c.formula << ',' << c.formula_value << ','
           << c.oracle_value << ',' << (c.matches() ? "yes" : "no") << '\n';
      break;
    case Format::text: {
      os << "family " << to_string(v.family) << ": " << v.comparisons.size() << " comparisons, "
         << v.mismatches.size() << " mismatches\n";
      for (const auto& c : v.mismatches) {
        os << "  mismatch " << c.formula << " n=" << c.n;
        if (v.family == Family::even) os << " m=" << c.m;
        os << (c.formula == kKerPsiFormula ? " t=" : " q=") << c.q;
        if (c.l) os << " l=" << c.l;
        os << ": formula " << c.formula_value << ", oracle " << c.oracle_value << '\n';
      }
      os << (v.failed() ? "FAILED" : "OK") << '\n';
      break;
    }
  }
  return os.str();
}

} // namespace supercoh

#endif

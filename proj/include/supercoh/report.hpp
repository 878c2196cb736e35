#ifndef SUPERCOH_REPORT_HPP
#define SUPERCOH_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace supercoh {

/// How a report was produced.
enum class Method { rank, formula_even, formula_odd_proof, formula_odd_displayed };

constexpr std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::rank: return "rank";
    case Method::formula_even: return "formula-even";
    case Method::formula_odd_proof: return "formula-odd-proof";
    case Method::formula_odd_displayed: return "formula-odd-displayed";
  }
  return "?";
}

inline std::optional<Method> parse_method(std::string_view text) {
  for (auto m : {Method::rank, Method::formula_even, Method::formula_odd_proof,
                 Method::formula_odd_displayed})
    if (to_string(m) == text) return m;
  return std::nullopt;
}

/// Dimensions of C^q, Z^q, B^q and H^q = Z^q / B^q.
struct CohomologyReport {
  std::string algebra_name;
  int q = 0;
  std::uint64_t dim_cochain = 0;
  std::uint64_t dim_cocycles = 0;
  std::uint64_t dim_coboundaries = 0;
  std::uint64_t dim_cohomology = 0;
  Method method = Method::rank;

  friend bool operator==(const CohomologyReport&, const CohomologyReport&) = default;
};

} // namespace supercoh

#endif

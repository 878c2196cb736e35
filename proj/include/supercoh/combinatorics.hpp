#ifndef SUPERCOH_COMBINATORICS_HPP
#define SUPERCOH_COMBINATORICS_HPP

#include <cstdint>

namespace supercoh {

/// C(a, b), zero outside 0 <= b <= a.
constexpr std::int64_t binomial(std::int64_t a, std::int64_t b) noexcept {
  if (b < 0 || a < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

/// Dimension of the degree-p symmetric power of an m-dimensional space;
/// zero for p < 0 and s_0(0) = 1.
constexpr std::int64_t sym_dim(std::int64_t m, std::int64_t p) noexcept {
  if (p < 0) return 0;
  if (m == 0) return p == 0 ? 1 : 0;
  return binomial(m + p - 1, p);
}

constexpr int delta(std::int64_t a, std::int64_t b) noexcept { return a == b ? 1 : 0; }

} // namespace supercoh

#endif

#ifndef SUPERCOH_FORMULAS_HPP
#define SUPERCOH_FORMULAS_HPP

// Closed-form Betti numbers of the Heisenberg superalgebras. Nothing here may
// touch the rank engine: these values exist to be checked against it.

#include <supercoh/report.hpp>
#include <supercoh/combinatorics.hpp>
#include <supercoh/superexterior.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace supercoh::formulas {

using supercoh::binomial;
using supercoh::delta;

/// s_m(p) = dim S^p of an m-dimensional odd space, 0 for p < 0.
constexpr std::int64_t s(std::int64_t m, std::int64_t p) noexcept { return sym_dim(m, p); }

/// delta_{q = 2, 3 (mod 4)}
constexpr int delta_mod4_23(std::int64_t q) noexcept {
  const auto r = ((q % 4) + 4) % 4;
  return r == 2 || r == 3;
}

namespace detail {
inline std::int64_t dim(std::size_t even, std::size_t odd, std::int64_t q) {
  return static_cast<std::int64_t>(graded_dim({even, odd}, static_cast<int>(q)));
}
} // namespace detail

/// Betti numbers of the even-center family h_{n,m}:
/// sum_{p=0}^{q-1} [C(2n, q-p) - C(2n, q-2-p)] s_m(p) + s_m(q).
inline std::int64_t dim_H_even(std::int64_t n, std::int64_t m, std::int64_t q) {
  if (n < 1 || m < 1) throw std::invalid_argument("dim_H_even: need n, m >= 1");
  if (q < 0) return 0;
  std::int64_t total = s(m, q);
  for (std::int64_t p = 0; p <= q - 1; ++p)
    total += (binomial(2 * n, q - p) - binomial(2 * n, q - 2 - p)) * s(m, p);
  return total;
}

/// dim Ker psi_(t,n,l), which does not depend on l:
/// sum_{i=1}^{floor(t/2)} (-1)^(i-1) (dim H_n^{t-2i} - delta_{t-2i,n}) + delta_{t,n}.
inline std::int64_t ker_psi_dim(std::int64_t t, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("ker_psi_dim: need n >= 1");
  if (t < 0) return 0;
  const auto un = static_cast<std::size_t>(n);
  std::int64_t total = delta(t, n);
  for (std::int64_t i = 1; i <= t / 2; ++i)
    total += (i % 2 ? 1 : -1) * (detail::dim(un, un, t - 2 * i) - delta(t - 2 * i, n));
  return total;
}

/// Cocycle count of h_n assembled from its z*-power decomposition:
/// dim H_n^q + sum_{i=1}^q dim Ker psi_(q-i,n,i).
inline std::int64_t cocycle_dim_odd(std::int64_t n, std::int64_t q) {
  if (q < 0) return 0;
  const auto un = static_cast<std::size_t>(n);
  std::int64_t total = detail::dim(un, un, q);
  for (std::int64_t i = 1; i <= q; ++i) total += ker_psi_dim(q - i, n);
  return total;
}

/// Betti numbers of the odd-center family h_n built from the intermediate
/// identities: dim H_n^q + dim H_n^{q-1} - dim C^{q-1}(h_n) plus the kernel
/// dimensions of psi in degrees q and q-1.
inline std::int64_t dim_H_odd_proof(std::int64_t n, std::int64_t q) {
  if (n < 1) throw std::invalid_argument("dim_H_odd_proof: need n >= 1");
  if (q < 0) return 0;
  const auto un = static_cast<std::size_t>(n);
  std::int64_t total = detail::dim(un, un, q) + detail::dim(un, un, q - 1) - detail::dim(un, un + 1, q - 1);
  for (std::int64_t i = 1; i <= q; ++i) total += ker_psi_dim(q - i, n);
  for (std::int64_t i = 1; i <= q - 1; ++i) total += ker_psi_dim(q - 1 - i, n);
  return total;
}

/// The odd-center closed form in its displayed form, term for term. It is
/// not trusted: verify compares it with the rank oracle and reports deviations.
inline std::int64_t dim_H_odd_displayed(std::int64_t n, std::int64_t q) {
  if (n < 1) throw std::invalid_argument("dim_H_odd_displayed: need n >= 1");
  if (q < 0) return 0;
  std::int64_t total = s(n, q);
  for (std::int64_t p = 0; p <= q - 1; ++p)
    total += binomial(n + 1, q - p) * s(n, p) - binomial(n, q - p) * s(n + 1, p);

  const std::int64_t upper = q / 4 + delta_mod4_23(q);
  for (std::int64_t i = 1; i <= upper; ++i) {
    const std::int64_t r = q - 4 * i;
    std::int64_t term = 0;
    for (std::int64_t p = 0; p <= r - 1; ++p) term += binomial(n + 2, r + 1 - p) * s(n, p);
    term += (n + 2) * s(n, r) + s(n, r + 1) + delta(r + 1, n) + 2 * delta(r + 2, n) + delta(r + 3, n);
    total += term;
  }
  return total;
}

/// Formula-side reports. Cocycles come from the closed-form kernel counts,
/// coboundaries are whatever Z - H leaves.
inline CohomologyReport report_even(int n, int m, int q) {
  CohomologyReport r{"h_" + std::to_string(n) + "_" + std::to_string(m), q, 0, 0, 0, 0, Method::formula_even};
  if (q < 0) return r;
  const auto un = static_cast<std::size_t>(n), um = static_cast<std::size_t>(m);
  r.dim_cochain = graded_dim({2 * un + 1, um}, q);
  r.dim_cocycles = graded_dim({2 * un, um}, q);
  r.dim_cohomology = static_cast<std::uint64_t>(dim_H_even(n, m, q));
  if (r.dim_cohomology > r.dim_cocycles) throw std::logic_error("formula-even: H exceeds Z");
  r.dim_coboundaries = r.dim_cocycles - r.dim_cohomology;
  return r;
}

inline CohomologyReport report_odd(int n, int q) {
  CohomologyReport r{"h_" + std::to_string(n), q, 0, 0, 0, 0, Method::formula_odd_proof};
  if (q < 0) return r;
  const auto un = static_cast<std::size_t>(n);
  r.dim_cochain = graded_dim({un, un + 1}, q);
  r.dim_cocycles = static_cast<std::uint64_t>(cocycle_dim_odd(n, q));
  r.dim_cohomology = static_cast<std::uint64_t>(dim_H_odd_proof(n, q));
  if (r.dim_cohomology > r.dim_cocycles) throw std::logic_error("formula-odd-proof: H exceeds Z");
  r.dim_coboundaries = r.dim_cocycles - r.dim_cohomology;
  return r;
}

} // namespace supercoh::formulas

#endif

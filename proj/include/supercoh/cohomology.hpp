#ifndef SUPERCOH_COHOMOLOGY_HPP
#define SUPERCOH_COHOMOLOGY_HPP

#include <supercoh/algebra.hpp>
#include <supercoh/differential.hpp>
#include <supercoh/errors.hpp>
#include <supercoh/linalg.hpp>
#include <supercoh/report.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace supercoh {

/// Rank-based cohomology of one algebra. Ranks of d_q are computed once and
/// reused by neighbouring degrees.
class CohomologyEngine {
 public:
  explicit CohomologyEngine(const LieSuperalgebra& g, std::size_t column_cap = kDefaultColumnCap)
      : name_(g.name()), d_(g), column_cap_(column_cap) {}

  std::uint64_t cochain_dim(int q) const { return graded_dim(d_.space().dims(), q); }

  std::size_t rank_of_d(int q) {
    if (q < 0) return 0;
    if (auto it = ranks_.find(q); it != ranks_.end()) return it->second;
    return ranks_[q] = rank(d_.matrix(q, column_cap_));
  }

  std::uint64_t cocycle_dim(int q) { return q < 0 ? 0 : cochain_dim(q) - rank_of_d(q); }

  CohomologyReport report(int q) {
    CohomologyReport r{name_, q, 0, 0, 0, 0, Method::rank};
    if (q < 0) return r;
    r.dim_cochain = cochain_dim(q);
    r.dim_cocycles = cocycle_dim(q);
    r.dim_coboundaries = rank_of_d(q - 1);
    if (r.dim_coboundaries > r.dim_cocycles)
      throw std::logic_error("B^" + std::to_string(q) + " larger than Z^" + std::to_string(q));
    r.dim_cohomology = r.dim_cocycles - r.dim_coboundaries;
    return r;
  }

  const Differential& differential() const noexcept { return d_; }

 private:
  std::string name_;
  Differential d_;
  std::size_t column_cap_;
  std::map<int, std::size_t> ranks_;
};

inline CohomologyReport cohomology_dims(const LieSuperalgebra& g, int q,
                                        std::size_t column_cap = kDefaultColumnCap) {
  return CohomologyEngine(g, column_cap).report(q);
}

/// Reports for q = 0..q_max. Each degree is cross-checked against
/// dim H^q = dim Z^q + dim Z^{q-1} - dim C^{q-1}.
inline std::vector<CohomologyReport> betti_table(const LieSuperalgebra& g, int q_max,
                                                 std::size_t column_cap = kDefaultColumnCap) {
  if (q_max < 0) throw std::invalid_argument("betti_table: q_max must be >= 0");
  CohomologyEngine engine(g, column_cap);
  std::vector<CohomologyReport> table;
  for (int q = 0; q <= q_max; ++q) {
    auto r = engine.report(q);
    const auto via_cocycles = static_cast<std::int64_t>(r.dim_cocycles + engine.cocycle_dim(q - 1)) -
                              static_cast<std::int64_t>(engine.cochain_dim(q - 1));
    if (via_cocycles != static_cast<std::int64_t>(r.dim_cohomology))
      throw std::logic_error("cocycle bookkeeping fails at q = " + std::to_string(q));
    table.push_back(std::move(r));
  }
  return table;
}

} // namespace supercoh

#endif

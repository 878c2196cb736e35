#ifndef SUPERCOH_DIFFERENTIAL_HPP
#define SUPERCOH_DIFFERENTIAL_HPP

#include <supercoh/algebra.hpp>
#include <supercoh/errors.hpp>
#include <supercoh/linalg.hpp>
#include <supercoh/superexterior.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace supercoh {

/// Layout of the cochain algebra of g: the dual generator f_k of an even a_k
/// occupies the next even slot, that of an odd a_k the next odd slot, both in
/// generator order.
class CochainSpace {
 public:
  explicit CochainSpace(const LieSuperalgebra& g) : slot_(g.dimension()) {
    std::vector<std::size_t> odd;
    for (const auto& gen : g.generators()) {
      if (gen.parity == Parity::even) {
        slot_[gen.index] = even_.size();
        even_.push_back(gen.index);
      } else {
        slot_[gen.index] = odd.size();
        odd.push_back(gen.index);
      }
    }
    if (even_.size() > kMaxEvenGenerators) throw std::invalid_argument("too many even generators");
    dims_ = {even_.size(), odd.size()};
    factor_to_generator_ = even_;
    factor_to_generator_.insert(factor_to_generator_.end(), odd.begin(), odd.end());
    parity_.reserve(g.dimension());
    for (const auto& gen : g.generators()) parity_.push_back(gen.parity);
  }

  const SuperSpaceDims& dims() const noexcept { return dims_; }

  /// f_k as a monomial.
  SuperMonomial dual(std::size_t k) const {
    return parity_.at(k) == Parity::even ? SuperMonomial::even_generator(dims_, slot_[k])
                                         : SuperMonomial::odd_generator(dims_, slot_[k]);
  }

  /// Generator indices of the factors of m, in normal order.
  std::vector<std::size_t> factors(const SuperMonomial& m) const {
    auto out = m.factors(dims_.even_count);
    for (auto& f : out) f = factor_to_generator_[f];
    return out;
  }

  /// Whether f_k divides m.
  bool involves(const SuperMonomial& m, std::size_t k) const {
    return parity_.at(k) == Parity::even ? m.contains_even(slot_[k]) : m.odd_power(slot_[k]) > 0;
  }

 private:
  SuperSpaceDims dims_;
  std::vector<std::size_t> slot_;
  std::vector<std::size_t> even_;
  std::vector<std::size_t> factor_to_generator_;
  std::vector<Parity> parity_;
};

/// The Chevalley-Eilenberg differential on the cochain algebra of g: the
/// degree-one, even superderivation extending f -> df with
/// <df, a_1 a_2> = -f([a_1, a_2]).
class Differential {
 public:
  explicit Differential(const LieSuperalgebra& g) : space_(g) {
    on_generators_.resize(g.dimension());
    const Rational half(1, 2);
    for (const auto& [key, image] : g.stored_brackets()) {
      const auto [i, j] = key;
      const auto prod = multiply(space_.dual(i), space_.dual(j));
      if (!prod) continue;
      // <f_i f_i, a_i a_i> = 2 for odd a_i, hence the 1/2.
      const Rational scale = i == j ? -half : Rational(-1);
      for (const auto& [k, c] : image) on_generators_[k].add(prod->first, scale * c * prod->second);
    }
  }

  const CochainSpace& space() const noexcept { return space_; }

  const SuperElement& on_generator(std::size_t k) const {
    if (k >= on_generators_.size()) throw std::out_of_range("d_generator: index " + std::to_string(k));
    return on_generators_[k];
  }

  /// d(f_1 ... f_r) = sum_j (-1)^(j-1) f_1 ... d(f_j) ... f_r
  SuperElement apply(const SuperMonomial& m) const {
    const auto gens = space_.factors(m);
    const std::size_t r = gens.size();
    SuperElement out;
    if (r == 0) return out;

    // suffix[j] = f_{j+1} ... f_r with its normalization sign
    std::vector<std::pair<SuperMonomial, int>> suffix(r, {SuperMonomial::unit(space_.dims()), 1});
    for (std::size_t j = r - 1; j-- > 0;) {
      auto prod = multiply(space_.dual(gens[j + 1]), suffix[j + 1].first);
      suffix[j] = {prod->first, prod->second * suffix[j + 1].second};
    }
    std::pair<SuperMonomial, int> prefix{SuperMonomial::unit(space_.dims()), 1};
    for (std::size_t j = 0; j < r; ++j) {
      const int sign = (j % 2 ? -1 : 1) * prefix.second * suffix[j].second;
      for (const auto& [dm, dc] : on_generators_[gens[j]].terms()) {
        auto left = multiply(prefix.first, dm);
        if (!left) continue;
        auto full = multiply(left->first, suffix[j].first);
        if (!full) continue;
        out.add(full->first, dc * (sign * left->second * full->second));
      }
      auto next = multiply(prefix.first, space_.dual(gens[j]));
      prefix = {next->first, next->second * prefix.second};
    }
    return out;
  }

  SuperElement apply(const SuperElement& x) const {
    SuperElement out;
    for (const auto& [m, c] : x.terms()) out += c * apply(m);
    return out;
  }

  /// Matrix of d: C^q -> C^{q+1} on enumerate_basis order; column j is d of basis monomial j.
  RationalMatrix matrix(int q, std::size_t column_cap = kDefaultColumnCap) const {
    if (q < 0) return RationalMatrix(graded_dim(space_.dims(), q + 1), 0);
    const auto cols = graded_dim(space_.dims(), q);
    if (cols > column_cap)
      throw ResourceError("d_" + std::to_string(q) + " has " + std::to_string(cols) +
                          " columns, over the cap of " + std::to_string(column_cap));
    const auto source = enumerate_basis(space_.dims(), q);
    const auto target = enumerate_basis(space_.dims(), q + 1);
    const auto index = basis_index(target);
    RationalMatrix out(target.size(), source.size());
    for (std::size_t j = 0; j < source.size(); ++j) {
      const auto image = apply(source[j]);
      for (const auto& [m, c] : image.terms()) out.set(index.at(m), j, c);
    }
    return out;
  }

 private:
  CochainSpace space_;
  std::vector<SuperElement> on_generators_;
};

/// d f_k = -sum_{i<j} c_ij^k f_i f_j - 1/2 sum_{i odd} c_ii^k f_i f_i
inline SuperElement d_generator(const LieSuperalgebra& g, std::size_t k) {
  return Differential(g).on_generator(k);
}

inline SuperElement d_element(const LieSuperalgebra& g, const SuperElement& x) {
  return Differential(g).apply(x);
}

inline RationalMatrix differential_matrix(const LieSuperalgebra& g, int q,
                                          std::size_t column_cap = kDefaultColumnCap) {
  return Differential(g).matrix(q, column_cap);
}

/// tau_(n,1) = sum_i o_i e_i in the cochains of h_n.
inline SuperElement tau_one(int n) {
  const SuperSpaceDims dims{static_cast<std::size_t>(n), static_cast<std::size_t>(n) + 1};
  SuperElement out;
  for (std::size_t i = 0; i < dims.even_count; ++i)
    out += wedge(SuperMonomial::odd_generator(dims, i), SuperMonomial::even_generator(dims, i));
  return out;
}

/// tau_(n,l) = d((z*)^l) in the cochains of h_n, built both as
/// l tau_(n,1) (z*)^(l-1) and by the derivation rule; the two must agree.
inline SuperElement tau(int n, int l) {
  if (n < 1 || l < 1) throw std::invalid_argument("tau: need n >= 1 and l >= 1");
  const auto g = make_heisenberg_odd(n);
  const Differential d(g);
  const auto& dims = d.space().dims();
  const auto z = static_cast<std::size_t>(n);  // odd slot of z*
  SuperElement closed = Rational(l) * wedge(tau_one(n), SuperMonomial::odd_generator(dims, z, l - 1));
  SuperElement derived = d.apply(SuperMonomial::odd_generator(dims, z, l));
  if (closed != derived)
    throw std::logic_error("tau(" + std::to_string(n) + ", " + std::to_string(l) +
                           "): derivation rule disagrees with l tau_1 (z*)^(l-1)");
  return derived;
}

/// psi_(t,n,l): alpha -> alpha tau_(n,l) from the z*-free degree-t cochains of
/// h_n to the z*-free degree-(t+2) cochains; the (z*)^(l-1) factor is implicit.
inline RationalMatrix psi_matrix(int t, int n, int l, std::size_t column_cap = kDefaultColumnCap) {
  const SuperSpaceDims free_dims{static_cast<std::size_t>(n), static_cast<std::size_t>(n)};
  const auto target = enumerate_basis(free_dims, t + 2);
  if (t < 0) return RationalMatrix(target.size(), 0);
  const auto cols = graded_dim(free_dims, t);
  if (cols > column_cap)
    throw ResourceError("psi_(" + std::to_string(t) + "," + std::to_string(n) + "," +
                        std::to_string(l) + ") has " + std::to_string(cols) + " columns");

  const SuperElement tau_nl = tau(n, l);
  const auto source = enumerate_basis(free_dims, t);
  const auto index = basis_index(target);
  auto embed = [](const SuperMonomial& m, std::uint32_t z_power) {
    std::vector<std::uint32_t> exps(m.odd_exponents().begin(), m.odd_exponents().end());
    exps.push_back(z_power);
    return SuperMonomial(m.even_mask(), std::move(exps));
  };
  auto strip = [&](const SuperMonomial& m) {
    if (m.odd_power(free_dims.odd_count) != static_cast<std::uint32_t>(l - 1))
      throw std::logic_error("psi: unexpected power of z*");
    std::vector<std::uint32_t> exps(m.odd_exponents().begin(), m.odd_exponents().end() - 1);
    return SuperMonomial(m.even_mask(), std::move(exps));
  };

  RationalMatrix out(target.size(), source.size());
  for (std::size_t j = 0; j < source.size(); ++j) {
    const auto image = wedge(SuperElement(embed(source[j], 0)), tau_nl);
    for (const auto& [m, c] : image.terms()) out.set(index.at(strip(m)), j, c);
  }
  return out;
}

} // namespace supercoh

#endif

#include <supercoh/superexterior.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

using namespace supercoh;

namespace {

SuperMonomial e(const SuperSpaceDims& d, std::size_t i) { return SuperMonomial::even_generator(d, i); }
SuperMonomial o(const SuperSpaceDims& d, std::size_t j, std::uint32_t k = 1) {
  return SuperMonomial::odd_generator(d, j, k);
}

std::string str(const SuperElement& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

int sign_of_swap(const SuperMonomial& a, const SuperMonomial& b) {
  const auto exponent = a.degree() * b.degree() + bit(a.parity()) * bit(b.parity());
  return exponent % 2 ? -1 : 1;
}

}  // namespace

TEST(Wedge, EvenSquareVanishes) {
  const SuperSpaceDims d{2, 2};
  EXPECT_TRUE(wedge(e(d, 0), e(d, 0)).is_zero());
}

TEST(Wedge, OddSquareSurvives) {
  const SuperSpaceDims d{2, 2};
  const auto sq = wedge(o(d, 0), o(d, 0));
  ASSERT_EQ(sq.size(), 1u);
  EXPECT_EQ(sq.coefficient(o(d, 0, 2)), 1);
}

TEST(Wedge, MixedFactorsPickUpOneSignPerCrossing) {
  const SuperSpaceDims d{2, 1};
  // (e1 (x) o1) (e2 (x) 1) = -(e1 e2) (x) o1
  const auto left = SuperMonomial::from(d, std::vector<std::size_t>{0}, {1});
  const auto expected = SuperMonomial::from(d, std::vector<std::size_t>{0, 1}, {1});
  const auto prod = wedge(left, e(d, 1));
  EXPECT_EQ(prod, SuperElement(expected, -1));
  // Same sign from rewriting the word e1 o1 e2 in the tensor algebra.
  auto word = oracle::normalize_word(d, {0, 2, 1});
  ASSERT_TRUE(word);
  EXPECT_EQ(word->first, -1);
  EXPECT_EQ(word->second, expected);
}

TEST(Wedge, GeneratorLevelSignLaw) {
  const SuperSpaceDims d{2, 2};
  EXPECT_EQ(wedge(e(d, 1), e(d, 0)), -1 * wedge(e(d, 0), e(d, 1)));
  EXPECT_EQ(wedge(o(d, 0), e(d, 0)), -1 * wedge(e(d, 0), o(d, 0)));
  EXPECT_EQ(wedge(o(d, 1), o(d, 0)), wedge(o(d, 0), o(d, 1)));
}

TEST(Wedge, RejectsMismatchedSpaces) {
  EXPECT_THROW(wedge(SuperMonomial::unit({1, 1}), SuperMonomial::unit({1, 2})), std::invalid_argument);
}

TEST(Wedge, AgreesWithWordRewriting) {
  std::mt19937 rng(7);
  const SuperSpaceDims d{4, 3};
  std::uniform_int_distribution<std::size_t> letter(0, d.even_count + d.odd_count - 1), len(0, 5);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<std::size_t> word(len(rng));
    for (auto& w : word) w = letter(rng);
    SuperElement prod = SuperElement::one(d);
    for (auto w : word) prod = wedge(prod, w < d.even_count ? e(d, w) : o(d, w - d.even_count));
    auto normal = oracle::normalize_word(d, word);
    if (!normal) {
      EXPECT_TRUE(prod.is_zero());
    } else {
      EXPECT_EQ(prod, SuperElement(normal->second, normal->first));
    }
  }
}

TEST(Wedge, SignCoherence) {
  for (const SuperSpaceDims d : {SuperSpaceDims{3, 2}, SuperSpaceDims{2, 3}}) {
    std::vector<SuperMonomial> all;
    for (int q = 0; q <= 3; ++q)
      for (auto& m : enumerate_basis(d, q)) all.push_back(m);
    for (const auto& a : all)
      for (const auto& b : all)
        EXPECT_EQ(wedge(a, b), sign_of_swap(a, b) * wedge(b, a));
  }
}

TEST(Wedge, Associative) {
  const SuperSpaceDims d{2, 2};
  std::vector<SuperMonomial> all;
  for (int q = 0; q <= 2; ++q)
    for (auto& m : enumerate_basis(d, q)) all.push_back(m);
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& c : all) {
        const SuperElement x(a), y(b), z(c);
        EXPECT_EQ(wedge(wedge(x, y), z), wedge(x, wedge(y, z)));
      }
}

TEST(SuperElement, RejectsInhomogeneousTerms) {
  const SuperSpaceDims d{2, 2};
  SuperElement x(e(d, 0));
  EXPECT_THROW(x.add(o(d, 0), 1), std::invalid_argument);   // parity differs
  EXPECT_THROW(x.add(o(d, 0, 2), 1), std::invalid_argument);  // degree differs
  x.add(e(d, 1), 3);
  x.add(e(d, 0), -1);
  EXPECT_EQ(x.size(), 1u);
  EXPECT_EQ(str(x), "3*e2");
}

TEST(EnumerateBasis, DocumentedOrder) {
  const SuperSpaceDims d{1, 2};
  const auto basis = enumerate_basis(d, 2);
  const std::vector<SuperMonomial> expected{
      SuperMonomial::from(d, std::vector<std::size_t>{0}, {1, 0}),
      SuperMonomial::from(d, std::vector<std::size_t>{0}, {0, 1}),
      o(d, 0, 2),
      SuperMonomial::from(d, std::vector<std::size_t>{}, {1, 1}),
      o(d, 1, 2),
  };
  EXPECT_EQ(basis, expected);
  EXPECT_EQ(graded_dim(d, 2), 5u);
}

TEST(EnumerateBasis, EvenSetsAreLexicographic) {
  const SuperSpaceDims d{4, 0};
  const auto basis = enumerate_basis(d, 2);
  std::vector<std::vector<std::size_t>> sets;
  for (const auto& m : basis) sets.push_back(m.even_set());
  EXPECT_TRUE(std::is_sorted(sets.begin(), sets.end()));
  EXPECT_EQ(sets.size(), 6u);
}

TEST(EnumerateBasis, EdgeDegrees) {
  EXPECT_EQ(enumerate_basis({3, 2}, 0), std::vector<SuperMonomial>{SuperMonomial::unit({3, 2})});
  EXPECT_TRUE(enumerate_basis({3, 2}, -1).empty());
  EXPECT_EQ(enumerate_basis({2, 2}, 2).size(), 8u);
  EXPECT_TRUE(enumerate_basis({2, 0}, 3).empty());
  EXPECT_EQ(enumerate_basis({0, 0}, 0).size(), 1u);
}

TEST(GradedDim, Examples) {
  EXPECT_EQ(graded_dim({2, 2}, 2), 8u);
  EXPECT_EQ(graded_dim({5, 3}, 0), 1u);
  EXPECT_EQ(graded_dim({1, 2}, 2), 5u);
  EXPECT_EQ(graded_dim({1, 2}, -3), 0u);
}

TEST(GradedDim, MatchesEnumerationAndHasNoDuplicates) {
  for (std::size_t n = 0; n <= 4; ++n)
    for (std::size_t m = 0; m <= 3; ++m) {
      const SuperSpaceDims d{n, m};
      for (int q = 0; q <= static_cast<int>(2 * n) + 12; ++q) {
        const auto basis = enumerate_basis(d, q);
        ASSERT_EQ(graded_dim(d, q), basis.size()) << n << ',' << m << ',' << q;
        EXPECT_EQ(std::set<SuperMonomial>(basis.begin(), basis.end()).size(), basis.size());
        for (const auto& mono : basis) EXPECT_EQ(mono.degree(), static_cast<std::size_t>(q));
      }
    }
}

TEST(Determinant, MatchesPermutationSum) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> v(-3, 3);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      SmallMatrix a(n, std::vector<Rational>(n));
      for (auto& row : a)
        for (auto& x : row) x = v(rng);
      EXPECT_EQ(determinant(a), oracle::permutation_sum(a, true));
    }
}

TEST(Permanent, ExpansionRowDoesNotMatter) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> v(-2, 3);
  for (std::size_t n = 1; n <= 6; ++n)
    for (int trial = 0; trial < 10; ++trial) {
      SmallMatrix a(n, std::vector<Rational>(n));
      for (auto& row : a)
        for (auto& x : row) x = ratio(v(rng), 2);
      const auto expected = oracle::permutation_sum(a, false);
      for (std::size_t row = 0; row < n; ++row) EXPECT_EQ(permanent(a, row), expected);
    }
}

TEST(DualPairing, SwapMatrixDeterminant) {
  const SuperSpaceDims d{2, 0};
  // <e1 e2, x2 x1> with x2 x1 = -x1 x2 in the primal algebra.
  const auto primal = wedge(e(d, 1), e(d, 0));
  EXPECT_EQ(dual_pairing(SuperElement(SuperMonomial::from(d, std::vector<std::size_t>{0, 1}, {})), primal), -1);
}

TEST(DualPairing, OddPowersGiveFactorials) {
  const SuperSpaceDims d{0, 3};
  const auto m = SuperMonomial::from(d, std::vector<std::size_t>{}, {2, 3, 1});
  EXPECT_EQ(dual_pairing(m, m), 2 * 6 * 1);
  EXPECT_EQ(dual_pairing(o(d, 0, 5), o(d, 0, 5)), 120);
}

TEST(DualPairing, OffDiagonalVanishes) {
  const SuperSpaceDims d{0, 2};
  EXPECT_EQ(dual_pairing(o(d, 0, 2), SuperMonomial::from(d, std::vector<std::size_t>{}, {1, 1})), 0);
  EXPECT_EQ(dual_pairing(o(d, 0), SuperMonomial::unit(d)), 0);
}

TEST(DualPairing, GramMatrixIsDiagonalWithFactorials) {
  for (std::size_t n = 0; n <= 3; ++n)
    for (std::size_t m = 0; m <= 3; ++m)
      for (int q = 0; q <= 3; ++q) {
        const auto basis = enumerate_basis({n, m}, q);
        for (const auto& alpha : basis)
          for (const auto& u : basis) {
            Rational expected = 0;
            if (alpha == u) {
              expected = 1;
              for (auto k : alpha.odd_exponents())
                for (std::uint32_t f = 2; f <= k; ++f) expected *= f;
            }
            EXPECT_EQ(dual_pairing(alpha, u), expected);
          }
      }
}

TEST(SuperMonomial, Degrees) {
  const SuperSpaceDims d{3, 2};
  const auto m = SuperMonomial::from(d, std::vector<std::size_t>{0, 2}, {3, 0});
  EXPECT_EQ(m.degree(), 5u);
  EXPECT_EQ(m.even_degree(), 2u);
  EXPECT_EQ(m.parity(), Parity::odd);
  EXPECT_EQ(m.factors(d.even_count), (std::vector<std::size_t>{0, 2, 3, 3, 3}));
  EXPECT_THROW(SuperMonomial::from(d, std::vector<std::size_t>{2, 0}, {0, 0}), std::invalid_argument);
  EXPECT_THROW(SuperMonomial::from(d, std::vector<std::size_t>{3}, {0, 0}), std::out_of_range);
}

#include <supercoh/algebra.hpp>
#include <supercoh/linalg.hpp>

#include <gtest/gtest.h>

#include <algorithm>

using namespace supercoh;

namespace {

bool has_kind(const ValidationReport& r, Violation::Kind kind) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const Violation& v) { return v.kind == kind; });
}

// Generators that bracket to zero with every basis element.
std::vector<std::size_t> centralizer_of_basis(const LieSuperalgebra& g) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < g.dimension(); ++a) {
    bool central = true;
    for (std::size_t b = 0; b < g.dimension(); ++b) central &= g.bracket(a, b).empty() && g.bracket(b, a).empty();
    if (central) out.push_back(a);
  }
  return out;
}

// Matrix whose columns are the images [a_i, a_j] over all ordered pairs.
RationalMatrix bracket_images(const LieSuperalgebra& g) {
  const auto n = g.dimension();
  RationalMatrix m(n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : g.bracket(i, j)) m.set(k, i * n + j, c);
  return m;
}

}  // namespace

TEST(Parity, AdditionIsModTwo) {
  EXPECT_EQ(Parity::odd + Parity::odd, Parity::even);
  EXPECT_EQ(Parity::odd + Parity::even, Parity::odd);
  EXPECT_EQ(Parity::even + Parity::even, Parity::even);
  EXPECT_EQ(koszul_sign(Parity::odd, Parity::odd), -1);
  EXPECT_EQ(koszul_sign(Parity::odd, Parity::even), 1);
}

TEST(HeisenbergEven, SmallestMember) {
  const auto g = make_heisenberg_even(1, 1);
  ASSERT_EQ(g.dimension(), 4u);
  EXPECT_EQ(g.generators()[0].name, "z");
  EXPECT_EQ(g.generators()[3].name, "y1");
  EXPECT_EQ(g.stored_brackets().size(), 2u);
  EXPECT_EQ(g.coefficient(1, 2, 0), 1);  // [x1, x2] = z
  EXPECT_EQ(g.coefficient(3, 3, 0), 1);  // [y1, y1] = z
}

TEST(HeisenbergEven, SuperdimAndBracketCount) {
  const auto g = make_heisenberg_even(2, 3);
  EXPECT_EQ(g.superdim(), std::make_pair(std::size_t{5}, std::size_t{3}));
  EXPECT_EQ(g.stored_brackets().size(), 5u);
}

TEST(HeisenbergEven, CenterIsSpannedByZ) {
  EXPECT_EQ(centralizer_of_basis(make_heisenberg_even(1, 1)), std::vector<std::size_t>{0});
  EXPECT_EQ(centralizer_of_basis(make_heisenberg_even(2, 2)), std::vector<std::size_t>{0});
}

TEST(HeisenbergEven, DerivedBracketsFollowTheSignRule) {
  const int n = 2, m = 2;
  const auto g = make_heisenberg_even(n, m);
  for (std::size_t i = 1; i <= n; ++i) {
    EXPECT_EQ(g.coefficient(n + i, i, 0), -1);
    EXPECT_EQ(g.coefficient(i, n + i, 0), 1);
  }
  for (std::size_t j = 1; j <= m; ++j) EXPECT_EQ(g.coefficient(2 * n + j, 2 * n + j, 0), 1);
}

TEST(HeisenbergEven, RejectsBadSizes) {
  EXPECT_THROW(make_heisenberg_even(0, 1), std::invalid_argument);
  EXPECT_THROW(make_heisenberg_even(1, 0), std::invalid_argument);
}

TEST(HeisenbergOdd, Shapes) {
  const auto h1 = make_heisenberg_odd(1);
  ASSERT_EQ(h1.dimension(), 3u);
  EXPECT_EQ(h1.stored_brackets().size(), 1u);
  EXPECT_EQ(h1.coefficient(0, 1, 2), 1);
  EXPECT_EQ(h1.coefficient(1, 0, 2), -1);  // even with odd: plain antisymmetry
  EXPECT_EQ(make_heisenberg_odd(2).superdim(), std::make_pair(std::size_t{2}, std::size_t{3}));
  EXPECT_THROW(make_heisenberg_odd(0), std::invalid_argument);
}

TEST(HeisenbergOdd, CenterIsSpannedByZ) {
  const auto g = make_heisenberg_odd(2);
  EXPECT_EQ(centralizer_of_basis(g), std::vector<std::size_t>{4});
}

TEST(Heisenberg, DerivedSubalgebraIsTheCenter) {
  for (const auto& g : {make_heisenberg_even(1, 1), make_heisenberg_even(2, 3), make_heisenberg_odd(1),
                        make_heisenberg_odd(3)}) {
    const auto images = bracket_images(g);
    EXPECT_EQ(rank(images), 1u) << g.name();
    const auto z = centralizer_of_basis(g).front();
    for (std::size_t c = 0; c < images.cols(); ++c)
      for (const auto& [row, v] : images.column(c)) EXPECT_EQ(row, z);
  }
}

TEST(Validate, FamiliesAreValid) {
  EXPECT_TRUE(validate(make_heisenberg_even(2, 2)).ok());
  EXPECT_TRUE(validate(make_heisenberg_odd(3)).ok());
}

TEST(Validate, EvenSelfBracketViolatesSkewSymmetry) {
  LieSuperalgebra g("bad", {{"z", Parity::even}, {"x1", Parity::even}, {"y1", Parity::odd}},
                    {{2, 2, 1, 1}, {1, 1, 0, 1}});
  const auto report = validate(g);
  EXPECT_TRUE(has_kind(report, Violation::Kind::skew_symmetry));
  EXPECT_FALSE(has_kind(report, Violation::Kind::parity));
}

TEST(Validate, ParityViolation) {
  LieSuperalgebra g("bad", {{"x1", Parity::even}, {"x2", Parity::even}, {"y1", Parity::odd}}, {{0, 2, 1, 1}});
  EXPECT_TRUE(has_kind(validate(g), Violation::Kind::parity));
}

TEST(Validate, WrongTargetParityInOddFamily) {
  // h_1 with [x1, y1] landing on the even x1 instead of z.
  LieSuperalgebra g("h_1'", {{"x1", Parity::even}, {"y1", Parity::odd}, {"z", Parity::odd}}, {{0, 1, 0, 1}});
  EXPECT_TRUE(has_kind(validate(g), Violation::Kind::parity));
}

TEST(Validate, JacobiViolation) {
  // [a,b] = a, [b,c] = b: the Jacobi sum on (a,b,c) is a.
  LieSuperalgebra g("bad", {{"a", Parity::even}, {"b", Parity::even}, {"c", Parity::even}},
                    {{0, 1, 0, 1}, {1, 2, 1, 1}});
  EXPECT_TRUE(has_kind(validate(g), Violation::Kind::jacobi));
}

TEST(Validate, Osp12IsALieSuperalgebra) {
  // h, e, f even; x, y odd.
  LieSuperalgebra g("osp(1|2)",
                    {{"h", Parity::even}, {"e", Parity::even}, {"f", Parity::even}, {"x", Parity::odd}, {"y", Parity::odd}},
                    {{0, 1, 1, 2},
                     {0, 2, 2, -2},
                     {1, 2, 0, 1},
                     {0, 3, 3, 1},
                     {0, 4, 4, -1},
                     {1, 4, 3, -1},
                     {2, 3, 4, -1},
                     {3, 3, 1, 2},
                     {4, 4, 2, -2},
                     {3, 4, 0, 1}});
  const auto report = validate(g);
  for (const auto& v : report.violations) ADD_FAILURE() << v.message;
}

TEST(LieSuperalgebra, ConstructorNormalizesAndRejects) {
  // Giving [y, x] stores [x, y] with the derived sign.
  LieSuperalgebra g("t", {{"x", Parity::even}, {"y", Parity::odd}, {"z", Parity::odd}}, {{1, 0, 2, 1}});
  EXPECT_EQ(g.coefficient(0, 1, 2), -1);
  EXPECT_EQ(g.stored_brackets().begin()->first, std::make_pair(std::size_t{0}, std::size_t{1}));

  EXPECT_THROW(LieSuperalgebra("t", {{"x", Parity::even}, {"x", Parity::odd}}, {}), std::invalid_argument);
  EXPECT_THROW(LieSuperalgebra("t", {{"x", Parity::even}}, {{0, 0, 3, 1}}), std::invalid_argument);
  EXPECT_THROW(LieSuperalgebra("t", {{"x", Parity::even}, {"y", Parity::even}}, {{0, 1, 0, 1}, {1, 0, 0, 1}}),
               std::invalid_argument);
  EXPECT_EQ(g.find("y"), std::optional<std::size_t>{1});
  EXPECT_FALSE(g.find("w").has_value());
}

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "common.hpp"
#include "scrollsec/geometry/chart.hpp"
#include "scrollsec/geometry/scroll.hpp"
#include "scrollsec/groebner/elimination.hpp"
#include "scrollsec/groebner/ideal_file.hpp"
#include "scrollsec/groebner/zero_dim.hpp"

using namespace scrollsec;
using testing_util::random_poly;

namespace {

template <class Ctx>
Ideal<Ctx> ideal_of(const RingPtr<Ctx>& R, std::vector<std::string> texts) {
  std::vector<Polynomial<Ctx>> gens;
  for (const auto& t : texts) gens.push_back(parse_polynomial(t, R));
  return Ideal<Ctx>(R, gens);
}

template <class Ctx>
void expect_valid_basis(const GroebnerBasis<Ctx>& G) {
  EXPECT_TRUE(satisfies_buchberger_criterion(G));
  EXPECT_TRUE(is_reduced(G));
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j)
      EXPECT_TRUE(normal_form(s_polynomial(G.polynomials()[i], G.polynomials()[j]), G).is_zero());
}

}  // namespace

TEST(NormalForm, Examples) {
  auto R = make_ring<RationalContext>({"x", "y"});
  auto g = parse_polynomial("x^2*y - 3*y + 1", R);
  EXPECT_TRUE(normal_form(g, std::vector<PolyQ>{g}).is_zero());
  auto x = parse_polynomial("x", R);
  EXPECT_TRUE(normal_form(parse_polynomial("x^2", R), std::vector<PolyQ>{x}).is_zero());
  EXPECT_EQ(normal_form(parse_polynomial("y", R), std::vector<PolyQ>{x}), parse_polynomial("y", R));
}

TEST(NormalForm, MembershipOfCombinations) {
  std::mt19937_64 rng(31);
  auto R = make_ring<ModContext>({"x", "y", "z"});
  auto I = ideal_of(R, {"x^2 - y*z", "y^2 - x*z + 1", "x*y*z - 2"});
  auto G = buchberger(I);
  expect_valid_basis(G);
  for (int k = 0; k < 20; ++k) {
    auto comb = PolyMod::zero(R);
    for (const auto& g : I.generators()) comb += random_poly(R, rng, 3, 2) * g;
    EXPECT_TRUE(normal_form(comb, G).is_zero());
    EXPECT_TRUE(contains(G, comb));
  }
}

TEST(Buchberger, Examples) {
  auto R = make_ring<RationalContext>({"x", "y"});
  auto G1 = buchberger(ideal_of(R, {"x"}));
  ASSERT_EQ(G1.size(), 1u);
  EXPECT_EQ(G1.polynomials()[0], parse_polynomial("x", R));

  auto G = buchberger(ideal_of(R, {"x^2 + y^2", "x^2 - y^2"}));
  expect_valid_basis(G);
  auto target = buchberger(ideal_of(R, {"x^2", "y^2"}));
  for (const auto& g : G.polynomials()) EXPECT_TRUE(contains(target, g));
  for (const auto& g : target.polynomials()) EXPECT_TRUE(contains(G, g));
  EXPECT_TRUE(same_ideal(ideal_of(R, {"x^2 + y^2", "x^2 - y^2"}), ideal_of(R, {"x^2", "y^2"})));
}

TEST(Buchberger, IndependentOfGeneratorOrder) {
  auto R = make_ring<ModContext>({"a", "b", "c", "d"});
  std::vector<std::string> texts{"a*d - b*c", "a*c - b^2", "b*d - c^2", "a + b + c + d - 1"};
  auto G = buchberger(ideal_of(R, texts));
  expect_valid_basis(G);
  std::sort(texts.begin(), texts.end());
  do {
    EXPECT_EQ(buchberger(ideal_of(R, texts)), G);
  } while (std::next_permutation(texts.begin(), texts.end()));
}

TEST(Buchberger, CriterionOnGeometricIdeals) {
  for (int r = 2; r <= 5; ++r)
    for (int a = 1; 2 * a <= r; ++a) expect_valid_basis(buchberger(scroll_ideal(ScrollSpec{a, r - a}, ModContext{})));
  for (int r = 3; r <= 5; ++r) expect_valid_basis(buchberger(tangent_cone_ideal(r, ModContext{})));
  for (int d = 2; d <= 6; ++d) expect_valid_basis(buchberger(rnc_ideal(d, ModContext{})));
  expect_valid_basis(buchberger(chart_ideal(ScrollSpec{2, 2}, ModContext{})));
}

TEST(Buchberger, BudgetIsEnforced) {
  auto R = make_ring<ModContext>({"x", "y", "z"});
  auto I = ideal_of(R, {"x^2 - y*z", "y^2 - x*z + 1", "x*y*z - 2"});
  auto full = buchberger(I);
  ASSERT_GT(full.pairs_processed(), 1u);
  EXPECT_THROW(buchberger(I, BuchbergerOptions{full.pairs_processed() - 1}), BudgetExceeded);
  EXPECT_EQ(buchberger(I, BuchbergerOptions{full.pairs_processed()}), full);
}

TEST(Elimination, Parabola) {
  auto R = make_ring<RationalContext>({"t", "x", "y"});
  auto E = elimination_ideal(ideal_of(R, {"x - t", "y - t^2"}), 1);
  auto S = E.ideal.ring();
  EXPECT_EQ(S->names, (std::vector<std::string>{"x", "y"}));
  EXPECT_TRUE(same_ideal(E.ideal, ideal_of(S, {"y - x^2"})));
}

TEST(Elimination, Cusp) {
  auto R = make_ring<RationalContext>({"t", "x", "y"});
  auto E = elimination_ideal(ideal_of(R, {"x - t^2", "y - t^3"}), 1);
  auto S = E.ideal.ring();
  EXPECT_TRUE(same_ideal(E.ideal, ideal_of(S, {"x^3 - y^2"})));
  // every generator vanishes on (t^2, t^3)
  auto T = make_ring<RationalContext>({"t"});
  auto t = PolyQ::variable(T, 0);
  for (const auto& g : E.ideal.generators())
    EXPECT_TRUE(substitute(g, std::vector<PolyQ>{t.pow(2), t.pow(3)}, T).is_zero());
}

TEST(QuotientDimension, Examples) {
  auto R = make_ring<RationalContext>({"x", "y"});
  EXPECT_EQ(quotient_dimension(buchberger(ideal_of(R, {"x", "y"}))), std::optional<std::size_t>(1));
  EXPECT_EQ(quotient_dimension(buchberger(ideal_of(R, {"x^2", "y^3"}))), std::optional<std::size_t>(6));
  EXPECT_EQ(quotient_dimension(buchberger(ideal_of(R, {"x"}))), std::nullopt);
}

TEST(Hilbert, Examples) {
  auto R = make_ring<RationalContext>({"x", "y", "z"});
  auto h = hilbert_data(buchberger(ideal_of(R, {"x"})));
  EXPECT_EQ(h.dimension, 1);
  EXPECT_EQ(h.degree, 1);

  auto c = hilbert_data(buchberger(rnc_ideal(3, ModContext{})));
  EXPECT_EQ(c.dimension, 1);
  EXPECT_EQ(c.degree, 3);

  auto tc = hilbert_data(buchberger(tangent_cone_ideal(4, ModContext{})));
  EXPECT_EQ(tc.dimension, 3);
  EXPECT_EQ(tc.degree, 6);
}

TEST(Hilbert, DegreeMatchesSliceCount) {
  // degree of the rational normal curves agrees with the number of points
  // cut by a random hyperplane
  std::mt19937_64 rng(41);
  for (int d = 2; d <= 6; ++d) {
    auto I = rnc_ideal(d, ModContext{});
    auto h = hilbert_data(buchberger(I));
    EXPECT_EQ(h.dimension, 1);
    EXPECT_EQ(h.degree, d);
    auto R = I.ring();
    auto gens = I.generators();
    auto slice = PolyMod::zero(R);
    for (std::size_t i = 0; i < R->nvars(); ++i) slice += PolyMod::variable(R, i).scaled(R->ctx.from_random(rng()));
    gens.push_back(slice);
    auto affine = PolyMod::zero(R);
    for (std::size_t i = 0; i < R->nvars(); ++i) affine += PolyMod::variable(R, i).scaled(R->ctx.from_random(rng()));
    gens.push_back(affine - PolyMod::constant(R, 1));
    auto z = certified_zero_dim_count(Ideal<ModContext>(R, gens), rng());
    EXPECT_EQ(z.count, static_cast<std::size_t>(d));
    EXPECT_TRUE(z.certified_reduced);
  }
}

TEST(Hilbert, RejectsInhomogeneous) {
  auto R = make_ring<RationalContext>({"x", "y"});
  EXPECT_THROW(hilbert_data(buchberger(ideal_of(R, {"x - 1"}))), NotHomogeneous);
}

TEST(Jacobian, Examples) {
  auto R = make_ring<RationalContext>({"x", "y"});
  EXPECT_EQ(jacobian_rank_at(std::vector<PolyQ>{parse_polynomial("x", R)}, std::vector<Rational>{Rational(0), Rational(0)}),
            1u);
  auto tc = tangent_cone_ideal(4, ModContext{});
  EXPECT_EQ(jacobian_rank_at(tc.generators(), std::vector<ModInt>(tc.ring()->nvars(), ModInt(0, kDefaultPrimes[0]))), 0u);

  std::mt19937_64 rng(43);
  auto I = scroll_ideal(ScrollSpec{1, 2}, ModContext{});
  auto par = scroll_parametrization(ScrollSpec{1, 2}, ModContext{});
  for (int k = 0; k < 10; ++k)
    EXPECT_EQ(jacobian_rank_at(I.generators(), par.at(testing_util::random_point(ModContext{}, 4, rng))), 2u);
}

TEST(ZeroDim, Examples) {
  auto R = make_ring<RationalContext>({"x"});
  auto a = certified_zero_dim_count(ideal_of(R, {"x^2 - 1"}), 1);
  EXPECT_EQ(a.count, 2u);
  EXPECT_TRUE(a.certified_reduced);
  auto b = certified_zero_dim_count(ideal_of(R, {"x^2"}), 1);
  EXPECT_EQ(b.count, 2u);
  EXPECT_FALSE(b.certified_reduced);
  auto S = make_ring<RationalContext>({"x", "y"});
  EXPECT_THROW(certified_zero_dim_count(ideal_of(S, {"x"}), 1), NotZeroDimensional);
}

TEST(ZeroDim, TwoVariableSystemAcrossSeeds) {
  // four distinct points (+-1, +-2)
  auto R = make_ring<ModContext>({"x", "y"});
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    auto z = certified_zero_dim_count(ideal_of(R, {"x^2 - 1", "y^2 - 4"}), seed);
    EXPECT_EQ(z.count, 4u);
    EXPECT_TRUE(z.certified_reduced);
  }
}

TEST(IdealFile, RoundTrip) {
  auto I = scroll_ideal(ScrollSpec{1, 3}, RationalContext{});
  std::stringstream ss;
  write_ideal_file(ss, I);
  auto J = read_ideal_file(ss, RationalContext{});
  EXPECT_EQ(J.ring()->names, I.ring()->names);
  EXPECT_EQ(J.generators(), I.generators());

  std::istringstream bad("# vars: x, y\nx +\n");
  try {
    read_ideal_file(bad, RationalContext{});
    FAIL();
  } catch (const std::exception& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
  std::istringstream nohdr("x + y\n");
  EXPECT_THROW(read_ideal_file(nohdr, RationalContext{}), std::invalid_argument);
}

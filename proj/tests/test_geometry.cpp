#include <gtest/gtest.h>

#include "common.hpp"
#include "scrollsec/geometry/chart.hpp"
#include "scrollsec/algebra/text.hpp"
#include "scrollsec/groebner/hilbert.hpp"

using namespace scrollsec;
using testing_util::random_point;

namespace {

std::vector<ScrollSpec> specs_up_to(int max_r) {
  std::vector<ScrollSpec> out;
  for (int r = 2; r <= max_r; ++r)
    for (int a = 1; 2 * a <= r; ++a) out.push_back({a, r - a});
  return out;
}

std::int64_t choose(std::int64_t n, std::int64_t k) {
  std::int64_t c = 1;
  for (std::int64_t i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
  return c;
}

// m(1,0), m(1,1) - m(1,0) - m(0,1), m(0,1): coefficients of lam^2, lam*mu, mu^2
template <class Ctx>
std::array<Polynomial<Ctx>, 3> binary_quadric_coeffs(const Polynomial<Ctx>& m, std::size_t lam, std::size_t mu) {
  const auto& R = m.ring();
  auto at = [&](int l, int u) {
    std::vector<Polynomial<Ctx>> im;
    for (std::size_t i = 0; i < R->nvars(); ++i) {
      if (i == lam) im.push_back(Polynomial<Ctx>::constant(R, l));
      else if (i == mu) im.push_back(Polynomial<Ctx>::constant(R, u));
      else im.push_back(Polynomial<Ctx>::variable(R, i));
    }
    return substitute(m, im, R);
  };
  auto a = at(1, 0), c = at(0, 1);
  return {a, at(1, 1) - a - c, c};
}

}  // namespace

TEST(ScrollIdeal, Examples) {
  auto I = scroll_ideal(ScrollSpec{1, 1}, RationalContext{});
  ASSERT_EQ(I.size(), 1u);
  auto R = I.ring();
  auto q = parse_polynomial("x0*x3 - x1*x2", R);
  EXPECT_TRUE(I.generators()[0] == q || I.generators()[0] == -q);

  auto h = hilbert_data(buchberger(scroll_ideal(ScrollSpec{1, 2}, ModContext{})));
  EXPECT_EQ(h.dimension, 2);
  EXPECT_EQ(h.degree, 3);
  EXPECT_EQ(scroll_ideal(ScrollSpec{1, 2}, ModContext{}).size(), 3u);
  for (auto s : specs_up_to(6)) {
    EXPECT_EQ(static_cast<std::int64_t>(scroll_ideal(s, ModContext{}).size()), choose(s.r(), 2));
    for (const auto& g : scroll_ideal(s, ModContext{}).generators()) EXPECT_EQ(g.total_degree(), 2);
  }
  EXPECT_THROW(scroll_ideal(ScrollSpec{0, 4}, ModContext{}), std::invalid_argument);
}

TEST(ScrollIdeal, DegreeEqualsR) {
  for (auto s : specs_up_to(5)) {
    auto h = hilbert_data(buchberger(scroll_ideal(s, ModContext{})));
    EXPECT_EQ(h.dimension, 2);
    EXPECT_EQ(h.degree, s.r());
  }
}

TEST(ScrollParametrization, Examples) {
  auto map = scroll_parametrization(ScrollSpec{1, 1}, RationalContext{});
  auto pt = map.at({Rational(1), Rational(0), Rational(1), Rational(0)});
  EXPECT_EQ(pt, (std::vector<Rational>{Rational(1), Rational(0), Rational(0), Rational(0)}));
}

TEST(ScrollParametrization, SatisfiesIdeal) {
  std::mt19937_64 rng(51);
  for (auto s : specs_up_to(6)) {
    auto I = scroll_ideal(s, ModContext{});
    auto map = scroll_parametrization(s, ModContext{});
    for (int k = 0; k < 200; ++k) {
      auto pt = map.at(random_point(ModContext{}, 4, rng));
      for (const auto& g : I.generators()) ASSERT_TRUE(eval(g, pt).is_zero());
    }
    for (const auto& g : I.generators()) EXPECT_TRUE(substitute(g, map.components, map.source).is_zero());
  }
}

TEST(ScrollParametrization, RulingsAreLines) {
  std::mt19937_64 rng(53);
  ModContext ctx;
  auto map = scroll_parametrization(ScrollSpec{2, 3}, ctx);
  for (int k = 0; k < 20; ++k) {
    auto s = ctx.from_random(rng()), t = ctx.from_random(rng()), u = ctx.from_random(rng()), v = ctx.from_random(rng());
    auto P = map.at({s, t, ctx.from_int(1), ctx.from_int(0)});
    auto Q = map.at({s, t, ctx.from_int(0), ctx.from_int(1)});
    auto X = map.at({s, t, u, v});
    for (std::size_t i = 0; i < X.size(); ++i) EXPECT_EQ(X[i], u * P[i] + v * Q[i]);
  }
}

TEST(RationalNormalCurve, Examples) {
  auto I = rnc_ideal(2, RationalContext{});
  ASSERT_EQ(I.size(), 1u);
  auto q = parse_polynomial("x0*x2 - x1^2", I.ring());
  EXPECT_TRUE(I.generators()[0] == q || I.generators()[0] == -q);
  EXPECT_EQ(rnc_ideal(3, RationalContext{}).size(), 3u);
  for (int d = 2; d <= 6; ++d) {
    auto J = rnc_ideal(d, ModContext{});
    auto map = rnc_parametrization(d, ModContext{});
    for (const auto& g : J.generators()) EXPECT_TRUE(substitute(g, map.components, map.source).is_zero());
  }
}

TEST(Plucker, Examples) {
  auto R = make_ring<RationalContext>({"s"});
  auto one = PolyQ::constant(R, 1), zero = PolyQ::zero(R);
  auto p = plucker_from_points<RationalContext>({one, zero, zero, zero}, {zero, one, zero, zero});
  ASSERT_EQ(p.size(), 6u);
  EXPECT_EQ(p.at(0, 1), one);
  for (std::size_t k = 1; k < p.size(); ++k) EXPECT_TRUE(p.entries[k].is_zero());
}

TEST(Plucker, SwapAndRelations) {
  for (std::size_t n = 4; n <= 8; ++n) {
    std::vector<std::string> names = indexed_names("a", n);
    for (auto& b : indexed_names("b", n)) names.push_back(b);
    auto R = make_ring<ModContext>(names);
    std::vector<PolyMod> P, Q;
    for (std::size_t i = 0; i < n; ++i) {
      P.push_back(PolyMod::variable(R, i));
      Q.push_back(PolyMod::variable(R, n + i));
    }
    auto pq = plucker_from_points(P, Q), qp = plucker_from_points(Q, P);
    for (std::size_t k = 0; k < pq.size(); ++k) EXPECT_EQ(qp.entries[k], -pq.entries[k]);
    for (const auto& rel : plucker_relations(pq, n)) EXPECT_TRUE(rel.is_zero());
  }
}

TEST(SecantFamily, Examples) {
  auto fam = secant_family(ScrollSpec{1, 1}, RationalContext{});
  ASSERT_EQ(fam.size(), 6u);
  auto R = fam.source;
  auto t1 = PolyQ::variable(R, "t1"), v1 = PolyQ::variable(R, "v1"), t2 = PolyQ::variable(R, "t2"),
       v2 = PolyQ::variable(R, "v2");
  // P = (1, t1, v1, t1 v1), Q = (1, t2, v2, t2 v2)
  EXPECT_EQ(fam.components[0], t2 - t1);
  EXPECT_EQ(fam.components[1], v2 - v1);
  EXPECT_EQ(fam.components[5], v1 * v2 * (t2 - t1));

  for (auto s : specs_up_to(5)) {
    auto F = secant_family(s, ModContext{});
    auto S = F.source;
    std::vector<PolyMod> swap{PolyMod::variable(S, "t2"), PolyMod::variable(S, "v2"), PolyMod::variable(S, "t1"),
                              PolyMod::variable(S, "v1")};
    std::vector<PolyMod> diag{PolyMod::variable(S, "t1"), PolyMod::variable(S, "v1"), PolyMod::variable(S, "t1"),
                              PolyMod::variable(S, "v1")};
    for (const auto& c : F.components) {
      EXPECT_EQ(substitute(c, swap, S), -c);
      EXPECT_TRUE(substitute(c, diag, S).is_zero());
    }
    EXPECT_EQ(static_cast<std::int64_t>(F.size()), choose(s.r() + 2, 2));
  }
}

TEST(Incidence, SchubertHyperplaneIsLinearInPlucker) {
  std::mt19937_64 rng(57);
  ModContext ctx;
  auto s = ScrollSpec{1, 3};
  auto line = secant_line(s, secant_parameter_ring(ctx));
  auto W = LinearSubspace<ModContext>::random(ctx, s.ambient_coords(), 2, rng);
  auto eqs = incidence_equations(line.P, line.Q, W, Incidence::Meets);
  ASSERT_EQ(eqs.size(), 1u);
  auto acc = PolyMod::zero(line.P.front().ring());
  for (std::size_t k = 0; k < line.plucker.size(); ++k) {
    auto [i, j] = line.plucker.labels[k];
    acc += line.plucker.entries[k].scaled(W.forms[0][i] * W.forms[1][j] - W.forms[0][j] * W.forms[1][i]);
  }
  EXPECT_EQ(eqs[0], acc);
}

TEST(Incidence, ContainedInHyperplane) {
  auto R = make_ring<RationalContext>({"a0", "a1", "a2", "b0", "b1", "b2"});
  std::vector<PolyQ> P{PolyQ::variable(R, 0), PolyQ::variable(R, 1), PolyQ::variable(R, 2)};
  std::vector<PolyQ> Q{PolyQ::variable(R, 3), PolyQ::variable(R, 4), PolyQ::variable(R, 5)};
  LinearSubspace<RationalContext> W{{{Rational(1), Rational(0), Rational(0)}}};
  auto eqs = incidence_equations(P, Q, W, Incidence::ContainedIn);
  EXPECT_EQ(eqs, (std::vector<PolyQ>{P[0], Q[0]}));
}

TEST(Incidence, CodimFiveCutsCodimFour) {
  std::mt19937_64 rng(59);
  ModContext ctx;
  const std::size_t n = 7;  // points of P^6
  std::vector<std::string> names = indexed_names("a", n);
  for (auto& b : indexed_names("b", n)) names.push_back(b);
  auto R = make_ring<ModContext>(names, ctx);
  std::vector<PolyMod> P, Q;
  for (std::size_t i = 0; i < n; ++i) {
    P.push_back(PolyMod::variable(R, i));
    Q.push_back(PolyMod::variable(R, n + i));
  }
  auto W = LinearSubspace<ModContext>::random(ctx, n, 5, rng);
  auto eqs = incidence_equations(P, Q, W, Incidence::Meets);
  EXPECT_EQ(eqs.size(), 10u);
  auto h = hilbert_data(buchberger(Ideal<ModContext>(R, eqs)));
  EXPECT_EQ(h.dimension, static_cast<int>(2 * n) - 1 - 4);
}

TEST(Chart, IndexBookkeeping) {
  auto I = chart_ideal(ScrollSpec{1, 2}, RationalContext{});
  EXPECT_EQ(I.size(), 2u);
  EXPECT_EQ(I.ring()->nvars(), 6u);
  EXPECT_THROW(chart_ideal(ScrollSpec{1, 1}, RationalContext{}), std::invalid_argument);
  for (auto s : specs_up_to(6)) {
    if (s.r() < 3) continue;
    auto J = chart_ideal(s, RationalContext{});
    EXPECT_EQ(J.ring()->nvars(), static_cast<std::size_t>(2 * s.r()));
    EXPECT_EQ(J.size(), static_cast<std::size_t>(2 * s.r() - 4));
    // graph form: each generator is a dependent variable minus a polynomial
    // in the four free coordinates
    auto dep = dependent_chart_indices(s);
    for (std::size_t k = 0; k < J.size(); ++k) {
      int idx = dep[k / 2];
      auto var = PolyQ::variable(J.ring(), k % 2 == 0 ? xi_name(idx) : eta_name(idx));
      auto rest = var - J.generators()[k];
      for (const auto& t : rest.terms())
        for (std::size_t v = 0; v < J.ring()->nvars(); ++v) {
          if (t.mono[v] == 0) continue;
          const auto& nm = J.ring()->names[v];
          EXPECT_TRUE(nm == xi_name(1) || nm == eta_name(1) || nm == xi_name(s.b + 2) || nm == eta_name(s.b + 2)) << nm;
        }
    }
  }
}

TEST(Chart, SeedRelation) {
  for (auto s : {ScrollSpec{1, 2}, ScrollSpec{2, 2}, ScrollSpec{1, 4}}) {
    auto R = chart_ring(s, RationalContext{});
    auto [X, E] = chart_closed_forms(s, R);
    auto xi1 = PolyQ::variable(R, xi_name(1)), eta1 = PolyQ::variable(R, eta_name(1));
    auto xic = PolyQ::variable(R, xi_name(s.b + 2)), etac = PolyQ::variable(R, eta_name(s.b + 2));
    EXPECT_EQ(X.at(2), xi1 * xi1 + eta1 * xic);
    EXPECT_EQ(E.at(2), xi1 * eta1 + eta1 * etac);
  }
}

TEST(Chart, MinorsProportionalToFirstQuadric) {
  // Substitute the chart closed forms into the point
  //   x_0 = lam, x_{b+1} = mu, x_i = lam xi_i + mu eta_i
  // of the scroll matrix: every 2x2 minor is a multiple of
  //   lam^2 xi_{b+2} + lam mu (eta_{b+2} - xi_1) - mu^2 eta_1.
  for (auto s : {ScrollSpec{2, 2}, ScrollSpec{1, 3}, ScrollSpec{2, 3}}) {
    auto R = chart_ring(s, RationalContext{}, {"lam", "mu"});
    auto [X, E] = chart_closed_forms(s, R);
    auto lam = PolyQ::variable(R, "lam"), mu = PolyQ::variable(R, "mu");
    std::vector<PolyQ> x;
    for (int i = 0; i <= s.r() + 1; ++i) {
      if (i == 0) x.push_back(lam);
      else if (i == s.b + 1) x.push_back(mu);
      else x.push_back(lam * X.at(i) + mu * E.at(i));
    }
    std::vector<std::vector<PolyQ>> cols;
    for (int i = 0; i < s.b; ++i) cols.push_back({x[i], x[i + 1]});
    for (int i = s.b + 1; i <= s.r(); ++i) cols.push_back({x[i], x[i + 1]});
    auto xi1 = X.at(1), eta1 = E.at(1), xic = X.at(s.b + 2), etac = E.at(s.b + 2);
    std::array<PolyQ, 3> ref{xic, etac - xi1, -eta1};
    auto minors = two_by_two_minors(cols);
    bool found = false;
    for (const auto& m : minors) {
      auto c = binary_quadric_coeffs(m, 0, 1);
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) EXPECT_TRUE((c[i] * ref[j] - c[j] * ref[i]).is_zero());
      found = found || c[0] == ref[0] || c[0] == -ref[0];
    }
    EXPECT_TRUE(found);
  }
}

TEST(Chart, SecantLinesSatisfyChartEquations) {
  for (auto s : {ScrollSpec{1, 2}, ScrollSpec{2, 2}, ScrollSpec{1, 3}}) {
    auto I = chart_ideal(s, RationalContext{});
    auto line = secant_line(s, secant_parameter_ring(RationalContext{}));
    auto cc = chart_coordinates(s, line.plucker);
    EXPECT_FALSE(cc.denominator.is_zero());
    for (const auto& g : I.generators()) EXPECT_TRUE(clear_denominators(g, cc).is_zero());
  }
}

TEST(TangentCone, Shape) {
  auto I = tangent_cone_ideal(4, RationalContext{});
  EXPECT_EQ(I.ring()->nvars(), 8u);
  EXPECT_EQ(I.size(), 9u);
  for (int r = 3; r <= 6; ++r) EXPECT_EQ(static_cast<std::int64_t>(tangent_cone_ideal(r, ModContext{}).size()), 3 * choose(r - 1, 2));
  EXPECT_THROW(tangent_cone_ideal(2, ModContext{}), std::invalid_argument);
}

TEST(TangentCone, HilbertData) {
  for (int r = 3; r <= 5; ++r) {
    auto h = hilbert_data(buchberger(tangent_cone_ideal(r, ModContext{})));
    EXPECT_EQ(h.dimension, 3);
    EXPECT_EQ(h.degree, choose(r, 2));
  }
}

TEST(TangentCone, SamplePointsLieOnCone) {
  std::mt19937_64 rng(61);
  for (int r = 3; r <= 6; ++r) {
    auto I = tangent_cone_ideal(r, ModContext{});
    for (int k = 0; k < 20; ++k) {
      auto pt = tangent_cone_sample_point(r, ModContext{}, rng);
      for (const auto& g : I.generators()) EXPECT_TRUE(eval(g, pt).is_zero());
    }
  }
}

TEST(SingularScroll, LineAndDegree) {
  for (int r = 3; r <= 5; ++r) {
    auto S = singular_scroll_ideal(r, RationalContext{});
    auto R = S.ideal.ring();
    std::vector<PolyQ> line;
    for (std::size_t i = 0; i < R->nvars(); ++i) line.push_back(i < 2 ? PolyQ::variable(R, i) : PolyQ::zero(R));
    for (const auto& g : S.ideal.generators()) EXPECT_TRUE(substitute(g, line, R).is_zero());
  }
  for (int r = 3; r <= 4; ++r) {
    auto h = hilbert_data(buchberger(singular_scroll_ideal(r, ModContext{}).ideal));
    EXPECT_EQ(h.dimension, 2);
    EXPECT_EQ(h.degree, r);
  }
}

TEST(SingularScroll, RelabelsCubicScroll) {
  auto S = singular_scroll_ideal(3, RationalContext{});
  auto T = scroll_ideal(ScrollSpec{1, 2}, RationalContext{});
  auto R = S.ideal.ring();
  std::vector<PolyQ> images(T.ring()->nvars(), PolyQ::zero(R));
  for (std::size_t k = 0; k < R->nvars(); ++k) images[S.to_scroll_coords[k]] = PolyQ::variable(R, k);
  std::vector<PolyQ> moved;
  for (const auto& g : T.generators()) moved.push_back(substitute(g, images, R));
  EXPECT_TRUE(same_ideal(S.ideal, Ideal<RationalContext>(R, moved)));
}

TEST(GammaFamily, Entries) {
  auto g = gamma_family(RationalContext{});
  auto s = PolyQ::variable(g.ring, 0), t = PolyQ::variable(g.ring, 1);
  EXPECT_EQ(g.plucker.at(0, 2), s.pow(4));
  EXPECT_EQ(g.plucker.at(1, 5), t.pow(4));
  ASSERT_EQ(g.plucker.size(), 15u);
  Matrix<RationalContext> M(RationalContext{}, 0, 5);
  for (const auto& e : g.plucker.entries) {
    if (!e.is_zero()) {
      EXPECT_TRUE(e.is_homogeneous() && e.total_degree() == 4);
    }
    std::vector<Rational> row(5, Rational(0));
    for (const auto& term : e.terms()) row[term.mono[1]] = term.coeff;
    M.append_row(row);
  }
  EXPECT_EQ(M.rank(), 5u);
}

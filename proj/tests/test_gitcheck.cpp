#include <gtest/gtest.h>

#include "scrollsec/gitcheck/examples.hpp"

using namespace scrollsec;

namespace {

using Q = RationalContext;

BinaryForm<Q> form(std::vector<std::int64_t> c) {
  std::vector<Rational> v;
  for (auto x : c) v.push_back(Rational(x));
  return {Q{}, v};
}

// Largest multiplicity of a root of f on P^1 over F_p, by trying every
// point (s:t) and dividing out linear factors.
int brute_force_multiplicity(const BinaryForm<ModContext>& f) {
  const auto p = f.ctx.prime;
  int best = 0;
  auto mult_at_t = [&](std::uint32_t a) {
    // root (1 : a): repeatedly divide by (t - a s) using synthetic division in t
    std::vector<ModInt> c = f.coeffs;
    int m = 0;
    ModInt A(a, p);
    while (c.size() > 1) {
      // c(t) = sum c[k] t^k; divide by (t - a)
      std::vector<ModInt> q(c.size() - 1, ModInt(0, p));
      ModInt acc(0, p);
      for (std::size_t k = c.size(); k-- > 1;) {
        acc = acc * A + c[k];
        q[k - 1] = acc;
      }
      if (!(acc * A + c[0]).is_zero()) break;
      c = q;
      ++m;
    }
    return m;
  };
  for (std::uint32_t a = 0; a < p; ++a) best = std::max(best, mult_at_t(a));
  // root (0 : 1): t-power dividing the form, i.e. trailing zero coefficients from s^d
  int m = 0;
  for (std::size_t k = 0; k < f.coeffs.size() && f.coeffs[f.coeffs.size() - 1 - k].is_zero(); ++k) ++m;
  return std::max(best, m);
}

}  // namespace

TEST(RestrictToGamma, DualCoordinates) {
  Q ctx;
  auto s4 = restrict_to_gamma(HyperplaneClass<Q>::dual_to(ctx, 0, 2), ctx);
  EXPECT_EQ(binary_form_text(s4), "s^4");
  auto t4 = restrict_to_gamma(HyperplaneClass<Q>::dual_to(ctx, 1, 5), ctx);
  EXPECT_EQ(binary_form_text(t4), "t^4");
}

TEST(RestrictToGamma, RandomHasFullSupport) {
  ModContext ctx;
  std::mt19937_64 rng(71);
  int full = 0;
  for (int k = 0; k < 50; ++k) {
    auto f = restrict_to_gamma(HyperplaneClass<ModContext>::random(ctx, rng), ctx);
    bool all = true;
    for (const auto& c : f.coeffs) all = all && !c.is_zero();
    full += all;
  }
  EXPECT_EQ(full, 50);
  auto M = gamma_coefficient_matrix(gamma_family(ctx));
  EXPECT_EQ(M.rank(), 5u);
  EXPECT_EQ(M.kernel().size(), 10u);
}

TEST(RestrictToGamma, IsLinear) {
  ModContext ctx;
  std::mt19937_64 rng(73);
  for (int k = 0; k < 20; ++k) {
    auto H1 = HyperplaneClass<ModContext>::random(ctx, rng), H2 = HyperplaneClass<ModContext>::random(ctx, rng);
    auto c = ctx.from_random(rng());
    std::vector<ModInt> sum;
    for (std::size_t i = 0; i < kGammaCoords; ++i) sum.push_back(H1.coeffs[i] + c * H2.coeffs[i]);
    bool nonzero = false;
    for (auto& x : sum) nonzero = nonzero || !x.is_zero();
    if (!nonzero) continue;
    auto f = restrict_to_gamma(HyperplaneClass<ModContext>(sum), ctx);
    auto f1 = restrict_to_gamma(H1, ctx), f2 = restrict_to_gamma(H2, ctx);
    for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(f.coeffs[i], f1.coeffs[i] + c * f2.coeffs[i]);
  }
}

TEST(HyperplaneClassTest, Validation) {
  Q ctx;
  EXPECT_THROW(HyperplaneClass<Q>(std::vector<Rational>(14, Rational(1))), std::invalid_argument);
  EXPECT_THROW(HyperplaneClass<Q>(std::vector<Rational>(15, Rational(0))), std::invalid_argument);
  EXPECT_THROW(HyperplaneClass<Q>::dual_to(ctx, 3, 3), std::out_of_range);
}

TEST(MaxRootMultiplicity, Examples) {
  EXPECT_EQ(max_root_multiplicity(form({0, 0, 1, 0, 0})), 2);   // s^2 t^2
  EXPECT_EQ(max_root_multiplicity(form({0, 1, 0, 0, 0})), 3);   // s^3 t
  EXPECT_EQ(max_root_multiplicity(form({1, -4, 6, -4, 1})), 4);  // (s - t)^4
  EXPECT_EQ(max_root_multiplicity(form({1, 0, 0, 0, 0})), 4);   // s^4
  EXPECT_EQ(max_root_multiplicity(form({-1, 0, 1, 0, 0})), 2);  // s^2 (t - s)(t + s)
  EXPECT_EQ(max_root_multiplicity(form({1, 0, 0, 0, 1})), 1);
  EXPECT_THROW(max_root_multiplicity(form({0, 0, 0, 0, 0})), std::invalid_argument);
}

TEST(MaxRootMultiplicity, MatchesBruteForceOverSmallField) {
  ModContext ctx{101};
  std::mt19937_64 rng(79);
  const std::vector<std::vector<unsigned>> shapes{{1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}};
  for (int k = 0; k < 200; ++k) {
    auto f = random_factored_quartic(ctx, shapes[static_cast<std::size_t>(k) % shapes.size()], rng);
    if (f.is_zero()) continue;
    EXPECT_EQ(max_root_multiplicity(f), brute_force_multiplicity(f));
  }
}

TEST(SemistabilityCertificate, WorkedExamples) {
  Q ctx;
  std::vector<Rational> c(kGammaCoords, Rational(0));
  c[HyperplaneClass<Q>::label_index(0, 4)] = Rational(1);
  c[HyperplaneClass<Q>::label_index(0, 2)] = Rational(-1);
  auto cert = semistability_certificate(HyperplaneClass<Q>(c), ctx);
  EXPECT_EQ(cert.verdict, Verdict::Certified);
  EXPECT_EQ(cert.max_multiplicity, std::optional<int>(2));
  EXPECT_EQ(binary_form_text(cert.restriction), "-s^4 + s^2*t^2");

  auto inc = semistability_certificate(HyperplaneClass<Q>::dual_to(ctx, 0, 3), ctx);
  EXPECT_EQ(inc.verdict, Verdict::Inconclusive);
  EXPECT_EQ(inc.max_multiplicity, std::optional<int>(3));

  auto kernel = gamma_coefficient_matrix(gamma_family(ctx)).kernel();
  ASSERT_EQ(kernel.size(), 10u);
  std::vector<Rational> k3(kGammaCoords, Rational(0));
  for (std::size_t i = 0; i < kernel.size(); ++i)
    for (std::size_t j = 0; j < kGammaCoords; ++j) k3[j] += Rational(static_cast<std::int64_t>(i) + 2) * kernel[i][j];
  auto contains = semistability_certificate(HyperplaneClass<Q>(k3), ctx);
  EXPECT_EQ(contains.verdict, Verdict::ContainsGamma);
  EXPECT_FALSE(contains.max_multiplicity.has_value());
}

TEST(SemistabilityCertificate, MobiusInvariance) {
  ModContext ctx;
  std::mt19937_64 rng(83);
  const std::vector<std::vector<unsigned>> shapes{{1, 1, 1, 1}, {3, 1}, {2, 1, 1}, {2, 2}, {4}};
  for (int k = 0; k < 100; ++k) {
    auto H = hyperplane_with_restriction(random_factored_quartic(ctx, shapes[static_cast<std::size_t>(k) % 5], rng));
    std::array<ModInt, 4> m;
    do {
      for (auto& x : m) x = ctx.from_random(rng());
    } while ((m[0] * m[3] - m[1] * m[2]).is_zero());
    auto a = semistability_certificate(H, ctx);
    auto g = substitute_binary(a.restriction, m);
    auto b = semistability_certificate(hyperplane_with_restriction(g), ctx);
    EXPECT_EQ(a.verdict, b.verdict);
    EXPECT_EQ(a.max_multiplicity, b.max_multiplicity);
  }
}

TEST(SemistabilityCertificate, RandomHyperplanesAreCertified) {
  ModContext ctx;
  std::mt19937_64 rng(89);
  int certified = 0;
  for (int k = 0; k < 1000; ++k)
    certified += semistability_certificate(HyperplaneClass<ModContext>::random(ctx, rng), ctx).verdict == Verdict::Certified;
  EXPECT_GE(certified, 990);
}

TEST(GitcheckExamples, Report) {
  for (auto p : {kDefaultPrimes[0], kDefaultPrimes[2]}) {
    auto rep = gitcheck_examples(5, p);
    EXPECT_TRUE(rep.match) << rep.to_json().dump();
    EXPECT_EQ(rep.computed.back(), static_cast<std::int64_t>(kMobiusTrials));
    EXPECT_EQ(rep.params["kernel_dimension"], 10);
  }
}

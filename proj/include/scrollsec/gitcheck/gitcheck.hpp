#pragma once

// Semistability certificate for hyperplanes of P^14 through their
// restriction to the rational normal quartic Gamma in X_{1,3}.

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "scrollsec/algebra/text.hpp"
#include "scrollsec/algebra/univariate.hpp"
#include "scrollsec/geometry/plucker.hpp"

namespace scrollsec {

inline constexpr std::size_t kGammaCoords = 15;

// Coefficients on the Pluecker coordinates p_ij (0 <= i < j <= 5), in
// lexicographic order of (i, j).
template <FieldContext Ctx>
struct HyperplaneClass {
  using F = typename Ctx::value_type;
  std::vector<F> coeffs;

  explicit HyperplaneClass(std::vector<F> c) : coeffs(std::move(c)) {
    if (coeffs.size() != kGammaCoords)
      throw std::invalid_argument("hyperplane needs " + std::to_string(kGammaCoords) + " coefficients (got " +
                                  std::to_string(coeffs.size()) + ")");
    bool all_zero = true;
    for (const auto& x : coeffs) all_zero = all_zero && x.is_zero();
    if (all_zero) throw std::invalid_argument("hyperplane coefficients are all zero");
  }

  // The hyperplane p_ij = 0.
  static HyperplaneClass dual_to(const Ctx& ctx, std::size_t i, std::size_t j) {
    std::vector<F> c(kGammaCoords, ctx.from_int(0));
    c.at(label_index(i, j)) = ctx.from_int(1);
    return HyperplaneClass(std::move(c));
  }

  template <class Rng>
  static HyperplaneClass random(const Ctx& ctx, Rng& rng) {
    for (;;) {
      std::vector<F> c;
      for (std::size_t k = 0; k < kGammaCoords; ++k) c.push_back(ctx.from_random(rng()));
      bool any = false;
      for (const auto& x : c) any = any || !x.is_zero();
      if (any) return HyperplaneClass(std::move(c));
    }
  }

  static std::size_t label_index(std::size_t i, std::size_t j) {
    if (!(i < j && j < 6)) throw std::out_of_range("no Pluecker coordinate p" + std::to_string(i) + "_" + std::to_string(j));
    std::size_t k = 0;
    for (std::size_t a = 0; a < 6; ++a)
      for (std::size_t b = a + 1; b < 6; ++b, ++k)
        if (a == i && b == j) return k;
    return k;
  }
};

// sum_k c[k] s^{d-k} t^k
template <FieldContext Ctx>
struct BinaryForm {
  using F = typename Ctx::value_type;
  Ctx ctx;
  std::vector<F> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const {
    for (const auto& c : coeffs)
      if (!c.is_zero()) return false;
    return true;
  }

  static BinaryForm from_polynomial(const Polynomial<Ctx>& f, int d) {
    if (f.ring()->nvars() != 2) throw std::invalid_argument("binary form needs a ring in two variables");
    BinaryForm out{f.ring()->ctx, std::vector<F>(static_cast<std::size_t>(d + 1), f.ring()->ctx.from_int(0))};
    for (const auto& t : f.terms()) {
      if (static_cast<int>(t.mono.degree()) != d) throw std::invalid_argument("form is not homogeneous of degree " + std::to_string(d));
      out.coeffs[t.mono[1]] = t.coeff;
    }
    return out;
  }

  Polynomial<Ctx> to_polynomial(const RingPtr<Ctx>& st) const {
    std::vector<Term<Ctx>> terms;
    for (int k = 0; k <= degree(); ++k) {
      Monomial m(2);
      m.set(0, static_cast<unsigned>(degree() - k), st->exponent_cap);
      m.set(1, static_cast<unsigned>(k), st->exponent_cap);
      terms.push_back({coeffs[static_cast<std::size_t>(k)], m});
    }
    return Polynomial<Ctx>::from_terms(st, std::move(terms));
  }

  // f(1, t) and f(s, 1)
  Univariate<Ctx> in_t() const { return Univariate<Ctx>(ctx, coeffs); }
  Univariate<Ctx> in_s() const { return Univariate<Ctx>(ctx, std::vector<F>(coeffs.rbegin(), coeffs.rend())); }
};

template <FieldContext Ctx>
BinaryForm<Ctx> restrict_to_gamma(const HyperplaneClass<Ctx>& H, const GammaFamily<Ctx>& gamma) {
  auto acc = Polynomial<Ctx>::zero(gamma.ring);
  for (std::size_t k = 0; k < kGammaCoords; ++k)
    if (!H.coeffs[k].is_zero()) acc += gamma.plucker.entries[k].scaled(H.coeffs[k]);
  return BinaryForm<Ctx>::from_polynomial(acc, 4);
}

template <FieldContext Ctx>
BinaryForm<Ctx> restrict_to_gamma(const HyperplaneClass<Ctx>& H, const Ctx& ctx = {}) {
  return restrict_to_gamma(H, gamma_family(ctx));
}

namespace detail {

// Largest k with gcd(f, f', ..., f^(k-1)) of positive degree.
template <FieldContext Ctx>
int affine_root_multiplicity(const Univariate<Ctx>& f) {
  if (f.degree() < 1) return 0;
  int k = 0;
  auto g = f, d = f;
  while (g.degree() >= 1) {
    ++k;
    d = d.derivative();
    if (d.degree() < 0) break;
    g = univariate_gcd(g, d);
  }
  return k;
}

}  // namespace detail

template <FieldContext Ctx>
int max_root_multiplicity(const BinaryForm<Ctx>& f) {
  if (f.is_zero()) throw std::invalid_argument("max_root_multiplicity of the zero form");
  auto ch = f.ctx.characteristic();
  if (ch != 0 && ch <= static_cast<std::uint64_t>(f.degree()))
    throw std::invalid_argument("characteristic must exceed the degree of the form");
  return std::max(detail::affine_root_multiplicity(f.in_t()), detail::affine_root_multiplicity(f.in_s()));
}

enum class Verdict { Certified, Inconclusive, ContainsGamma };

inline std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Certified: return "Certified";
    case Verdict::Inconclusive: return "Inconclusive";
    case Verdict::ContainsGamma: return "ContainsGamma";
  }
  return "";
}

template <FieldContext Ctx>
struct Certificate {
  Verdict verdict;
  BinaryForm<Ctx> restriction;
  std::optional<int> max_multiplicity;  // absent when the restriction is zero
};

template <FieldContext Ctx>
Certificate<Ctx> semistability_certificate(const HyperplaneClass<Ctx>& H, const Ctx& ctx = {}) {
  auto f = restrict_to_gamma(H, ctx);
  if (f.is_zero()) return {Verdict::ContainsGamma, f, std::nullopt};
  int m = max_root_multiplicity(f);
  return {m <= 2 ? Verdict::Certified : Verdict::Inconclusive, f, m};
}

// f(alpha s + beta t, gamma s + delta t)
template <FieldContext Ctx>
BinaryForm<Ctx> substitute_binary(const BinaryForm<Ctx>& f, const std::array<typename Ctx::value_type, 4>& m) {
  auto st = make_ring<Ctx>({"s", "t"}, f.ctx);
  auto s = Polynomial<Ctx>::variable(st, 0), t = Polynomial<Ctx>::variable(st, 1);
  std::vector<Polynomial<Ctx>> images{s.scaled(m[0]) + t.scaled(m[1]), s.scaled(m[2]) + t.scaled(m[3])};
  auto img = substitute(f.to_polynomial(st), images, st);
  return BinaryForm<Ctx>::from_polynomial(img, f.degree());
}

template <FieldContext Ctx>
std::string binary_form_text(const BinaryForm<Ctx>& f) {
  return format_polynomial(f.to_polynomial(make_ring<Ctx>({"s", "t"}, f.ctx)));
}

}  // namespace scrollsec

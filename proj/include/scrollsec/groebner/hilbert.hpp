#pragma once

// Hilbert series of monomial ideals by pivot splitting, and the staircase
// of a Groebner basis.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "scrollsec/groebner/buchberger.hpp"

namespace scrollsec {

struct HilbertData {
  // projective dimension; -1 when the projective variety is empty
  int dimension = -1;
  // 0 only for the unit ideal
  std::int64_t degree = 0;
  // numerator of the Hilbert series over (1 - t)^nvars, lowest degree first
  std::vector<std::int64_t> series_numerator;
};

namespace detail {

using IntPoly = std::vector<std::int64_t>;

inline IntPoly int_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

inline IntPoly int_add(IntPoly a, const IntPoly& b, std::size_t shift = 0) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
  while (a.size() > 1 && a.back() == 0) a.pop_back();
  return a;
}

inline std::vector<Monomial> minimize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& o : out)
      if (o.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  return out;
}

inline int support_size(const Monomial& m) {
  int s = 0;
  for (std::size_t i = 0; i < m.size(); ++i) s += m[i] != 0;
  return s;
}

inline IntPoly hilbert_numerator(std::vector<Monomial> gens) {
  gens = minimize(std::move(gens));
  if (gens.empty()) return {1};
  std::size_t n = gens.front().size();
  std::vector<int> freq(n, 0);
  bool all_pure = true;
  for (const auto& m : gens) {
    if (support_size(m) <= 1) continue;
    all_pure = false;
    for (std::size_t i = 0; i < n; ++i) freq[i] += m[i] != 0;
  }
  if (all_pure) {
    IntPoly r{1};
    for (const auto& m : gens) {
      IntPoly f(m.degree() + 1, 0);
      f[0] = 1;
      f[m.degree()] -= 1;
      r = int_mul(r, f);
    }
    while (r.size() > 1 && r.back() == 0) r.pop_back();
    return r;
  }
  std::size_t x = static_cast<std::size_t>(std::max_element(freq.begin(), freq.end()) - freq.begin());
  std::vector<unsigned> exps;
  for (const auto& m : gens)
    if (support_size(m) > 1 && m[x] != 0) exps.push_back(m[x]);
  std::nth_element(exps.begin(), exps.begin() + static_cast<std::ptrdiff_t>(exps.size() / 2), exps.end());
  unsigned e = exps[exps.size() / 2];
  Monomial pivot = Monomial::variable(n, x, e);

  std::vector<Monomial> plus = gens;
  plus.push_back(pivot);
  std::vector<Monomial> colon;
  for (const auto& m : gens) colon.push_back(m.divided_by(m.gcd(pivot)));
  // HN(I) = HN(I + p) + t^deg(p) HN(I : p)
  return int_add(hilbert_numerator(std::move(plus)), hilbert_numerator(std::move(colon)), e);
}

}  // namespace detail

// Hilbert data of R/LT(I) for a homogeneous ideal given by a Groebner basis.
template <FieldContext Ctx>
HilbertData hilbert_data(const GroebnerBasis<Ctx>& G) {
  for (const auto& g : G.polynomials())
    if (!g.is_homogeneous()) throw NotHomogeneous("hilbert_data needs a homogeneous ideal");
  const std::size_t n = G.ring()->nvars();
  HilbertData out;
  out.series_numerator = detail::hilbert_numerator(G.leading_monomials());
  if (G.is_unit()) {
    out.series_numerator = {0};
    return out;
  }
  detail::IntPoly q = out.series_numerator;
  int c = 0;
  auto at_one = [](const detail::IntPoly& p) {
    std::int64_t s = 0;
    for (auto v : p) s += v;
    return s;
  };
  while (q.size() > 1 && at_one(q) == 0) {
    // q = (1 - t) * q'
    detail::IntPoly d(q.size() - 1, 0);
    std::int64_t acc = 0;
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
      acc += q[i];
      d[i] = acc;
    }
    q = std::move(d);
    ++c;
  }
  out.dimension = static_cast<int>(n) - c - 1;
  out.degree = at_one(q);
  return out;
}

namespace detail {

template <class Visit>
bool walk_staircase(const std::vector<Monomial>& lms, Monomial& cur, std::size_t first_var, std::size_t& count,
                    std::size_t limit, Visit& visit) {
  ++count;
  visit(cur);
  if (count > limit) return false;
  for (std::size_t v = first_var; v < cur.size(); ++v) {
    Monomial next = cur;
    next.set(v, cur[v] + 1, 127);
    bool divisible = false;
    for (const auto& m : lms)
      if (m.divides(next)) {
        divisible = true;
        break;
      }
    if (divisible) continue;
    if (!walk_staircase(lms, next, v, count, limit, visit)) return false;
  }
  return true;
}

}  // namespace detail

// Standard monomials of G (those outside the leading-term ideal), or nullopt
// when there are infinitely many. `limit` guards against huge staircases.
template <FieldContext Ctx>
std::optional<std::vector<Monomial>> standard_monomials(const GroebnerBasis<Ctx>& G, std::size_t limit = 2000000) {
  const std::size_t n = G.ring()->nvars();
  auto lms = G.leading_monomials();
  for (std::size_t v = 0; v < n; ++v) {
    bool pure = false;
    for (const auto& m : lms)
      if (m.degree() == m[v] && m[v] > 0) pure = true;
    if (!pure) return std::nullopt;
  }
  std::vector<Monomial> out;
  if (G.is_unit()) return out;
  Monomial one(n);
  std::size_t count = 0;
  auto visit = [&](const Monomial& m) { out.push_back(m); };
  if (!detail::walk_staircase(lms, one, 0, count, limit, visit))
    throw BudgetExceeded("staircase larger than " + std::to_string(limit));
  return out;
}

// Number of standard monomials; nullopt stands for "infinite".
template <FieldContext Ctx>
std::optional<std::size_t> quotient_dimension(const GroebnerBasis<Ctx>& G) {
  auto s = standard_monomials(G);
  if (!s) return std::nullopt;
  return s->size();
}

}  // namespace scrollsec

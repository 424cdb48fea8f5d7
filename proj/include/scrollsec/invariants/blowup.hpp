#pragma once

// Intersection numbers on the blow-up of G(1,3) along a conic, and the
// linear system of forms singular along a conic in P^5.

#include <array>
#include <map>
#include <vector>

#include "scrollsec/algebra/linalg.hpp"
#include "scrollsec/invariants/report.hpp"

namespace scrollsec {

// h H + e E
struct BlowupClass {
  std::int64_t h = 0;
  std::int64_t e = 0;
};

// H^{4-k} E^k for k = 0..4
inline constexpr std::array<std::int64_t, 5> kBlowupTable = {2, 0, 0, 2, 6};

// Multilinear expansion of D1 D2 D3 D4.
inline std::int64_t intersect(const std::array<BlowupClass, 4>& D) {
  std::int64_t total = 0;
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::int64_t c = 1;
    int k = 0;
    for (int i = 0; i < 4; ++i) {
      if (mask & (1u << i)) {
        c *= D[static_cast<std::size_t>(i)].e;
        ++k;
      } else {
        c *= D[static_cast<std::size_t>(i)].h;
      }
    }
    total += c * kBlowupTable[static_cast<std::size_t>(k)];
  }
  return total;
}

inline VerificationReport blowup_intersection(int a) {
  if (a < 1) throw std::invalid_argument("blowup needs a >= 1 (got " + std::to_string(a) + ")");
  Stopwatch sw;
  const std::int64_t A = a;
  BlowupClass D{A, -(A - 1)}, E{0, 1};
  VerificationReport rep{"blowup_intersection(" + std::to_string(a) + ")", {{"a", a}}};
  rep.params["components"] = {"D^4", "D^3.E", "degree formula at r=2a"};
  const std::int64_t d4 = 12 * A * A - 16 * A + 6;
  rep.computed = {intersect({D, D, D, D}), intersect({D, D, D, E}), secant_degree_formula(2 * A)};
  rep.expected = {d4, 6 * (A - 1) * (A - 1), d4};
  rep.field = FieldChoice::rationals();
  rep.settle();
  rep.elapsed_ms = sw.ms();
  return rep;
}

namespace detail {

inline void exponent_vectors(std::size_t nvars, int degree, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (cur.size() + 1 == nvars) {
    cur.push_back(degree);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = degree; e >= 0; --e) {
    cur.push_back(e);
    exponent_vectors(nvars, degree - e, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> exponent_vectors(std::size_t nvars, int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  exponent_vectors(nvars, degree, cur, out);
  return out;
}

inline std::int64_t falling(int n, int k) {
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i) r *= n - i;
  return r;
}

}  // namespace detail

// Dimension of the space of degree-`deg` forms on P^5 all of whose partials
// of order <= `order` vanish along the conic (s^2, st, t^2, 0, 0, 0). A
// negative order imposes nothing.
template <FieldContext Ctx>
std::size_t forms_singular_along_conic(int deg, int order, const Ctx& ctx) {
  auto cols = detail::exponent_vectors(6, deg);
  if (order < 0) return cols.size();
  // row key: (derivative multi-index, t-degree of the pulled-back monomial)
  std::map<std::pair<std::vector<int>, int>, std::vector<typename Ctx::value_type>> rows;
  for (int o = 0; o <= order; ++o)
    for (const auto& D : detail::exponent_vectors(6, o))
      for (std::size_t c = 0; c < cols.size(); ++c) {
        const auto& e = cols[c];
        std::int64_t coeff = 1;
        std::vector<int> f(6);
        bool alive = true;
        for (std::size_t i = 0; i < 6 && alive; ++i) {
          if (e[i] < D[i]) alive = false;
          f[i] = e[i] - D[i];
          coeff *= detail::falling(e[i], D[i]);
        }
        if (!alive || f[3] || f[4] || f[5]) continue;
        auto& row = rows[{D, f[1] + 2 * f[2]}];
        if (row.empty()) row.assign(cols.size(), ctx.from_int(0));
        row[c] = row[c] + ctx.from_int(coeff);
      }
  Matrix<Ctx> M(ctx, 0, cols.size());
  for (const auto& [key, row] : rows) M.append_row(row);
  return cols.size() - M.rank();
}

template <FieldContext Ctx>
VerificationReport conic_linear_system(int a, const Ctx& ctx, FieldChoice field) {
  if (a < 2 || a > 4) throw std::invalid_argument("conic system needs 2 <= a <= 4 (got " + std::to_string(a) + ")");
  Stopwatch sw;
  const std::int64_t A = a;
  auto singular = static_cast<std::int64_t>(forms_singular_along_conic(a, a - 2, ctx)) - 1;
  auto cones = static_cast<std::int64_t>(forms_singular_along_conic(a - 2, a - 3, ctx)) - 1;
  VerificationReport rep{"conic_linear_system(" + std::to_string(a) + ")", {{"a", a}}};
  rep.params["cone_dimension"] = cones;
  rep.computed = {singular, singular - 1 - cones};
  rep.expected = {5 * A * (A + 1) / 2, A * (2 * A + 3)};
  rep.field = field;
  rep.settle();
  rep.elapsed_ms = sw.ms();
  return rep;
}

}  // namespace scrollsec

#pragma once

// Rational normal scrolls, rational normal curves and their ideals.
//
// Coordinates on P^{r+1} are x0..x_{r+1}. The scroll S_{a,b} is the rank-one
// locus of the 2 x r matrix
//
//   x0 .. x_{b-1} | x_{b+1} .. x_r
//   x1 .. x_b     | x_{b+2} .. x_{r+1}
//
// i.e. the degree-b block comes first, then the degree-a block.

#include <stdexcept>
#include <string>
#include <vector>

#include "scrollsec/groebner/ideal.hpp"

namespace scrollsec {

struct ScrollSpec {
  int a = 1;
  int b = 1;

  int r() const { return a + b; }
  // ambient projective space is P^{r+1}
  std::size_t ambient_coords() const { return static_cast<std::size_t>(r() + 2); }

  void validate() const {
    if (a < 0 || b < 1 || a > b)
      throw std::invalid_argument("scroll needs 0 <= a <= b and b >= 1 (got a=" + std::to_string(a) +
                                  ", b=" + std::to_string(b) + ")");
    if (a == 0) throw std::invalid_argument("a >= 1 required; S_{0,r} out of scope");
  }
};

// A tuple of polynomials over a parameter ring, with labels for the target
// coordinates.
template <FieldContext Ctx>
struct PolynomialMap {
  RingPtr<Ctx> source;
  std::vector<Polynomial<Ctx>> components;
  std::vector<std::string> target_labels;

  std::size_t size() const { return components.size(); }

  std::vector<typename Ctx::value_type> at(const std::vector<typename Ctx::value_type>& params) const {
    std::vector<typename Ctx::value_type> out;
    for (const auto& c : components) out.push_back(eval(c, params));
    return out;
  }
};

template <FieldContext Ctx>
RingPtr<Ctx> projective_ring(std::size_t ncoords, Ctx ctx = {}, const std::string& prefix = "x") {
  return make_ring<Ctx>(indexed_names(prefix, ncoords), ctx);
}

// 2x2 minors of a matrix of polynomials given by columns (each column has
// `rows` entries). Minors are taken over all row pairs and column pairs.
template <FieldContext Ctx>
std::vector<Polynomial<Ctx>> two_by_two_minors(const std::vector<std::vector<Polynomial<Ctx>>>& columns) {
  std::vector<Polynomial<Ctx>> out;
  if (columns.empty()) return out;
  const std::size_t rows = columns.front().size();
  for (std::size_t r1 = 0; r1 < rows; ++r1)
    for (std::size_t r2 = r1 + 1; r2 < rows; ++r2)
      for (std::size_t c1 = 0; c1 < columns.size(); ++c1)
        for (std::size_t c2 = c1 + 1; c2 < columns.size(); ++c2)
          out.push_back(columns[c1][r1] * columns[c2][r2] - columns[c2][r1] * columns[c1][r2]);
  return out;
}

template <FieldContext Ctx>
std::vector<std::vector<Polynomial<Ctx>>> scroll_matrix_columns(const ScrollSpec& spec, const RingPtr<Ctx>& ring) {
  auto x = [&](int i) { return Polynomial<Ctx>::variable(ring, static_cast<std::size_t>(i)); };
  std::vector<std::vector<Polynomial<Ctx>>> cols;
  for (int i = 0; i < spec.b; ++i) cols.push_back({x(i), x(i + 1)});
  for (int i = spec.b + 1; i <= spec.r(); ++i) cols.push_back({x(i), x(i + 1)});
  return cols;
}

template <FieldContext Ctx>
Ideal<Ctx> scroll_ideal(const ScrollSpec& spec, Ctx ctx = {}) {
  spec.validate();
  auto ring = projective_ring<Ctx>(spec.ambient_coords(), ctx);
  return Ideal<Ctx>(ring, two_by_two_minors(scroll_matrix_columns(spec, ring)));
}

// ((s:t),(u:v)) -> [u s^b, u s^{b-1} t, ..., u t^b | v s^a, ..., v t^a]
template <FieldContext Ctx>
PolynomialMap<Ctx> scroll_parametrization(const ScrollSpec& spec, Ctx ctx = {}) {
  spec.validate();
  auto src = make_ring<Ctx>({"s", "t", "u", "v"}, ctx);
  auto s = Polynomial<Ctx>::variable(src, 0), t = Polynomial<Ctx>::variable(src, 1);
  auto u = Polynomial<Ctx>::variable(src, 2), v = Polynomial<Ctx>::variable(src, 3);
  PolynomialMap<Ctx> map{src, {}, indexed_names("x", spec.ambient_coords())};
  for (int i = 0; i <= spec.b; ++i)
    map.components.push_back(u * s.pow(static_cast<unsigned>(spec.b - i)) * t.pow(static_cast<unsigned>(i)));
  for (int j = 0; j <= spec.a; ++j)
    map.components.push_back(v * s.pow(static_cast<unsigned>(spec.a - j)) * t.pow(static_cast<unsigned>(j)));
  return map;
}

// Scroll point in the affine chart s = u = 1 with parameters (t, v), over an
// arbitrary ring that contains the named variables.
template <FieldContext Ctx>
std::vector<Polynomial<Ctx>> scroll_chart_point(const ScrollSpec& spec, const RingPtr<Ctx>& ring,
                                                const std::string& tname, const std::string& vname) {
  auto t = Polynomial<Ctx>::variable(ring, tname);
  auto v = Polynomial<Ctx>::variable(ring, vname);
  std::vector<Polynomial<Ctx>> pt;
  for (int i = 0; i <= spec.b; ++i) pt.push_back(t.pow(static_cast<unsigned>(i)));
  for (int j = 0; j <= spec.a; ++j) pt.push_back(v * t.pow(static_cast<unsigned>(j)));
  return pt;
}

inline void check_rnc_degree(int d) {
  if (d < 2) throw std::invalid_argument("rational normal curve needs d >= 2 (got " + std::to_string(d) + ")");
}

template <FieldContext Ctx>
PolynomialMap<Ctx> rnc_parametrization(int d, Ctx ctx = {}) {
  check_rnc_degree(d);
  auto src = make_ring<Ctx>({"s", "t"}, ctx);
  auto s = Polynomial<Ctx>::variable(src, 0), t = Polynomial<Ctx>::variable(src, 1);
  PolynomialMap<Ctx> map{src, {}, indexed_names("x", static_cast<std::size_t>(d + 1))};
  for (int i = 0; i <= d; ++i)
    map.components.push_back(s.pow(static_cast<unsigned>(d - i)) * t.pow(static_cast<unsigned>(i)));
  return map;
}

template <FieldContext Ctx>
Ideal<Ctx> rnc_ideal(int d, Ctx ctx = {}) {
  check_rnc_degree(d);
  auto ring = projective_ring<Ctx>(static_cast<std::size_t>(d + 1), ctx);
  std::vector<std::vector<Polynomial<Ctx>>> cols;
  for (int i = 0; i < d; ++i)
    cols.push_back({Polynomial<Ctx>::variable(ring, static_cast<std::size_t>(i)),
                    Polynomial<Ctx>::variable(ring, static_cast<std::size_t>(i + 1))});
  return Ideal<Ctx>(ring, two_by_two_minors(cols));
}

template <FieldContext Ctx>
std::vector<Polynomial<Ctx>> rnc_chart_point(int d, const RingPtr<Ctx>& ring, const std::string& tname) {
  auto t = Polynomial<Ctx>::variable(ring, tname);
  std::vector<Polynomial<Ctx>> pt;
  for (int i = 0; i <= d; ++i) pt.push_back(t.pow(static_cast<unsigned>(i)));
  return pt;
}

// S_{1,r-1} in the coordinates (x0, x1, y0, ..., y_{r-1}) with matrix
//   x0 y0 ... y_{r-2}
//   x1 y1 ... y_{r-1}
// The line {y = 0} is the directrix of the scroll.
template <FieldContext Ctx>
struct SingularScroll {
  Ideal<Ctx> ideal;
  // position of each coordinate (x0, x1, y0, ...) in scroll_ideal(1, r-1)'s
  // coordinate list x0..x_{r+1}
  std::vector<std::size_t> to_scroll_coords;
};

inline void check_singular_r(int r) {
  if (r < 3) throw std::invalid_argument("needs r >= 3 (got " + std::to_string(r) + ")");
}

template <FieldContext Ctx>
RingPtr<Ctx> singular_scroll_ring(int r, Ctx ctx = {}) {
  std::vector<std::string> names{"x0", "x1"};
  for (auto& n : indexed_names("y", static_cast<std::size_t>(r))) names.push_back(n);
  return make_ring<Ctx>(names, ctx);
}

template <FieldContext Ctx>
SingularScroll<Ctx> singular_scroll_ideal(int r, Ctx ctx = {}) {
  check_singular_r(r);
  auto ring = singular_scroll_ring<Ctx>(r, ctx);
  auto var = [&](std::size_t i) { return Polynomial<Ctx>::variable(ring, i); };
  std::vector<std::vector<Polynomial<Ctx>>> cols{{var(0), var(1)}};
  for (int i = 0; i + 1 < r; ++i) cols.push_back({var(2 + static_cast<std::size_t>(i)), var(3 + static_cast<std::size_t>(i))});
  std::vector<std::size_t> perm;
  const std::size_t b = static_cast<std::size_t>(r - 1);
  perm.push_back(b + 1);
  perm.push_back(b + 2);
  for (std::size_t i = 0; i < static_cast<std::size_t>(r); ++i) perm.push_back(i);
  return {Ideal<Ctx>(ring, two_by_two_minors(cols)), perm};
}

}  // namespace scrollsec

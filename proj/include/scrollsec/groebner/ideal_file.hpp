#pragma once

// Ideal files: a header line "# vars: x0,x1,..." followed by one polynomial
// per line. Other lines starting with '#' and blank lines are ignored.

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "scrollsec/algebra/text.hpp"
#include "scrollsec/groebner/ideal.hpp"

namespace scrollsec {

template <FieldContext Ctx>
void write_ideal_file(std::ostream& os, const RingPtr<Ctx>& ring, const std::vector<Polynomial<Ctx>>& gens) {
  os << "# vars: ";
  for (std::size_t i = 0; i < ring->names.size(); ++i) os << (i ? "," : "") << ring->names[i];
  os << '\n';
  for (const auto& g : gens) os << format_polynomial(g) << '\n';
}

template <FieldContext Ctx>
void write_ideal_file(std::ostream& os, const Ideal<Ctx>& I) {
  write_ideal_file(os, I.ring(), I.generators());
}

namespace detail {

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace detail

template <FieldContext Ctx>
Ideal<Ctx> read_ideal_file(std::istream& is, Ctx ctx = {}) {
  std::string line;
  RingPtr<Ctx> ring;
  std::vector<Polynomial<Ctx>> gens;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto t = detail::trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      auto body = detail::trim(t.substr(1));
      if (!ring && body.rfind("vars:", 0) == 0) {
        std::vector<std::string> names;
        std::stringstream ss(body.substr(5));
        for (std::string n; std::getline(ss, n, ',');)
          if (auto v = detail::trim(n); !v.empty()) names.push_back(v);
        ring = make_ring<Ctx>(names, ctx);
      }
      continue;
    }
    if (!ring) throw std::invalid_argument("ideal file: polynomial before the '# vars:' header (line " + std::to_string(lineno) + ")");
    try {
      gens.push_back(parse_polynomial(t, ring));
    } catch (const ParseError& e) {
      throw ParseError("ideal file line " + std::to_string(lineno) + ": " + e.what(), e.offset());
    }
  }
  if (!ring) throw std::invalid_argument("ideal file: missing '# vars:' header");
  return Ideal<Ctx>(ring, gens);
}

}  // namespace scrollsec

#pragma once

// Polynomial text format:
//   poly   := term (('+'|'-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := ident ('^' uint)?
//   coeff  := int ('/' uint)?
// Whitespace is insignificant. A leading sign on the first term is accepted.

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "scrollsec/algebra/polynomial.hpp"

namespace scrollsec {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

namespace detail {

template <FieldContext Ctx>
class PolyParser {
 public:
  using F = typename Ctx::value_type;
  PolyParser(std::string_view text, RingPtr<Ctx> ring) : s_(text), ring_(std::move(ring)) {}

  Polynomial<Ctx> parse() {
    std::vector<Term<Ctx>> terms;
    skip();
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = get() == '-';
      skip();
    }
    terms.push_back(term(negative));
    for (;;) {
      skip();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') throw ParseError(std::string("unexpected '") + c + "'", pos_);
      get();
      skip();
      terms.push_back(term(c == '-'));
    }
    return Polynomial<Ctx>::from_terms(ring_, std::move(terms));
  }

 private:
  Term<Ctx> term(bool negative) {
    F coeff = ring_->ctx.from_int(1);
    Monomial mono(ring_->nvars());
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = number();
      need_factor = false;
    }
    bool first = true;
    for (;;) {
      skip();
      if (!first || !need_factor) {
        if (peek() != '*') break;
        get();
        skip();
      }
      first = false;
      factor(mono);
      need_factor = false;
    }
    if (negative) coeff = -coeff;
    return {coeff, mono};
  }

  F number() {
    mpz_class num = digits();
    mpz_class den = 1;
    skip();
    if (peek() == '/') {
      get();
      skip();
      std::size_t at = pos_;
      den = digits();
      if (den == 0) throw ParseError("zero denominator", at);
    }
    return ring_->ctx.from_rational(num, den);
  }

  mpz_class digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) get();
    if (start == pos_) throw ParseError("expected integer", pos_);
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  void factor(Monomial& mono) {
    std::size_t start = pos_;
    if (!std::isalpha(static_cast<unsigned char>(peek()))) throw ParseError("expected variable", pos_);
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') get();
    std::string name(s_.substr(start, pos_ - start));
    if (!ring_->has(name)) throw ParseError("unknown variable '" + name + "'", start);
    std::size_t var = ring_->index_of(name);
    unsigned e = 1;
    skip();
    if (peek() == '^') {
      get();
      skip();
      std::size_t at = pos_;
      mpz_class v = digits();
      if (v > ring_->exponent_cap) throw ParseError("exponent exceeds cap", at);
      e = static_cast<unsigned>(v.get_ui());
    }
    unsigned total = mono[var] + e;
    if (total > ring_->exponent_cap) throw ParseError("exponent exceeds cap", start);
    mono.set(var, total, ring_->exponent_cap);
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return s_[pos_++]; }

  std::string_view s_;
  RingPtr<Ctx> ring_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <FieldContext Ctx>
Polynomial<Ctx> parse_polynomial(std::string_view text, const RingPtr<Ctx>& ring) {
  return detail::PolyParser<Ctx>(text, ring).parse();
}

template <FieldContext Ctx>
std::string format_monomial(const Monomial& m, const Ring<Ctx>& ring) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.names[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

template <FieldContext Ctx>
std::string format_polynomial(const Polynomial<Ctx>& f) {
  if (f.is_zero()) return "0";
  const auto& ring = *f.ring();
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    auto c = t.coeff;
    bool neg = coefficient_negative(c);
    if (neg) c = -c;
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mono = format_monomial(t.mono, ring);
    if (mono.empty()) {
      out += coefficient_text(c);
    } else if (c.is_one()) {
      out += mono;
    } else {
      out += coefficient_text(c) + "*" + mono;
    }
  }
  return out;
}

}  // namespace scrollsec

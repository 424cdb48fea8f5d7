#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace scrollsec {

inline constexpr std::size_t kMaxVars = 32;
inline constexpr unsigned kDefaultExponentCap = 64;

class ExponentOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dense exponent vector. One byte per variable, stored in four 64-bit words
// so that divisibility and products are word operations. Exponents stay
// below 128, which keeps per-byte arithmetic carry free.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : n_(static_cast<std::uint8_t>(nvars)) {
    if (nvars > kMaxVars) throw std::invalid_argument("too many variables: " + std::to_string(nvars));
  }
  Monomial(std::span<const unsigned> exps, unsigned cap = kDefaultExponentCap) : Monomial(exps.size()) {
    for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i], cap);
  }
  Monomial(std::initializer_list<unsigned> exps) : Monomial(std::span<const unsigned>(exps.begin(), exps.size())) {}

  static Monomial variable(std::size_t nvars, std::size_t i, unsigned e = 1) {
    Monomial m(nvars);
    m.set(i, e);
    return m;
  }

  std::size_t size() const { return n_; }
  unsigned degree() const { return deg_; }
  unsigned operator[](std::size_t i) const { return bytes()[i]; }

  void set(std::size_t i, unsigned e, unsigned cap = kDefaultExponentCap) {
    if (i >= n_) throw std::out_of_range("variable index out of range");
    if (e > cap) throw ExponentOverflow("exponent " + std::to_string(e) + " exceeds cap " + std::to_string(cap));
    deg_ = static_cast<std::uint16_t>(deg_ - bytes()[i] + e);
    bytes()[i] = static_cast<std::uint8_t>(e);
  }

  std::vector<unsigned> exponents() const {
    std::vector<unsigned> out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = bytes()[i];
    return out;
  }

  bool is_one() const { return deg_ == 0; }

  // this | other
  bool divides(const Monomial& other) const {
    constexpr std::uint64_t H = 0x8080808080808080ull;
    for (std::size_t w = 0; w < words_.size(); ++w)
      if ((((other.words_[w] | H) - words_[w]) & H) != H) return false;
    return true;
  }

  Monomial times(const Monomial& o, unsigned cap = kDefaultExponentCap) const {
    check_len(o);
    Monomial r(n_);
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] = words_[w] + o.words_[w];
    r.deg_ = static_cast<std::uint16_t>(deg_ + o.deg_);
    r.check_cap(cap);
    return r;
  }

  // Requires o | this.
  Monomial divided_by(const Monomial& o) const {
    check_len(o);
    if (!o.divides(*this)) throw std::invalid_argument("monomial division is not exact");
    Monomial r(n_);
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] = words_[w] - o.words_[w];
    r.deg_ = static_cast<std::uint16_t>(deg_ - o.deg_);
    return r;
  }

  Monomial lcm(const Monomial& o) const {
    check_len(o);
    Monomial r(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      unsigned e = std::max(bytes()[i], o.bytes()[i]);
      r.bytes()[i] = static_cast<std::uint8_t>(e);
      r.deg_ = static_cast<std::uint16_t>(r.deg_ + e);
    }
    return r;
  }

  Monomial gcd(const Monomial& o) const {
    check_len(o);
    Monomial r(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      unsigned e = std::min(bytes()[i], o.bytes()[i]);
      r.bytes()[i] = static_cast<std::uint8_t>(e);
      r.deg_ = static_cast<std::uint16_t>(r.deg_ + e);
    }
    return r;
  }

  bool coprime(const Monomial& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (nonzero_bytes(words_[w]) & nonzero_bytes(o.words_[w])) return false;
    return true;
  }

  // high bit of each byte set iff that byte (an exponent <= 127) is nonzero
  static std::uint64_t nonzero_bytes(std::uint64_t x) {
    constexpr std::uint64_t L = 0x7f7f7f7f7f7f7f7full;
    return (((x & L) + L) | x) & ~L;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.n_ == b.n_ && a.words_ == b.words_; }

  std::size_t hash() const {
    std::size_t h = n_;
    for (auto w : words_) h = h * 0x9E3779B97F4A7C15ull ^ (w + (h >> 7));
    return h;
  }

  void check_len(const Monomial& o) const {
    if (o.n_ != n_)
      throw std::invalid_argument("monomial length mismatch: " + std::to_string(n_) + " vs " + std::to_string(o.n_));
  }

 private:
  void check_cap(unsigned cap) const {
    for (std::size_t i = 0; i < n_; ++i)
      if (bytes()[i] > cap)
        throw ExponentOverflow("exponent " + std::to_string(bytes()[i]) + " exceeds cap " + std::to_string(cap));
  }
  std::uint8_t* bytes() { return reinterpret_cast<std::uint8_t*>(words_.data()); }
  const std::uint8_t* bytes() const { return reinterpret_cast<const std::uint8_t*>(words_.data()); }

  std::array<std::uint64_t, kMaxVars / 8> words_{};
  std::uint16_t deg_ = 0;
  std::uint8_t n_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Lex, graded reverse lex, or a two-block elimination order (grevlex on the
// first `block` variables, ties broken by grevlex on the rest).
struct MonomialOrder {
  enum class Kind { Lex, GrevLex, Block };
  Kind kind = Kind::GrevLex;
  std::size_t block = 0;

  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder grevlex() { return {Kind::GrevLex, 0}; }
  static MonomialOrder block_order(std::size_t k) { return {Kind::Block, k}; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

  std::string name() const {
    switch (kind) {
      case Kind::Lex: return "lex";
      case Kind::GrevLex: return "grevlex";
      case Kind::Block: return "block(" + std::to_string(block) + ")";
    }
    return "?";
  }
};

namespace detail {

inline int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  unsigned da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace detail

// Three-way comparison: negative when a < b.
inline int compare_monomials(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
  a.check_len(b);
  switch (ord.kind) {
    case MonomialOrder::Kind::Lex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case MonomialOrder::Kind::GrevLex: {
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
      return 0;
    }
    case MonomialOrder::Kind::Block: {
      std::size_t k = std::min(ord.block, a.size());
      if (int c = detail::grevlex_range(a, b, 0, k)) return c;
      return detail::grevlex_range(a, b, k, a.size());
    }
  }
  return 0;
}

}  // namespace scrollsec

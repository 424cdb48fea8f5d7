#pragma once

// Exact coefficient fields: word-size prime fields and the rationals.
//
// Each field type comes with a small context object that knows how to build
// constants (the prime for ModInt, nothing for Rational). Polynomial rings
// carry the context so constants such as 1 can be produced without a sample
// element at hand.

#include <array>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <gmpxx.h>

namespace scrollsec {

class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Three 31-bit primes used for all heavy computations. Products of two
// reduced values fit in 64 bits.
inline constexpr std::array<std::uint32_t, 3> kDefaultPrimes = {
    2147483647u, 2147483629u, 2147483587u};

inline bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Element of Z/pZ. The modulus travels with the value so that mixing two
// different prime fields is detected instead of silently producing garbage.
class ModInt {
 public:
  ModInt() = default;
  ModInt(std::int64_t v, std::uint32_t p) : p_(p) {
    if (p < 2) throw ArithmeticError("modulus must be at least 2");
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  friend ModInt operator+(ModInt a, ModInt b) {
    check(a, b);
    std::uint64_t s = std::uint64_t(a.v_) + b.v_;
    if (s >= a.p_) s -= a.p_;
    return raw(static_cast<std::uint32_t>(s), a.p_);
  }
  friend ModInt operator-(ModInt a, ModInt b) {
    check(a, b);
    std::uint32_t d = a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + (a.p_ - b.v_);
    return raw(d, a.p_);
  }
  friend ModInt operator*(ModInt a, ModInt b) {
    check(a, b);
    return raw(static_cast<std::uint32_t>(std::uint64_t(a.v_) * b.v_ % a.p_), a.p_);
  }
  friend ModInt operator/(ModInt a, ModInt b) { return a * b.inverse(); }
  ModInt operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
  ModInt& operator+=(ModInt o) { return *this = *this + o; }
  ModInt& operator-=(ModInt o) { return *this = *this - o; }
  ModInt& operator*=(ModInt o) { return *this = *this * o; }
  ModInt& operator/=(ModInt o) { return *this = *this / o; }

  friend bool operator==(ModInt a, ModInt b) { return a.p_ == b.p_ && a.v_ == b.v_; }

  ModInt inverse() const {
    if (v_ == 0) throw ArithmeticError("division by zero in Z/" + std::to_string(p_));
    // extended Euclid on signed 64-bit values
    std::int64_t a = v_, m = p_, x0 = 1, x1 = 0;
    while (m != 0) {
      std::int64_t q = a / m;
      std::int64_t t = a - q * m;
      a = m;
      m = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    if (a != 1) throw ArithmeticError("element not invertible: modulus is not prime");
    return ModInt(x0, p_);
  }

  ModInt pow(std::uint64_t e) const {
    ModInt r = raw(1 % p_, p_), b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, ModInt a) { return os << a.v_; }

 private:
  static ModInt raw(std::uint32_t v, std::uint32_t p) {
    ModInt r;
    r.v_ = v;
    r.p_ = p;
    return r;
  }
  static void check(ModInt a, ModInt b) {
    if (a.p_ != b.p_) throw ArithmeticError("mixed moduli: " + std::to_string(a.p_) + " vs " + std::to_string(b.p_));
  }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 2;
};

// Rational number in lowest terms with positive denominator (GMP keeps the
// canonical form after every operation).
class Rational {
 public:
  Rational() = default;
  explicit Rational(std::int64_t n) : q_(static_cast<long>(n)) {}
  Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
    if (den == 0) throw ArithmeticError("zero denominator");
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  const mpq_class& get() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw ArithmeticError("division by zero in Q");
    return Rational(mpq_class(a.q_ / b.q_));
  }
  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }

  Rational inverse() const { return Rational(1) / *this; }

  std::string to_string() const { return q_.get_str(); }
  friend std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.q_.get_str(); }

 private:
  mpq_class q_{0};
};

// Field contexts ----------------------------------------------------------

struct ModContext {
  std::uint32_t prime = kDefaultPrimes[0];

  using value_type = ModInt;
  ModInt from_int(std::int64_t v) const { return ModInt(v, prime); }
  ModInt from_rational(const mpz_class& num, const mpz_class& den) const {
    auto reduce = [this](const mpz_class& z) {
      mpz_class r = z % prime;
      if (r < 0) r += prime;
      return ModInt(static_cast<std::int64_t>(r.get_ui()), prime);
    };
    ModInt d = reduce(den);
    if (d.is_zero()) throw ArithmeticError("denominator vanishes modulo " + std::to_string(prime));
    return reduce(num) / d;
  }
  std::uint64_t characteristic() const { return prime; }
  // Uniform element from a 64-bit random word.
  ModInt from_random(std::uint64_t word) const { return ModInt(static_cast<std::int64_t>(word % prime), prime); }
  std::string name() const { return std::to_string(prime); }
  friend bool operator==(const ModContext&, const ModContext&) = default;
};

struct RationalContext {
  using value_type = Rational;
  Rational from_int(std::int64_t v) const { return Rational(v); }
  Rational from_rational(const mpz_class& num, const mpz_class& den) const { return Rational(num, den); }
  std::uint64_t characteristic() const { return 0; }
  // Small signed integers keep rational computations readable.
  Rational from_random(std::uint64_t word) const { return Rational(static_cast<std::int64_t>(word % 201) - 100); }
  std::string name() const { return "Q"; }
  friend bool operator==(const RationalContext&, const RationalContext&) = default;
};

template <class Ctx>
concept FieldContext = requires(const Ctx& c, std::int64_t v) {
  typename Ctx::value_type;
  { c.from_int(v) } -> std::same_as<typename Ctx::value_type>;
  { c.characteristic() } -> std::convertible_to<std::uint64_t>;
};

// Prime-field values print as their representative in [0, p).
inline std::string coefficient_text(ModInt a) { return std::to_string(a.value()); }
inline std::string coefficient_text(const Rational& a) { return a.to_string(); }

inline bool coefficient_negative(ModInt) { return false; }
inline bool coefficient_negative(const Rational& a) { return sgn(a.get()) < 0; }

}  // namespace scrollsec

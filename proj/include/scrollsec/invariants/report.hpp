#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "scrollsec/algebra/scalar.hpp"

namespace scrollsec {

// Which field a verification ran over: a prime, or the rationals.
struct FieldChoice {
  std::optional<std::uint32_t> prime;  // nullopt = Q

  static FieldChoice rationals() { return {}; }
  static FieldChoice modulo(std::uint32_t p) { return {p}; }
  bool is_rational() const { return !prime.has_value(); }
};

struct VerificationReport {
  VerificationReport() = default;
  VerificationReport(std::string id, nlohmann::ordered_json p) : claim_id(std::move(id)), params(std::move(p)) {}

  std::string claim_id;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::vector<std::int64_t> computed;
  std::vector<std::int64_t> expected;
  bool match = false;
  std::uint64_t seed = 0;
  FieldChoice field;
  std::int64_t elapsed_ms = 0;

  void settle() { match = computed == expected; }

  nlohmann::ordered_json to_json(bool timing = true) const {
    nlohmann::ordered_json j;
    j["claim"] = claim_id;
    j["params"] = params;
    j["computed"] = computed;
    j["expected"] = expected;
    j["match"] = match;
    j["seed"] = seed;
    if (field.prime)
      j["prime"] = *field.prime;
    else
      j["prime"] = "Q";
    j["elapsed_ms"] = timing ? elapsed_ms : 0;
    return j;
  }
};

// Randomly chosen slices were not generic after all retries.
class NonGenericSlice : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline std::int64_t secant_degree_formula(std::int64_t r) { return 3 * r * r - 8 * r + 6; }

inline std::uint32_t checked_prime(std::uint32_t p) {
  if (!is_prime_u32(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  return p;
}

}  // namespace scrollsec

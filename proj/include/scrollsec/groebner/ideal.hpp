#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "scrollsec/algebra/polynomial.hpp"

namespace scrollsec {

// Raised when a computation would exceed its configured S-pair budget. The
// answer is unknown at this scale; nothing is truncated silently.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotZeroDimensional : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotHomogeneous : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kDefaultPairBudget = 200000;

// Generators over a shared ring. Zero generators are dropped on construction.
template <FieldContext Ctx>
class Ideal {
 public:
  Ideal(RingPtr<Ctx> ring, std::vector<Polynomial<Ctx>> gens) : ring_(std::move(ring)) {
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      if (!(*g.ring() == *ring_)) throw RingMismatch("ideal generator from a different ring");
      gens_.push_back(std::move(g));
    }
    if (gens_.empty()) throw std::invalid_argument("ideal needs at least one nonzero generator");
  }

  const RingPtr<Ctx>& ring() const { return ring_; }
  const std::vector<Polynomial<Ctx>>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  bool is_homogeneous() const {
    for (const auto& g : gens_)
      if (!g.is_homogeneous()) return false;
    return true;
  }

 private:
  RingPtr<Ctx> ring_;
  std::vector<Polynomial<Ctx>> gens_;
};

}  // namespace scrollsec

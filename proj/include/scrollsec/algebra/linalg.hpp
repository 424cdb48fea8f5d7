#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "scrollsec/algebra/scalar.hpp"

namespace scrollsec {

// Dense row-major matrix over an exact field.
template <FieldContext Ctx>
class Matrix {
 public:
  using F = typename Ctx::value_type;

  Matrix(Ctx ctx, std::size_t rows, std::size_t cols)
      : ctx_(ctx), rows_(rows), cols_(cols), a_(rows * cols, ctx.from_int(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Ctx& context() const { return ctx_; }
  F& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  void append_row(const std::vector<F>& row) {
    if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
  }

  // Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> row_reduce() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && (*this)(p, c).is_zero()) ++p;
      if (p == rows_) continue;
      if (p != r)
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
      F inv = (*this)(r, c).inverse();
      for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || (*this)(i, c).is_zero()) continue;
        F f = (*this)(i, c);
        for (std::size_t j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const {
    Matrix m = *this;
    return m.row_reduce().size();
  }

  // Basis of {x : A x = 0}.
  std::vector<std::vector<F>> kernel() const {
    Matrix m = *this;
    auto pivots = m.row_reduce();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<F> v(cols_, ctx_.from_int(0));
      v[free] = ctx_.from_int(1);
      for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m(k, free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  Ctx ctx_;
  std::size_t rows_, cols_;
  std::vector<F> a_;
};

// Incremental echelon basis: feed vectors one at a time and learn whether
// each is dependent on the previous ones, together with the dependency.
template <FieldContext Ctx>
class IncrementalEchelon {
 public:
  using F = typename Ctx::value_type;
  explicit IncrementalEchelon(Ctx ctx, std::size_t dim) : ctx_(ctx), dim_(dim) {}

  // nullopt when v is independent (and is stored). Otherwise the
  // coefficients c_0..c_{k-1} with v = sum c_i * v_i over the vectors
  // stored so far.
  std::optional<std::vector<F>> insert(std::vector<F> v) {
    std::size_t k = count_;
    std::vector<F> combo(k + 1, ctx_.from_int(0));
    combo[k] = ctx_.from_int(1);  // tracks v as a combination of originals
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const auto& row = rows_[r];
      F f = v[pivot_[r]];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) v[j] -= f * row[j];
      for (std::size_t j = 0; j < combos_[r].size(); ++j) combo[j] -= f * combos_[r][j];
    }
    std::size_t p = 0;
    while (p < dim_ && v[p].is_zero()) ++p;
    if (p == dim_) {
      // 0 = combo . (v_0..v_{k-1}, v)  =>  v = -combo[0..k-1]
      std::vector<F> out(k);
      for (std::size_t j = 0; j < k; ++j) out[j] = -combo[j];
      return out;
    }
    F inv = v[p].inverse();
    for (auto& x : v) x *= inv;
    for (auto& x : combo) x *= inv;
    rows_.push_back(std::move(v));
    combos_.push_back(std::move(combo));
    pivot_.push_back(p);
    ++count_;
    return std::nullopt;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  Ctx ctx_;
  std::size_t dim_;
  std::size_t count_ = 0;
  std::vector<std::vector<F>> rows_;
  std::vector<std::vector<F>> combos_;
  std::vector<std::size_t> pivot_;
};

}  // namespace scrollsec

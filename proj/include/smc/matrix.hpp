#pragma once

#include <initializer_list>
#include <vector>

#include "smc/polynomial.hpp"

namespace smc {

// Rectangular matrix of polynomials over one ring. Row-major.
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, int rows, int cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("PolyMatrix: bad shape");
    entries_.assign(static_cast<std::size_t>(rows) * cols, Polynomial::zero(ring_));
  }

  static PolyMatrix identity(RingPtr ring, int n) {
    PolyMatrix m(std::move(ring), n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Polynomial::constant(m.ring_, 1);
    return m;
  }

  static PolyMatrix from_rows(const RingPtr& ring,
                              std::initializer_list<std::initializer_list<Polynomial>> rows) {
    int r = static_cast<int>(rows.size());
    int c = static_cast<int>(rows.begin()->size());
    PolyMatrix m(ring, r, c);
    int i = 0;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != c)
        throw std::invalid_argument("PolyMatrix: ragged rows");
      int j = 0;
      for (const auto& p : row) {
        require_same_ring(ring, p.ring(), "PolyMatrix");
        m.at(i, j++) = p;
      }
      ++i;
    }
    return m;
  }

  static PolyMatrix column(const RingPtr& ring, const std::vector<Polynomial>& entries) {
    PolyMatrix m(ring, static_cast<int>(entries.size()), 1);
    for (std::size_t i = 0; i < entries.size(); ++i) {
      require_same_ring(ring, entries[i].ring(), "PolyMatrix");
      m.at(static_cast<int>(i), 0) = entries[i];
    }
    return m;
  }

  const RingPtr& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Polynomial& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Polynomial& at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    require_same_ring(a.ring_, b.ring_, "matrix_mul");
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix_mul: shape mismatch");
    PolyMatrix out(a.ring_, a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const Polynomial& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) {
          if (b.at(k, j).is_zero()) continue;
          out.at(i, j) = out.at(i, j) + aik * b.at(k, j);
        }
      }
    return out;
  }

  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
    require_same_ring(a.ring_, b.ring_, "matrix_add");
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("matrix_add: shape mismatch");
    PolyMatrix out(a.ring_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
      out.entries_[i] = a.entries_[i] + b.entries_[i];
    return out;
  }

  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
    require_same_ring(a.ring_, b.ring_, "matrix_sub");
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("matrix_sub: shape mismatch");
    PolyMatrix out(a.ring_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
      out.entries_[i] = a.entries_[i] - b.entries_[i];
    return out;
  }

  PolyMatrix power(int n) const {
    if (rows_ != cols_) throw std::invalid_argument("matrix_power: not square");
    if (n < 0) throw std::invalid_argument("matrix_power: negative exponent");
    PolyMatrix result = identity(ring_, rows_);
    for (int k = 0; k < n; ++k) result = result * *this;
    return result;
  }

  Polynomial trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace: not square");
    Polynomial t = Polynomial::zero(ring_);
    for (int i = 0; i < rows_; ++i) t = t + at(i, i);
    return t;
  }

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  RingPtr ring_;
  int rows_, cols_;
  std::vector<Polynomial> entries_;
};

}  // namespace smc

#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "circnet/error.hpp"
#include "circnet/rational.hpp"

namespace circnet {

/// Dense matrix of exact rationals, row-major, 0-based indexing.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rat>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) fail(ErrorKind::Internal, "ragged initializer");
      for (const auto& v : row) data_.push_back(v);
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool operator==(const RatMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }

  bool has_zero_diagonal() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      if (sign(at(i, i)) != 0) return false;
    return true;
  }

  Rat row_sum(std::size_t r) const {
    Rat s = 0;
    for (std::size_t c = 0; c < cols_; ++c) s += at(r, c);
    return s;
  }

  RatMatrix transposed() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  std::vector<Rat> multiply(const std::vector<Rat>& x) const {
    if (x.size() != cols_) fail(ErrorKind::Internal, "dimension mismatch in multiply");
    std::vector<Rat> y(rows_, Rat(0));
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) y[r] += at(r, c) * x[c];
    return y;
  }

  RatMatrix multiply(const RatMatrix& other) const {
    if (cols_ != other.rows_) fail(ErrorKind::Internal, "dimension mismatch in multiply");
    RatMatrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rat& a = at(r, k);
        if (sign(a) == 0) continue;
        for (std::size_t c = 0; c < other.cols_; ++c) out.at(r, c) += a * other.at(k, c);
      }
    return out;
  }

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rat> data_;
};

}  // namespace circnet

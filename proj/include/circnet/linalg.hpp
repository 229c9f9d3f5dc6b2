#pragma once

#include <cstddef>
#include <vector>

#include "circnet/matrix.hpp"

namespace circnet {

/// Exact rank via fraction-free (Bareiss) elimination on the integer matrix
/// obtained by clearing denominators row by row.
std::size_t exact_rank(const RatMatrix& m);

/// Exact determinant of a square matrix (Bareiss on the cleared matrix,
/// divided back by the row scaling).
Rat exact_determinant(const RatMatrix& m);

/// Solves A X = B exactly by Gauss-Jordan elimination; A must be square and
/// nonsingular (throws Internal otherwise).
RatMatrix solve_linear(const RatMatrix& a, const RatMatrix& b);

/// Incremental exact column-space basis, used for span membership tests.
class SpanBasis {
 public:
  explicit SpanBasis(std::size_t dimension) : dimension_(dimension) {}

  /// Reduces `v` against the basis and inserts the residual if nonzero.
  void add(const std::vector<Rat>& v);

  /// True iff `v` lies in the span of the vectors added so far.
  bool contains(const std::vector<Rat>& v) const;

  std::size_t rank() const { return rows_.size(); }

 private:
  std::vector<Rat> reduce(std::vector<Rat> v) const;

  std::size_t dimension_;
  std::vector<std::vector<Rat>> rows_;  // echelon vectors, pivot normalized to 1
  std::vector<std::size_t> pivots_;
};

}  // namespace circnet

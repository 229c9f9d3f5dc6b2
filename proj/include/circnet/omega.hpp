#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "circnet/matrix.hpp"

namespace circnet {

/// Cyclic second differences m_ij = -(1/2)(D[i,j] + D[i+1,j+1] - D[i,j+1] -
/// D[i+1,j]), all indices mod n. Rows and columns sum to zero identically.
class SecondDifferenceMatrix {
 public:
  explicit SecondDifferenceMatrix(RatMatrix entries) : entries_(std::move(entries)) {}
  const RatMatrix& entries() const { return entries_; }
  std::size_t size() const { return entries_.rows(); }

 private:
  RatMatrix entries_;
};

SecondDifferenceMatrix second_differences(const RatMatrix& d);

/// The n x 2n matrix mixing the incidence pattern (odd columns) with the
/// signed second differences (even columns):
///   entry(i, 2j)   = (-1)^{i+j} m_ij
///   entry(i, 2i-1) = 1,  entry(i, 2i+1) = 1       for i < n
///   entry(n, 2n-1) = 1,  entry(n, 1)    = (-1)^n
/// This is the unique sign choice for which the alternating row dependency
/// sum_i (-1)^i row_i = 0 holds identically.
class OmegaMatrix {
 public:
  const RatMatrix& entries() const { return entries_; }
  std::size_t n() const { return entries_.rows(); }

  /// Escape hatch for diagnostics and error-path tests; bypasses the
  /// structural construction.
  static OmegaMatrix from_raw(RatMatrix entries);

 private:
  friend OmegaMatrix omega_matrix(const RatMatrix& d);
  explicit OmegaMatrix(RatMatrix entries) : entries_(std::move(entries)) {}

  RatMatrix entries_;
};

OmegaMatrix omega_matrix(const RatMatrix& d);

/// Exact row-space dimension (fraction-free elimination).
std::size_t row_space_rank(const OmegaMatrix& omega);

/// Column subsets are encoded as bitmasks: bit c-1 set <=> column c chosen.
using ColumnMask = std::uint32_t;

std::vector<int> mask_to_columns(ColumnMask mask);

/// All Pluecker coordinates of the point spanned by the rows: the
/// (n-1) x (n-1) minors of the matrix with its last row deleted, indexed by
/// column subsets in colexicographic order.
struct GrassmannPoint {
  std::size_t k;        // n - 1
  std::size_t ambient;  // 2n
  std::vector<std::pair<ColumnMask, Rat>> coordinates;

  const Rat& coordinate(ColumnMask mask) const;
};

/// Options shared by the minor-enumeration entry points. Enumeration is
/// embarrassingly parallel over column subsets; results are deterministic
/// for every thread count.
struct MinorOptions {
  int threads = 1;
  std::size_t max_n = 9;  // C(18,8) minors; raise deliberately for larger n
};

GrassmannPoint pluecker_coordinates(const OmegaMatrix& omega, const MinorOptions& options = {});

struct TnnVerdict {
  bool is_point = false;  // rank equals n-1
  bool non_negative = false;
  std::optional<std::pair<ColumnMask, ColumnMask>> mixed_sign_witness;
  std::size_t rank = 0;

  bool ok() const { return is_point && non_negative; }
};

/// Decides membership in the totally non-negative Grassmannian: rank must be
/// n-1 and all Pluecker coordinates must share a sign (normalized to +).
TnnVerdict is_tnn_point(const OmegaMatrix& omega, const MinorOptions& options = {});

/// Same verdict, reusing coordinates that were already enumerated.
TnnVerdict is_tnn_point(const OmegaMatrix& omega, const GrassmannPoint& point);

}  // namespace circnet

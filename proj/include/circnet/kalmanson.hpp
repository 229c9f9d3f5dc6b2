#pragma once

#include <optional>
#include <utility>

#include "circnet/matrix.hpp"
#include "circnet/omega.hpp"

namespace circnet {

/// Distance matrix labeled by a cyclic order 1..n: symmetric, zero diagonal,
/// non-negative entries (ohms). Triangle and Kalmanson properties are checked
/// by the verdict operations, not at construction.
class MetricMatrix {
 public:
  explicit MetricMatrix(RatMatrix entries);
  const RatMatrix& entries() const { return entries_; }
  std::size_t size() const { return entries_.rows(); }

 private:
  RatMatrix entries_;
};

struct TripleWitness {
  int i, j, k;  // d[i,j] > d[i,k] + d[j,k]
};

struct MetricVerdict {
  bool ok = false;
  std::optional<TripleWitness> witness;
};

/// Triangle inequality over all triples; first violation (lexicographic scan)
/// reported as witness.
MetricVerdict is_metric(const MetricMatrix& d);

struct QuadrupleWitness {
  int i1, i2, i3, i4;
  // Which non-crossing sum beat the crossing sum: 1 for d[i2,i3]+d[i1,i4],
  // 2 for d[i1,i2]+d[i3,i4].
  int side;
};

struct KalmansonVerdict {
  bool ok = false;
  std::optional<QuadrupleWitness> witness;
};

/// Kalmanson inequalities for every quadruple in the claimed circular order:
/// d[i1,i3] + d[i2,i4] >= max of both non-crossing sums.
KalmansonVerdict is_kalmanson(const MetricMatrix& d);

/// Coefficients of the circular split decomposition; identically the negated
/// second differences of the same input.
class SplitCoefficients {
 public:
  explicit SplitCoefficients(RatMatrix entries) : entries_(std::move(entries)) {}
  const RatMatrix& entries() const { return entries_; }

 private:
  RatMatrix entries_;
};

SplitCoefficients split_decomposition(const MetricMatrix& d);

/// Circular-planar response matrix test: symmetric, zero row sums,
/// non-positive off-diagonal, and (-1)^k det M(P;Q) >= 0 for every circular
/// pair (P;Q) of size k <= n/2.
bool is_circular_response_matrix(const RatMatrix& m);

/// Full planar-electrical characterization. `electrical` follows the
/// Grassmannian route (Kalmanson + totally non-negative + Delta_{2,4,...,2n-2}
/// nonzero); the split-decomposition route is recorded alongside as
/// `dual_response_valid` and the two may never disagree under the Kalmanson
/// premise.
struct CharacterizationReport {
  MetricVerdict metric;
  KalmansonVerdict kalmanson;
  TnnVerdict tnn;
  Rat delta_even;
  bool dual_response_valid = false;
  bool electrical = false;
};

CharacterizationReport characterize(const MetricMatrix& d, const MinorOptions& options = {});

/// The index set {2, 4, ..., 2n-2} of the distinguished coordinate.
ColumnMask even_coordinate_mask(std::size_t n);

}  // namespace circnet

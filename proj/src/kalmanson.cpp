#include "circnet/kalmanson.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "circnet/error.hpp"
#include "circnet/linalg.hpp"

namespace circnet {

MetricMatrix::MetricMatrix(RatMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() < 2)
    fail(ErrorKind::ValidationError, "metric matrix must be square of size >= 2");
  if (!entries_.is_symmetric()) fail(ErrorKind::NotSymmetric, "metric matrix must be symmetric");
  if (!entries_.has_zero_diagonal())
    fail(ErrorKind::NonzeroDiagonal, "metric matrix must have zero diagonal");
  for (std::size_t i = 0; i < entries_.rows(); ++i)
    for (std::size_t j = 0; j < entries_.cols(); ++j)
      if (sign(entries_.at(i, j)) < 0)
        fail(ErrorKind::ValidationError, "metric matrix entries must be non-negative");
}

MetricVerdict is_metric(const MetricMatrix& d) {
  const RatMatrix& m = d.entries();
  const int n = static_cast<int>(d.size());
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        const Rat& dij = m.at(static_cast<std::size_t>(i) - 1, static_cast<std::size_t>(j) - 1);
        const Rat& dik = m.at(static_cast<std::size_t>(i) - 1, static_cast<std::size_t>(k) - 1);
        const Rat& djk = m.at(static_cast<std::size_t>(j) - 1, static_cast<std::size_t>(k) - 1);
        if (sign(dik + djk - dij) < 0 || sign(dij + djk - dik) < 0 || sign(dij + dik - djk) < 0)
          return MetricVerdict{false, TripleWitness{i, j, k}};
      }
  return MetricVerdict{true, std::nullopt};
}

KalmansonVerdict is_kalmanson(const MetricMatrix& d) {
  const RatMatrix& m = d.entries();
  const int n = static_cast<int>(d.size());
  auto e = [&](int a, int b) -> const Rat& {
    return m.at(static_cast<std::size_t>(a) - 1, static_cast<std::size_t>(b) - 1);
  };
  for (int i1 = 1; i1 <= n; ++i1)
    for (int i2 = i1 + 1; i2 <= n; ++i2)
      for (int i3 = i2 + 1; i3 <= n; ++i3)
        for (int i4 = i3 + 1; i4 <= n; ++i4) {
          Rat crossing = e(i1, i3) + e(i2, i4);
          if (sign(crossing - e(i2, i3) - e(i1, i4)) < 0)
            return KalmansonVerdict{false, QuadrupleWitness{i1, i2, i3, i4, 1}};
          if (sign(crossing - e(i1, i2) - e(i3, i4)) < 0)
            return KalmansonVerdict{false, QuadrupleWitness{i1, i2, i3, i4, 2}};
        }
  return KalmansonVerdict{true, std::nullopt};
}

SplitCoefficients split_decomposition(const MetricMatrix& d) {
  const RatMatrix m = second_differences(d.entries()).entries();
  RatMatrix negated(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) negated.at(i, j) = -m.at(i, j);
  return SplitCoefficients(std::move(negated));
}

namespace {

// A circular pair (P;Q) of size k: a k-subset S read clockwise and a disjoint
// k-subset T read counterclockwise such that p_1..p_k, q_k..q_1 sit in
// circular order; equivalently S and T occupy disjoint arcs.
struct CircularPair {
  std::vector<int> p;  // 0-based row indices
  std::vector<int> q;  // 0-based column indices
};

// Builds the canonical (P;Q) when S and T are separable, otherwise nullopt.
std::optional<CircularPair> make_circular_pair(int n, std::uint32_t s_mask, std::uint32_t t_mask) {
  auto in = [](std::uint32_t mask, int pos) { return (mask >> pos) & 1u; };
  // Separable iff the marked positions split into one circular block of S and
  // one of T: count S->T transitions walking the circle; must be exactly 1.
  std::vector<int> marked;
  for (int i = 0; i < n; ++i)
    if (in(s_mask, i) || in(t_mask, i)) marked.push_back(i);
  int blocks = 0;
  const int m = static_cast<int>(marked.size());
  for (int idx = 0; idx < m; ++idx) {
    bool cur_s = in(s_mask, marked[static_cast<std::size_t>(idx)]);
    bool next_s = in(s_mask, marked[static_cast<std::size_t>((idx + 1) % m)]);
    if (cur_s && !next_s) ++blocks;
  }
  if (blocks != 1) return std::nullopt;

  // Start of the S block: the S element whose circular predecessor among the
  // marked positions belongs to T.
  int s_start = -1, t_start = -1;
  for (int idx = 0; idx < m; ++idx) {
    bool prev_s = in(s_mask, marked[static_cast<std::size_t>((idx + m - 1) % m)]);
    bool cur_s = in(s_mask, marked[static_cast<std::size_t>(idx)]);
    if (cur_s && !prev_s) s_start = idx;
    if (!cur_s && prev_s) t_start = idx;
  }
  CircularPair pair;
  for (int idx = s_start; in(s_mask, marked[static_cast<std::size_t>(idx % m)]); ++idx)
    pair.p.push_back(marked[static_cast<std::size_t>(idx % m)]);
  for (int idx = t_start; !in(s_mask, marked[static_cast<std::size_t>(idx % m)]); ++idx)
    pair.q.push_back(marked[static_cast<std::size_t>(idx % m)]);
  // Continuing clockwise past P we must meet q_k first, so Q is the reversed
  // clockwise order of T.
  std::reverse(pair.q.begin(), pair.q.end());
  return pair;
}

}  // namespace

bool is_circular_response_matrix(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0 || m.cols() != n) return false;
  if (!m.is_symmetric()) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (sign(m.row_sum(i)) != 0) return false;
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && sign(m.at(i, j)) > 0) return false;
  }

  const int ni = static_cast<int>(n);
  for (int k = 2; k <= ni / 2; ++k) {
    // Enumerate disjoint k-subsets; non-separable pairs are skipped inside.
    std::vector<std::uint32_t> subsets;
    for (std::uint32_t mask = 0; mask < (1u << ni); ++mask)
      if (std::popcount(mask) == k) subsets.push_back(mask);
    for (std::uint32_t s : subsets)
      for (std::uint32_t t : subsets) {
        if ((s & t) != 0) continue;
        auto pair = make_circular_pair(ni, s, t);
        if (!pair) continue;
        RatMatrix sub(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
        for (int r = 0; r < k; ++r)
          for (int c = 0; c < k; ++c)
            sub.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                m.at(static_cast<std::size_t>(pair->p[static_cast<std::size_t>(r)]),
                     static_cast<std::size_t>(pair->q[static_cast<std::size_t>(c)]));
        Rat det = exact_determinant(sub);
        if (k % 2 != 0) det = -det;
        if (sign(det) < 0) return false;
      }
  }
  return true;
}

ColumnMask even_coordinate_mask(std::size_t n) {
  ColumnMask mask = 0;
  for (std::size_t j = 1; j + 1 <= n; ++j) mask |= ColumnMask{1} << (2 * j - 1);
  return mask;
}

CharacterizationReport characterize(const MetricMatrix& d, const MinorOptions& options) {
  CharacterizationReport report;
  report.metric = is_metric(d);
  report.kalmanson = is_kalmanson(d);

  // Every sub-verdict is computed even after a failure; the report is a
  // diagnostic object, not a short-circuit.
  OmegaMatrix omega = omega_matrix(d.entries());
  const std::size_t rank = row_space_rank(omega);
  if (rank == d.size() - 1) {
    GrassmannPoint point = pluecker_coordinates(omega, options);
    report.tnn = is_tnn_point(omega, point);
    report.delta_even = point.coordinate(even_coordinate_mask(d.size()));
  } else {
    report.tnn.rank = rank;
    report.tnn.is_point = false;
    report.delta_even = 0;
  }

  const RatMatrix split = split_decomposition(d).entries();
  RatMatrix dual(split.rows(), split.cols());
  for (std::size_t i = 0; i < split.rows(); ++i)
    for (std::size_t j = 0; j < split.cols(); ++j) dual.at(i, j) = -split.at(i, j);
  report.dual_response_valid = is_circular_response_matrix(dual);

  report.electrical =
      report.kalmanson.ok && report.tnn.ok() && sign(report.delta_even) != 0;
  if (report.electrical && !report.dual_response_valid)
    fail(ErrorKind::Internal,
         "characterization routes disagree: electrical but dual response invalid");
  return report;
}

}  // namespace circnet

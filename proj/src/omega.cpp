#include "circnet/omega.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "circnet/error.hpp"
#include "circnet/linalg.hpp"

namespace circnet {

namespace {

void check_difference_input(const RatMatrix& d) {
  if (d.rows() != d.cols() || d.rows() < 2)
    fail(ErrorKind::ValidationError, "need a square matrix of size >= 2");
  if (!d.is_symmetric()) fail(ErrorKind::NotSymmetric, "input matrix must be symmetric");
  if (!d.has_zero_diagonal()) fail(ErrorKind::NonzeroDiagonal, "input matrix must have zero diagonal");
}

}  // namespace

SecondDifferenceMatrix second_differences(const RatMatrix& d) {
  check_difference_input(d);
  const std::size_t n = d.rows();
  auto wrap = [n](std::size_t i) { return i % n; };
  RatMatrix m(n, n);
  const Rat half = make_rat(1, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.at(i, j) = -half * (d.at(i, j) + d.at(wrap(i + 1), wrap(j + 1)) -
                            d.at(i, wrap(j + 1)) - d.at(wrap(i + 1), j));
  for (std::size_t i = 0; i < n; ++i) {
    Rat row = 0, col = 0;
    for (std::size_t j = 0; j < n; ++j) {
      row += m.at(i, j);
      col += m.at(j, i);
    }
    if (sign(row) != 0 || sign(col) != 0)
      fail(ErrorKind::Internal, "second differences must telescope to zero");
  }
  return SecondDifferenceMatrix(std::move(m));
}

OmegaMatrix omega_matrix(const RatMatrix& d) {
  const RatMatrix m = second_differences(d).entries();
  const std::size_t n = m.rows();
  RatMatrix omega(n, 2 * n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      Rat value = m.at(i - 1, j - 1);
      if ((i + j) % 2 != 0) value = -value;
      omega.at(i - 1, 2 * j - 1) = value;  // column 2j
    }
  for (std::size_t i = 1; i < n; ++i) {
    omega.at(i - 1, 2 * i - 2) = 1;  // column 2i-1
    omega.at(i - 1, 2 * i) = 1;      // column 2i+1
  }
  omega.at(n - 1, 2 * n - 2) = 1;                    // column 2n-1
  omega.at(n - 1, 0) = (n % 2 == 0) ? Rat(1) : Rat(-1);  // wraparound column 1
  return OmegaMatrix(std::move(omega));
}

OmegaMatrix OmegaMatrix::from_raw(RatMatrix entries) {
  if (entries.cols() != 2 * entries.rows() || entries.rows() < 2)
    fail(ErrorKind::ValidationError, "raw omega matrix must be n x 2n with n >= 2");
  return OmegaMatrix(std::move(entries));
}

std::size_t row_space_rank(const OmegaMatrix& omega) {
  return exact_rank(omega.entries());
}

std::vector<int> mask_to_columns(ColumnMask mask) {
  std::vector<int> cols;
  for (int c = 0; mask != 0; ++c, mask >>= 1)
    if (mask & 1u) cols.push_back(c + 1);
  return cols;
}

namespace {

std::vector<ColumnMask> subsets_colex(std::size_t universe, std::size_t k) {
  std::vector<ColumnMask> out;
  if (k == 0 || k > universe) return out;
  ColumnMask mask = (ColumnMask{1} << k) - 1;
  const ColumnMask limit = ColumnMask{1} << universe;
  while (mask < limit) {
    out.push_back(mask);
    // Gosper's hack: next mask with the same popcount; ascending mask order
    // is exactly colexicographic subset order.
    ColumnMask c = mask & static_cast<ColumnMask>(-static_cast<std::int64_t>(mask));
    ColumnMask r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  return out;
}

// One (n-1) x (n-1) integer minor; rows are pre-scaled so the rational value
// is the integer determinant divided by the fixed row-scale product.
Int integer_minor(const std::vector<std::vector<Int>>& rows, const std::vector<int>& cols,
                  std::vector<std::vector<Int>>& scratch) {
  const std::size_t k = cols.size();
  scratch.assign(k, std::vector<Int>(k));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c)
      scratch[r][c] = rows[r][static_cast<std::size_t>(cols[c] - 1)];

  Int prev = 1;
  int swap_sign = 1;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && sgn(scratch[pivot][col]) == 0) ++pivot;
    if (pivot == k) return Int(0);
    if (pivot != col) {
      std::swap(scratch[pivot], scratch[col]);
      swap_sign = -swap_sign;
    }
    for (std::size_t i = col + 1; i < k; ++i) {
      for (std::size_t j = col + 1; j < k; ++j) {
        Int t = scratch[i][j] * scratch[col][col] - scratch[i][col] * scratch[col][j];
        mpz_divexact(scratch[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      scratch[i][col] = 0;
    }
    prev = scratch[col][col];
  }
  return swap_sign > 0 ? prev : Int(-prev);
}

}  // namespace

const Rat& GrassmannPoint::coordinate(ColumnMask mask) const {
  auto it = std::lower_bound(coordinates.begin(), coordinates.end(), mask,
                             [](const auto& entry, ColumnMask m) { return entry.first < m; });
  if (it == coordinates.end() || it->first != mask)
    fail(ErrorKind::Internal, "unknown Pluecker index set");
  return it->second;
}

GrassmannPoint pluecker_coordinates(const OmegaMatrix& omega, const MinorOptions& options) {
  const std::size_t n = omega.n();
  if (n > options.max_n || 2 * n >= 32)  // column subsets live in 32-bit masks
    fail(ErrorKind::SizeLimitExceeded,
         "full Pluecker enumeration capped at n = " + std::to_string(std::min<std::size_t>(options.max_n, 15)));
  const std::size_t rank = row_space_rank(omega);
  if (rank != n - 1)
    fail(ErrorKind::RankMismatch,
         "omega matrix has rank " + std::to_string(rank) + ", expected " + std::to_string(n - 1));

  const std::size_t k = n - 1;
  const std::size_t ambient = 2 * n;

  // Clear denominators of the row-deleted matrix once; every minor divides by
  // the same row-scale product.
  RatMatrix deleted(k, ambient);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < ambient; ++c) deleted.at(r, c) = omega.entries().at(r, c);
  std::vector<std::vector<Int>> rows(k, std::vector<Int>(ambient));
  Int divisor = 1;
  for (std::size_t r = 0; r < k; ++r) {
    Int l = 1;
    for (std::size_t c = 0; c < ambient; ++c) {
      Int den = deleted.at(r, c).get_den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t c = 0; c < ambient; ++c) rows[r][c] = Rat(deleted.at(r, c) * Rat(l)).get_num();
    divisor *= l;
  }

  const std::vector<ColumnMask> masks = subsets_colex(ambient, k);
  std::vector<Rat> values(masks.size());

  auto compute_range = [&](std::size_t begin, std::size_t end) {
    std::vector<std::vector<Int>> scratch;
    for (std::size_t idx = begin; idx < end; ++idx) {
      Int det = integer_minor(rows, mask_to_columns(masks[idx]), scratch);
      Rat value(det, divisor);
      value.canonicalize();
      values[idx] = value;
    }
  };

  const int threads = std::max(1, options.threads);
  if (threads == 1 || masks.size() < 64) {
    compute_range(0, masks.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (masks.size() + static_cast<std::size_t>(threads) - 1) /
                              static_cast<std::size_t>(threads);
    for (int t = 0; t < threads; ++t) {
      std::size_t begin = static_cast<std::size_t>(t) * chunk;
      std::size_t end = std::min(masks.size(), begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(compute_range, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  GrassmannPoint point{k, ambient, {}};
  point.coordinates.reserve(masks.size());
  bool any_nonzero = false;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    any_nonzero = any_nonzero || sign(values[i]) != 0;
    point.coordinates.emplace_back(masks[i], std::move(values[i]));
  }
  if (!any_nonzero) fail(ErrorKind::Internal, "all Pluecker coordinates vanish at rank n-1");
  return point;
}

TnnVerdict is_tnn_point(const OmegaMatrix& omega, const MinorOptions& options) {
  TnnVerdict verdict;
  verdict.rank = row_space_rank(omega);
  verdict.is_point = verdict.rank == omega.n() - 1;
  if (!verdict.is_point) return verdict;
  return is_tnn_point(omega, pluecker_coordinates(omega, options));
}

TnnVerdict is_tnn_point(const OmegaMatrix& omega, const GrassmannPoint& point) {
  TnnVerdict verdict;
  verdict.rank = omega.n() - 1;  // pluecker_coordinates already enforced this
  verdict.is_point = true;
  std::optional<ColumnMask> first_positive;
  std::optional<ColumnMask> first_negative;
  for (const auto& [mask, value] : point.coordinates) {
    int s = sign(value);
    if (s > 0 && !first_positive) first_positive = mask;
    if (s < 0 && !first_negative) first_negative = mask;
  }
  if (first_positive && first_negative) {
    verdict.non_negative = false;
    verdict.mixed_sign_witness = std::make_pair(*first_positive, *first_negative);
  } else {
    // All non-zero coordinates share a sign; projectively this is the
    // non-negative point, so normalize to +.
    verdict.non_negative = true;
  }
  return verdict;
}

}  // namespace circnet

#include "circnet/linalg.hpp"

#include <utility>

namespace circnet {

namespace {

// Row-scaled integer copy: each row multiplied by the lcm of its denominators.
// Returns the scale factors so determinants can be mapped back.
std::vector<std::vector<Int>> clear_denominators(const RatMatrix& m, std::vector<Int>* scales) {
  std::vector<std::vector<Int>> out(m.rows(), std::vector<Int>(m.cols()));
  if (scales) scales->assign(m.rows(), Int(1));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Int l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Int den = m.at(r, c).get_den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Rat scaled = m.at(r, c) * Rat(l);
      out[r][c] = scaled.get_num();
    }
    if (scales) (*scales)[r] = l;
  }
  return out;
}

// Fraction-free elimination. Returns the rank; when `det` is non-null the
// matrix must be square and *det receives the determinant of the integer
// matrix (0 when rank-deficient).
std::size_t bareiss(std::vector<std::vector<Int>>& m, Int* det) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  Int prev = 1;
  int swap_sign = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      std::swap(m[pivot], m[rank]);
      swap_sign = -swap_sign;
    }
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        Int t = m[i][j] * m[rank][col] - m[i][col] * m[rank][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  if (det) {
    if (rank < rows)
      *det = 0;
    else
      *det = swap_sign > 0 ? prev : Int(-prev);
  }
  return rank;
}

}  // namespace

std::size_t exact_rank(const RatMatrix& m) {
  auto cleared = clear_denominators(m, nullptr);
  return bareiss(cleared, nullptr);
}

Rat exact_determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorKind::Internal, "determinant of non-square matrix");
  if (m.rows() == 0) return Rat(1);
  std::vector<Int> scales;
  auto cleared = clear_denominators(m, &scales);
  Int det;
  bareiss(cleared, &det);
  Int divisor = 1;
  for (const Int& s : scales) divisor *= s;
  Rat out(det, divisor);
  out.canonicalize();
  return out;
}

RatMatrix solve_linear(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != a.cols() || a.rows() != b.rows())
    fail(ErrorKind::Internal, "bad dimensions in solve_linear");
  const std::size_t n = a.rows();
  const std::size_t w = b.cols();
  RatMatrix aug(n, n + w);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = a.at(r, c);
    for (std::size_t c = 0; c < w; ++c) aug.at(r, n + c) = b.at(r, c);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sign(aug.at(pivot, col)) == 0) ++pivot;
    if (pivot == n) fail(ErrorKind::Internal, "singular system in solve_linear");
    if (pivot != col)
      for (std::size_t c = col; c < n + w; ++c) std::swap(aug.at(pivot, c), aug.at(col, c));
    Rat inv = 1 / aug.at(col, col);
    for (std::size_t c = col; c < n + w; ++c) aug.at(col, c) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sign(aug.at(r, col)) == 0) continue;
      Rat factor = aug.at(r, col);
      for (std::size_t c = col; c < n + w; ++c) aug.at(r, c) -= factor * aug.at(col, c);
    }
  }
  RatMatrix x(n, w);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < w; ++c) x.at(r, c) = aug.at(r, n + c);
  return x;
}

std::vector<Rat> SpanBasis::reduce(std::vector<Rat> v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rat& coeff = v[pivots_[k]];
    if (sign(coeff) == 0) continue;
    Rat f = coeff;  // basis rows have pivot value 1
    for (std::size_t j = 0; j < dimension_; ++j) v[j] -= f * rows_[k][j];
  }
  return v;
}

void SpanBasis::add(const std::vector<Rat>& v) {
  if (v.size() != dimension_) fail(ErrorKind::Internal, "dimension mismatch in SpanBasis");
  std::vector<Rat> r = reduce(v);
  std::size_t pivot = dimension_;
  for (std::size_t j = 0; j < dimension_; ++j)
    if (sign(r[j]) != 0) {
      pivot = j;
      break;
    }
  if (pivot == dimension_) return;
  Rat inv = 1 / r[pivot];
  for (std::size_t j = 0; j < dimension_; ++j) r[j] *= inv;
  // Keep every stored row fully reduced so membership is a single pass.
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Rat f = rows_[k][pivot];
    if (sign(f) == 0) continue;
    for (std::size_t j = 0; j < dimension_; ++j) rows_[k][j] -= f * r[j];
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(pivot);
}

bool SpanBasis::contains(const std::vector<Rat>& v) const {
  if (v.size() != dimension_) fail(ErrorKind::Internal, "dimension mismatch in SpanBasis");
  std::vector<Rat> r = reduce(v);
  for (const Rat& x : r)
    if (sign(x) != 0) return false;
  return true;
}

}  // namespace circnet

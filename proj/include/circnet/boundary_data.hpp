#pragma once

#include "circnet/matrix.hpp"
#include "circnet/network.hpp"

namespace circnet {

/// Boundary voltage -> boundary current map M_R (siemens). Symmetric, zero
/// row sums, non-negative diagonal; singular with kernel spanned by ones.
class ResponseMatrix {
 public:
  explicit ResponseMatrix(RatMatrix entries);
  const RatMatrix& entries() const { return entries_; }
  std::size_t size() const { return entries_.rows(); }

 private:
  RatMatrix entries_;
};

/// Effective resistances R_ij (ohms). Symmetric, zero diagonal, positive off
/// diagonal; satisfies the triangle inequality.
class ResistanceMatrix {
 public:
  explicit ResistanceMatrix(RatMatrix entries);
  const RatMatrix& entries() const { return entries_; }
  std::size_t size() const { return entries_.rows(); }

 private:
  RatMatrix entries_;
};

/// Unique voltages on all vertices agreeing with `u` on the boundary and
/// current-conserving at every inner node.
VoltageVector harmonic_extension(const CircularNetwork& net, const VoltageVector& u);

/// Schur complement of the weighted Laplacian onto the boundary block.
ResponseMatrix response_matrix(const CircularNetwork& net);

/// Solves M_R U = -e_i + e_j in the sum-zero gauge for every pair; R_ij is
/// the gauge-invariant |U_i - U_j|.
ResistanceMatrix effective_resistance_matrix(const CircularNetwork& net);

/// Currents I_k = sum_j w_kj (U(k) - U(j)) of the harmonic extension of `u`.
CurrentVector boundary_currents(const CircularNetwork& net, const VoltageVector& u);

/// Replaces a degree-3 inner star by the equivalent triangle
/// (w_ij = w_i w_j / (w_1 + w_2 + w_3)); the response matrix is unchanged.
CircularNetwork star_triangle(const CircularNetwork& net, VertexId center);

}  // namespace circnet

#pragma once

#include "circnet/boundary_data.hpp"
#include "circnet/network.hpp"

namespace circnet {

/// Effective resistances by direct enumeration: R_ij = F_ij / T, with T the
/// spanning-tree partition function and F_ij the partition function of
/// spanning 2-forests separating i from j. Exponential in |V|; refuses
/// networks above `vertex_cap`.
ResistanceMatrix resistance_via_matrix_tree(const CircularNetwork& net, int vertex_cap = 12);

}  // namespace circnet

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "circnet/matrix.hpp"
#include "circnet/network.hpp"

namespace circnet {

/// Network text format, line based:
///   n <boundary-count>
///   v <id> boundary|inner
///   e <id> <u> <v> <conductance>
///   rot <vertex> <edge-id>...
/// Rationals are written p/q in lowest terms (integers without /1); parsing
/// also accepts decimal literals. Serialization is canonical (vertices and
/// edges ascending), so parse-then-serialize is byte identical.
CircularNetwork parse_network(std::string_view text);
std::string serialize_network(const CircularNetwork& net);

/// Matrix text format: first line is n (or "rows cols" for rectangular
/// output), then the rows, whitespace separated.
RatMatrix parse_matrix(std::string_view text, bool require_symmetric = false);
std::string serialize_matrix(const RatMatrix& m);
std::string serialize_matrix_rect(const RatMatrix& m);

/// Disjoint cycle notation with ascending cycle minima: "(1 4)(2 5)(3 6)".
std::string format_cycles(const std::vector<int>& permutation);

}  // namespace circnet

#include "circnet/boundary_data.hpp"

#include <algorithm>
#include <string>

#include "circnet/error.hpp"
#include "circnet/linalg.hpp"

namespace circnet {

namespace {

void require_connected(const CircularNetwork& net) {
  if (!net.connected())
    fail(ErrorKind::DisconnectedNetwork, "operation requires a connected network");
}

// Weighted Laplacian over the positive-conductance subgraph. Self-loops drop
// out of every harmonic equation and are skipped.
RatMatrix laplacian(const CircularNetwork& net) {
  const std::size_t n = static_cast<std::size_t>(net.vertex_count());
  RatMatrix l(n, n);
  for (const Edge& e : net.edges()) {
    if (sign(e.conductance) <= 0 || e.u == e.v) continue;
    std::size_t a = static_cast<std::size_t>(e.u) - 1;
    std::size_t b = static_cast<std::size_t>(e.v) - 1;
    l.at(a, a) += e.conductance;
    l.at(b, b) += e.conductance;
    l.at(a, b) -= e.conductance;
    l.at(b, a) -= e.conductance;
  }
  return l;
}

}  // namespace

ResponseMatrix::ResponseMatrix(RatMatrix entries) : entries_(std::move(entries)) {
  const std::size_t n = entries_.rows();
  if (entries_.cols() != n) fail(ErrorKind::Internal, "response matrix must be square");
  if (!entries_.is_symmetric()) fail(ErrorKind::Internal, "response matrix must be symmetric");
  for (std::size_t i = 0; i < n; ++i) {
    if (sign(entries_.row_sum(i)) != 0)
      fail(ErrorKind::Internal, "response matrix rows must sum to zero");
    if (sign(entries_.at(i, i)) < 0)
      fail(ErrorKind::Internal, "response matrix diagonal must be non-negative");
  }
}

ResistanceMatrix::ResistanceMatrix(RatMatrix entries) : entries_(std::move(entries)) {
  const std::size_t n = entries_.rows();
  if (entries_.cols() != n) fail(ErrorKind::Internal, "resistance matrix must be square");
  if (!entries_.is_symmetric()) fail(ErrorKind::Internal, "resistance matrix must be symmetric");
  for (std::size_t i = 0; i < n; ++i) {
    if (sign(entries_.at(i, i)) != 0)
      fail(ErrorKind::Internal, "resistance matrix diagonal must be zero");
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && sign(entries_.at(i, j)) <= 0)
        fail(ErrorKind::Internal, "off-diagonal resistances must be positive");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (sign(entries_.at(i, k) + entries_.at(j, k) - entries_.at(i, j)) < 0)
          fail(ErrorKind::Internal, "triangle inequality violated in resistance matrix");
      }
}

VoltageVector harmonic_extension(const CircularNetwork& net, const VoltageVector& u) {
  require_connected(net);
  const std::size_t n = static_cast<std::size_t>(net.boundary_count());
  const std::size_t total = static_cast<std::size_t>(net.vertex_count());
  if (u.scope != VoltageScope::BoundaryOnly || u.values.size() != n)
    fail(ErrorKind::ValidationError, "expected a boundary-only voltage vector");

  VoltageVector full{VoltageScope::AllVertices, std::vector<Rat>(total)};
  for (std::size_t i = 0; i < n; ++i) full.values[i] = u.values[i];
  if (total == n) return full;

  const std::size_t inner = total - n;
  RatMatrix l = laplacian(net);
  RatMatrix c(inner, inner);
  RatMatrix rhs(inner, 1);
  for (std::size_t i = 0; i < inner; ++i) {
    for (std::size_t j = 0; j < inner; ++j) c.at(i, j) = l.at(n + i, n + j);
    Rat r = 0;
    for (std::size_t b = 0; b < n; ++b) r -= l.at(n + i, b) * u.values[b];
    rhs.at(i, 0) = r;
  }
  // The inner block is nonsingular for connected networks; solve_linear
  // throws Internal otherwise.
  RatMatrix x = solve_linear(c, rhs);
  for (std::size_t i = 0; i < inner; ++i) full.values[n + i] = x.at(i, 0);
  return full;
}

ResponseMatrix response_matrix(const CircularNetwork& net) {
  require_connected(net);
  const std::size_t n = static_cast<std::size_t>(net.boundary_count());
  const std::size_t total = static_cast<std::size_t>(net.vertex_count());
  RatMatrix l = laplacian(net);
  if (total == n) {
    RatMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a.at(i, j) = l.at(i, j);
    return ResponseMatrix(std::move(a));
  }
  const std::size_t inner = total - n;
  RatMatrix c(inner, inner);
  RatMatrix bt(inner, n);
  for (std::size_t i = 0; i < inner; ++i) {
    for (std::size_t j = 0; j < inner; ++j) c.at(i, j) = l.at(n + i, n + j);
    for (std::size_t j = 0; j < n; ++j) bt.at(i, j) = l.at(n + i, j);
  }
  RatMatrix y = solve_linear(c, bt);  // y = C^{-1} B^T
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rat s = l.at(i, j);
      for (std::size_t k = 0; k < inner; ++k) s -= l.at(i, n + k) * y.at(k, j);
      m.at(i, j) = s;
    }
  return ResponseMatrix(std::move(m));
}

ResistanceMatrix effective_resistance_matrix(const CircularNetwork& net) {
  require_connected(net);
  const std::size_t n = static_cast<std::size_t>(net.boundary_count());
  const RatMatrix m = response_matrix(net).entries();
  // M_R + J is nonsingular and (M_R + J) U = -e_i + e_j lands exactly in the
  // sum-zero gauge, so one inverse serves all pairs:
  // U^{(ij)} = X(-e_i + e_j) and R_ij = X_ii + X_jj - 2 X_ij.
  RatMatrix shifted(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) shifted.at(i, j) = m.at(i, j) + 1;
  RatMatrix x = solve_linear(shifted, RatMatrix::identity(n));
  RatMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Rat value = x.at(i, i) + x.at(j, j) - x.at(i, j) - x.at(j, i);
      r.at(i, j) = sign(value) < 0 ? Rat(-value) : value;
    }
  return ResistanceMatrix(std::move(r));
}

CurrentVector boundary_currents(const CircularNetwork& net, const VoltageVector& u) {
  const VoltageVector full = harmonic_extension(net, u);
  const std::size_t n = static_cast<std::size_t>(net.boundary_count());
  CurrentVector out{std::vector<Rat>(n)};
  for (const Edge& e : net.edges()) {
    if (sign(e.conductance) <= 0 || e.u == e.v) continue;
    Rat drop = e.conductance * (full.at(e.u) - full.at(e.v));
    if (net.is_boundary(e.u)) out.values[static_cast<std::size_t>(e.u) - 1] += drop;
    if (net.is_boundary(e.v)) out.values[static_cast<std::size_t>(e.v) - 1] -= drop;
  }
  Rat total = 0;
  for (const Rat& c : out.values) total += c;
  if (sign(total) != 0) fail(ErrorKind::Internal, "boundary currents do not sum to zero");
  return out;
}

CircularNetwork star_triangle(const CircularNetwork& net, VertexId center) {
  if (net.is_boundary(center) || center < 1 || center > net.vertex_count())
    fail(ErrorKind::NotEligible, "star-triangle center must be an inner vertex");

  std::vector<Edge> legs;
  for (const Edge& e : net.edges()) {
    if (e.u == center && e.v == center)
      fail(ErrorKind::NotEligible, "star-triangle center carries a self-loop");
    if (e.u == center || e.v == center) legs.push_back(e);
  }
  if (legs.size() != 3)
    fail(ErrorKind::NotEligible, "star-triangle center must have degree exactly 3");

  // Leg order follows the clockwise rotation when present, edge ids otherwise.
  auto rot_it = net.rotation().find(center);
  if (rot_it != net.rotation().end()) {
    std::vector<Edge> ordered;
    for (EdgeId id : rot_it->second) ordered.push_back(net.edge_by_id(id));
    legs = ordered;
  }

  Rat total = legs[0].conductance + legs[1].conductance + legs[2].conductance;
  if (sign(total) <= 0)
    fail(ErrorKind::NotEligible, "star-triangle legs must have positive total conductance");

  auto other_end = [&](const Edge& e) { return e.u == center ? e.v : e.u; };
  VertexId a = other_end(legs[0]);
  VertexId b = other_end(legs[1]);
  VertexId c = other_end(legs[2]);

  EdgeId next_id = 0;
  for (const Edge& e : net.edges()) next_id = std::max(next_id, e.id);
  Edge ab{next_id + 1, a, b, legs[0].conductance * legs[1].conductance / total};
  Edge bc{next_id + 2, b, c, legs[1].conductance * legs[2].conductance / total};
  Edge ca{next_id + 3, c, a, legs[2].conductance * legs[0].conductance / total};

  auto remap = [&](VertexId v) { return v > center ? v - 1 : v; };
  std::vector<Edge> edges;
  for (const Edge& e : net.edges()) {
    if (e.u == center || e.v == center) continue;
    edges.push_back(Edge{e.id, remap(e.u), remap(e.v), e.conductance});
  }
  for (Edge e : {ab, bc, ca}) {
    e.u = remap(e.u);
    e.v = remap(e.v);
    edges.push_back(e);
  }

  // Rotation repair: at each neighbor the removed leg end is replaced by the
  // ends of the two new edges, ordered [edge to clockwise-next leg, edge to
  // clockwise-previous leg] so the embedding stays planar.
  std::map<VertexId, std::vector<EdgeId>> rotation;
  struct Replacement {
    EdgeId leg;
    EdgeId first;
    EdgeId second;
  };
  std::vector<std::pair<VertexId, Replacement>> repairs = {
      {a, {legs[0].id, ab.id, ca.id}},
      {b, {legs[1].id, bc.id, ab.id}},
      {c, {legs[2].id, ca.id, bc.id}},
  };
  for (const auto& [v, order] : net.rotation()) {
    if (v == center) continue;
    std::vector<EdgeId> updated;
    for (EdgeId id : order) {
      bool replaced = false;
      for (const auto& [vertex, rep] : repairs) {
        if (vertex == v && rep.leg == id) {
          updated.push_back(rep.first);
          updated.push_back(rep.second);
          replaced = true;
          break;
        }
      }
      if (!replaced) updated.push_back(id);
    }
    rotation[remap(v)] = updated;
  }

  return CircularNetwork(net.boundary_count(), net.vertex_count() - 1, std::move(edges),
                         std::move(rotation));
}

}  // namespace circnet

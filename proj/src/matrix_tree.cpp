#include "circnet/matrix_tree.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "circnet/error.hpp"

namespace circnet {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

ResistanceMatrix resistance_via_matrix_tree(const CircularNetwork& net, int vertex_cap) {
  if (!net.connected())
    fail(ErrorKind::DisconnectedNetwork, "matrix-tree enumeration requires a connected network");
  const int total = net.vertex_count();
  if (total > vertex_cap)
    fail(ErrorKind::SizeLimitExceeded,
         "matrix-tree enumeration capped at " + std::to_string(vertex_cap) + " vertices");

  std::vector<Edge> edges;
  for (const Edge& e : net.edges())
    if (sign(e.conductance) > 0 && e.u != e.v) edges.push_back(e);
  const int m = static_cast<int>(edges.size());
  const std::size_t n = static_cast<std::size_t>(net.boundary_count());

  Rat tree_sum = 0;
  RatMatrix forest_sums(n, n);

  // One pass over each subset size: k = |V|-1 for spanning trees, k = |V|-2
  // for 2-forests (acyclic subsets of that size have exactly two components).
  auto enumerate = [&](int k, auto&& visit) {
    if (k > m) return;
    std::vector<int> pick(static_cast<std::size_t>(k));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      visit(pick);
      int i = k - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - k + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  };

  enumerate(total - 1, [&](const std::vector<int>& pick) {
    UnionFind uf(total);
    Rat product = 1;
    for (int idx : pick) {
      const Edge& e = edges[static_cast<std::size_t>(idx)];
      if (!uf.unite(e.u - 1, e.v - 1)) return;  // cycle
      product *= e.conductance;
    }
    tree_sum += product;
  });

  enumerate(total - 2, [&](const std::vector<int>& pick) {
    UnionFind uf(total);
    Rat product = 1;
    for (int idx : pick) {
      const Edge& e = edges[static_cast<std::size_t>(idx)];
      if (!uf.unite(e.u - 1, e.v - 1)) return;
      product *= e.conductance;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (uf.find(static_cast<int>(i)) != uf.find(static_cast<int>(j))) {
          forest_sums.at(i, j) += product;
          forest_sums.at(j, i) += product;
        }
  });

  if (sign(tree_sum) <= 0)
    fail(ErrorKind::Internal, "connected network has no spanning tree weight");

  RatMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) r.at(i, j) = forest_sums.at(i, j) / tree_sum;
  return ResistanceMatrix(std::move(r));
}

}  // namespace circnet

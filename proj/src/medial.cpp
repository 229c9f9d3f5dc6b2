#include "circnet/medial.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "circnet/error.hpp"

// Strand tracing works on a dart/port model of the medial graph. Each
// positive edge has two darts (its ends); each dart has a minus and a plus
// port, one per corner it bounds at its vertex. A corner between
// clockwise-consecutive darts (a, b) is a medial edge joining a's plus port
// to b's minus port. Crossing an edge straight through maps the entry port
// (dart, sigma) to the exit port (other dart, sigma). Boundary vertices get
// two virtual flanking darts whose "midpoints" are the strand endpoints: the
// clockwise fan at boundary vertex i is [endpoint 2i, real darts..., endpoint
// 2i-1], and the outside corner between the two endpoints is not a medial
// edge. These conventions are pinned by the star and single-edge fixtures.

namespace circnet {

namespace {

struct MedialModel {
  // Positive edges in deterministic order; dart = 2*index + end.
  std::vector<const Edge*> edges;
  std::map<EdgeId, int> edge_pos;
  // link[x] = partner medial node of port/endpoint x; ports occupy
  // [0, 4E), endpoint p lives at 4E + p - 1.
  std::vector<int> link;
  int port_count = 0;

  int endpoint_node(int p) const { return port_count + p - 1; }
  bool is_endpoint(int node) const { return node >= port_count; }
};

MedialModel build_model(const CircularNetwork& net) {
  if (!net.connected())
    fail(ErrorKind::DisconnectedNetwork, "medial operations require a connected network");
  const int n = net.boundary_count();

  MedialModel model;
  for (const Edge& e : net.edges())
    if (sign(e.conductance) > 0) {
      model.edge_pos[e.id] = static_cast<int>(model.edges.size());
      model.edges.push_back(&e);
    }
  model.port_count = 4 * static_cast<int>(model.edges.size());
  model.link.assign(static_cast<std::size_t>(model.port_count) + 2 * static_cast<std::size_t>(n), -1);

  // Clockwise dart fans per vertex (zero-conductance edges dropped, relative
  // order preserved).
  std::vector<std::vector<int>> fan(static_cast<std::size_t>(net.vertex_count()) + 1);
  std::vector<int> loop_seen(net.edges().size() + 1, 0);
  for (int v = 1; v <= net.vertex_count(); ++v) {
    auto it = net.rotation().find(v);
    if (it != net.rotation().end()) {
      std::map<EdgeId, int> uses;
      for (EdgeId id : it->second) {
        const Edge& e = net.edge_by_id(id);
        if (sign(e.conductance) <= 0) continue;
        int pos = model.edge_pos.at(id);
        int end;
        if (e.u == e.v)
          end = uses[id]++;  // self-loop: first occurrence is end 0
        else
          end = e.u == v ? 0 : 1;
        fan[static_cast<std::size_t>(v)].push_back(2 * pos + end);
      }
    } else {
      std::vector<int> darts;
      for (std::size_t i = 0; i < model.edges.size(); ++i) {
        const Edge& e = *model.edges[i];
        if (e.u == v) darts.push_back(2 * static_cast<int>(i));
        if (e.v == v) darts.push_back(2 * static_cast<int>(i) + 1);
      }
      const std::size_t degree = darts.size();
      bool ambiguous = net.is_boundary(v) ? degree >= 2 : degree >= 3;
      if (ambiguous)
        fail(ErrorKind::MissingRotation,
             "vertex " + std::to_string(v) + " needs an explicit rotation");
      fan[static_cast<std::size_t>(v)] = darts;
    }
  }

  auto connect = [&](int x, int y) {
    if (model.link[static_cast<std::size_t>(x)] != -1 || model.link[static_cast<std::size_t>(y)] != -1)
      fail(ErrorKind::Internal, "medial port linked twice");
    model.link[static_cast<std::size_t>(x)] = y;
    model.link[static_cast<std::size_t>(y)] = x;
  };
  auto plus_port = [](int dart) { return 2 * dart + 1; };
  auto minus_port = [](int dart) { return 2 * dart; };

  for (int v = 1; v <= net.vertex_count(); ++v) {
    const std::vector<int>& darts = fan[static_cast<std::size_t>(v)];
    const std::size_t m = darts.size();
    if (net.is_boundary(v)) {
      const int after = model.endpoint_node(2 * v);       // flank after v
      const int before = model.endpoint_node(2 * v - 1);  // flank before v
      if (m == 0) {
        connect(after, before);
        continue;
      }
      connect(after, minus_port(darts[0]));
      for (std::size_t i = 0; i + 1 < m; ++i) connect(plus_port(darts[i]), minus_port(darts[i + 1]));
      connect(plus_port(darts[m - 1]), before);
    } else {
      for (std::size_t i = 0; i < m; ++i)
        connect(plus_port(darts[i]), minus_port(darts[(i + 1) % m]));
    }
  }

  for (std::size_t i = 0; i < model.link.size(); ++i)
    if (model.link[i] == -1) fail(ErrorKind::Internal, "unlinked medial port");
  return model;
}

}  // namespace

MedialTrace medial_trace(const CircularNetwork& net) {
  MedialModel model = build_model(net);
  const int n = net.boundary_count();
  const std::size_t edge_count = model.edges.size();

  MedialTrace trace;
  trace.boundary_count = n;

  // owners[edge][sigma]: which strand (>=0) or loop (recorded later) consumed
  // the passage of that sign.
  std::vector<std::array<int, 2>> owners(edge_count, {-1, -1});

  std::vector<bool> endpoint_done(2 * static_cast<std::size_t>(n), false);
  for (int p = 1; p <= 2 * n; ++p) {
    if (endpoint_done[static_cast<std::size_t>(p) - 1]) continue;
    endpoint_done[static_cast<std::size_t>(p) - 1] = true;
    StrandRecord strand{p, -1, {}};
    const int index = static_cast<int>(trace.strands.size());
    int cur = model.link[static_cast<std::size_t>(model.endpoint_node(p))];
    while (!model.is_endpoint(cur)) {
      const int dart = cur / 2;
      const int sigma = cur % 2;
      const int edge = dart / 2;
      strand.crossings.push_back(model.edges[static_cast<std::size_t>(edge)]->id);
      if (owners[static_cast<std::size_t>(edge)][sigma] != -1)
        fail(ErrorKind::Internal, "strand passage consumed twice");
      owners[static_cast<std::size_t>(edge)][sigma] = index;
      const int exit_dart = dart ^ 1;  // straight through: same sigma, other end
      cur = model.link[static_cast<std::size_t>(2 * exit_dart + sigma)];
    }
    strand.end_endpoint = cur - model.port_count + 1;
    endpoint_done[static_cast<std::size_t>(strand.end_endpoint) - 1] = true;
    trace.strands.push_back(std::move(strand));
  }

  // Passages not reached from the boundary belong to closed strands.
  const int open_count = static_cast<int>(trace.strands.size());
  for (std::size_t e = 0; e < edge_count; ++e)
    for (int sigma = 0; sigma < 2; ++sigma) {
      if (owners[e][sigma] != -1) continue;
      const int loop_owner = open_count + static_cast<int>(trace.closed_loops.size());
      std::vector<EdgeId> loop;
      int dart = 2 * static_cast<int>(e);
      int sig = sigma;
      do {
        const int cur_edge = dart / 2;
        loop.push_back(model.edges[static_cast<std::size_t>(cur_edge)]->id);
        if (owners[static_cast<std::size_t>(cur_edge)][sig] != -1)
          fail(ErrorKind::Internal, "closed loop passage consumed twice");
        owners[static_cast<std::size_t>(cur_edge)][sig] = loop_owner;
        const int next = model.link[static_cast<std::size_t>(2 * (dart ^ 1) + sig)];
        if (model.is_endpoint(next)) fail(ErrorKind::Internal, "closed loop reached the boundary");
        dart = next / 2;
        sig = next % 2;
      } while (dart != 2 * static_cast<int>(e) || sig != sigma);
      trace.closed_loops.push_back(std::move(loop));
    }

  for (std::size_t e = 0; e < edge_count; ++e) {
    int a = owners[e][0];
    int b = owners[e][1];
    if (a > b) std::swap(a, b);
    trace.crossings_between[{a, b}].push_back(model.edges[e]->id);
  }
  return trace;
}

StrandPermutation strand_permutation(const CircularNetwork& net) {
  const MedialTrace trace = medial_trace(net);
  const int n = trace.boundary_count;
  StrandPermutation tau{n, std::vector<int>(2 * static_cast<std::size_t>(n), 0)};
  for (const StrandRecord& s : trace.strands) {
    tau.pairing[static_cast<std::size_t>(s.start_endpoint) - 1] = s.end_endpoint;
    tau.pairing[static_cast<std::size_t>(s.end_endpoint) - 1] = s.start_endpoint;
  }
  for (int p = 1; p <= 2 * n; ++p) {
    const int q = tau.apply(p);
    if (q == 0 || q == p || tau.apply(q) != p)
      fail(ErrorKind::Internal, "strand pairing is not a fixed-point-free involution");
  }
  return tau;
}

MinimalityReport is_minimal(const CircularNetwork& net) {
  const MedialTrace trace = medial_trace(net);
  MinimalityReport report;
  const int open_count = static_cast<int>(trace.strands.size());
  for (const auto& [pair, edges] : trace.crossings_between) {
    const auto& [a, b] = pair;
    if (a == b && a < open_count)
      report.defects.push_back(Defect{DefectKind::SelfIntersection, a, a, edges});
    else if (a != b && b < open_count && edges.size() >= 2)
      report.defects.push_back(Defect{DefectKind::DoubleCrossing, a, b, edges});
  }
  for (std::size_t i = 0; i < trace.closed_loops.size(); ++i)
    report.defects.push_back(Defect{DefectKind::ClosedLoop, open_count + static_cast<int>(i), -1,
                                    trace.closed_loops[i]});
  report.minimal = report.defects.empty();
  return report;
}

}  // namespace circnet

#include "circnet/reconstruction.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "circnet/error.hpp"
#include "circnet/linalg.hpp"

namespace circnet {

RankPattern column_rank_pattern(const OmegaMatrix& omega) {
  const std::size_t n = omega.n();
  const std::size_t width = 2 * n;
  const std::size_t rank = row_space_rank(omega);
  if (rank != n - 1)
    fail(ErrorKind::RankMismatch,
         "omega matrix has rank " + std::to_string(rank) + ", expected " + std::to_string(n - 1));

  std::vector<std::vector<Rat>> columns(width, std::vector<Rat>(n));
  for (std::size_t c = 0; c < width; ++c) {
    bool zero = true;
    for (std::size_t r = 0; r < n; ++r) {
      columns[c][r] = omega.entries().at(r, c);
      zero = zero && sign(columns[c][r]) == 0;
    }
    if (zero)
      fail(ErrorKind::ZeroColumn, "column " + std::to_string(c + 1) + " of omega is zero");
  }

  RankPattern pattern{static_cast<int>(n), std::vector<int>(width, 0)};
  for (std::size_t i = 0; i < width; ++i) {
    SpanBasis basis(n);
    bool found = false;
    for (std::size_t step = 1; step < width; ++step) {
      const std::size_t j = (i + step) % width;
      basis.add(columns[j]);
      if (basis.contains(columns[i])) {
        pattern.g[i] = static_cast<int>(j) + 1;
        found = true;
        break;
      }
    }
    if (!found)
      fail(ErrorKind::ValidationError,
           "column " + std::to_string(i + 1) + " is outside the span of the others");
  }

  std::set<int> image(pattern.g.begin(), pattern.g.end());
  if (image.size() != width)
    fail(ErrorKind::ValidationError, "column rank pattern is not a bijection");
  return pattern;
}

StrandPermutation tau_from_resistance(const MetricMatrix& r) {
  const OmegaMatrix omega = omega_matrix(r.entries());
  const RankPattern g = column_rank_pattern(omega);
  const int width = 2 * g.n;

  StrandPermutation tau{g.n, std::vector<int>(static_cast<std::size_t>(width), 0)};
  for (int i = 1; i <= width; ++i) {
    int image = g.apply(i) + 1;
    if (image > width) image -= width;
    tau.pairing[static_cast<std::size_t>(i) - 1] = image;
  }
  for (int i = 1; i <= width; ++i) {
    const int j = tau.apply(i);
    if (j == i || tau.apply(j) != i)
      fail(ErrorKind::NotInvolution,
           "g + 1 is not a fixed-point-free involution; the input is not realizable "
           "by a minimal circular network");
  }
  return tau;
}

namespace {

void check_involution(const StrandPermutation& tau) {
  const int width = 2 * tau.n;
  if (tau.n < 2 || static_cast<int>(tau.pairing.size()) != width)
    fail(ErrorKind::NotInvolution, "pairing must cover 2n endpoints with n >= 2");
  for (int i = 1; i <= width; ++i) {
    const int j = tau.apply(i);
    if (j < 1 || j > width || j == i || tau.apply(j) != i)
      fail(ErrorKind::NotInvolution, "pairing is not a fixed-point-free involution");
  }
}

struct Point {
  Rat x;
  Rat y;
};

// Exact rational points on the unit circle in clockwise cyclic order, via the
// tangent half-angle parametrization. The jitter must vary per point: a
// shared shift of all parameters is a projective map of the circle and would
// preserve any concurrence of three chords.
std::vector<Point> circle_points(int count, int attempt) {
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (int k = 1; k <= count; ++k) {
    const long jitter = ((17L * k + 13) * (attempt + 1) * 7919L) % 997;
    Rat t = Rat(-k) - Rat(jitter) / Rat(2 * 997);
    Rat t2 = t * t;
    Rat den = 1 + t2;
    pts.push_back(Point{(1 - t2) / den, 2 * t / den});
  }
  return pts;
}

bool chords_interleave(std::pair<int, int> c1, std::pair<int, int> c2) {
  auto between = [](int lo, int hi, int x) { return lo < x && x < hi; };
  return between(c1.first, c1.second, c2.first) != between(c1.first, c1.second, c2.second);
}

}  // namespace

ChordDiagram chord_diagram(const StrandPermutation& tau) {
  check_involution(tau);
  ChordDiagram diagram;
  diagram.n = tau.n;
  const int width = 2 * tau.n;
  for (int p = 1; p <= width; ++p)
    if (p < tau.apply(p)) diagram.chords.emplace_back(p, tau.apply(p));

  const std::size_t chord_count = diagram.chords.size();
  std::vector<std::vector<std::size_t>> partners(chord_count);
  for (std::size_t i = 0; i < chord_count; ++i)
    for (std::size_t j = i + 1; j < chord_count; ++j)
      if (chords_interleave(diagram.chords[i], diagram.chords[j])) {
        partners[i].push_back(j);
        partners[j].push_back(i);
      }

  // Crossing order along each chord from a straight-line drawing with exact
  // rational endpoints. The attempt loop reseeds the points in the rare case
  // of a concurrent triple of chords.
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Point> pts = circle_points(width, attempt);
    auto at = [&](int p) -> const Point& { return pts[static_cast<std::size_t>(p) - 1]; };

    bool degenerate = false;
    std::vector<std::vector<std::pair<Rat, std::size_t>>> ordered(chord_count);
    for (std::size_t i = 0; i < chord_count && !degenerate; ++i) {
      const auto [a, b] = diagram.chords[i];
      Rat dx = at(b).x - at(a).x;
      Rat dy = at(b).y - at(a).y;
      for (std::size_t j : partners[i]) {
        const auto [c, d] = diagram.chords[j];
        Rat ex = at(d).x - at(c).x;
        Rat ey = at(d).y - at(c).y;
        Rat denom = dx * ey - dy * ex;
        if (sign(denom) == 0) fail(ErrorKind::Internal, "interleaving chords are parallel");
        Rat s = ((at(c).x - at(a).x) * ey - (at(c).y - at(a).y) * ex) / denom;
        ordered[i].emplace_back(s, j);
      }
      std::sort(ordered[i].begin(), ordered[i].end());
      for (std::size_t k = 0; k + 1 < ordered[i].size(); ++k)
        if (ordered[i][k].first == ordered[i][k + 1].first) degenerate = true;
    }
    if (degenerate) continue;

    // Crossing ids in deterministic discovery order.
    std::vector<std::vector<int>> crossing_id(chord_count, std::vector<int>(chord_count, -1));
    diagram.order_along.assign(chord_count, {});
    for (std::size_t i = 0; i < chord_count; ++i)
      for (const auto& [s, j] : ordered[i])
        if (crossing_id[i][j] == -1) {
          int id = static_cast<int>(diagram.crossings.size());
          crossing_id[i][j] = crossing_id[j][i] = id;
          diagram.crossings.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    for (std::size_t i = 0; i < chord_count; ++i)
      for (const auto& [s, j] : ordered[i])
        diagram.order_along[i].push_back(crossing_id[i][j]);
    return diagram;
  }
  fail(ErrorKind::Internal, "no non-degenerate chord embedding found");
}

namespace {

// Planar arrangement of a chord diagram inside the boundary circle:
// endpoints and crossings are nodes, boundary arcs and chord segments are
// edges, rotations are clockwise. Faces come from the standard orbit rule
// (clockwise-next after the twin), which traces bounded faces
// counterclockwise and the outer face as the clockwise circle.
struct Arrangement {
  int width = 0;  // endpoint count 2n
  std::vector<std::pair<int, int>> edges;  // node pairs; ids 2e/2e+1 are halves
  std::vector<std::vector<int>> rotation;  // leaving half-edges, clockwise
  std::vector<int> face_of;                // per half-edge
  std::vector<std::vector<int>> faces;     // orbit half-edge lists
  int outer_face = -1;

  int head(int h) const {
    const auto& [a, b] = edges[static_cast<std::size_t>(h / 2)];
    return h % 2 == 0 ? b : a;
  }
};

Arrangement build_arrangement(const ChordDiagram& diagram) {
  Arrangement arr;
  arr.width = 2 * diagram.n;
  const int width = arr.width;
  const int crossing_count = static_cast<int>(diagram.crossings.size());
  auto endpoint_node = [](int p) { return p - 1; };
  auto crossing_node = [width](int c) { return width + c; };
  const int node_count = width + crossing_count;

  // Boundary arcs first: arc k joins endpoints k and k+1 (cyclically).
  for (int k = 1; k <= width; ++k)
    arr.edges.emplace_back(endpoint_node(k), endpoint_node(k % width + 1));

  // Chord segments; remember the path and segment ids per chord.
  const std::size_t chord_count = diagram.chords.size();
  std::vector<std::vector<int>> path(chord_count), segs(chord_count);
  for (std::size_t i = 0; i < chord_count; ++i) {
    const auto [a, b] = diagram.chords[i];
    path[i].push_back(endpoint_node(a));
    for (int c : diagram.order_along[i]) path[i].push_back(crossing_node(c));
    path[i].push_back(endpoint_node(b));
    for (std::size_t k = 0; k + 1 < path[i].size(); ++k) {
      segs[i].push_back(static_cast<int>(arr.edges.size()));
      arr.edges.emplace_back(path[i][k], path[i][k + 1]);
    }
  }

  // Half-edge leaving `node` along chord i toward its lower (a) or upper (b)
  // endpoint.
  auto leaving = [&](std::size_t chord, int node, bool toward_upper) {
    const auto& p = path[chord];
    std::size_t idx = 0;
    while (p[idx] != node) ++idx;
    if (toward_upper) return 2 * segs[chord][idx];
    return 2 * segs[chord][idx - 1] + 1;
  };

  arr.rotation.assign(static_cast<std::size_t>(node_count), {});
  // Endpoint p: clockwise fan [arc toward p+1, chord segment, arc toward p-1].
  std::vector<std::size_t> chord_at(static_cast<std::size_t>(width) + 1);
  for (std::size_t i = 0; i < chord_count; ++i) {
    chord_at[static_cast<std::size_t>(diagram.chords[i].first)] = i;
    chord_at[static_cast<std::size_t>(diagram.chords[i].second)] = i;
  }
  for (int p = 1; p <= width; ++p) {
    const std::size_t chord = chord_at[static_cast<std::size_t>(p)];
    const bool is_lower = diagram.chords[chord].first == p;
    arr.rotation[static_cast<std::size_t>(endpoint_node(p))] = {
        2 * (p - 1),                                     // arc toward p+1
        leaving(chord, endpoint_node(p), is_lower),      // into the disk
        2 * ((p + width - 2) % width) + 1,               // arc toward p-1
    };
  }
  // Crossing of chords C = (a, b) and D: with the circle read clockwise the
  // four endpoints appear as a, c, b, d where c is D's endpoint inside the
  // arc (a, b); the clockwise rotation is [toward a, toward c, toward b,
  // toward d].
  for (int c = 0; c < crossing_count; ++c) {
    const auto [ci, di] = diagram.crossings[static_cast<std::size_t>(c)];
    const auto [a, b] = diagram.chords[static_cast<std::size_t>(ci)];
    const auto [d_lo, d_hi] = diagram.chords[static_cast<std::size_t>(di)];
    const bool lo_inside = a < d_lo && d_lo < b;
    const int node = crossing_node(c);
    arr.rotation[static_cast<std::size_t>(node)] = {
        leaving(static_cast<std::size_t>(ci), node, false),       // toward a
        leaving(static_cast<std::size_t>(di), node, !lo_inside),  // toward c
        leaving(static_cast<std::size_t>(ci), node, true),        // toward b
        leaving(static_cast<std::size_t>(di), node, lo_inside),   // toward d
    };
  }

  // Face orbits: next(h) is the rotation successor of twin(h) at head(h).
  const std::size_t half_count = 2 * arr.edges.size();
  std::vector<std::pair<int, int>> half_pos(half_count);  // node, index
  for (int v = 0; v < node_count; ++v)
    for (std::size_t k = 0; k < arr.rotation[static_cast<std::size_t>(v)].size(); ++k)
      half_pos[static_cast<std::size_t>(arr.rotation[static_cast<std::size_t>(v)][k])] = {
          v, static_cast<int>(k)};
  auto next_half = [&](int h) {
    const int twin = h ^ 1;
    const auto& [node, idx] = half_pos[static_cast<std::size_t>(twin)];
    const auto& rot = arr.rotation[static_cast<std::size_t>(node)];
    return rot[(static_cast<std::size_t>(idx) + 1) % rot.size()];
  };

  arr.face_of.assign(half_count, -1);
  for (std::size_t h0 = 0; h0 < half_count; ++h0) {
    if (arr.face_of[h0] != -1) continue;
    const int face = static_cast<int>(arr.faces.size());
    std::vector<int> orbit;
    int h = static_cast<int>(h0);
    do {
      arr.face_of[static_cast<std::size_t>(h)] = face;
      orbit.push_back(h);
      h = next_half(h);
    } while (h != static_cast<int>(h0));
    arr.faces.push_back(std::move(orbit));
  }
  arr.outer_face = arr.face_of[0];  // forward arc endpoint 1 -> 2

  const long long v_count = node_count;
  const long long e_count = static_cast<long long>(arr.edges.size());
  const long long f_count = static_cast<long long>(arr.faces.size());
  if (v_count - e_count + f_count != 2)
    fail(ErrorKind::Internal, "arrangement violates the Euler formula");
  return arr;
}

}  // namespace

CircularNetwork network_from_tau(const StrandPermutation& tau) {
  const ChordDiagram diagram = chord_diagram(tau);
  const Arrangement arr = build_arrangement(diagram);
  const int n = diagram.n;
  const int width = 2 * n;
  const int crossing_count = static_cast<int>(diagram.crossings.size());

  // Two-color the bounded faces: adjacent across a chord segment differ.
  // Anchored so the face inside the arc (1, 2) is vertex-colored; the
  // alternation around the circle then puts every arc (2i-1, 2i) face on the
  // vertex side.
  std::vector<int> color(arr.faces.size(), -1);
  const int anchor = arr.face_of[2 * 0 + 1];
  color[static_cast<std::size_t>(anchor)] = 1;
  std::vector<int> queue{anchor};
  while (!queue.empty()) {
    const int face = queue.back();
    queue.pop_back();
    for (int h : arr.faces[static_cast<std::size_t>(face)]) {
      if (h / 2 < width) continue;  // boundary arcs impose no constraint
      const int other = arr.face_of[static_cast<std::size_t>(h ^ 1)];
      if (other == arr.outer_face) fail(ErrorKind::Internal, "chord segment borders the outer face");
      const int want = 1 - color[static_cast<std::size_t>(face)];
      if (color[static_cast<std::size_t>(other)] == -1) {
        color[static_cast<std::size_t>(other)] = want;
        queue.push_back(other);
      } else if (color[static_cast<std::size_t>(other)] != want) {
        fail(ErrorKind::Internal, "face two-coloring is inconsistent");
      }
    }
  }

  std::vector<int> boundary_face(static_cast<std::size_t>(n) + 1, -1);
  for (int i = 1; i <= n; ++i) {
    const int inner_half = 2 * (2 * i - 2) + 1;  // arc (2i-1, 2i), disk side
    const int face = arr.face_of[static_cast<std::size_t>(inner_half)];
    if (color[static_cast<std::size_t>(face)] != 1)
      fail(ErrorKind::Internal, "vertex arc landed on a face-colored region");
    boundary_face[static_cast<std::size_t>(i)] = face;
    const int gap_half = 2 * (2 * i - 1) + 1;  // arc (2i, 2i+1), disk side
    if (color[static_cast<std::size_t>(arr.face_of[static_cast<std::size_t>(gap_half)])] == 1)
      fail(ErrorKind::Internal, "gap arc landed on a vertex-colored region");
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (boundary_face[static_cast<std::size_t>(i)] == boundary_face[static_cast<std::size_t>(j)])
        fail(ErrorKind::ValidationError,
             "pairing is not realizable: boundary vertices " + std::to_string(i) + " and " +
                 std::to_string(j) + " collapse to one region");

  // Vertex ids: boundary faces take 1..n, remaining vertex-colored faces
  // become inner vertices in face order.
  std::vector<int> vertex_of(arr.faces.size(), 0);
  for (int i = 1; i <= n; ++i) vertex_of[static_cast<std::size_t>(boundary_face[static_cast<std::size_t>(i)])] = i;
  int next_vertex = n;
  for (std::size_t f = 0; f < arr.faces.size(); ++f)
    if (color[f] == 1 && vertex_of[f] == 0) vertex_of[f] = ++next_vertex;

  // Crossings become unit edges between the opposite vertex-colored wedges.
  std::vector<Edge> edges;
  for (int c = 0; c < crossing_count; ++c) {
    const auto& rot = arr.rotation[static_cast<std::size_t>(width + c)];
    // Wedge between rotation entries k, k+1 is the face left of entry k+1.
    std::array<int, 4> wedge{};
    for (int k = 0; k < 4; ++k)
      wedge[static_cast<std::size_t>(k)] =
          arr.face_of[static_cast<std::size_t>(rot[static_cast<std::size_t>((k + 1) % 4)])];
    int u_face, v_face;
    if (color[static_cast<std::size_t>(wedge[0])] == 1) {
      u_face = wedge[0];
      v_face = wedge[2];
    } else {
      u_face = wedge[1];
      v_face = wedge[3];
    }
    if (color[static_cast<std::size_t>(u_face)] != 1 || color[static_cast<std::size_t>(v_face)] != 1 ||
        u_face == v_face)
      fail(ErrorKind::Internal, "crossing wedges do not pair vertex regions");
    edges.push_back(Edge{c + 1, vertex_of[static_cast<std::size_t>(u_face)],
                         vertex_of[static_cast<std::size_t>(v_face)], Rat(1)});
  }

  // Rotation of the rebuilt network: faces are traced counterclockwise, so
  // the clockwise edge order is the reversed crossing sequence. Boundary
  // faces start at their arc so the fan begins beside endpoint 2i.
  std::map<VertexId, std::vector<EdgeId>> rotation;
  for (std::size_t f = 0; f < arr.faces.size(); ++f) {
    if (color[f] != 1) continue;
    std::vector<int> orbit = arr.faces[f];
    const int vid = vertex_of[f];
    if (vid >= 1 && vid <= n) {
      const int arc_half = 2 * (2 * vid - 2) + 1;
      auto it = std::find(orbit.begin(), orbit.end(), arc_half);
      std::rotate(orbit.begin(), it, orbit.end());
    }
    std::vector<EdgeId> fan;
    for (int h : orbit) {
      const int head = arr.head(h);
      if (head >= width) fan.push_back(head - width + 1);
    }
    std::reverse(fan.begin(), fan.end());
    rotation[vid] = fan;
  }

  CircularNetwork net(n, next_vertex, std::move(edges), std::move(rotation));
  if (net.connected()) {
    const StrandPermutation check = strand_permutation(net);
    if (!(check == tau))
      fail(ErrorKind::RoundTripFailure,
           "rebuilt network does not reproduce the input strand pairing");
  }
  return net;
}

namespace {

std::string describe_not_electrical(const CharacterizationReport& report) {
  std::ostringstream out;
  if (!report.kalmanson.ok) {
    const auto& w = *report.kalmanson.witness;
    out << "Kalmanson inequality fails at quadruple (" << w.i1 << "," << w.i2 << "," << w.i3 << ","
        << w.i4 << ")";
  } else if (!report.tnn.ok()) {
    if (!report.tnn.is_point) {
      out << "omega matrix rank is " << report.tnn.rank;
    } else {
      const auto& [pos, neg] = *report.tnn.mixed_sign_witness;
      out << "Pluecker coordinates change sign between index sets {";
      for (int c : mask_to_columns(pos)) out << " " << c;
      out << " } and {";
      for (int c : mask_to_columns(neg)) out << " " << c;
      out << " }";
    }
  } else {
    out << "the even Pluecker coordinate Delta_{2,4,...,2n-2} vanishes";
  }
  return out.str();
}

}  // namespace

ReconstructionResult reconstruct_topology(const MetricMatrix& r, const MinorOptions& options) {
  CharacterizationReport report = characterize(r, options);
  if (!report.electrical)
    fail(ErrorKind::NotElectrical, describe_not_electrical(report));

  const OmegaMatrix omega = omega_matrix(r.entries());
  RankPattern g = column_rank_pattern(omega);
  StrandPermutation tau = tau_from_resistance(r);
  CircularNetwork network = network_from_tau(tau);
  if (!network.connected())
    fail(ErrorKind::RoundTripFailure, "electrical input rebuilt to a disconnected network");
  ReconstructionResult result{std::move(report), std::move(g), std::move(tau), std::move(network),
                              true};
  return result;
}

}  // namespace circnet

#include "circnet/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "circnet/boundary_data.hpp"
#include "circnet/error.hpp"
#include "circnet/io.hpp"
#include "circnet/kalmanson.hpp"
#include "circnet/matrix_tree.hpp"
#include "circnet/medial.hpp"
#include "circnet/omega.hpp"
#include "circnet/reconstruction.hpp"

namespace circnet {

namespace {

constexpr const char* kUsage =
    "usage: circnet <command> <file> [-o <path>] [--max-n <k>] [--threads <k>]\n"
    "\n"
    "network commands (network file input):\n"
    "  response     response matrix M_R\n"
    "  resistance   effective resistance matrix R\n"
    "  oracle       R by spanning-tree enumeration (cap via --max-n, default 12)\n"
    "  medial       medial strand trace, minimality and tau\n"
    "\n"
    "matrix commands (matrix file input):\n"
    "  omega            the n x 2n boundary-data matrix\n"
    "  pluecker         all Pluecker coordinates (n <= --max-n, default 9)\n"
    "  check-tnn        totally-non-negative membership verdict\n"
    "  check-kalmanson  Kalmanson inequality verdict\n"
    "  split            circular split decomposition coefficients\n"
    "  dual-response    -M(D) and its circular response verdict\n"
    "  characterize     full planar-electrical characterization\n"
    "  tau              strand permutation recovered from resistances\n"
    "  reconstruct      network topology recovered from resistances\n";

struct Options {
  std::string command;
  std::string input_path;
  std::string output_path;
  int tree_cap = 12;
  std::size_t minor_cap = 9;
  int threads = 1;
};

Options parse_args(const std::vector<std::string>& args) {
  Options opt;
  std::vector<std::string> positional;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "-o" || a == "--max-n" || a == "--threads") {
      if (i + 1 >= args.size()) fail(ErrorKind::UsageError, "missing value for " + a);
      const std::string& value = args[++i];
      if (a == "-o") {
        opt.output_path = value;
      } else {
        int k = 0;
        try {
          k = std::stoi(value);
        } catch (const std::exception&) {
          fail(ErrorKind::UsageError, "bad value for " + a + ": '" + value + "'");
        }
        if (k < 1) fail(ErrorKind::UsageError, a + " must be positive");
        if (a == "--max-n") {
          opt.tree_cap = k;
          opt.minor_cap = static_cast<std::size_t>(k);
        } else {
          opt.threads = k;
        }
      }
    } else if (!a.empty() && a[0] == '-') {
      fail(ErrorKind::UsageError, "unknown flag " + a);
    } else {
      positional.push_back(a);
    }
  }
  if (positional.size() != 2) fail(ErrorKind::UsageError, "expected <command> <file>");
  opt.command = positional[0];
  opt.input_path = positional[1];
  return opt;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::UsageError, "cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const Options& opt, std::ostream& out, const std::string& text) {
  if (opt.output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.output_path, std::ios::binary);
  if (!file) fail(ErrorKind::UsageError, "cannot write file '" + opt.output_path + "'");
  file << text;
}

std::string format_index_set(ColumnMask mask) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (int c : mask_to_columns(mask)) {
    out << (first ? "" : ",") << c;
    first = false;
  }
  out << "}";
  return out.str();
}

std::string tnn_line(const TnnVerdict& verdict) {
  std::ostringstream out;
  if (verdict.ok()) {
    out << "tnn: true";
  } else if (!verdict.is_point) {
    out << "tnn: false (rank " << verdict.rank << ")";
  } else {
    const auto& [pos, neg] = *verdict.mixed_sign_witness;
    out << "tnn: false (sign change between " << format_index_set(pos) << " and "
        << format_index_set(neg) << ")";
  }
  return out.str();
}

std::string kalmanson_line(const KalmansonVerdict& verdict) {
  std::ostringstream out;
  out << "kalmanson: " << (verdict.ok ? "true" : "false");
  if (verdict.witness) {
    const auto& w = *verdict.witness;
    out << " (quadruple " << w.i1 << "," << w.i2 << "," << w.i3 << "," << w.i4 << " side "
        << w.side << ")";
  }
  return out.str();
}

std::string characterize_block(const CharacterizationReport& report) {
  std::ostringstream out;
  out << "metric: " << (report.metric.ok ? "true" : "false");
  if (report.metric.witness) {
    const auto& w = *report.metric.witness;
    out << " (triple " << w.i << "," << w.j << "," << w.k << ")";
  }
  out << "\n" << kalmanson_line(report.kalmanson) << "\n" << tnn_line(report.tnn) << "\n";
  out << "delta_even: " << format_rational(report.delta_even) << "\n";
  out << "dual_response: " << (report.dual_response_valid ? "true" : "false") << "\n";
  out << "electrical: " << (report.electrical ? "true" : "false") << "\n";
  return out.str();
}

std::string medial_block(const CircularNetwork& net) {
  const MedialTrace trace = medial_trace(net);
  const MinimalityReport report = is_minimal(net);
  const StrandPermutation tau = strand_permutation(net);
  std::ostringstream out;
  for (const StrandRecord& s : trace.strands) {
    out << "strand " << s.start_endpoint << " -> " << s.end_endpoint;
    if (!s.crossings.empty()) {
      out << " via";
      for (EdgeId e : s.crossings) out << " " << e;
    }
    out << "\n";
  }
  out << "closed-loops: " << trace.closed_loops.size() << "\n";
  for (const Defect& d : report.defects) {
    switch (d.kind) {
      case DefectKind::SelfIntersection:
        out << "defect: self-intersection strand "
            << trace.strands[static_cast<std::size_t>(d.strand_a)].start_endpoint;
        break;
      case DefectKind::DoubleCrossing:
        out << "defect: double-crossing strands "
            << trace.strands[static_cast<std::size_t>(d.strand_a)].start_endpoint << " "
            << trace.strands[static_cast<std::size_t>(d.strand_b)].start_endpoint;
        break;
      case DefectKind::ClosedLoop:
        out << "defect: closed-loop";
        break;
    }
    out << " edges";
    for (EdgeId e : d.edges) out << " " << e;
    out << "\n";
  }
  out << "minimal: " << (report.minimal ? "true" : "false") << "\n";
  out << "tau: " << format_cycles(tau.pairing) << "\n";
  return out.str();
}

int dispatch(const Options& opt, std::ostream& out, std::ostream& err) {
  const MinorOptions minors{opt.threads, opt.minor_cap};
  const std::string text = read_file(opt.input_path);

  if (opt.command == "response") {
    emit(opt, out, serialize_matrix(response_matrix(parse_network(text)).entries()));
    return 0;
  }
  if (opt.command == "resistance") {
    emit(opt, out, serialize_matrix(effective_resistance_matrix(parse_network(text)).entries()));
    return 0;
  }
  if (opt.command == "oracle") {
    emit(opt, out,
         serialize_matrix(resistance_via_matrix_tree(parse_network(text), opt.tree_cap).entries()));
    return 0;
  }
  if (opt.command == "medial") {
    const CircularNetwork net = parse_network(text);
    const bool minimal = is_minimal(net).minimal;
    emit(opt, out, medial_block(net));
    return minimal ? 0 : 1;
  }
  if (opt.command == "omega") {
    emit(opt, out, serialize_matrix_rect(omega_matrix(parse_matrix(text, true)).entries()));
    return 0;
  }
  if (opt.command == "pluecker") {
    const GrassmannPoint point = pluecker_coordinates(omega_matrix(parse_matrix(text, true)), minors);
    std::ostringstream block;
    for (const auto& [mask, value] : point.coordinates) {
      bool first = true;
      for (int c : mask_to_columns(mask)) {
        block << (first ? "" : ",") << c;
        first = false;
      }
      block << ": " << format_rational(value) << "\n";
    }
    emit(opt, out, block.str());
    return 0;
  }
  if (opt.command == "check-tnn") {
    const TnnVerdict verdict = is_tnn_point(omega_matrix(parse_matrix(text, true)), minors);
    emit(opt, out, "rank: " + std::to_string(verdict.rank) + "\n" + tnn_line(verdict) + "\n");
    return verdict.ok() ? 0 : 1;
  }
  if (opt.command == "check-kalmanson") {
    const KalmansonVerdict verdict = is_kalmanson(MetricMatrix(parse_matrix(text, true)));
    emit(opt, out, kalmanson_line(verdict) + "\n");
    return verdict.ok ? 0 : 1;
  }
  if (opt.command == "split") {
    emit(opt, out, serialize_matrix(split_decomposition(MetricMatrix(parse_matrix(text, true))).entries()));
    return 0;
  }
  if (opt.command == "dual-response") {
    const RatMatrix split = split_decomposition(MetricMatrix(parse_matrix(text, true))).entries();
    RatMatrix dual(split.rows(), split.cols());
    for (std::size_t i = 0; i < split.rows(); ++i)
      for (std::size_t j = 0; j < split.cols(); ++j) dual.at(i, j) = -split.at(i, j);
    const bool ok = is_circular_response_matrix(dual);
    emit(opt, out,
         serialize_matrix(dual) + "circular-response: " + (ok ? "true" : "false") + "\n");
    return ok ? 0 : 1;
  }
  if (opt.command == "characterize") {
    const CharacterizationReport report = characterize(MetricMatrix(parse_matrix(text, true)), minors);
    emit(opt, out, characterize_block(report));
    return report.electrical ? 0 : 1;
  }
  if (opt.command == "tau") {
    const StrandPermutation tau = tau_from_resistance(MetricMatrix(parse_matrix(text, true)));
    emit(opt, out, format_cycles(tau.pairing) + "\n");
    return 0;
  }
  if (opt.command == "reconstruct") {
    const MetricMatrix metric(parse_matrix(text, true));
    const CharacterizationReport report = characterize(metric, minors);
    out << characterize_block(report);
    if (!report.electrical) {
      err << "NotElectrical: the input is not an effective resistance matrix of a "
             "connected circular planar network\n";
      return 1;
    }
    const RankPattern g = column_rank_pattern(omega_matrix(metric.entries()));
    const StrandPermutation tau = tau_from_resistance(metric);
    const CircularNetwork net = network_from_tau(tau);
    const bool round_trip = net.connected() && strand_permutation(net) == tau;
    out << "g: " << format_cycles(g.g) << "\n";
    out << "tau: " << format_cycles(tau.pairing) << "\n";
    out << "round-trip: " << (round_trip ? "ok" : "failed") << "\n";
    if (opt.output_path.empty()) {
      out << "network:\n" << serialize_network(net);
    } else {
      emit(opt, out, serialize_network(net));
    }
    return 0;
  }
  fail(ErrorKind::UsageError, "unknown command '" + opt.command + "'");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    if (args.empty() || args[0] == "--help" || args[0] == "-h" || args[0] == "help") {
      err << kUsage;
      return args.empty() ? 2 : 0;
    }
    return dispatch(parse_args(args), out, err);
  } catch (const Error& e) {
    err << e.what() << "\n";
    if (e.kind() == ErrorKind::UsageError) err << kUsage;
    return 2;
  }
}

}  // namespace circnet

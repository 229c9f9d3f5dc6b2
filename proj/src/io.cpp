#include "circnet/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "circnet/error.hpp"

namespace circnet {

namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& message) {
  fail(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + message);
}

[[noreturn]] void validate_fail(std::size_t line_no, const std::string& message) {
  fail(ErrorKind::ValidationError, "line " + std::to_string(line_no) + ": " + message);
}

int parse_int(const std::string& word, std::size_t line_no) {
  try {
    std::size_t used = 0;
    int value = std::stoi(word, &used);
    if (used != word.size()) throw std::invalid_argument(word);
    return value;
  } catch (const std::exception&) {
    parse_fail(line_no, "expected an integer, got '" + word + "'");
  }
}

}  // namespace

CircularNetwork parse_network(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;

  int boundary = -1;
  int declared = 0;
  std::map<VertexId, bool> roles;  // id -> is_boundary
  std::vector<Edge> edges;
  std::map<EdgeId, std::size_t> edge_lines;
  std::map<VertexId, std::vector<EdgeId>> rotation;

  while (std::getline(in, line)) {
    ++line_no;
    const std::vector<std::string> words = split_words(line);
    if (words.empty() || words[0][0] == '#') continue;
    const std::string& tag = words[0];
    if (tag == "n") {
      if (words.size() != 2) parse_fail(line_no, "expected 'n <boundary-count>'");
      if (boundary != -1) parse_fail(line_no, "duplicate header");
      boundary = parse_int(words[1], line_no);
    } else if (tag == "v") {
      if (boundary == -1) parse_fail(line_no, "vertex line before header");
      if (words.size() != 3 || (words[2] != "boundary" && words[2] != "inner"))
        parse_fail(line_no, "expected 'v <id> boundary|inner'");
      const int id = parse_int(words[1], line_no);
      if (roles.count(id)) validate_fail(line_no, "duplicate vertex id " + words[1]);
      roles[id] = words[2] == "boundary";
      ++declared;
    } else if (tag == "e") {
      if (words.size() != 5) parse_fail(line_no, "expected 'e <id> <u> <v> <conductance>'");
      Edge e;
      e.id = parse_int(words[1], line_no);
      e.u = parse_int(words[2], line_no);
      e.v = parse_int(words[3], line_no);
      e.conductance = parse_rational(words[4]);
      if (edge_lines.count(e.id)) validate_fail(line_no, "duplicate edge id " + words[1]);
      if (!roles.count(e.u)) validate_fail(line_no, "edge references unknown vertex " + words[2]);
      if (!roles.count(e.v)) validate_fail(line_no, "edge references unknown vertex " + words[3]);
      edge_lines[e.id] = line_no;
      edges.push_back(std::move(e));
    } else if (tag == "rot") {
      if (words.size() < 2) parse_fail(line_no, "expected 'rot <vertex> <edge-id>...'");
      const int v = parse_int(words[1], line_no);
      if (!roles.count(v)) validate_fail(line_no, "rotation for unknown vertex " + words[1]);
      if (rotation.count(v)) validate_fail(line_no, "duplicate rotation for vertex " + words[1]);
      std::vector<EdgeId> order;
      for (std::size_t k = 2; k < words.size(); ++k) order.push_back(parse_int(words[k], line_no));
      rotation[v] = std::move(order);
    } else {
      parse_fail(line_no, "unknown directive '" + tag + "'");
    }
  }
  if (boundary == -1) fail(ErrorKind::ParseError, "missing 'n' header");

  // Vertex ids must be exactly 1..|V| with the boundary block first.
  for (int id = 1; id <= declared; ++id) {
    auto it = roles.find(id);
    if (it == roles.end())
      fail(ErrorKind::ValidationError, "vertex ids must be contiguous from 1; missing " +
                                           std::to_string(id));
    const bool should_be_boundary = id <= boundary;
    if (it->second != should_be_boundary)
      fail(ErrorKind::ValidationError,
           "vertex " + std::to_string(id) + " must be " +
               (should_be_boundary ? "boundary" : "inner") + " by its id");
  }
  if (declared < boundary)
    fail(ErrorKind::ValidationError, "fewer vertices than boundary count");

  return CircularNetwork(boundary, declared, std::move(edges), std::move(rotation));
}

std::string serialize_network(const CircularNetwork& net) {
  std::ostringstream out;
  out << "n " << net.boundary_count() << "\n";
  for (int v = 1; v <= net.vertex_count(); ++v)
    out << "v " << v << " " << (net.is_boundary(v) ? "boundary" : "inner") << "\n";
  for (const Edge& e : net.edges())
    out << "e " << e.id << " " << e.u << " " << e.v << " " << format_rational(e.conductance)
        << "\n";
  for (const auto& [v, order] : net.rotation()) {
    out << "rot " << v;
    for (EdgeId id : order) out << " " << id;
    out << "\n";
  }
  return out.str();
}

RatMatrix parse_matrix(std::string_view text, bool require_symmetric) {
  std::istringstream in{std::string(text)};
  std::size_t n = 0;
  if (!(in >> n) || n == 0) fail(ErrorKind::ParseError, "matrix file must start with its size");
  RatMatrix m(n, n);
  std::string word;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (!(in >> word))
        fail(ErrorKind::ParseError,
             "matrix ends early at row " + std::to_string(r + 1) + ", column " +
                 std::to_string(c + 1));
      m.at(r, c) = parse_rational(word);
    }
  if (in >> word) fail(ErrorKind::ParseError, "trailing content after matrix rows");
  if (require_symmetric && !m.is_symmetric())
    fail(ErrorKind::NotSymmetric, "matrix is not symmetric");
  return m;
}

std::string serialize_matrix(const RatMatrix& m) {
  std::ostringstream out;
  out << m.rows() << "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out << " ";
      out << format_rational(m.at(r, c));
    }
    out << "\n";
  }
  return out.str();
}

std::string serialize_matrix_rect(const RatMatrix& m) {
  std::ostringstream out;
  out << m.rows() << " " << m.cols() << "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out << " ";
      out << format_rational(m.at(r, c));
    }
    out << "\n";
  }
  return out.str();
}

std::string format_cycles(const std::vector<int>& permutation) {
  const int n = static_cast<int>(permutation.size());
  std::vector<bool> seen(permutation.size(), false);
  std::ostringstream out;
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<std::size_t>(start) - 1]) continue;
    int cur = start;
    if (permutation[static_cast<std::size_t>(cur) - 1] == cur) {
      seen[static_cast<std::size_t>(cur) - 1] = true;
      continue;  // fixed points are omitted
    }
    out << "(";
    bool first = true;
    do {
      seen[static_cast<std::size_t>(cur) - 1] = true;
      out << (first ? "" : " ") << cur;
      first = false;
      cur = permutation[static_cast<std::size_t>(cur) - 1];
    } while (cur != start);
    out << ")";
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

}  // namespace circnet

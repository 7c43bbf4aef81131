#include "kdst/instance.hpp"

#include "kdst/errors.hpp"
#include "kdst/flow.hpp"

#include <istream>
#include <sstream>
#include <unordered_set>

namespace kdst {

Instance::Instance(int vertex_count, int root, std::vector<int> terminals,
                   std::vector<Edge> edges, int k)
    : vertex_count_(vertex_count),
      root_(root),
      k_(k),
      terminals_(vertex_count > 0 ? VertexSet(vertex_count) : VertexSet()),
      steiner_(vertex_count > 0 ? VertexSet(vertex_count) : VertexSet()),
      edges_(std::move(edges)) {
  if (vertex_count_ < 1) throw ParseError(0, "instance needs at least one vertex");
  if (root_ < 0 || root_ >= vertex_count_) throw ParseError(0, "root id out of range");
  if (k_ < 1) throw ParseError(0, "k must be at least 1");
  if (terminals.empty()) throw ParseError(0, "instance needs at least one terminal");

  for (int t : terminals) {
    if (t < 0 || t >= vertex_count_) throw ParseError(0, "terminal id out of range");
    if (t == root_) throw ParseError(0, "duplicate vertex role: root listed as terminal");
    if (terminals_.contains(t)) throw ParseError(0, "duplicate vertex role: terminal listed twice");
    terminals_.add(t);
  }
  terminal_count_ = terminals_.size();
  for (int v = 0; v < vertex_count_; ++v) {
    if (v != root_ && !terminals_.contains(v)) steiner_.add(v);
  }
  steiner_count_ = steiner_.size();

  for (std::size_t i = 0; i < edges_.size(); ++i) {
    Edge& e = edges_[i];
    e.id = static_cast<int>(i);
    if (e.tail < 0 || e.tail >= vertex_count_ || e.head < 0 || e.head >= vertex_count_) {
      throw ParseError(0, "edge endpoint out of range");
    }
    if (e.tail == e.head) throw ParseError(0, "self-loop rejected");
    if (terminals_.contains(e.tail)) throw ParseError(0, "terminal out-edge");
    if (e.weight < 0) throw ParseError(0, "negative weight");
  }
}

Rational Instance::weight_of(const EdgeSet& edges) const {
  Rational total = 0;
  edges.for_each([&](int id) { total += edges_[id].weight; });
  return total;
}

namespace {

struct RawEdge {
  int tail;
  int head;
  Rational weight;
  int line;
};

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    if (tok.front() == '#') break;
    tokens.push_back(tok);
  }
  return tokens;
}

int parse_int(const std::string& tok, int line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw ParseError(line, "malformed integer '" + tok + "'");
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError(line, "malformed integer '" + tok + "'");
  }
}

} // namespace

Instance parse_instance(std::istream& in) {
  int line_no = 0;
  bool saw_version = false;
  std::optional<int> nodes, root, k;
  std::optional<std::vector<int>> terminals;
  std::vector<RawEdge> raw_edges;

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& directive = tokens[0];

    if (directive == "kdst") {
      if (tokens.size() != 2 || tokens[1] != "1") throw ParseError(line_no, "unsupported format version");
      if (saw_version) throw ParseError(line_no, "duplicate kdst directive");
      saw_version = true;
    } else if (directive == "nodes") {
      if (tokens.size() != 2) throw ParseError(line_no, "nodes expects one argument");
      if (nodes) throw ParseError(line_no, "duplicate nodes directive");
      nodes = parse_int(tokens[1], line_no);
    } else if (directive == "root") {
      if (tokens.size() != 2) throw ParseError(line_no, "root expects one argument");
      if (root) throw ParseError(line_no, "duplicate root directive");
      root = parse_int(tokens[1], line_no);
    } else if (directive == "terminals") {
      if (tokens.size() < 2) throw ParseError(line_no, "terminals expects at least one id");
      if (terminals) throw ParseError(line_no, "duplicate terminals directive");
      std::vector<int> ids;
      for (std::size_t i = 1; i < tokens.size(); ++i) ids.push_back(parse_int(tokens[i], line_no));
      terminals = std::move(ids);
    } else if (directive == "edge") {
      if (tokens.size() != 4) throw ParseError(line_no, "edge expects tail, head and weight");
      int tail = parse_int(tokens[1], line_no);
      int head = parse_int(tokens[2], line_no);
      auto weight = parse_decimal(tokens[3]);
      if (!weight) throw ParseError(line_no, "malformed weight '" + tokens[3] + "'");
      if (*weight < 0) throw ParseError(line_no, "negative weight");
      raw_edges.push_back({tail, head, *weight, line_no});
    } else if (directive == "k") {
      if (tokens.size() != 2) throw ParseError(line_no, "k expects one argument");
      if (k) throw ParseError(line_no, "duplicate k directive");
      k = parse_int(tokens[1], line_no);
      if (*k < 1) throw ParseError(line_no, "k must be at least 1");
    } else {
      throw ParseError(line_no, "unknown directive '" + directive + "'");
    }
  }

  if (!saw_version) throw ParseError(0, "missing kdst version directive");
  if (!nodes) throw ParseError(0, "missing nodes directive");
  if (!root) throw ParseError(0, "missing root directive");
  if (!terminals) throw ParseError(0, "missing terminals directive");
  if (!k) throw ParseError(0, "missing k directive");

  // Per-edge role checks are done here so the error carries the edge's
  // line; everything else is validated by the Instance constructor.
  std::unordered_set<int> terminal_ids(terminals->begin(), terminals->end());
  for (const RawEdge& raw : raw_edges) {
    if (raw.tail < 0 || raw.tail >= *nodes || raw.head < 0 || raw.head >= *nodes) {
      throw ParseError(raw.line, "edge endpoint out of range");
    }
    if (raw.tail == raw.head) throw ParseError(raw.line, "self-loop rejected");
    if (terminal_ids.count(raw.tail)) throw ParseError(raw.line, "terminal out-edge");
  }

  std::vector<Edge> edges;
  edges.reserve(raw_edges.size());
  for (const RawEdge& raw : raw_edges) {
    Edge e;
    e.tail = raw.tail;
    e.head = raw.head;
    e.weight = raw.weight;
    edges.push_back(std::move(e));
  }
  return Instance(*nodes, *root, *terminals, std::move(edges), *k);
}

Instance parse_instance_text(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

EdgeSet covering_edges(const Instance& inst, const EdgeSet& edge_subset,
                       const VertexSet& cut) {
  EdgeSet out = inst.empty_edge_set();
  edge_subset.for_each([&](int id) {
    const Edge& e = inst.edge(id);
    if (!cut.contains(e.tail) && cut.contains(e.head)) out.add(id);
  });
  return out;
}

int terminal_connectivity(const Instance& inst, const EdgeSet& edge_subset,
                          int terminal) {
  if (terminal < 0 || terminal >= inst.vertex_count() || !inst.is_terminal(terminal)) {
    throw Error("unknown terminal id " + std::to_string(terminal));
  }
  CutResult r = max_flow_min_cut(inst, CapacityMap::unit(edge_subset), inst.root(), terminal);
  // unit capacities: the exact flow value is a nonnegative integer
  if (r.value.get_den() != 1) throw InternalError("non-integer flow under unit capacities");
  return static_cast<int>(r.value.get_num().get_si());
}

bool is_feasible_solution(const Instance& inst, const EdgeSet& edge_subset) {
  for (int t : inst.terminals().ids()) {
    if (terminal_connectivity(inst, edge_subset, t) < inst.k()) return false;
  }
  return true;
}

} // namespace kdst

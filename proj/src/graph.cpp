#include "debruijn/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_set>

#include "debruijn/error.hpp"
#include "disjoint_sets.hpp"

namespace debruijn {

namespace {

void check_rank(int rank, int max_rank) {
  if (rank < 2) throw InvalidArgument("de Bruijn graph rank must be >= 2, got " + std::to_string(rank));
  if (rank > max_rank) {
    throw GuardExceeded("de Bruijn graph rank " + std::to_string(rank) + " exceeds guard " + std::to_string(max_rank));
  }
}

using detail::DisjointSets;

}  // namespace

DeBruijnGraph::DeBruijnGraph(int rank) : rank_(rank) {
  if (rank < 2 || rank > kMaxLabelRank) {
    throw InvalidArgument("de Bruijn graph rank must lie in [2, 31], got " + std::to_string(rank));
  }
}

void DeBruijnGraph::check_vertex(Vertex v) const {
  if (v.label >= vertex_count()) {
    throw InvalidArgument("vertex " + std::to_string(v.label) + " out of range for rank " + std::to_string(rank_));
  }
}

void DeBruijnGraph::check_edge(Edge e) const {
  if (e.label >= edge_count()) {
    throw InvalidArgument("edge " + std::to_string(e.label) + " out of range for rank " + std::to_string(rank_));
  }
}

std::pair<Vertex, Vertex> DeBruijnGraph::endpoints(Edge e) const {
  check_edge(e);
  const Label vmask = static_cast<Label>(vertex_count() - 1);
  return {Vertex{e.label >> 1}, Vertex{e.label & vmask}};
}

std::pair<Edge, Edge> DeBruijnGraph::out_edges(Vertex v) const {
  check_vertex(v);
  return {Edge{v.label << 1}, Edge{(v.label << 1) | 1U}};
}

std::pair<Edge, Edge> DeBruijnGraph::in_edges(Vertex v) const {
  check_vertex(v);
  const Label high = static_cast<Label>(vertex_count());
  return {Edge{v.label}, Edge{v.label | high}};
}

std::optional<Edge> DeBruijnGraph::edge_between(Vertex from, Vertex to) const {
  check_vertex(from);
  check_vertex(to);
  const Label overlap = static_cast<Label>((vertex_count() >> 1) - 1);
  if ((from.label & overlap) != (to.label >> 1)) return std::nullopt;
  return Edge{(from.label << 1) | (to.label & 1U)};
}

std::size_t Circuit::red_count() const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [](Edge e) { return edge_color(e) == EdgeColor::Red; }));
}

std::int64_t Circuit::imbalance() const {
  const auto red = static_cast<std::int64_t>(red_count());
  return red - (static_cast<std::int64_t>(edges.size()) - red);
}

std::vector<Vertex> Circuit::vertices() const {
  std::vector<Vertex> out;
  out.reserve(edges.size());
  for (Edge e : edges) out.push_back(Vertex{e.label >> 1});
  return out;
}

std::string Circuit::to_text() const {
  std::string out;
  for (Edge e : edges) {
    out += word_to_string(e.label, rank);
    out += '\n';
  }
  return out;
}

void check_circuit(const Circuit& c) {
  if (c.rank < 2 || c.rank > kMaxLabelRank) throw InvalidArgument("circuit rank out of range");
  if (c.edges.empty()) throw InvalidArgument("circuit has no edges");
  const DeBruijnGraph g(c.rank);
  std::unordered_set<Label> seen;
  seen.reserve(c.edges.size() * 2);
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    const Edge e = c.edges[i];
    const Edge next = c.edges[(i + 1) % c.edges.size()];
    if (g.head(e) != g.tail(next)) {
      throw InvalidArgument("circuit breaks between edges " + std::to_string(i) + " and " +
                            std::to_string((i + 1) % c.edges.size()));
    }
    if (!seen.insert(e.label).second) {
      throw InvalidArgument("circuit repeats edge " + word_to_string(e.label, c.rank));
    }
  }
}

bool is_valid_circuit(const Circuit& c) {
  try {
    check_circuit(c);
    return true;
  } catch (const InvalidArgument&) {
    return false;
  }
}

bool is_cycle(const Circuit& c) {
  if (!is_valid_circuit(c)) return false;
  std::unordered_set<Label> seen;
  for (Vertex v : c.vertices()) {
    if (!seen.insert(v.label).second) return false;
  }
  return true;
}

EdgeSet::EdgeSet(int rank) : rank_(rank) {
  check_rank(rank, kRankGuard);
  words_.assign(std::max<std::size_t>(1, (std::size_t{1} << rank) / 64), 0);
}

EdgeSet EdgeSet::empty(int rank) { return EdgeSet(rank); }

EdgeSet EdgeSet::full(int rank) {
  EdgeSet s(rank);
  const std::size_t edges = std::size_t{1} << rank;
  if (edges >= 64) {
    std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  } else {
    s.words_[0] = (std::uint64_t{1} << edges) - 1;
  }
  s.size_ = edges;
  return s;
}

EdgeSet EdgeSet::from_circuit(const Circuit& c) {
  check_circuit(c);
  EdgeSet s(c.rank);
  for (Edge e : c.edges) s.insert(e);
  return s;
}

bool EdgeSet::insert(Edge e) {
  if (e.label >= (std::size_t{1} << rank_)) throw InvalidArgument("edge out of range for edge set");
  auto& word = words_[e.label >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (e.label & 63U);
  if (word & bit) return false;
  word |= bit;
  ++size_;
  return true;
}

bool EdgeSet::erase(Edge e) {
  if (e.label >= (std::size_t{1} << rank_)) throw InvalidArgument("edge out of range for edge set");
  auto& word = words_[e.label >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (e.label & 63U);
  if (!(word & bit)) return false;
  word &= ~bit;
  --size_;
  return true;
}

int EdgeSet::out_degree(Vertex v) const noexcept {
  return static_cast<int>(contains(Edge{v.label << 1})) + static_cast<int>(contains(Edge{(v.label << 1) | 1U}));
}

int EdgeSet::in_degree(Vertex v) const noexcept {
  const Label high = Label{1} << (rank_ - 1);
  return static_cast<int>(contains(Edge{v.label})) + static_cast<int>(contains(Edge{v.label | high}));
}

std::size_t EdgeSet::red_count() const {
  // Red edges sit at even labels.
  constexpr std::uint64_t kEven = 0x5555555555555555ULL;
  std::size_t red = 0;
  for (auto w : words_) red += static_cast<std::size_t>(std::popcount(w & kEven));
  return red;
}

std::vector<Edge> EdgeSet::edges() const {
  std::vector<Edge> out;
  out.reserve(size_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      const int bit = std::countr_zero(w);
      out.push_back(Edge{static_cast<Label>(i * 64 + static_cast<std::size_t>(bit))});
      w &= w - 1;
    }
  }
  return out;
}

EdgeSet EdgeSet::complement() const {
  EdgeSet out = full(rank_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= ~words_[i];
  out.size_ = (std::size_t{1} << rank_) - size_;
  return out;
}

ComponentLabels component_labels(const EdgeSet& edges) {
  const std::size_t vertices = std::size_t{1} << (edges.rank() - 1);
  const std::vector<Edge> members = edges.edges();
  DisjointSets sets(vertices);
  for (Edge e : members) sets.unite(e.label >> 1, e.label & static_cast<Label>(vertices - 1));

  ComponentLabels labels;
  labels.of_vertex.assign(vertices, ComponentLabels::kNone);
  std::vector<std::uint32_t> id_of_root(vertices, ComponentLabels::kNone);
  for (Edge e : members) {
    const std::uint32_t root = sets.find(e.label >> 1);
    if (id_of_root[root] == ComponentLabels::kNone) {
      id_of_root[root] = static_cast<std::uint32_t>(labels.count++);
    }
  }
  for (Edge e : members) {
    for (Label v : {e.label >> 1, e.label & static_cast<Label>(vertices - 1)}) {
      labels.of_vertex[v] = id_of_root[sets.find(v)];
    }
  }
  return labels;
}

std::vector<EdgeSet> components(const EdgeSet& edges) {
  const ComponentLabels labels = component_labels(edges);
  std::vector<EdgeSet> out(labels.count, EdgeSet::empty(edges.rank()));
  for (Edge e : edges.edges()) out[labels.of_vertex[e.label >> 1]].insert(e);
  return out;
}

Circuit eulerian_circuit(int rank) {
  check_rank(rank, kRankGuard);
  return eulerian_circuit(EdgeSet::full(rank));
}

Circuit eulerian_circuit(const EdgeSet& edges) {
  Circuit circuit{edges.rank(), {}};
  if (edges.is_empty()) throw InvariantViolation("Euler circuit of an empty edge set");

  const auto members = edges.edges();
  const Label vmask = (Label{1} << (edges.rank() - 1)) - 1;
  for (Edge e : members) {
    for (const Vertex v : {Vertex{e.label >> 1}, Vertex{e.label & vmask}}) {
      if (edges.in_degree(v) != edges.out_degree(v)) {
        throw InvariantViolation("edge set is not balanced at vertex " + word_to_string(v.label, edges.rank() - 1));
      }
    }
  }

  EdgeSet remaining = edges;
  std::vector<Edge> trail;
  circuit.edges.reserve(edges.size());
  trail.reserve(edges.size());

  Label v = members.front().label >> 1;
  for (;;) {
    const Edge red{v << 1};
    const Edge blue{(v << 1) | 1U};
    if (remaining.contains(red) || remaining.contains(blue)) {
      const Edge next = remaining.contains(red) ? red : blue;
      remaining.erase(next);
      trail.push_back(next);
      v = next.label & vmask;
    } else if (!trail.empty()) {
      const Edge back = trail.back();
      trail.pop_back();
      circuit.edges.push_back(back);
      v = back.label >> 1;
    } else {
      break;
    }
  }
  if (circuit.edges.size() != edges.size()) {
    throw InvariantViolation("edge set is disconnected: circuit covers " + std::to_string(circuit.edges.size()) +
                             " of " + std::to_string(edges.size()) + " edges");
  }
  std::reverse(circuit.edges.begin(), circuit.edges.end());
  return circuit;
}

CyclicSequence circuit_to_sequence(const Circuit& c) {
  check_circuit(c);
  std::vector<std::uint8_t> bits(c.edges.size());
  for (std::size_t i = 0; i < c.edges.size(); ++i) bits[i] = static_cast<std::uint8_t>(c.edges[i].label & 1U);
  return CyclicSequence(std::move(bits));
}

Circuit sequence_to_circuit(const CyclicSequence& s, int rank) {
  if (rank < 2 || rank > kMaxLabelRank) throw InvalidArgument("circuit rank must lie in [2, 31]");
  const std::size_t n = s.size();
  const std::size_t back = static_cast<std::size_t>(rank - 1) % n;
  Circuit c{rank, {}};
  c.edges.reserve(n);
  std::unordered_set<Label> seen;
  seen.reserve(n * 2);
  for (std::size_t i = 0; i < n; ++i) {
    const Edge e{static_cast<Label>(window_at(s, (i + n - back) % n, rank))};
    if (!seen.insert(e.label).second) {
      throw InvalidArgument("window " + word_to_string(e.label, rank) + " repeats; sequence is not a circuit in G_" +
                            std::to_string(rank));
    }
    c.edges.push_back(e);
  }
  return c;
}

Circuit lift_circuit(const Circuit& c) {
  check_circuit(c);
  if (c.rank + 1 > kMaxLabelRank) throw GuardExceeded("cannot lift beyond rank 31");
  Circuit out{c.rank + 1, {}};
  out.edges.reserve(c.edges.size());
  const std::size_t n = c.edges.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Edge prev = c.edges[(i + n - 1) % n];
    out.edges.push_back(Edge{(prev.label << 1) | (c.edges[i].label & 1U)});
  }
  return out;
}

}  // namespace debruijn

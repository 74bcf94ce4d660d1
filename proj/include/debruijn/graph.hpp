#pragma once

// The binary de Bruijn graph G_l, held implicitly: vertices are (l-1)-bit
// words, and the edge b0..b(l-1) runs from b0..b(l-2) to b1..b(l-1).
// Edges ending in 0 are red, edges ending in 1 are blue.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "debruijn/seqcore.hpp"

namespace debruijn {

using Label = std::uint32_t;

// Full-graph operations (Euler circuits, edge sets) are limited to this rank.
inline constexpr int kRankGuard = 24;
// Labels still fit a Label one rank above the guard, which lifting needs.
inline constexpr int kMaxLabelRank = 31;

struct Vertex {
  Label label = 0;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

struct Edge {
  Label label = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class EdgeColor { Red, Blue };

class DeBruijnGraph {
 public:
  // Throws InvalidArgument unless 2 <= rank <= kMaxLabelRank.
  explicit DeBruijnGraph(int rank);

  int rank() const noexcept { return rank_; }
  std::uint64_t vertex_count() const noexcept { return std::uint64_t{1} << (rank_ - 1); }
  std::uint64_t edge_count() const noexcept { return std::uint64_t{1} << rank_; }

  // (tail, head). Throws InvalidArgument for labels out of range.
  std::pair<Vertex, Vertex> endpoints(Edge e) const;
  Vertex tail(Edge e) const { return endpoints(e).first; }
  Vertex head(Edge e) const { return endpoints(e).second; }

  // (red, blue): v followed by 0, v followed by 1.
  std::pair<Edge, Edge> out_edges(Vertex v) const;
  // 0 followed by v, 1 followed by v.
  std::pair<Edge, Edge> in_edges(Vertex v) const;

  // The edge from `from` to `to`, if the two vertices overlap.
  std::optional<Edge> edge_between(Vertex from, Vertex to) const;

 private:
  void check_vertex(Vertex v) const;
  void check_edge(Edge e) const;

  int rank_;
};

inline EdgeColor edge_color(Edge e) noexcept {
  return (e.label & 1U) ? EdgeColor::Blue : EdgeColor::Red;
}

// Closed walk with distinct edges in G_rank.
struct Circuit {
  int rank = 2;
  std::vector<Edge> edges;

  std::size_t size() const noexcept { return edges.size(); }
  std::size_t red_count() const;
  std::size_t blue_count() const { return edges.size() - red_count(); }
  // red - blue; equals the imbalance of the corresponding sequence.
  std::int64_t imbalance() const;
  // Vertices visited: the tail of each edge, in order.
  std::vector<Vertex> vertices() const;

  // One l-bit label per line.
  std::string to_text() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

// Throws InvalidArgument if the edges do not chain cyclically, repeat, or are
// out of range for the rank.
void check_circuit(const Circuit& c);
bool is_valid_circuit(const Circuit& c);
// A valid circuit that visits no vertex twice.
bool is_cycle(const Circuit& c);

// Subgraph of G_l as a dense bit-vector over the 2^l edge labels.
class EdgeSet {
 public:
  // Throws GuardExceeded above kRankGuard, InvalidArgument below 2.
  static EdgeSet empty(int rank);
  static EdgeSet full(int rank);
  static EdgeSet from_circuit(const Circuit& c);

  int rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return size_; }
  bool is_empty() const noexcept { return size_ == 0; }

  bool contains(Edge e) const noexcept { return (words_[e.label >> 6] >> (e.label & 63U)) & 1U; }
  // Returns false if already present / absent.
  bool insert(Edge e);
  bool erase(Edge e);

  int out_degree(Vertex v) const noexcept;
  int in_degree(Vertex v) const noexcept;
  std::size_t red_count() const;
  std::size_t blue_count() const { return size_ - red_count(); }

  // Members in increasing label order.
  std::vector<Edge> edges() const;
  // Edges of G_l not in this set.
  EdgeSet complement() const;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  explicit EdgeSet(int rank);

  int rank_;
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Connected components of an edge set, treating edges as undirected and
// ignoring vertices of degree zero.
struct ComponentLabels {
  std::size_t count = 0;
  // Component id per vertex label, or kNone for degree-zero vertices. Ids are
  // assigned in order of each component's least edge label.
  std::vector<std::uint32_t> of_vertex;

  static constexpr std::uint32_t kNone = 0xffffffffU;
};

ComponentLabels component_labels(const EdgeSet& edges);
// Components as edge sets, ordered by least edge label.
std::vector<EdgeSet> components(const EdgeSet& edges);

Circuit eulerian_circuit(int rank);
// Hierholzer on an edge set whose single component is Eulerian: starts at the
// least vertex with positive degree and prefers the red out-edge. Throws
// InvariantViolation if the set is unbalanced or disconnected.
Circuit eulerian_circuit(const EdgeSet& edges);

// Bit i of the result is the last bit of edge i.
CyclicSequence circuit_to_sequence(const Circuit& c);
// Edge i is the window ending at position i; throws InvalidArgument if a
// window repeats.
Circuit sequence_to_circuit(const CyclicSequence& s, int rank);

// Maps the edges of a circuit in G_l to the vertices of a cycle in G_{l+1}.
// The corresponding sequence is unchanged.
Circuit lift_circuit(const Circuit& c);

}  // namespace debruijn

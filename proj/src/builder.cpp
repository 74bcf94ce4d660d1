#include "debruijn/builder.hpp"

#include <string>

#include "debruijn/error.hpp"
#include "disjoint_sets.hpp"

namespace debruijn {

namespace {

std::string label(Edge e, int rank) { return word_to_string(e.label, rank); }

// Determines e1, e2 and e' for a bridge e. Every one of them is forced: the
// bridge's tail keeps a single out-edge in the working set, its head a single
// in-edge, and the overlap of their far endpoints fixes e'.
// A null `removed` stands for the complement of the working set.
MergeSwap resolve_swap(const EdgeSet& working, Edge bridge, const EdgeSet* removed) {
  const DeBruijnGraph g(working.rank());
  const int rank = working.rank();
  const auto [v1, v2] = g.endpoints(bridge);

  if (working.out_degree(v1) != 1) {
    throw InvariantViolation("bridge " + label(bridge, rank) + ": tail has out-degree " +
                             std::to_string(working.out_degree(v1)) + " in working set, expected 1");
  }
  if (working.in_degree(v2) != 1) {
    throw InvariantViolation("bridge " + label(bridge, rank) + ": head has in-degree " +
                             std::to_string(working.in_degree(v2)) + " in working set, expected 1");
  }
  const auto [red_out, blue_out] = g.out_edges(v1);
  const Edge e1 = working.contains(red_out) ? red_out : blue_out;
  const auto [in0, in1] = g.in_edges(v2);
  const Edge e2 = working.contains(in0) ? in0 : in1;

  const Vertex u1 = g.head(e1);
  const Vertex u2 = g.tail(e2);
  const auto partner = g.edge_between(u2, u1);
  if (!partner) {
    throw InvariantViolation("bridge " + label(bridge, rank) + ": no edge joins the far endpoints");
  }
  if (working.contains(*partner) || (removed != nullptr && !removed->contains(*partner))) {
    throw InvariantViolation("bridge " + label(bridge, rank) + ": partner edge " + label(*partner, rank) +
                             " is not in the removed set");
  }
  if (edge_color(e1) == edge_color(bridge) || edge_color(e2) != edge_color(bridge) ||
      edge_color(*partner) != edge_color(e1)) {
    throw InvariantViolation("bridge " + label(bridge, rank) + ": swap edge colours are inconsistent");
  }
  return {bridge, e1, e2, *partner};
}

void apply_swap(EdgeSet& working, const MergeSwap& s) {
  working.erase(s.removed_out);
  working.erase(s.removed_in);
  working.insert(s.bridge);
  working.insert(s.partner);
}

bool has_degree(const EdgeSet& edges, Vertex v) { return edges.out_degree(v) + edges.in_degree(v) > 0; }

Circuit build_recursive(std::uint64_t n, int rank, int imbalance) {
  if (rank == 2) return base_circuit(n, imbalance);
  const std::uint64_t edges = std::uint64_t{1} << rank;
  if (n == edges) return eulerian_circuit(rank);
  if (n <= edges / 2) return lift_circuit(build_recursive(n, rank - 1, imbalance));

  // Remove a short cycle of opposite imbalance and splice what remains.
  const Circuit removed = lift_circuit(build_recursive(edges - n, rank - 1, -imbalance));
  EdgeSet working = EdgeSet::from_circuit(removed).complement();
  connect_components(working);
  return eulerian_circuit(working);
}

CyclicSequence alternating(std::uint64_t n) {
  std::vector<std::uint8_t> bits(n);
  for (std::uint64_t i = 0; i < n; ++i) bits[i] = static_cast<std::uint8_t>(i & 1U);
  if (n % 2 == 1) bits.back() = 0;
  return CyclicSequence(std::move(bits));
}

int ceil_log2(std::uint64_t n) {
  int r = 0;
  while ((std::uint64_t{1} << r) < n) ++r;
  return r;
}

}  // namespace

MergeResult merge_components(const EdgeSet& working, const EdgeSet& removed) {
  if (working.rank() != removed.rank()) throw InvalidArgument("edge sets of different rank");
  for (Edge e : removed.edges()) {
    if (working.contains(e)) throw InvalidArgument("working and removed edge sets overlap");
  }
  const ComponentLabels labels = component_labels(working);
  const DeBruijnGraph g(working.rank());
  for (Edge e : removed.edges()) {
    const auto [tail, head] = g.endpoints(e);
    if (!has_degree(working, tail) || !has_degree(working, head)) continue;
    if (labels.of_vertex[tail.label] == labels.of_vertex[head.label]) continue;

    MergeResult result{working, removed, resolve_swap(working, e, &removed)};
    apply_swap(result.working, result.swap);
    result.removed.insert(result.swap.removed_out);
    result.removed.insert(result.swap.removed_in);
    result.removed.erase(result.swap.bridge);
    result.removed.erase(result.swap.partner);
    return result;
  }
  throw InvariantViolation("no removed edge joins two components of the working set");
}

std::vector<MergeSwap> connect_components(EdgeSet& working) {
  const int rank = working.rank();
  const ComponentLabels labels = component_labels(working);
  std::vector<MergeSwap> swaps;
  if (labels.count <= 1) return swaps;

  detail::DisjointSets sets(labels.count);
  std::size_t remaining = labels.count;
  const Label vmask = (Label{1} << (rank - 1)) - 1;
  const Label edge_end = static_cast<Label>(std::uint64_t{1} << rank);

  // Components only ever merge, so an edge that fails to bridge stays that
  // way; one ascending pass finds every bridge in order.
  for (Label x = 0; x < edge_end && remaining > 1; ++x) {
    const Edge e{x};
    if (working.contains(e)) continue;
    const Label tail = x >> 1;
    const Label head = x & vmask;
    const std::uint32_t ct = labels.of_vertex[tail];
    const std::uint32_t ch = labels.of_vertex[head];
    if (ct == ComponentLabels::kNone || ch == ComponentLabels::kNone) continue;
    if (sets.find(ct) == sets.find(ch)) continue;

    const MergeSwap swap = resolve_swap(working, e, nullptr);
    apply_swap(working, swap);
    sets.unite(ct, ch);
    --remaining;
    swaps.push_back(swap);
  }
  if (remaining > 1) {
    throw InvariantViolation(std::to_string(remaining) + " components remain with no bridging edge");
  }
  return swaps;
}

Circuit base_circuit(std::uint64_t n, int imbalance) {
  // Edges of G_2: 00 (loop at 0, red), 01 (blue), 10 (red), 11 (loop at 1, blue).
  auto circuit = [](std::initializer_list<Label> labels) {
    Circuit c{2, {}};
    for (Label x : labels) c.edges.push_back(Edge{x});
    return c;
  };
  if (n == 1 && imbalance == 1) return circuit({0b00});
  if (n == 1 && imbalance == -1) return circuit({0b11});
  if (n == 2 && imbalance == 0) return circuit({0b01, 0b10});
  if (n == 3 && imbalance == 1) return circuit({0b00, 0b01, 0b10});
  if (n == 3 && imbalance == -1) return circuit({0b01, 0b11, 0b10});
  if (n == 4 && imbalance == 0) return circuit({0b01, 0b11, 0b10, 0b00});
  throw InvalidArgument("no base circuit in G_2 with length " + std::to_string(n) + " and imbalance " +
                        std::to_string(imbalance));
}

Circuit build_circuit(std::uint64_t n, int rank, int imbalance) {
  if (rank < 2) throw InvalidArgument("circuit rank must be >= 2");
  if (rank > kRankGuard) {
    throw GuardExceeded("circuit rank " + std::to_string(rank) + " exceeds guard " + std::to_string(kRankGuard));
  }
  if (n < 1 || n > (std::uint64_t{1} << rank)) {
    throw Infeasible("circuit length " + std::to_string(n) + " outside [1, 2^" + std::to_string(rank) + "]");
  }
  const bool parity_ok = (n % 2 == 0) ? imbalance == 0 : (imbalance == 1 || imbalance == -1);
  if (!parity_ok) {
    throw Infeasible("imbalance " + std::to_string(imbalance) + " incompatible with length " + std::to_string(n));
  }
  Circuit c = build_recursive(n, rank, imbalance);
  if (c.size() != n || c.imbalance() != imbalance || !is_valid_circuit(c)) {
    throw InvariantViolation("constructed circuit has the wrong length, imbalance or structure");
  }
  return c;
}

CyclicSequence generate(const Parameters& p, BalanceMode mode, int odd_imbalance) {
  check_parameters(p);
  if (odd_imbalance != 1 && odd_imbalance != -1) throw InvalidArgument("odd imbalance must be +1 or -1");
  if (const Feasibility f = feasible(p, mode); !f) {
    throw Infeasible("no sequence for (n=" + std::to_string(p.n) + ", l=" + std::to_string(p.l) +
                     ", k=" + std::to_string(p.k) + ", " + std::string(to_string(mode)) + "): " + f.reason);
  }
  if (p.n > kGenerateLengthGuard) throw GuardExceeded("n exceeds generation guard 2^24");
  if (p.l > kRankGuard) throw GuardExceeded("l exceeds generation guard 24");

  if (p.n % 2 == 1 && odd_imbalance == -1) {
    return complement(generate(p, mode, +1));
  }
  const int imbalance = p.n % 2 == 0 ? 0 : 1;

  CyclicSequence s = CyclicSequence("0");
  if (p.l == 1) {
    s = alternating(p.n);
  } else {
    const std::uint64_t block = std::uint64_t{1} << p.l;
    const std::uint64_t blocks = (p.n + block - 1) / block;  // ceil(n / 2^l)
    const std::uint64_t base = p.n - (blocks - 1) * block;
    if (blocks == 1) {
      // Lifting leaves the sequence unchanged, so the lowest rank that holds
      // n edges yields the same result as rank l.
      const int rank = std::max(2, ceil_log2(base));
      s = circuit_to_sequence(build_circuit(base, rank, imbalance));
    } else {
      s = circuit_to_sequence(build_circuit(base, p.l, imbalance));
      const CyclicSequence classical = circuit_to_sequence(eulerian_circuit(p.l));
      const Word prefix = window_at(s, 0, p.l);
      std::size_t shift = 0;
      while (window_at(classical, shift, p.l) != prefix) ++shift;
      const CyclicSequence aligned = classical.rotated(shift);
      std::vector<std::uint8_t> bits(s.bits().begin(), s.bits().end());
      bits.reserve(p.n);
      for (std::uint64_t i = 1; i < blocks; ++i) bits.insert(bits.end(), aligned.bits().begin(), aligned.bits().end());
      s = CyclicSequence(std::move(bits));
    }
  }

  const VerificationReport report = verify(s, p.l, p.k, mode);
  if (!report.passed || s.size() != p.n || balance(s).imbalance != imbalance) {
    throw InvariantViolation("generated sequence failed verification: " + report.failure);
  }
  return s;
}

}  // namespace debruijn

#pragma once

// Constructive generation of (almost-)balanced generalized de Bruijn
// sequences.
//
// A circuit of length n in G_l with red-minus-blue count `imbalance` is built
// by descending on the rank: short circuits are lifted from G_{l-1}; long ones
// are obtained by removing a lifted short cycle from G_l and splicing the
// remaining Eulerian pieces together with edge swaps. Longer sequences (k > 1)
// append aligned classical de Bruijn sequences.

#include <cstdint>
#include <vector>

#include "debruijn/graph.hpp"
#include "debruijn/seqcore.hpp"

namespace debruijn {

inline constexpr std::uint64_t kGenerateLengthGuard = std::uint64_t{1} << 24;

// One splice. `bridge` (e) joins two components of the working set; it enters
// together with `partner` (e') while `removed_out` (e1, the other out-edge of
// the bridge's tail) and `removed_in` (e2, the other in-edge of its head)
// leave.
struct MergeSwap {
  Edge bridge;
  Edge removed_out;
  Edge removed_in;
  Edge partner;

  friend bool operator==(const MergeSwap&, const MergeSwap&) = default;
};

struct MergeResult {
  EdgeSet working;
  EdgeSet removed;
  MergeSwap swap;
};

// A single swap on disjoint `working` (all components Eulerian) and `removed`
// edge sets. The bridge is the least-labelled edge of `removed` whose
// endpoints lie in different components of `working`. Throws
// InvariantViolation if no bridge exists or a forced edge is not where the
// construction requires it.
MergeResult merge_components(const EdgeSet& working, const EdgeSet& removed);

// Repeats the swap, taking the removed set to be the complement of `working`,
// until `working` is connected. Returns the swaps in order.
std::vector<MergeSwap> connect_components(EdgeSet& working);

// Circuits of length 1..4 in G_2: "0", "01", "001"/"011", "0011".
Circuit base_circuit(std::uint64_t n, int imbalance);

// Circuit of length n in G_rank with red - blue == imbalance. Requires
// 1 <= n <= 2^rank, 2 <= rank <= kRankGuard, and imbalance == 0 for even n,
// +-1 for odd n.
Circuit build_circuit(std::uint64_t n, int rank, int imbalance);

// A sequence passing verify(s, p.l, p.k, mode). For odd n, `odd_imbalance`
// (+1 or -1) selects an extra zero or an extra one; it is ignored for even n.
// Throws Infeasible naming the violated condition, GuardExceeded beyond
// n = 2^24 or l = 24.
CyclicSequence generate(const Parameters& p, BalanceMode mode, int odd_imbalance = +1);

}  // namespace debruijn

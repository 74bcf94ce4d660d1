#pragma once

// Exhaustive enumeration of generalized de Bruijn sequences for small n.
// Serves as the independent oracle for the constructive builder.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "debruijn/seqcore.hpp"

namespace debruijn {

inline constexpr std::uint64_t kCensusGuard = 28;
inline constexpr std::uint64_t kCensusDefaultGuard = 20;

struct CensusQuery {
  Parameters p;
  BalanceMode mode = BalanceMode::Balanced;
  // Report one canonical (least) rotation per rotation class.
  bool up_to_rotation = false;
};

struct CensusOptions {
  // Worker threads for count(); 0 picks the hardware concurrency.
  unsigned threads = 1;
  bool collect_witnesses = false;
};

struct CensusResult {
  std::uint64_t count = 0;
  std::optional<std::vector<CyclicSequence>> witnesses;
};

// Calls `visit` for every matching sequence in ascending order; stops early
// when `visit` returns false. Throws GuardExceeded for n > kCensusGuard.
void enumerate(const CensusQuery& q, const std::function<bool(const CyclicSequence&)>& visit);

// At most `limit` sequences (0 = all), ascending.
std::vector<CyclicSequence> enumerate_all(const CensusQuery& q, std::size_t limit = 0);

CensusResult count(const CensusQuery& q, const CensusOptions& options = {});

// True iff feasibility agrees with a non-empty census and, when feasible, the
// canonical rotation of the generated sequence is among the enumerated
// classes.
bool oracle_check(const Parameters& p, BalanceMode mode);

// Record (n, l, k, mode, up_to_rotation, count).
std::string census_tsv_header();
std::string census_tsv_row(const CensusQuery& q, std::uint64_t count);
std::string census_json(const CensusQuery& q, std::uint64_t count);

}  // namespace debruijn

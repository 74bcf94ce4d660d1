#pragma once

// Cyclic bit sequences, window statistics and the feasibility conditions for
// (almost-)balanced generalized de Bruijn sequences.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace debruijn {

// An l-bit window packed most-significant-first: the bit at the window's
// start position is the high bit, so numeric order equals lexicographic order.
using Word = std::uint64_t;

inline constexpr int kMaxPackedWindow = 64;
inline constexpr int kHistogramGuard = 30;

// A non-empty cyclic string of bits. Immutable once constructed.
class CyclicSequence {
 public:
  // Parses a plain string of '0'/'1' characters. Throws ParseError.
  explicit CyclicSequence(std::string_view text);
  // Throws InvalidArgument if empty or any entry is not 0/1.
  explicit CyclicSequence(std::vector<std::uint8_t> bits);

  std::size_t size() const noexcept { return bits_.size(); }
  // Cyclic access: index is reduced modulo size().
  int operator[](std::size_t i) const noexcept { return bits_[i % bits_.size()]; }
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }

  // The sequence read starting at position `shift`.
  CyclicSequence rotated(std::size_t shift) const;
  CyclicSequence concatenated(const CyclicSequence& tail) const;
  std::string str() const;

  friend bool operator==(const CyclicSequence&, const CyclicSequence&) = default;
  friend auto operator<=>(const CyclicSequence&, const CyclicSequence&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

struct Parameters {
  std::uint64_t n = 1;  // sequence length
  int l = 1;            // window length
  std::uint64_t k = 1;  // maximum window multiplicity
};

// Throws InvalidArgument unless n, l, k are all positive.
void check_parameters(const Parameters& p);

enum class BalanceMode { Balanced, AlmostBalanced, Unconstrained };

std::string_view to_string(BalanceMode mode);
// Accepts "balanced", "almost", "almost-balanced", "unconstrained".
BalanceMode parse_balance_mode(std::string_view text);

struct BalanceReport {
  std::size_t zeros = 0;
  std::size_t ones = 0;
  // zeros - ones
  std::int64_t imbalance = 0;

  friend bool operator==(const BalanceReport&, const BalanceReport&) = default;
};

// Dense occurrence counts of every l-bit word.
struct WindowHistogram {
  int l = 0;
  std::vector<std::uint32_t> counts;  // size 2^l

  std::uint32_t max_multiplicity() const;
  // Number of distinct words occurring exactly `multiplicity` times.
  std::size_t words_with(std::uint32_t multiplicity) const;

  friend bool operator==(const WindowHistogram&, const WindowHistogram&) = default;
};

struct VerificationReport {
  bool passed = false;
  std::uint64_t max_multiplicity = 0;
  // Lexicographically least window attaining max_multiplicity.
  std::string worst_window;
  // Set only when max_multiplicity exceeds k.
  std::optional<std::string> offending_window;
  BalanceReport balance;
  // Empty when passed; otherwise names the failed condition.
  std::string failure;

  // Flat record: pass, max_multiplicity, worst_window, zeros, ones.
  std::string to_json() const;
  std::string to_text() const;
};

struct Feasibility {
  bool feasible = false;
  std::string reason;  // empty when feasible

  explicit operator bool() const noexcept { return feasible; }
};

// Window of length l starting at i, wrapping cyclically (periodically when
// l > n). Requires i < n and 1 <= l <= 64; throws InvalidArgument otherwise.
Word window_at(const CyclicSequence& s, std::size_t i, int l);

// Throws GuardExceeded for l > kHistogramGuard, InvalidArgument for l < 1.
WindowHistogram window_histogram(const CyclicSequence& s, int l);

BalanceReport balance(const CyclicSequence& s);

VerificationReport verify(const CyclicSequence& s, int l, std::uint64_t k, BalanceMode mode);

Feasibility feasible(const Parameters& p, BalanceMode mode);

CyclicSequence canonical_rotation(const CyclicSequence& s);
// Smallest p > 0 with rotated(p) == s.
std::size_t period(const CyclicSequence& s);
CyclicSequence complement(const CyclicSequence& s);

// l-bit word rendered as a bit string, high bit first.
std::string word_to_string(Word w, int l);

}  // namespace debruijn

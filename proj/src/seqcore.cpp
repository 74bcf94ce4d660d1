#include "debruijn/seqcore.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "debruijn/error.hpp"

namespace debruijn {

namespace {

Word low_mask(int bits) {
  return bits >= 64 ? ~Word{0} : (Word{1} << bits) - 1;
}

// ceil(n / 2^l) without overflow.
std::uint64_t min_multiplicity(std::uint64_t n, int l) {
  if (l >= 64) return n == 0 ? 0 : 1;
  return (n >> l) + ((n & low_mask(l)) != 0 ? 1 : 0);
}

std::string read_window(const CyclicSequence& s, std::size_t start, std::uint64_t length) {
  std::string out;
  out.reserve(length);
  for (std::uint64_t j = 0; j < length; ++j) out.push_back(s[start + j] ? '1' : '0');
  return out;
}

struct Multiplicity {
  std::uint64_t count = 0;
  std::size_t position = 0;  // a start position of the worst window
};

// Maximum multiplicity over the cyclic windows of length `width` <= 64,
// reporting the least word that attains it.
Multiplicity packed_multiplicity(const CyclicSequence& s, int width) {
  const std::size_t n = s.size();
  const Word mask = low_mask(width);
  std::vector<Word> words(n);
  Word w = window_at(s, 0, width);
  for (std::size_t i = 0; i < n; ++i) {
    words[i] = w;
    w = ((w << 1) | static_cast<Word>(s[i + width])) & mask;
  }

  Word best_word = 0;
  std::uint64_t best = 0;
  if (width <= 24 && (std::size_t{1} << width) <= 2 * n) {
    std::vector<std::uint32_t> counts(std::size_t{1} << width, 0);
    for (Word x : words) ++counts[x];
    for (std::size_t x = 0; x < counts.size(); ++x) {
      if (counts[x] > best) {
        best = counts[x];
        best_word = x;
      }
    }
  } else {
    std::vector<Word> sorted = words;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size();) {
      std::size_t j = i;
      while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
      if (j - i > best) {
        best = j - i;
        best_word = sorted[i];
      }
      i = j;
    }
  }
  const auto pos = static_cast<std::size_t>(std::find(words.begin(), words.end(), best_word) - words.begin());
  return {best, pos};
}

// Same as packed_multiplicity for windows too wide to pack (64 < width <= n).
Multiplicity wide_multiplicity(const CyclicSequence& s, std::size_t width) {
  const std::size_t n = s.size();
  auto compare = [&](std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < width; ++j) {
      const int x = s[a + j];
      const int y = s[b + j];
      if (x != y) return x - y;
    }
    return 0;
  };
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return compare(a, b) < 0; });
  Multiplicity best;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && compare(order[i], order[j]) == 0) ++j;
    if (j - i > best.count) best = {j - i, order[i]};
    i = j;
  }
  return best;
}

}  // namespace

CyclicSequence::CyclicSequence(std::string_view text) {
  if (text.empty()) throw ParseError("empty bit string");
  bits_.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '0' && c != '1') {
      throw ParseError("invalid character '" + std::string(1, c) + "' at offset " + std::to_string(i) +
                       " (expected 0 or 1)");
    }
    bits_.push_back(static_cast<std::uint8_t>(c - '0'));
  }
}

CyclicSequence::CyclicSequence(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw InvalidArgument("cyclic sequence must have length >= 1");
  for (auto b : bits_) {
    if (b > 1) throw InvalidArgument("bit value out of range");
  }
}

CyclicSequence CyclicSequence::rotated(std::size_t shift) const {
  std::vector<std::uint8_t> out(bits_.size());
  shift %= bits_.size();
  std::rotate_copy(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(shift), bits_.end(), out.begin());
  return CyclicSequence(std::move(out));
}

CyclicSequence CyclicSequence::concatenated(const CyclicSequence& tail) const {
  std::vector<std::uint8_t> out = bits_;
  out.insert(out.end(), tail.bits_.begin(), tail.bits_.end());
  return CyclicSequence(std::move(out));
}

std::string CyclicSequence::str() const {
  std::string out(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) out[i] = bits_[i] ? '1' : '0';
  return out;
}

void check_parameters(const Parameters& p) {
  if (p.n < 1 || p.l < 1 || p.k < 1) {
    throw InvalidArgument("parameters must be positive: n=" + std::to_string(p.n) + " l=" + std::to_string(p.l) +
                          " k=" + std::to_string(p.k));
  }
}

std::string_view to_string(BalanceMode mode) {
  switch (mode) {
    case BalanceMode::Balanced: return "balanced";
    case BalanceMode::AlmostBalanced: return "almost";
    case BalanceMode::Unconstrained: return "unconstrained";
  }
  return "unknown";
}

BalanceMode parse_balance_mode(std::string_view text) {
  if (text == "balanced") return BalanceMode::Balanced;
  if (text == "almost" || text == "almost-balanced") return BalanceMode::AlmostBalanced;
  if (text == "unconstrained") return BalanceMode::Unconstrained;
  throw ParseError("unknown balance mode '" + std::string(text) + "'");
}

std::uint32_t WindowHistogram::max_multiplicity() const {
  return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

std::size_t WindowHistogram::words_with(std::uint32_t multiplicity) const {
  return static_cast<std::size_t>(std::count(counts.begin(), counts.end(), multiplicity));
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["pass"] = passed;
  j["max_multiplicity"] = max_multiplicity;
  j["worst_window"] = worst_window;
  j["zeros"] = balance.zeros;
  j["ones"] = balance.ones;
  return j.dump();
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "result: " << (passed ? "pass" : "fail") << '\n';
  if (!passed) out << "reason: " << failure << '\n';
  out << "max_multiplicity: " << max_multiplicity << '\n'
      << "worst_window: " << worst_window << '\n'
      << "zeros: " << balance.zeros << '\n'
      << "ones: " << balance.ones << '\n';
  return out.str();
}

Word window_at(const CyclicSequence& s, std::size_t i, int l) {
  if (i >= s.size()) {
    throw InvalidArgument("window index " + std::to_string(i) + " out of range for length " + std::to_string(s.size()));
  }
  if (l < 1 || l > kMaxPackedWindow) {
    throw InvalidArgument("window length " + std::to_string(l) + " outside [1, 64]");
  }
  Word w = 0;
  for (int j = 0; j < l; ++j) w = (w << 1) | static_cast<Word>(s[i + static_cast<std::size_t>(j)]);
  return w;
}

WindowHistogram window_histogram(const CyclicSequence& s, int l) {
  if (l < 1) throw InvalidArgument("window length must be >= 1");
  if (l > kHistogramGuard) {
    throw GuardExceeded("histogram window length " + std::to_string(l) + " exceeds guard " +
                        std::to_string(kHistogramGuard));
  }
  WindowHistogram h{l, std::vector<std::uint32_t>(std::size_t{1} << l, 0)};
  const Word mask = low_mask(l);
  Word w = window_at(s, 0, l);
  for (std::size_t i = 0; i < s.size(); ++i) {
    ++h.counts[w];
    w = ((w << 1) | static_cast<Word>(s[i + static_cast<std::size_t>(l)])) & mask;
  }
  return h;
}

BalanceReport balance(const CyclicSequence& s) {
  BalanceReport r;
  for (auto b : s.bits()) (b ? r.ones : r.zeros)++;
  r.imbalance = static_cast<std::int64_t>(r.zeros) - static_cast<std::int64_t>(r.ones);
  return r;
}

VerificationReport verify(const CyclicSequence& s, int l, std::uint64_t k, BalanceMode mode) {
  VerificationReport report;
  report.balance = balance(s);
  if (l < 1) {
    report.failure = "window length must be >= 1";
    return report;
  }

  // For l >= n every window is fixed by its start rotation, so multiplicities
  // equal those of the length-n windows.
  const std::size_t width = std::min<std::size_t>(static_cast<std::size_t>(l), s.size());
  const Multiplicity m = width <= static_cast<std::size_t>(kMaxPackedWindow)
                             ? packed_multiplicity(s, static_cast<int>(width))
                             : wide_multiplicity(s, width);
  report.max_multiplicity = m.count;
  report.worst_window = read_window(s, m.position, static_cast<std::uint64_t>(l));

  if (m.count > k) {
    report.offending_window = report.worst_window;
    report.failure = "window " + report.worst_window + " occurs " + std::to_string(m.count) + " times (k = " +
                     std::to_string(k) + ")";
  } else if (mode == BalanceMode::Balanced && report.balance.imbalance != 0) {
    report.failure = "not balanced: " + std::to_string(report.balance.zeros) + " zeros, " +
                     std::to_string(report.balance.ones) + " ones";
  } else if (mode == BalanceMode::AlmostBalanced &&
             (report.balance.imbalance > 1 || report.balance.imbalance < -1)) {
    report.failure = "not almost-balanced: " + std::to_string(report.balance.zeros) + " zeros, " +
                     std::to_string(report.balance.ones) + " ones";
  }
  report.passed = report.failure.empty();
  return report;
}

Feasibility feasible(const Parameters& p, BalanceMode mode) {
  check_parameters(p);
  if (mode == BalanceMode::Balanced && p.n % 2 != 0) return {false, "n is odd"};
  if (p.k < min_multiplicity(p.n, p.l)) return {false, "k < n/2^l"};
  return {true, {}};
}

CyclicSequence canonical_rotation(const CyclicSequence& s) {
  // Booth's least-rotation scan over the doubled string.
  const std::size_t n = s.size();
  const std::size_t len = 2 * n;
  std::vector<std::ptrdiff_t> fail(len, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < len; ++j) {
    const int sj = s[j];
    std::ptrdiff_t i = fail[j - k - 1];
    while (i != -1 && sj != s[k + static_cast<std::size_t>(i) + 1]) {
      if (sj < s[k + static_cast<std::size_t>(i) + 1]) k = j - static_cast<std::size_t>(i) - 1;
      i = fail[static_cast<std::size_t>(i)];
    }
    if (sj != s[k + static_cast<std::size_t>(i + 1)]) {
      if (sj < s[k]) k = j;
      fail[j - k] = -1;
    } else {
      fail[j - k] = i + 1;
    }
  }
  return s.rotated(k % n);
}

std::size_t period(const CyclicSequence& s) {
  // KMP border of the linear string gives the smallest cyclic period.
  const std::size_t n = s.size();
  std::vector<std::size_t> border(n + 1, 0);
  for (std::size_t i = 1, b = 0; i < n; ++i) {
    while (b > 0 && s[i] != s[b]) b = border[b];
    if (s[i] == s[b]) ++b;
    border[i + 1] = b;
  }
  const std::size_t p = n - border[n];
  return n % p == 0 ? p : n;
}

CyclicSequence complement(const CyclicSequence& s) {
  std::vector<std::uint8_t> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = static_cast<std::uint8_t>(1 - s[i]);
  return CyclicSequence(std::move(out));
}

std::string word_to_string(Word w, int l) {
  std::string out(static_cast<std::size_t>(l), '0');
  for (int j = 0; j < l; ++j) {
    if ((w >> (l - 1 - j)) & 1U) out[static_cast<std::size_t>(j)] = '1';
  }
  return out;
}

}  // namespace debruijn

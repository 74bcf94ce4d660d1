#include <doctest.h>

#include <random>

#include "debruijn/error.hpp"
#include "debruijn/seqcore.hpp"
#include "oracle.hpp"

using namespace debruijn;

namespace {

const CyclicSequence kGolden("0000011101010010001011001101111100000101101111101001");

CyclicSequence random_sequence(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint8_t> bits(n);
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1U);
  return CyclicSequence(std::move(bits));
}

oracle::Mode to_oracle(BalanceMode m) {
  switch (m) {
    case BalanceMode::Balanced: return oracle::Mode::Balanced;
    case BalanceMode::AlmostBalanced: return oracle::Mode::Almost;
    case BalanceMode::Unconstrained: return oracle::Mode::Unconstrained;
  }
  return oracle::Mode::Unconstrained;
}

}  // namespace

TEST_CASE("parsing and text round trip") {
  CHECK(CyclicSequence("0110").str() == "0110");
  CHECK_THROWS_AS(CyclicSequence("0102"), ParseError);
  CHECK_THROWS_AS(CyclicSequence(""), ParseError);
  CHECK_THROWS_AS(CyclicSequence(std::vector<std::uint8_t>{}), InvalidArgument);
  CHECK_THROWS_AS(CyclicSequence(std::vector<std::uint8_t>{0, 2}), InvalidArgument);
  CHECK(CyclicSequence("1100").rotated(2).str() == "0011");
}

TEST_CASE("window_at wraps cyclically") {
  CHECK(window_at(CyclicSequence("0110"), 3, 2) == 0b00);
  CHECK(window_at(kGolden, 0, 5) == 0b00000);
  CHECK(window_at(CyclicSequence("01"), 0, 5) == 0b01010);
  CHECK(word_to_string(window_at(CyclicSequence("01"), 1, 5), 5) == "10101");
  CHECK_THROWS_AS(window_at(CyclicSequence("01"), 2, 1), InvalidArgument);
  CHECK_THROWS_AS(window_at(CyclicSequence("01"), 0, 0), InvalidArgument);
}

TEST_CASE("window_histogram") {
  const auto h = window_histogram(CyclicSequence("0011"), 2);
  CHECK(h.counts == std::vector<std::uint32_t>{1, 1, 1, 1});

  const auto p2 = window_histogram(CyclicSequence("0101"), 2);
  CHECK(p2.counts == std::vector<std::uint32_t>{0, 2, 2, 0});

  const auto golden = window_histogram(kGolden, 5);
  CHECK(golden.max_multiplicity() == 2);
  CHECK(golden.words_with(1) == 12);
  CHECK(golden.words_with(2) == 20);

  CHECK_THROWS_AS(window_histogram(kGolden, 31), GuardExceeded);
  CHECK_THROWS_AS(window_histogram(kGolden, 0), InvalidArgument);
}

TEST_CASE("window_histogram agrees with substring counting") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 40;
    const int l = 1 + static_cast<int>(rng() % 12);
    const CyclicSequence s = random_sequence(rng, n);
    const auto h = window_histogram(s, l);
    const auto expected = oracle::window_counts(s.str(), static_cast<std::size_t>(l));
    std::uint64_t total = 0;
    for (std::size_t w = 0; w < h.counts.size(); ++w) {
      total += h.counts[w];
      const auto it = expected.find(word_to_string(w, l));
      CHECK(h.counts[w] == (it == expected.end() ? 0 : it->second));
    }
    CHECK(total == n);

    // Cyclic windows form the same multiset from every starting point.
    CHECK(window_histogram(s.rotated(rng() % n), l) == h);
  }
}

TEST_CASE("balance") {
  CHECK(balance(CyclicSequence("01")) == BalanceReport{1, 1, 0});
  CHECK(balance(kGolden) == BalanceReport{26, 26, 0});
  CHECK(balance(CyclicSequence("001")) == BalanceReport{2, 1, 1});
}

TEST_CASE("verify") {
  const auto golden = verify(kGolden, 5, 2, BalanceMode::Balanced);
  CHECK(golden.passed);
  CHECK(golden.max_multiplicity == 2);
  CHECK_FALSE(golden.offending_window.has_value());

  const auto repeated = verify(CyclicSequence("0101"), 2, 1, BalanceMode::Balanced);
  CHECK_FALSE(repeated.passed);
  CHECK(repeated.offending_window == "01");
  CHECK(repeated.max_multiplicity == 2);

  CHECK(verify(CyclicSequence("0011"), 2, 1, BalanceMode::Balanced).passed);

  CHECK_FALSE(verify(CyclicSequence("001"), 1, 2, BalanceMode::Balanced).passed);
  CHECK(verify(CyclicSequence("001"), 1, 2, BalanceMode::AlmostBalanced).passed);
  CHECK_FALSE(verify(CyclicSequence("0001"), 2, 4, BalanceMode::AlmostBalanced).passed);
  CHECK(verify(CyclicSequence("0001"), 2, 4, BalanceMode::Unconstrained).passed);
}

TEST_CASE("verify report serialises as a flat record") {
  const auto r = verify(kGolden, 5, 1, BalanceMode::Balanced);
  CHECK_FALSE(r.passed);
  CHECK(r.to_json() == R"({"pass":false,"max_multiplicity":2,"worst_window":"00000","zeros":26,"ones":26})");
}

TEST_CASE("verify matches the brute-force definition, including l > n and wide windows") {
  std::mt19937_64 rng(11);
  const BalanceMode modes[] = {BalanceMode::Balanced, BalanceMode::AlmostBalanced, BalanceMode::Unconstrained};
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 24;
    const int l = 1 + static_cast<int>(rng() % 30);
    const std::uint64_t k = 1 + rng() % 3;
    const BalanceMode mode = modes[rng() % 3];
    const std::string s = random_sequence(rng, n).str();
    const auto r = verify(CyclicSequence(s), l, k, mode);
    CHECK(r.passed == oracle::satisfies(s, static_cast<std::size_t>(l), static_cast<int>(k), to_oracle(mode)));
    CHECK(r.max_multiplicity == static_cast<std::uint64_t>(oracle::max_multiplicity(s, static_cast<std::size_t>(l))));
  }
  // Windows wider than 64 bits take the unpacked path.
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 70 + rng() % 30;
    const std::string s = random_sequence(rng, n).str();
    const int l = 65 + static_cast<int>(rng() % 10);
    CHECK(verify(CyclicSequence(s), l, 1, BalanceMode::Unconstrained).max_multiplicity ==
          static_cast<std::uint64_t>(oracle::max_multiplicity(s, static_cast<std::size_t>(l))));
  }
  CHECK(verify(CyclicSequence(std::string(80, '1')), 70, 79, BalanceMode::Unconstrained).max_multiplicity == 80);
}

TEST_CASE("verify is monotone in k") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const CyclicSequence s = random_sequence(rng, 2 + rng() % 20);
    const int l = 1 + static_cast<int>(rng() % 5);
    for (std::uint64_t k = 1; k < 6; ++k) {
      if (verify(s, l, k, BalanceMode::Balanced).passed) {
        CHECK(verify(s, l, k + 1, BalanceMode::Balanced).passed);
      }
    }
  }
}

TEST_CASE("feasible") {
  CHECK(feasible({52, 5, 2}, BalanceMode::Balanced).feasible);
  const auto f = feasible({10, 2, 2}, BalanceMode::Balanced);
  CHECK_FALSE(f.feasible);
  CHECK(f.reason == "k < n/2^l");
  CHECK(feasible({7, 3, 1}, BalanceMode::AlmostBalanced).feasible);
  CHECK(feasible({7, 3, 1}, BalanceMode::Balanced).reason == "n is odd");
  CHECK(feasible({9, 3, 1}, BalanceMode::Unconstrained).reason == "k < n/2^l");
  CHECK(feasible({1000, 80, 1}, BalanceMode::Balanced).feasible);
  CHECK_THROWS_AS(feasible({0, 1, 1}, BalanceMode::Balanced), InvalidArgument);
}

TEST_CASE("canonical_rotation") {
  CHECK(canonical_rotation(CyclicSequence("1100")).str() == "0011");
  CHECK(canonical_rotation(CyclicSequence("01")).str() == "01");
  // Least of the five rotations 10110, 01101, 11010, 10101, 01011.
  CHECK(canonical_rotation(CyclicSequence("10110")).str() == "01011");

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const CyclicSequence s = random_sequence(rng, 1 + rng() % 30);
    const CyclicSequence c = canonical_rotation(s);
    CHECK(c.str() == oracle::min_rotation(s.str()));
    CHECK(canonical_rotation(c) == c);
    CHECK(canonical_rotation(s.rotated(rng() % s.size())) == c);
  }
}

TEST_CASE("period") {
  CHECK(period(CyclicSequence("0101")) == 2);
  CHECK(period(CyclicSequence("0011")) == 4);
  CHECK(period(CyclicSequence("111")) == 1);
  CHECK(period(CyclicSequence("001001")) == 3);
  CHECK(period(CyclicSequence("00100")) == 5);
}

TEST_CASE("complement") {
  CHECK(complement(CyclicSequence("001")).str() == "110");
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const CyclicSequence s = random_sequence(rng, 1 + rng() % 30);
    const CyclicSequence c = complement(s);
    CHECK(complement(c) == s);
    CHECK(balance(c).imbalance == -balance(s).imbalance);
    const int l = 1 + static_cast<int>(rng() % 6);
    const auto hs = window_histogram(s, l);
    const auto hc = window_histogram(c, l);
    const Word mask = (Word{1} << l) - 1;
    for (Word w = 0; w <= mask; ++w) CHECK(hc.counts[~w & mask] == hs.counts[w]);
  }
}

TEST_CASE("complement preserves verification for every sequence up to length 10") {
  const BalanceMode modes[] = {BalanceMode::Balanced, BalanceMode::AlmostBalanced, BalanceMode::Unconstrained};
  for (std::size_t n = 1; n <= 10; ++n) {
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      const CyclicSequence s(oracle::to_bits(x, n));
      const CyclicSequence c = complement(s);
      for (int l = 1; l <= 4; ++l) {
        for (std::uint64_t k = 1; k <= 2; ++k) {
          for (BalanceMode m : modes) REQUIRE(verify(s, l, k, m).passed == verify(c, l, k, m).passed);
        }
      }
    }
  }
}

TEST_CASE("balance mode names") {
  CHECK(parse_balance_mode("almost") == BalanceMode::AlmostBalanced);
  CHECK(parse_balance_mode(to_string(BalanceMode::Unconstrained)) == BalanceMode::Unconstrained);
  CHECK_THROWS_AS(parse_balance_mode("even"), ParseError);
}

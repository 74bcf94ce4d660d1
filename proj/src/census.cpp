#include "debruijn/census.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "debruijn/builder.hpp"
#include "debruijn/error.hpp"

namespace debruijn {

namespace {

// Window counts are tracked incrementally only up to this width.
constexpr int kIncrementalWindowLimit = 20;

// Depth-first search over bit prefixes. In rotation mode the prefixes are
// generated as prenecklaces (Fredricksen-Kessler-Maiorana), which yields each
// least rotation exactly once, in lexicographic order.
class Search {
 public:
  using Visit = std::function<bool(const CyclicSequence&)>;

  Search(const CensusQuery& q, const Visit* visit)
      : q_(q),
        n_(static_cast<int>(q.p.n)),
        l_(q.p.l),
        incremental_(q.p.l <= n_ && q.p.l <= kIncrementalWindowLimit),
        mask_(incremental_ ? (Word{1} << l_) - 1 : 0),
        visit_(visit),
        bits_(static_cast<std::size_t>(n_) + 1, 0) {
    if (incremental_) counts_.assign(std::size_t{1} << l_, 0);
    switch (q.mode) {
      case BalanceMode::Balanced: max_each_ = n_ / 2; break;
      case BalanceMode::AlmostBalanced: max_each_ = (n_ + 1) / 2; break;
      case BalanceMode::Unconstrained: max_each_ = n_; break;
    }
  }

  struct Frontier {
    std::vector<std::uint8_t> prefix;  // bits 1..depth
    int period;
    Word window;
  };

  void run() { dfs(1, 1, 0); }

  // Collects the surviving states at `depth` instead of descending further.
  std::vector<Frontier> frontier(int depth) {
    frontier_depth_ = depth;
    frontier_out_.clear();
    dfs(1, 1, 0);
    frontier_depth_ = -1;
    return std::move(frontier_out_);
  }

  void run_from(const Frontier& f) {
    Word w = 0;
    for (std::size_t i = 0; i < f.prefix.size(); ++i) {
      const int t = static_cast<int>(i) + 1;
      push(t, f.prefix[i], w);
    }
    dfs(static_cast<int>(f.prefix.size()) + 1, f.period, f.window);
  }

  std::uint64_t found() const { return found_; }
  std::vector<CyclicSequence>& witnesses() { return witnesses_; }
  void collect_witnesses() { collect_ = true; }

 private:
  // Places bit b at position t; returns false (state unchanged) if pruned.
  bool push(int t, int b, Word& w) {
    if ((b == 0 ? zeros_ : ones_) >= max_each_) return false;
    if (incremental_) {
      const Word next = ((w << 1) | static_cast<Word>(b)) & mask_;
      if (t >= l_ && counts_[next] >= q_.p.k) return false;
      if (t >= l_) ++counts_[next];
      w = next;
    }
    bits_[static_cast<std::size_t>(t)] = static_cast<std::uint8_t>(b);
    (b == 0 ? zeros_ : ones_)++;
    return true;
  }

  void pop(int t, int b, Word w) {
    if (incremental_ && t >= l_) --counts_[w];
    (b == 0 ? zeros_ : ones_)--;
  }

  void dfs(int t, int period, Word w) {
    if (stopped_) return;
    if (frontier_depth_ >= 0 && t == frontier_depth_ + 1) {
      frontier_out_.push_back({{bits_.begin() + 1, bits_.begin() + t}, period, w});
      return;
    }
    if (t > n_) {
      leaf(period, w);
      return;
    }
    const int lowest = q_.up_to_rotation ? bits_[static_cast<std::size_t>(t - period)] : 0;
    for (int b = lowest; b <= 1 && !stopped_; ++b) {
      Word next = w;
      if (!push(t, b, next)) continue;
      const int next_period = (!q_.up_to_rotation || b == bits_[static_cast<std::size_t>(t - period)]) ? period : t;
      dfs(t + 1, next_period, next);
      pop(t, b, next);
    }
  }

  void leaf(int period, Word w) {
    if (q_.up_to_rotation && n_ % period != 0) return;
    if (incremental_) {
      // Windows that wrap past the end of the linear string.
      std::vector<Word> touched;
      bool ok = true;
      for (int j = 1; j < l_; ++j) {
        w = ((w << 1) | bits_[static_cast<std::size_t>(j)]) & mask_;
        if (counts_[w] >= q_.p.k) {
          ok = false;
          break;
        }
        ++counts_[w];
        touched.push_back(w);
      }
      for (Word x : touched) --counts_[x];
      if (!ok) return;
    }
    const bool need_sequence = !incremental_ || collect_ || visit_ != nullptr;
    if (need_sequence) {
      CyclicSequence s(std::vector<std::uint8_t>(bits_.begin() + 1, bits_.end()));
      if (!incremental_ && verify(s, l_, q_.p.k, BalanceMode::Unconstrained).max_multiplicity > q_.p.k) return;
      ++found_;
      if (collect_) witnesses_.push_back(s);
      if (visit_ != nullptr && !(*visit_)(s)) stopped_ = true;
    } else {
      ++found_;
    }
  }

  const CensusQuery& q_;
  const int n_;
  const int l_;
  const bool incremental_;
  const Word mask_;
  const Visit* visit_;
  int max_each_ = 0;

  std::vector<std::uint8_t> bits_;  // 1-indexed; bits_[0] == 0 seeds the prenecklace rule
  std::vector<std::uint64_t> counts_;
  int zeros_ = 0;
  int ones_ = 0;
  std::uint64_t found_ = 0;
  bool stopped_ = false;
  bool collect_ = false;
  std::vector<CyclicSequence> witnesses_;

  int frontier_depth_ = -1;
  std::vector<Frontier> frontier_out_;
};

void check_query(const CensusQuery& q) {
  check_parameters(q.p);
  if (q.p.n > kCensusGuard) {
    throw GuardExceeded("census length " + std::to_string(q.p.n) + " exceeds guard " + std::to_string(kCensusGuard));
  }
}

}  // namespace

void enumerate(const CensusQuery& q, const std::function<bool(const CyclicSequence&)>& visit) {
  check_query(q);
  Search search(q, &visit);
  search.run();
}

std::vector<CyclicSequence> enumerate_all(const CensusQuery& q, std::size_t limit) {
  std::vector<CyclicSequence> out;
  enumerate(q, [&](const CyclicSequence& s) {
    out.push_back(s);
    return limit == 0 || out.size() < limit;
  });
  return out;
}

CensusResult count(const CensusQuery& q, const CensusOptions& options) {
  check_query(q);
  unsigned threads = options.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : options.threads;
  CensusResult result;

  if (threads <= 1 || q.p.n < 12) {
    Search search(q, nullptr);
    if (options.collect_witnesses) search.collect_witnesses();
    search.run();
    result.count = search.found();
    if (options.collect_witnesses) result.witnesses = std::move(search.witnesses());
    return result;
  }

  // Fixed-depth prefixes are disjoint subtrees; results merge in prefix order.
  const std::vector<Search::Frontier> tasks = Search(q, nullptr).frontier(8);
  std::vector<std::uint64_t> counts(tasks.size(), 0);
  std::vector<std::vector<CyclicSequence>> found(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      Search search(q, nullptr);
      if (options.collect_witnesses) search.collect_witnesses();
      search.run_from(tasks[i]);
      counts[i] = search.found();
      found[i] = std::move(search.witnesses());
    }
  };
  std::vector<std::thread> pool;
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
  for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  for (auto c : counts) result.count += c;
  if (options.collect_witnesses) {
    result.witnesses.emplace();
    for (auto& part : found) result.witnesses->insert(result.witnesses->end(), part.begin(), part.end());
  }
  return result;
}

bool oracle_check(const Parameters& p, BalanceMode mode) {
  const CensusQuery q{p, mode, true};
  const CensusResult census = count(q, {.threads = 1, .collect_witnesses = true});
  const bool is_feasible = feasible(p, mode).feasible;
  if (is_feasible != (census.count > 0)) return false;
  if (!is_feasible) return true;
  const CyclicSequence canonical = canonical_rotation(generate(p, mode));
  return std::binary_search(census.witnesses->begin(), census.witnesses->end(), canonical);
}

std::string census_tsv_header() { return "n\tl\tk\tmode\tup_to_rotation\tcount"; }

std::string census_tsv_row(const CensusQuery& q, std::uint64_t n) {
  std::ostringstream out;
  out << q.p.n << '\t' << q.p.l << '\t' << q.p.k << '\t' << to_string(q.mode) << '\t'
      << (q.up_to_rotation ? "true" : "false") << '\t' << n;
  return out.str();
}

std::string census_json(const CensusQuery& q, std::uint64_t n) {
  nlohmann::ordered_json j;
  j["n"] = q.p.n;
  j["l"] = q.p.l;
  j["k"] = q.p.k;
  j["mode"] = std::string(to_string(q.mode));
  j["up_to_rotation"] = q.up_to_rotation;
  j["count"] = n;
  return j.dump();
}

}  // namespace debruijn

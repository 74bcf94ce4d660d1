#include "debruijn/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "debruijn/builder.hpp"
#include "debruijn/census.hpp"
#include "debruijn/error.hpp"
#include "debruijn/seqcore.hpp"
#include "debruijn/stack.hpp"

namespace debruijn::cli {

namespace {

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot read file '" + path + "'");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

struct SequenceArgs {
  std::uint64_t n = 0;
  int l = 0;
  std::uint64_t k = 0;
  std::string mode_name = "balanced";
  BalanceMode mode() const { return parse_balance_mode(mode_name); }
};

void add_parameters(CLI::App* cmd, SequenceArgs& a, bool with_n) {
  if (with_n) cmd->add_option("-n", a.n, "Sequence length")->required()->check(CLI::PositiveNumber);
  cmd->add_option("-l", a.l, "Window length")->required()->check(CLI::PositiveNumber);
  cmd->add_option("-k", a.k, "Maximum window multiplicity")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--mode", a.mode_name, "balanced | almost | unconstrained")
      ->check(CLI::IsMember({"balanced", "almost", "unconstrained"}));
}

class Runner {
 public:
  Runner(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

  int run(const std::vector<std::string>& args) {
    CLI::App app{"Balanced generalized de Bruijn sequences and the (52,5,2) card stack", "debruijn"};
    app.require_subcommand(1);
    int status = kSuccess;

    SequenceArgs gen;
    int odd_imbalance = 1;
    auto* generate_cmd = app.add_subcommand("generate", "Construct a sequence");
    add_parameters(generate_cmd, gen, true);
    generate_cmd->add_option("--imbalance", odd_imbalance, "For odd n: +1 (extra zero) or -1 (extra one)")
        ->check(CLI::IsMember({1, -1}));
    generate_cmd->callback([&] {
      out_ << generate(Parameters{gen.n, gen.l, gen.k}, gen.mode(), odd_imbalance).str() << '\n';
    });

    SequenceArgs ver;
    std::string ver_seq;
    std::string ver_file;
    std::string ver_format = "text";
    auto* verify_cmd = app.add_subcommand("verify", "Check a sequence against (l, k) and a balance mode");
    add_parameters(verify_cmd, ver, false);
    verify_cmd->add_option("sequence", ver_seq, "Bit string");
    verify_cmd->add_option("--file", ver_file, "Read the bit string from a file");
    verify_cmd->add_option("--format", ver_format)->check(CLI::IsMember({"text", "json"}));
    verify_cmd->callback([&] {
      const CyclicSequence s(read_sequence(ver_seq, ver_file));
      const VerificationReport r = verify(s, ver.l, ver.k, ver.mode());
      out_ << (ver_format == "json" ? r.to_json() + "\n" : r.to_text());
      status = r.passed ? kSuccess : kVerificationFailed;
    });

    SequenceArgs cen;
    bool canonical = false;
    unsigned threads = 0;
    std::uint64_t max_n = kCensusDefaultGuard;
    std::string count_format = "text";
    std::size_t limit = 0;
    auto add_census = [&](CLI::App* cmd) {
      add_parameters(cmd, cen, true);
      cmd->add_flag("--canonical", canonical, "One representative per rotation class");
      cmd->add_option("--max-n", max_n, "Enumeration guard (at most 28)")->check(CLI::Range(1, 28));
    };
    auto* count_cmd = app.add_subcommand("count", "Count sequences by exhaustive search");
    add_census(count_cmd);
    count_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");
    count_cmd->add_option("--format", count_format)->check(CLI::IsMember({"text", "tsv", "json"}));
    count_cmd->callback([&] {
      const CensusQuery q = census_query(cen, canonical, max_n);
      const std::uint64_t c = count(q, {.threads = threads}).count;
      if (count_format == "tsv") {
        out_ << census_tsv_header() << '\n' << census_tsv_row(q, c) << '\n';
      } else if (count_format == "json") {
        out_ << census_json(q, c) << '\n';
      } else {
        out_ << c << '\n';
      }
    });
    auto* enumerate_cmd = app.add_subcommand("enumerate", "List sequences by exhaustive search");
    add_census(enumerate_cmd);
    enumerate_cmd->add_option("--limit", limit, "Stop after this many (0 = all)");
    enumerate_cmd->callback([&] {
      const CensusQuery q = census_query(cen, canonical, max_n);
      std::size_t printed = 0;
      enumerate(q, [&](const CyclicSequence& s) {
        out_ << s.str() << '\n';
        return limit == 0 || ++printed < limit;
      });
    });

    bool crib_builtin = false;
    std::string crib_stack;
    std::string crib_bits;
    std::string crib_format = "text";
    auto* crib_cmd = app.add_subcommand("crib", "Emit the performer's crib sheet");
    auto* b1 = crib_cmd->add_flag("--builtin", crib_builtin, "Use the built-in stack");
    auto* b2 = crib_cmd->add_option("--stack", crib_stack, "Stack or crib JSON file");
    auto* b3 = crib_cmd->add_option("--from-sequence", crib_bits, "Balanced (52,5,2) bit string");
    b1->excludes(b2)->excludes(b3);
    b2->excludes(b3);
    crib_cmd->add_option("--format", crib_format)->check(CLI::IsMember({"text", "json"}));
    crib_cmd->callback([&] {
      Stack st = builtin_stack();
      if (!crib_stack.empty()) {
        st = stack_from_json(read_file(crib_stack));
      } else if (!crib_bits.empty()) {
        const CyclicSequence s(crib_bits);
        if (!verify(s, 5, 2, BalanceMode::Balanced).passed || s.size() != kDeckSize) {
          throw InvalidStack("sequence is not a balanced (52,5,2) sequence");
        }
        st = auto_stack(s);
      } else if (!crib_builtin) {
        throw CLI::RequiredError("one of --builtin, --stack, --from-sequence");
      }
      const CribSheet cs = crib(st);
      out_ << (crib_format == "json" ? crib_to_json(cs) + "\n" : crib_to_text(cs));
    });

    bool look_builtin = false;
    std::string look_crib;
    std::string colors;
    std::string answer;
    auto* lookup_cmd = app.add_subcommand("lookup", "Look up a colour signal and reveal the five cards");
    auto* l1 = lookup_cmd->add_flag("--builtin", look_builtin, "Use the built-in stack");
    auto* l2 = lookup_cmd->add_option("--crib", look_crib, "Crib JSON file");
    l1->excludes(l2);
    lookup_cmd->add_option("--colors", colors, "Five of R/B, spectator 1 first")->required();
    lookup_cmd->add_option("--answer", answer, "Spectator's answer to the question")
        ->check(CLI::IsMember({"yes", "no"}));
    lookup_cmd->callback([&] {
      if (!look_builtin && look_crib.empty()) throw CLI::RequiredError("--builtin or --crib");
      const CribSheet cs = look_crib.empty() ? crib(builtin_stack()) : crib_from_json(read_file(look_crib));
      const LookupResult r = lookup(cs, parse_signal(colors));
      if (answer.empty()) {
        out_ << cards_to_string(r.candidates, " or ");
        if (r.question) out_ << " — ask: " << r.question->text;
        out_ << '\n';
        if (r.question) return;
        out_ << cards_to_string(reveal(cs, r.candidates.front())) << '\n';
        return;
      }
      out_ << cards_to_string(reveal(cs, resolve(r, answer == "yes"))) << '\n';
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
      out_ << app.help();
      return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
      out_ << app.help("", CLI::AppFormatMode::All);
      return kSuccess;
    } catch (const CLI::ParseError& e) {
      err_ << "error: " << e.what() << '\n';
      return kUsageError;
    } catch (const Infeasible& e) {
      err_ << "infeasible: " << e.what() << " (requires n even for balanced mode and k >= n/2^l)\n";
      return kInfeasible;
    } catch (const GuardExceeded& e) {
      err_ << "guard exceeded: " << e.what() << '\n';
      return kGuardExceeded;
    } catch (const ParseError& e) {
      err_ << "error: " << e.what() << '\n';
      return kUsageError;
    } catch (const InvalidArgument& e) {
      err_ << "error: " << e.what() << '\n';
      return kUsageError;
    } catch (const InvalidStack& e) {
      err_ << "invalid stack: " << e.what() << '\n';
      return kVerificationFailed;
    } catch (const ImpossibleSignal& e) {
      err_ << e.what() << '\n';
      return kVerificationFailed;
    } catch (const InvariantViolation& e) {
      err_ << "internal error: " << e.what() << '\n';
      return kVerificationFailed;
    }
    return status;
  }

 private:
  // Positional argument, then --file, then stdin; exactly one source.
  std::string read_sequence(const std::string& positional, const std::string& file) {
    if (!positional.empty() && !file.empty()) throw ParseError("give the sequence either inline or with --file");
    if (!positional.empty()) return trim(positional);
    if (!file.empty()) return trim(read_file(file));
    std::string text((std::istreambuf_iterator<char>(in_)), std::istreambuf_iterator<char>());
    return trim(std::move(text));
  }

  static CensusQuery census_query(const SequenceArgs& a, bool canonical, std::uint64_t max_n) {
    if (a.n > max_n) {
      throw GuardExceeded("n = " + std::to_string(a.n) + " exceeds the enumeration guard " + std::to_string(max_n) +
                          " (raise with --max-n, at most 28)");
    }
    return CensusQuery{Parameters{a.n, a.l, a.k}, a.mode(), canonical};
  }

  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  return Runner(in, out, err).run(args);
}

}  // namespace debruijn::cli

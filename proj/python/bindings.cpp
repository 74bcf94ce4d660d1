#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "debruijn/builder.hpp"
#include "debruijn/census.hpp"
#include "debruijn/cli.hpp"
#include "debruijn/error.hpp"
#include "debruijn/graph.hpp"
#include "debruijn/seqcore.hpp"
#include "debruijn/stack.hpp"

namespace py = pybind11;
using namespace debruijn;

namespace {

BalanceMode mode_of(const std::string& name) { return parse_balance_mode(name); }

py::dict report_dict(const VerificationReport& r) {
  py::dict d;
  d["pass"] = r.passed;
  d["max_multiplicity"] = r.max_multiplicity;
  d["worst_window"] = r.worst_window;
  d["zeros"] = r.balance.zeros;
  d["ones"] = r.balance.ones;
  d["failure"] = r.failure;
  return d;
}

std::vector<std::string> codes(const std::vector<Card>& cards) {
  std::vector<std::string> out;
  for (const Card& c : cards) out.push_back(c.code());
  return out;
}

CribSheet crib_of(const std::string& source) {
  return source == "builtin" ? crib(builtin_stack()) : crib_from_json(source);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Balanced generalized de Bruijn sequences and the 52-card stack";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<GuardExceeded>(m, "GuardExceeded", base.ptr());
  py::register_exception<Infeasible>(m, "Infeasible", base.ptr());
  py::register_exception<InvalidStack>(m, "InvalidStack", base.ptr());
  py::register_exception<ImpossibleSignal>(m, "ImpossibleSignal", base.ptr());
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_AssertionError);

  m.def(
      "generate",
      [](std::uint64_t n, int l, std::uint64_t k, const std::string& mode, int imbalance) {
        return generate({n, l, k}, mode_of(mode), imbalance).str();
      },
      py::arg("n"), py::arg("l"), py::arg("k"), py::arg("mode") = "balanced", py::arg("imbalance") = 1);

  m.def(
      "verify",
      [](const std::string& s, int l, std::uint64_t k, const std::string& mode) {
        return report_dict(verify(CyclicSequence(s), l, k, mode_of(mode)));
      },
      py::arg("sequence"), py::arg("l"), py::arg("k"), py::arg("mode") = "balanced");

  m.def(
      "feasible",
      [](std::uint64_t n, int l, std::uint64_t k, const std::string& mode) {
        const Feasibility f = feasible({n, l, k}, mode_of(mode));
        return py::make_tuple(f.feasible, f.reason);
      },
      py::arg("n"), py::arg("l"), py::arg("k"), py::arg("mode") = "balanced");

  m.def(
      "window_histogram",
      [](const std::string& s, int l) { return window_histogram(CyclicSequence(s), l).counts; },
      py::arg("sequence"), py::arg("l"));
  m.def("canonical_rotation", [](const std::string& s) { return canonical_rotation(CyclicSequence(s)).str(); });
  m.def("complement", [](const std::string& s) { return complement(CyclicSequence(s)).str(); });
  m.def("period", [](const std::string& s) { return period(CyclicSequence(s)); });

  m.def(
      "count",
      [](std::uint64_t n, int l, std::uint64_t k, const std::string& mode, bool up_to_rotation, unsigned threads) {
        const CensusQuery q{{n, l, k}, mode_of(mode), up_to_rotation};
        py::gil_scoped_release release;
        return count(q, {.threads = threads}).count;
      },
      py::arg("n"), py::arg("l"), py::arg("k"), py::arg("mode") = "balanced", py::arg("up_to_rotation") = false,
      py::arg("threads") = 1);

  m.def(
      "enumerate",
      [](std::uint64_t n, int l, std::uint64_t k, const std::string& mode, bool up_to_rotation, std::size_t limit) {
        std::vector<std::string> out;
        for (const auto& s : enumerate_all({{n, l, k}, mode_of(mode), up_to_rotation}, limit)) out.push_back(s.str());
        return out;
      },
      py::arg("n"), py::arg("l"), py::arg("k"), py::arg("mode") = "balanced", py::arg("up_to_rotation") = false,
      py::arg("limit") = 0);

  m.def(
      "eulerian_sequence", [](int l) { return circuit_to_sequence(eulerian_circuit(l)).str(); }, py::arg("l"));
  m.def(
      "build_circuit",
      [](std::uint64_t n, int rank, int imbalance) {
        std::vector<Label> out;
        for (Edge e : build_circuit(n, rank, imbalance).edges) out.push_back(e.label);
        return out;
      },
      py::arg("n"), py::arg("rank"), py::arg("imbalance"));

  m.def("builtin_sequence", [] { return builtin_stack().sequence.str(); });
  m.def("builtin_order", [] { return codes(builtin_stack().cards); });
  m.def(
      "crib_json",
      [](const std::optional<std::string>& sequence) {
        const Stack st = sequence ? auto_stack(CyclicSequence(*sequence)) : builtin_stack();
        return crib_to_json(crib(st));
      },
      py::arg("sequence") = py::none(),
      "Crib document for the built-in stack, or for the automatic stack on a (52,5,2) sequence.");

  m.def(
      "lookup",
      [](const std::string& colors, const std::string& crib) {
        const LookupResult r = lookup(crib_of(crib), parse_signal(colors));
        py::dict d;
        d["window"] = word_to_string(r.window, kSpectators);
        d["candidates"] = codes(r.candidates);
        d["question"] = r.question ? py::object(py::str(r.question->text)) : py::object(py::none());
        return d;
      },
      py::arg("colors"), py::arg("crib") = "builtin",
      "`crib` is \"builtin\" or a crib JSON document.");

  m.def(
      "reveal",
      [](const std::string& colors, std::optional<bool> answer_yes, const std::string& crib) {
        const CribSheet cs = crib_of(crib);
        const LookupResult r = lookup(cs, parse_signal(colors));
        if (r.question && !answer_yes) throw InvalidArgument("signal is ambiguous; an answer is required");
        return codes(reveal(cs, resolve(r, answer_yes.value_or(true))));
      },
      py::arg("colors"), py::arg("answer_yes") = py::none(), py::arg("crib") = "builtin");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args, const std::string& stdin_text) {
        std::istringstream in(stdin_text);
        std::ostringstream out, err;
        const int status = cli::run(args, in, out, err);
        return py::make_tuple(status, out.str(), err.str());
      },
      py::arg("args"), py::arg("stdin") = "");
}

// Python bindings for the semiring commutator library.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilsem/algebra.hpp"
#include "nilsem/census.hpp"
#include "nilsem/classify.hpp"
#include "nilsem/commutator.hpp"
#include "nilsem/congruence.hpp"
#include "nilsem/enumerate.hpp"
#include "nilsem/errors.hpp"
#include "nilsem/fixtures.hpp"
#include "nilsem/ideals.hpp"
#include "nilsem/io.hpp"
#include "nilsem/limits.hpp"
#include "nilsem/partition.hpp"
#include "nilsem/property.hpp"
#include "nilsem/terms.hpp"

namespace py = pybind11;
using namespace nilsem;

namespace {

Partition blocks_to_partition(const Semiring& s, const std::vector<std::vector<int>>& blocks) {
  return Partition::from_blocks(s.order(), blocks);
}

std::vector<std::vector<int>> rows(const std::vector<int>& table, int order) {
  std::vector<std::vector<int>> out(order);
  for (int i = 0; i < order; ++i)
    out[i] = std::vector<int>(table.begin() + i * order, table.begin() + (i + 1) * order);
  return out;
}

py::object maybe(const std::optional<int>& v) {
  if (v) return py::int_(*v);
  return py::none();
}

py::dict report_to_dict(const ClassificationReport& report) {
  py::dict d;
  d["id"] = report.id;
  d["order"] = report.order;
  d["additively_cancellative"] = report.additively_cancellative;
  d["has_mult_identity"] = report.has_mult_identity;
  d["least_n_nilpotent"] = maybe(report.least_n_nilpotent);
  d["least_n_supernilpotent"] = maybe(report.least_n_supernilpotent);
  d["least_k_solvable"] = maybe(report.least_k_solvable);
  d["abelian"] = report.abelian;
  d["is_ring"] = report.is_ring;
  py::list powers;
  for (const Ideal& p : report.powers) powers.append(p.elems);
  d["powers"] = powers;
  d["probe_bound"] = report.probe_bound;
  d["supernilpotent_probe_bound"] = report.supernilpotent_probe_bound;
  d["route_agreement"] = report.route_agreement;
  return d;
}

// Variable names have the 1-based surface shape x<group>_<component>; the
// arity of a group is the largest component mentioned for it.
std::vector<int> arities_from_assignment(const std::map<std::string, int>& assign) {
  std::vector<int> arities;
  for (const auto& [name, value] : assign) {
    (void)value;
    int group = 0, component = 0;
    if (std::sscanf(name.c_str(), "x%d_%d", &group, &component) != 2 || group < 1 ||
        component < 1)
      throw IndexError("assignment key '" + name +
                       "' is not of the form x<group>_<component> with 1-based indices");
    if (group > static_cast<int>(arities.size())) arities.resize(group, 0);
    arities[group - 1] = std::max(arities[group - 1], component);
  }
  return arities;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite semiring commutator and nilpotency calculator";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<SizeError>(m, "BudgetError", PyExc_RuntimeError);
  py::register_exception<FalsificationError>(m, "FalsificationError", PyExc_RuntimeError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  py::class_<Semiring>(m, "Semiring")
      .def_property_readonly("order", &Semiring::order)
      .def_property_readonly("zero", &Semiring::zero)
      .def("add", &Semiring::add, py::arg("a"), py::arg("b"))
      .def("mul", &Semiring::mul, py::arg("a"), py::arg("b"))
      .def_property_readonly(
          "add_table", [](const Semiring& s) { return rows(s.add_table(), s.order()); })
      .def_property_readonly(
          "mul_table", [](const Semiring& s) { return rows(s.mul_table(), s.order()); })
      .def("to_text", [](const Semiring& s) { return emit_semiring(s); })
      .def("to_json", [](const Semiring& s) { return emit_semiring_json(s); })
      .def("__repr__", [](const Semiring& s) {
        return "<Semiring order=" + std::to_string(s.order()) + ">";
      });

  m.def(
      "parse", [](const std::string& text) { return parse_semiring(text); }, py::arg("text"),
      "Parse a semiring from its text or JSON description and validate the axioms.");
  m.def(
      "make",
      [](int zero, const std::vector<std::vector<int>>& add,
         const std::vector<std::vector<int>>& mul) {
        return make_semiring(static_cast<int>(add.size()), zero, add, mul);
      },
      py::arg("zero"), py::arg("add"), py::arg("mul"),
      "Build a semiring from its operation tables (rows of the add and mul tables).");

  m.def(
      "congruences",
      [](const Semiring& s) {
        std::vector<std::vector<std::vector<int>>> out;
        for (const Partition& p : all_congruences(s.algebra())) out.push_back(p.blocks());
        return out;
      },
      py::arg("s"), "All congruences, each as a list of blocks.");

  m.def(
      "commutator",
      [](const Semiring& s, const std::vector<std::vector<std::vector<int>>>& args) {
        std::vector<Partition> parts;
        parts.reserve(args.size());
        for (const auto& blocks : args) parts.push_back(blocks_to_partition(s, blocks));
        return higher_commutator(s.algebra(), parts).blocks();
      },
      py::arg("s"), py::arg("args"),
      "Higher commutator of the given congruences (each a list of blocks).");

  m.def(
      "binary_commutator",
      [](const Semiring& s, const std::vector<std::vector<int>>& alpha,
         const std::vector<std::vector<int>>& beta) {
        return binary_commutator_tc(s.algebra(), blocks_to_partition(s, alpha),
                                    blocks_to_partition(s, beta))
            .blocks();
      },
      py::arg("s"), py::arg("alpha"), py::arg("beta"),
      "Binary term-condition commutator via the quadruple closure.");

  m.def(
      "centralizes",
      [](const Semiring& s, const std::vector<std::vector<std::vector<int>>>& args,
         const std::vector<std::vector<int>>& delta) {
        std::vector<Partition> parts;
        for (const auto& blocks : args) parts.push_back(blocks_to_partition(s, blocks));
        return centralizes(s.algebra(), parts, blocks_to_partition(s, delta));
      },
      py::arg("s"), py::arg("args"), py::arg("delta"),
      "Whether the centralizing condition C(args; delta) holds.");

  m.def(
      "cube",
      [](const Semiring& s, const std::vector<std::vector<std::vector<int>>>& args) {
        std::vector<Partition> parts;
        for (const auto& blocks : args) parts.push_back(blocks_to_partition(s, blocks));
        return generate_cube(s.algebra(), parts).tuples;
      },
      py::arg("s"), py::arg("args"),
      "All tuples of the cube algebra for the given congruences; coordinate w of a tuple "
      "is the value at the valuation whose bit i chooses the b-side of dimension i.");

  m.def(
      "ideals",
      [](const Semiring& s) {
        std::vector<std::vector<int>> out;
        for (const Ideal& ideal : all_ideals(s)) out.push_back(ideal.elems);
        return out;
      },
      py::arg("s"), "All ideals, each as a sorted element list.");
  m.def(
      "ideal_product",
      [](const Semiring& s, const std::vector<std::vector<int>>& factors) {
        std::vector<Ideal> fs;
        for (const auto& f : factors) fs.push_back(ideal_closure(s, f));
        return ideal_product(s, fs).elems;
      },
      py::arg("s"), py::arg("factors"));
  m.def(
      "power", [](const Semiring& s, int n) { return power_of_s(s, n).elems; }, py::arg("s"),
      py::arg("n"), "The ideal power S^n.");
  m.def(
      "ideal_commutator",
      [](const Semiring& s, const std::vector<std::vector<int>>& factors) {
        std::vector<Ideal> fs;
        for (const auto& f : factors) fs.push_back(ideal_closure(s, f));
        return ideal_commutator(s, fs).elems;
      },
      py::arg("s"), py::arg("factors"),
      "Ideal commutator: the sum of all permuted products of the factors.");
  m.def(
      "rho",
      [](const Semiring& s, const std::vector<int>& ideal) {
        return rho_of_ideal(s, ideal_closure(s, ideal)).blocks();
      },
      py::arg("s"), py::arg("ideal"),
      "Least congruence collapsing the ideal into the class of zero.");

  m.def(
      "is_n_nilpotent",
      [](const Semiring& s, int n) { return is_n_nilpotent(s.algebra(), n); }, py::arg("s"),
      py::arg("n"));
  m.def(
      "is_n_solvable", [](const Semiring& s, int n) { return is_n_solvable(s.algebra(), n); },
      py::arg("s"), py::arg("n"));
  m.def(
      "is_n_supernilpotent",
      [](const Semiring& s, int n) { return is_n_supernilpotent(s.algebra(), n); }, py::arg("s"),
      py::arg("n"));
  m.def(
      "is_additively_cancellative",
      [](const Semiring& s) { return is_additively_cancellative(s); }, py::arg("s"));

  m.def(
      "classify",
      [](const Semiring& s, std::optional<int> max_n) {
        return report_to_dict(classify(s, Limits{}, "", max_n));
      },
      py::arg("s"), py::arg("max_n") = py::none(),
      "Full classification report as a dict; degrees are probed up to max_n "
      "(default: the order of the semiring).");

  m.def(
      "enumerate_semirings",
      [](int order, bool up_to_iso, bool cancellative_only, bool with_identity_only) {
        EnumerationTask task;
        task.order = order;
        task.up_to_iso = up_to_iso;
        task.cancellative_only = cancellative_only;
        task.with_identity_only = with_identity_only;
        return enumerate_semirings(task);
      },
      py::arg("order"), py::arg("up_to_iso") = true, py::arg("cancellative_only") = false,
      py::arg("with_identity_only") = false,
      "All semirings of the given order, by default one per isomorphism class.");

  m.def(
      "census",
      [](int order, bool force_full) {
        CensusTask task;
        task.order = order;
        task.force_full = force_full;
        CensusResult result = run_census(task);
        py::dict d;
        d["order"] = result.summary.order;
        d["full_checks"] = result.summary.full_checks;
        d["algebra_count"] = result.summary.algebra_count;
        d["abelian_count"] = result.summary.abelian_count;
        d["cancellative_count"] = result.summary.cancellative_count;
        d["ring_count"] = result.summary.ring_count;
        d["identity_count"] = result.summary.identity_count;
        py::dict flags;
        for (const auto& [name, count] : result.summary.flag_pass_counts)
          flags[py::str(name)] = count;
        d["flag_pass_counts"] = flags;
        py::list reports;
        for (const CensusRecord& record : result.records)
          reports.append(report_to_dict(record.report));
        d["reports"] = reports;
        return d;
      },
      py::arg("order"), py::arg("force_full") = false,
      "Run the exhaustive verification census and return its summary; raises "
      "FalsificationError with a witness if any law fails.");

  m.def(
      "verify_laws",
      [](const Semiring& s) {
        std::vector<std::string> names;
        for (const auto& [name, pass] : verify_laws(s)) {
          (void)pass;
          names.push_back(name);
        }
        return names;
      },
      py::arg("s"),
      "Run the complete law battery on one semiring; returns the names of the "
      "checks that passed, raises FalsificationError at the first violation.");

  m.def(
      "eval_term",
      [](const Semiring& s, const std::string& term, const std::map<std::string, int>& assign) {
        std::vector<int> arities = arities_from_assignment(assign);
        TermPtr parsed = parse_term(term, arities);
        std::vector<std::vector<int>> bound(arities.size());
        for (std::size_t g = 0; g < arities.size(); ++g) bound[g].resize(arities[g], -1);
        for (const auto& [name, value] : assign) {
          int group = 0, component = 0;
          std::sscanf(name.c_str(), "x%d_%d", &group, &component);
          bound[group - 1][component - 1] = value;
        }
        for (std::size_t g = 0; g < bound.size(); ++g)
          for (std::size_t i = 0; i < bound[g].size(); ++i)
            if (bound[g][i] < 0)
              throw IndexError("variable x" + std::to_string(g + 1) + "_" +
                               std::to_string(i + 1) + " has no assignment");
        return evaluate(parsed, bound, s);
      },
      py::arg("s"), py::arg("term"), py::arg("assign"),
      "Evaluate a term such as '(x1_1 + #1) * x2_1' under an assignment "
      "{'x1_1': 2, 'x2_1': 1}; variable indices are 1-based.");

  m.def(
      "fixture",
      [](const std::string& name) {
        for (const auto& [fname, s] : all_fixtures())
          if (fname == name) return s;
        throw IndexError("unknown fixture '" + name + "'");
      },
      py::arg("name"), "A named example semiring; see fixture_names().");
  m.def("fixture_names", []() {
    std::vector<std::string> names;
    for (const auto& [name, s] : all_fixtures()) {
      (void)s;
      names.push_back(name);
    }
    return names;
  });

  m.def(
      "parity_check",
      [](std::uint64_t seed, int samples) {
        ParityPropertyResult r = run_parity_property(seed, samples, Limits{});
        py::dict d;
        d["seed"] = r.seed;
        d["samples"] = r.samples;
        d["failures"] = r.failures;
        d["first_failure"] = r.first_failure;
        return d;
      },
      py::arg("seed") = 20250815u, py::arg("samples") = 200,
      "Random monomial parity property: even- and odd-weight valuation sums agree.");
}

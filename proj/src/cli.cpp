#include "nilsem/cli.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "nilsem/census.hpp"
#include "nilsem/classify.hpp"
#include "nilsem/commutator.hpp"
#include "nilsem/congruence.hpp"
#include "nilsem/enumerate.hpp"
#include "nilsem/fixtures.hpp"
#include "nilsem/ideals.hpp"
#include "nilsem/io.hpp"
#include "nilsem/property.hpp"
#include "nilsem/terms.hpp"

namespace nilsem {

namespace {

struct CommonOpts {
  std::string input = "-";
  std::string format = "text";
  Limits limits;
};

void add_limit_options(CLI::App* cmd, Limits& limits) {
  cmd->add_option("--max-order", limits.max_order, "largest accepted carrier size");
  cmd->add_option("--lattice-bound", limits.lattice_order_bound,
                  "largest order for full congruence lattices");
  cmd->add_option("--enumeration-bound", limits.enumeration_order_bound,
                  "largest order for exhaustive enumeration");
  cmd->add_option("--dim-budget", limits.dim_budget, "largest cube dimension (commutator arity)");
  cmd->add_option("--tuple-budget", limits.tuple_budget, "largest cube closure size");
  cmd->add_option("--work-budget", limits.work_budget, "largest number of operation applications");
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_input = true) {
  if (with_input)
    cmd->add_option("input", opts.input, "semiring file, or - for standard input")
        ->capture_default_str();
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "csv", "jsonl"}))
      ->capture_default_str();
  add_limit_options(cmd, opts.limits);
}

std::string read_input(const std::string& path) {
  std::ostringstream text;
  if (path == "-") {
    text << std::cin.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw DomainError("cannot open input file: " + path);
    text << file.rdbuf();
  }
  return text.str();
}

Semiring load_semiring(const CommonOpts& opts) {
  return parse_semiring(read_input(opts.input), opts.limits);
}

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string quoted = "\"";
  for (char ch : cell) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  quoted += '"';
  return quoted;
}

std::string join_cells(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += csv_escape(cells[i]);
  }
  return line;
}

// ---- partition argument specs: "0", "1", or "{{0,1},{2}}" ---------------

std::vector<std::string> split_top_level(const std::string& spec) {
  std::vector<std::string> parts;
  std::string current;
  int depth = 0;
  for (char ch : spec) {
    if (ch == '{') ++depth;
    if (ch == '}') --depth;
    if (ch == ',' && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  parts.push_back(current);
  return parts;
}

std::string trimmed(const std::string& text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  std::size_t last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

Partition parse_partition_spec(const std::string& raw, int order) {
  std::string spec = trimmed(raw);
  if (spec == "0") return Partition::identity(order);
  if (spec == "1") return Partition::full(order);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < spec.size() && std::isspace(static_cast<unsigned char>(spec[pos]))) ++pos;
  };
  auto expect = [&](char ch) {
    skip_space();
    if (pos >= spec.size() || spec[pos] != ch)
      throw ParseError(std::string("expected '") + ch + "' in partition spec '" + spec + "'",
                       pos);
    ++pos;
  };
  auto read_int = [&] {
    skip_space();
    std::size_t start = pos;
    while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) ++pos;
    if (pos == start)
      throw ParseError("expected an element index in partition spec '" + spec + "'", pos);
    return std::stoi(spec.substr(start, pos - start));
  };
  std::vector<std::vector<int>> blocks;
  expect('{');
  while (true) {
    expect('{');
    std::vector<int> block;
    block.push_back(read_int());
    skip_space();
    while (pos < spec.size() && spec[pos] == ',') {
      ++pos;
      block.push_back(read_int());
      skip_space();
    }
    expect('}');
    blocks.push_back(std::move(block));
    skip_space();
    if (pos < spec.size() && spec[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  expect('}');
  skip_space();
  if (pos != spec.size())
    throw ParseError("trailing characters in partition spec '" + spec + "'", pos);
  return Partition::from_blocks(order, blocks);
}

// ---- shared JSON helpers -------------------------------------------------

nlohmann::ordered_json blocks_json(const Partition& p) {
  nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
  for (const auto& block : p.blocks()) blocks.push_back(block);
  return blocks;
}

nlohmann::ordered_json report_json(const ClassificationReport& report) {
  nlohmann::ordered_json j;
  if (!report.id.empty()) j["id"] = report.id;
  j["order"] = report.order;
  j["additively_cancellative"] = report.additively_cancellative;
  j["has_mult_identity"] = report.has_mult_identity;
  j["abelian"] = report.abelian;
  j["is_ring"] = report.is_ring;
  auto opt = [](const std::optional<int>& v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
  };
  j["least_n_nilpotent"] = opt(report.least_n_nilpotent);
  j["least_n_supernilpotent"] = opt(report.least_n_supernilpotent);
  j["least_k_solvable"] = opt(report.least_k_solvable);
  j["power_sizes"] = power_sizes(report);
  j["route_agreement"] = report.route_agreement;
  j["probe_bound"] = report.probe_bound;
  j["supernilpotent_probe_bound"] = report.supernilpotent_probe_bound;
  return j;
}

std::string yes_no(bool v) { return v ? "yes" : "no"; }

std::string opt_to_string(const std::optional<int>& v, int bound) {
  if (v) return std::to_string(*v);
  return "none (probed to " + std::to_string(bound) + ")";
}

std::string sizes_to_string(const std::vector<std::size_t>& sizes) {
  std::string text;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) text += ' ';
    text += std::to_string(sizes[i]);
  }
  return text;
}

// ---- subcommand implementations -------------------------------------------

int cmd_validate(const CommonOpts& opts, std::ostream& out) {
  Semiring s = load_semiring(opts);
  if (opts.format == "text") {
    out << emit_semiring(s);
  } else if (opts.format == "jsonl") {
    out << emit_semiring_json(s) << "\n";
  } else {
    std::vector<std::string> add, mul;
    for (int v : s.add_table()) add.push_back(std::to_string(v));
    for (int v : s.mul_table()) mul.push_back(std::to_string(v));
    std::string add_cells, mul_cells;
    for (std::size_t i = 0; i < add.size(); ++i) {
      add_cells += (i ? " " : "") + add[i];
      mul_cells += (i ? " " : "") + mul[i];
    }
    out << "order,zero,add,mul\n"
        << join_cells({std::to_string(s.order()), std::to_string(s.zero()), add_cells, mul_cells})
        << "\n";
  }
  return 0;
}

int cmd_classify(const CommonOpts& opts, std::optional<int> max_n, std::ostream& out) {
  Semiring s = load_semiring(opts);
  ClassificationReport report = classify(s, opts.limits, "", max_n);
  if (opts.format == "text") {
    out << "order: " << report.order << "\n";
    out << "additively cancellative: " << yes_no(report.additively_cancellative) << "\n";
    int e = multiplicative_identity(s);
    out << "multiplicative identity: " << (e >= 0 ? "element " + std::to_string(e) : "none")
        << "\n";
    out << "abelian: " << yes_no(report.abelian) << "\n";
    out << "ring: " << yes_no(report.is_ring) << "\n";
    out << "least n nilpotent: " << opt_to_string(report.least_n_nilpotent, report.probe_bound)
        << "\n";
    out << "least n supernilpotent: "
        << opt_to_string(report.least_n_supernilpotent, report.supernilpotent_probe_bound)
        << "\n";
    out << "least k solvable: " << opt_to_string(report.least_k_solvable, report.probe_bound)
        << "\n";
    out << "power sizes: " << sizes_to_string(power_sizes(report)) << "\n";
    out << "route agreement: " << yes_no(report.route_agreement) << "\n";
  } else if (opts.format == "jsonl") {
    out << report_json(report).dump() << "\n";
  } else {
    out << "order,additively_cancellative,has_mult_identity,abelian,is_ring,least_n_nilpotent,"
           "least_n_supernilpotent,least_k_solvable,power_sizes,route_agreement\n";
    auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : ""; };
    out << join_cells({std::to_string(report.order),
                       report.additively_cancellative ? "true" : "false",
                       report.has_mult_identity ? "true" : "false",
                       report.abelian ? "true" : "false", report.is_ring ? "true" : "false",
                       opt(report.least_n_nilpotent), opt(report.least_n_supernilpotent),
                       opt(report.least_k_solvable), sizes_to_string(power_sizes(report)),
                       report.route_agreement ? "true" : "false"})
        << "\n";
  }
  return 0;
}

int cmd_commutator(const CommonOpts& opts, const std::string& args_spec, bool show_steps,
                   std::ostream& out) {
  Semiring s = load_semiring(opts);
  std::vector<Partition> args;
  for (const std::string& part : split_top_level(args_spec))
    args.push_back(parse_partition_spec(part, s.order()));
  std::vector<CommutatorStep> steps;
  Partition result =
      higher_commutator(s.algebra(), args, opts.limits, show_steps ? &steps : nullptr);
  if (opts.format == "text") {
    out << result.to_string() << "\n";
    if (show_steps) {
      for (std::size_t i = 0; i < steps.size(); ++i) {
        out << "step " << i + 1 << ": merged " << steps[i].first << " ~ " << steps[i].second
            << " (congruence so far " << steps[i].reached_before.to_string()
            << ") from cube tuple (";
        const auto& tuple = steps[i].witness.tuple;
        for (std::size_t w = 0; w < tuple.size(); ++w) out << (w ? "," : "") << tuple[w];
        out << ")\n";
      }
    }
  } else if (opts.format == "jsonl") {
    nlohmann::ordered_json j;
    j["arity"] = args.size();
    j["result_blocks"] = blocks_json(result);
    if (show_steps) {
      nlohmann::ordered_json step_list = nlohmann::ordered_json::array();
      for (const CommutatorStep& step : steps) {
        nlohmann::ordered_json sj;
        sj["merged"] = {step.first, step.second};
        sj["before"] = blocks_json(step.reached_before);
        sj["cube"] = step.witness.tuple;
        step_list.push_back(std::move(sj));
      }
      j["steps"] = std::move(step_list);
    }
    out << j.dump() << "\n";
  } else {
    out << "result\n" << join_cells({result.to_string()}) << "\n";
  }
  return 0;
}

int cmd_congruences(const CommonOpts& opts, std::ostream& out) {
  Semiring s = load_semiring(opts);
  std::vector<Partition> lattice = all_congruences(s.algebra(), opts.limits);
  if (opts.format == "text") {
    for (const Partition& p : lattice) out << p.to_string() << "\n";
    out << "count: " << lattice.size() << "\n";
  } else if (opts.format == "jsonl") {
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      nlohmann::ordered_json j;
      j["index"] = i;
      j["block_count"] = lattice[i].block_count();
      j["blocks"] = blocks_json(lattice[i]);
      out << j.dump() << "\n";
    }
    out << nlohmann::ordered_json{{"count", lattice.size()}}.dump() << "\n";
  } else {
    out << "index,block_count,partition\n";
    for (std::size_t i = 0; i < lattice.size(); ++i)
      out << join_cells({std::to_string(i), std::to_string(lattice[i].block_count()),
                         lattice[i].to_string()})
          << "\n";
  }
  return 0;
}

int cmd_ideals(const CommonOpts& opts, std::ostream& out) {
  Semiring s = load_semiring(opts);
  std::vector<Ideal> ideals = all_ideals(s);
  if (opts.format == "text") {
    for (const Ideal& ideal : ideals) out << ideal.to_string() << "\n";
    out << "count: " << ideals.size() << "\n";
  } else if (opts.format == "jsonl") {
    for (const Ideal& ideal : ideals) {
      nlohmann::ordered_json j;
      j["elems"] = ideal.elems;
      out << j.dump() << "\n";
    }
    out << nlohmann::ordered_json{{"count", ideals.size()}}.dump() << "\n";
  } else {
    out << "size,elements\n";
    for (const Ideal& ideal : ideals) {
      std::string elems;
      for (std::size_t i = 0; i < ideal.elems.size(); ++i)
        elems += (i ? " " : "") + std::to_string(ideal.elems[i]);
      out << join_cells({std::to_string(ideal.elems.size()), elems}) << "\n";
    }
  }
  return 0;
}

void collect_vars(const TermPtr& term, std::vector<std::pair<int, int>>& vars) {
  if (term->kind == Term::Kind::Var) {
    vars.emplace_back(term->group, term->component);
    return;
  }
  for (const TermPtr& child : term->children) collect_vars(child, vars);
}

int cmd_eval(const CommonOpts& opts, const std::string& term_src, const std::string& assign,
             std::ostream& out) {
  Semiring s = load_semiring(opts);
  // Assignments like "x1_1=0,x2_1=2" determine the group arities, then the
  // term is parsed against them so unknown variables fail with a position.
  std::vector<std::vector<int>> bound;
  std::string spec = trimmed(assign);
  if (!spec.empty()) {
    for (const std::string& raw : split_top_level(spec)) {
      std::string item = trimmed(raw);
      int group = 0, component = 0, value = 0;
      if (std::sscanf(item.c_str(), "x%d_%d=%d", &group, &component, &value) != 3)
        throw DomainError("cannot parse assignment '" + item +
                          "' (expected x<group>_<component>=<element>)");
      if (group < 1 || component < 1)
        throw DomainError("assignment '" + item + "' uses 0 or negative indices (1-based)");
      if (value < 0 || value >= s.order())
        throw DomainError("assignment '" + item + "' sets a value outside the carrier");
      if (static_cast<int>(bound.size()) < group) bound.resize(group);
      auto& tuple = bound[group - 1];
      if (static_cast<int>(tuple.size()) < component) tuple.resize(component, -1);
      tuple[component - 1] = value;
    }
  }
  std::vector<int> arities;
  for (const auto& tuple : bound) arities.push_back(static_cast<int>(tuple.size()));
  TermPtr term = parse_term(term_src, arities);
  std::vector<std::pair<int, int>> used;
  collect_vars(term, used);
  for (auto [g, c] : used)
    if (bound[g][c] < 0)
      throw DomainError("variable x" + std::to_string(g + 1) + "_" + std::to_string(c + 1) +
                        " has no assigned value");
  int value = evaluate(term, bound, s);
  if (opts.format == "text") {
    out << value << "\n";
  } else if (opts.format == "jsonl") {
    nlohmann::ordered_json j;
    j["term"] = term->to_string();
    j["value"] = value;
    out << j.dump() << "\n";
  } else {
    out << "term,value\n" << join_cells({term->to_string(), std::to_string(value)}) << "\n";
  }
  return 0;
}

std::ostream& open_sink(const std::string& path, std::ofstream& file, std::ostream& fallback) {
  if (path.empty()) return fallback;
  file.open(path, std::ios::binary);
  if (!file) throw DomainError("cannot open output file: " + path);
  return file;
}

int cmd_enumerate(const CommonOpts& opts, const EnumerationTask& task, const std::string& out_path,
                  std::ostream& out) {
  std::vector<Semiring> semirings = enumerate_semirings(task, opts.limits);
  std::ofstream file;
  std::ostream& sink = open_sink(out_path, file, out);
  if (opts.format == "text") {
    for (std::size_t i = 0; i < semirings.size(); ++i) {
      if (i) sink << "\n";
      sink << emit_semiring(semirings[i]);
    }
    sink << "count: " << semirings.size() << "\n";
  } else if (opts.format == "jsonl") {
    for (const Semiring& s : semirings) sink << emit_semiring_json(s) << "\n";
    sink << nlohmann::ordered_json{{"count", semirings.size()}}.dump() << "\n";
  } else {
    sink << "order,zero,add,mul\n";
    for (const Semiring& s : semirings) {
      std::string add_cells, mul_cells;
      for (std::size_t i = 0; i < s.add_table().size(); ++i) {
        add_cells += (i ? " " : "") + std::to_string(s.add_table()[i]);
        mul_cells += (i ? " " : "") + std::to_string(s.mul_table()[i]);
      }
      sink << join_cells({std::to_string(s.order()), std::to_string(s.zero()), add_cells,
                          mul_cells})
           << "\n";
    }
  }
  return 0;
}

int cmd_census(const CommonOpts& opts, const CensusTask& task, const std::string& out_path,
               std::ostream& out) {
  CensusResult result = run_census(task, opts.limits);
  if (!out_path.empty()) {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw DomainError("cannot open output file: " + out_path);
    write_census_jsonl(file, result);
  }
  const CensusSummary& summary = result.summary;
  if (opts.format == "text") {
    out << "census order " << summary.order << " ("
        << (summary.full_checks ? "full checks" : "structural checks") << ")\n";
    out << "algebras: " << summary.algebra_count << "\n";
    out << "abelian: " << summary.abelian_count << "\n";
    out << "additively cancellative: " << summary.cancellative_count << "\n";
    out << "rings: " << summary.ring_count << "\n";
    out << "with multiplicative identity: " << summary.identity_count << "\n";
    for (const auto& [name, count] : summary.flag_pass_counts)
      out << "check " << name << ": " << count << "/" << summary.algebra_count << "\n";
  } else if (opts.format == "jsonl") {
    if (out_path.empty()) write_census_jsonl(out, result);
    else out << census_summary_to_json(summary) << "\n";
  } else {
    out << "order,full_checks,algebras,abelian,additively_cancellative,rings,with_identity\n";
    out << join_cells({std::to_string(summary.order), summary.full_checks ? "true" : "false",
                       std::to_string(summary.algebra_count),
                       std::to_string(summary.abelian_count),
                       std::to_string(summary.cancellative_count),
                       std::to_string(summary.ring_count),
                       std::to_string(summary.identity_count)})
        << "\n";
  }
  return 0;
}

int cmd_verify(const Limits& limits, std::uint64_t seed, int samples, std::ostream& out) {
  for (const auto& [name, s] : all_fixtures()) {
    std::vector<std::pair<std::string, bool>> flags = verify_laws(s, limits);
    ClassificationReport report = classify(s, limits, name);
    out << "fixture " << name << ": " << flags.size() << " checks passed";
    out << " (least n nilpotent: "
        << (report.least_n_nilpotent ? std::to_string(*report.least_n_nilpotent) : "none")
        << ")\n";
  }
  ParityPropertyResult parity = run_parity_property(seed, samples, limits);
  out << "parity property: seed=" << parity.seed << " samples=" << parity.samples
      << " failures=" << parity.failures << "\n";
  if (parity.failures > 0)
    throw FalsificationError("valuation-parity law failed: " + parity.first_failure);
  out << "all checks passed\n";
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite semiring commutator and nilpotency calculator"};
  app.require_subcommand(1);

  CommonOpts validate_opts;
  CLI::App* validate = app.add_subcommand("validate", "check the axioms and re-emit canonically");
  add_common(validate, validate_opts);

  CommonOpts classify_opts;
  std::optional<int> classify_max_n;
  CLI::App* classify_cmd =
      app.add_subcommand("classify", "dual-route nilpotency/solvability classification");
  add_common(classify_cmd, classify_opts);
  classify_cmd->add_option("--max-n", classify_max_n, "probe degrees up to this bound");

  CommonOpts commutator_opts;
  std::string args_spec = "1,1";
  bool show_steps = false;
  CLI::App* commutator_cmd =
      app.add_subcommand("commutator", "higher commutator of a list of congruences");
  add_common(commutator_cmd, commutator_opts);
  commutator_cmd
      ->add_option("--args", args_spec,
                   "comma-separated congruences: 0, 1, or block form {{0,1},{2}}")
      ->capture_default_str();
  commutator_cmd->add_flag("--steps", show_steps, "print the fixpoint derivation steps");

  CommonOpts congruences_opts;
  CLI::App* congruences_cmd =
      app.add_subcommand("congruences", "the full congruence lattice");
  add_common(congruences_cmd, congruences_opts);

  CommonOpts ideals_opts;
  CLI::App* ideals_cmd = app.add_subcommand("ideals", "all ideals");
  add_common(ideals_cmd, ideals_opts);

  CommonOpts eval_opts;
  std::string term_src, assign;
  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a polynomial term");
  add_common(eval_cmd, eval_opts);
  eval_cmd->add_option("--term", term_src, "term such as 'x1_1*(x2_1+#0)'")->required();
  eval_cmd->add_option("--assign", assign, "assignments such as 'x1_1=0,x2_1=2'");

  CommonOpts enumerate_opts;
  EnumerationTask etask;
  bool enumerate_all = false;
  std::string enumerate_out;
  CLI::App* enumerate_cmd =
      app.add_subcommand("enumerate", "all semirings of a given order");
  add_common(enumerate_cmd, enumerate_opts, /*with_input=*/false);
  enumerate_cmd->add_option("--order", etask.order, "carrier size")->required();
  enumerate_cmd->add_flag("--all", enumerate_all, "list all tables, not one per iso class");
  enumerate_cmd->add_flag("--cancellative", etask.cancellative_only,
                          "only additively cancellative semirings");
  enumerate_cmd->add_flag("--with-identity", etask.with_identity_only,
                          "only semirings with a multiplicative identity");
  enumerate_cmd->add_option("--out", enumerate_out, "write the listing to this file");

  CommonOpts census_opts;
  CensusTask ctask;
  std::string census_out;
  CLI::App* census_cmd =
      app.add_subcommand("census", "classify and verify every semiring of a given order");
  add_common(census_cmd, census_opts, /*with_input=*/false);
  census_cmd->add_option("--order", ctask.order, "carrier size")->required();
  census_cmd->add_flag("--force-full", ctask.force_full,
                       "run commutator checks beyond the default full-check bound");
  census_cmd->add_option("--out", census_out, "write JSON-lines records to this file");

  Limits verify_limits;
  std::uint64_t seed = 20250815;
  int samples = 1000;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify-paper", "run the complete law suite on the built-in fixtures");
  add_limit_options(verify_cmd, verify_limits);
  verify_cmd->add_option("--seed", seed, "seed for the randomized parity property")
      ->capture_default_str();
  verify_cmd->add_option("--samples", samples, "number of randomized parity instances")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (validate->parsed()) return cmd_validate(validate_opts, out);
    if (classify_cmd->parsed()) return cmd_classify(classify_opts, classify_max_n, out);
    if (commutator_cmd->parsed())
      return cmd_commutator(commutator_opts, args_spec, show_steps, out);
    if (congruences_cmd->parsed()) return cmd_congruences(congruences_opts, out);
    if (ideals_cmd->parsed()) return cmd_ideals(ideals_opts, out);
    if (eval_cmd->parsed()) return cmd_eval(eval_opts, term_src, assign, out);
    if (enumerate_cmd->parsed()) {
      etask.up_to_iso = !enumerate_all;
      return cmd_enumerate(enumerate_opts, etask, enumerate_out, out);
    }
    if (census_cmd->parsed()) return cmd_census(census_opts, ctask, census_out, out);
    if (verify_cmd->parsed()) return cmd_verify(verify_limits, seed, samples, out);
    err << "error: no subcommand selected\n";
    return 1;
  } catch (const SizeError& e) {
    err << "budget error: " << e.what() << "\n";
    return 2;
  } catch (const FalsificationError& e) {
    err << "FALSIFIED: " << e.what() << "\n";
    return 3;
  } catch (const InternalError& e) {
    err << "internal consistency error: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace nilsem

#include "wormlab/cli.hpp"

#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wormlab/battle.hpp"
#include "wormlab/hierarchy.hpp"
#include "wormlab/lemma_lab.hpp"
#include "wormlab/ordinal.hpp"
#include "wormlab/tree_ordinal.hpp"
#include "wormlab/worm.hpp"

namespace wormlab::cli {
namespace {

enum class Format { text, json_lines, csv };

struct Config {
  Format format = Format::text;
  std::string output;
  std::optional<std::uint64_t> max_steps;
  std::optional<std::uint64_t> max_bits;
  std::optional<std::uint64_t> max_term_size;
  bool full = false;

  Budget budget() const {
    Budget b = Budget::from_environment();
    if (max_steps) b.max_steps = *max_steps;
    if (max_bits) b.max_bits = *max_bits;
    if (max_term_size) b.max_term_size = *max_term_size;
    return b;
  }
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string value_text(const Natural& v, bool full) {
  const nlohmann::json j = natural_to_json(v, full);
  return j.is_string() ? j.get<std::string>() : j.dump();
}

Natural parse_natural(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw InputError("expected a natural number, got '" + text + "'");
  }
  return Natural(text);
}

std::uint64_t parse_u64(const std::string& text) {
  const Natural v = parse_natural(text);
  if (mpz_sizeinbase(v.get_mpz_t(), 2) > 64) throw InputError("argument '" + text + "' is too large");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof out, 0, 0, v.get_mpz_t());
  return out;
}

void require_format(Format f, bool csv_ok, const std::string& command) {
  if (f == Format::csv && !csv_ok) throw InputError("csv output is only available for battle traces, not '" + command + "'");
}

int battle_command(const Config& cfg, const std::string& text, std::ostream& out) {
  const Budget budget = cfg.budget();
  const Worm a = parse_worm(text, budget.max_term_size);
  const BattleTrace trace = battle(a, budget);
  switch (cfg.format) {
    case Format::json_lines:
      write_json_lines(out, trace);
      break;
    case Format::csv:
      write_csv(out, trace);
      break;
    case Format::text:
      for (const auto& r : trace.records) {
        out << r.step << ": ";
        if (r.worm) {
          out << r.worm->to_string() << '\n';
        } else {
          out << "length " << r.length << ", leading " << (r.leading ? r.leading->to_string() : "T") << '\n';
        }
      }
      if (trace.death_step) {
        out << "dies at m=" << *trace.death_step << '\n';
      } else {
        out << "budget exceeded after " << trace.total_steps << " steps\n";
      }
      break;
  }
  return trace.death_step ? kOk : kBudget;
}

struct HardyRequest {
  std::string flavor = "H-ord";
  std::string index;
  std::string arg;
  bool trace = false;
};

int report_evaluation(const Config& cfg, const HardyRequest& req, const Evaluation& e, std::ostream& out) {
  if (cfg.format == Format::json_lines) {
    nlohmann::json line{{"flavor", req.flavor}, {"index", req.index}, {"arg", req.arg}, {"steps", e.steps}};
    if (e.value) {
      line["value"] = natural_to_json(*e.value, cfg.full);
    } else {
      line["budget_exceeded"] = true;
      line["lower_bound"] = natural_to_json(e.lower_bound, cfg.full);
    }
    out << line.dump() << '\n';
  } else if (e.value) {
    out << value_text(*e.value, cfg.full) << '\n';
  } else {
    out << "budget exceeded after " << e.steps << " steps; value >= " << value_text(e.lower_bound, cfg.full) << '\n';
  }
  return e.value ? kOk : kBudget;
}

void write_eval_trace(const Config& cfg, const EvalTrace& trace, std::ostream& out) {
  if (cfg.format == Format::json_lines) {
    write_json_lines(out, trace, cfg.full);
    return;
  }
  for (const auto& entry : trace.entries) {
    const std::string index = std::holds_alternative<Ordinal>(entry.index) ? std::get<Ordinal>(entry.index).to_string()
                                                                           : std::get<TreeOrdinal>(entry.index).to_string();
    out << entry.step << ": " << index << " @ " << value_text(entry.argument, cfg.full) << '\n';
  }
}

int hardy_command(const Config& cfg, const HardyRequest& req, std::ostream& out) {
  const Budget budget = cfg.budget();
  const std::size_t nodes = budget.max_term_size;
  const std::string& f = req.flavor;
  require_format(cfg.format, f == "h-worm" && req.trace, "hardy");
  if (f == "F" || f == "collapsed") {
    if (req.trace) throw InputError("--trace is not available for flavor '" + f + "'");
    const Ordinal alpha = parse_ordinal(req.index, nodes);
    const Natural x = parse_natural(req.arg);
    return report_evaluation(cfg, req, f == "F" ? fast_growing(alpha, x, budget) : collapsed_hardy(alpha, x, budget),
                             out);
  }
  const std::uint64_t x = parse_u64(req.arg);
  if (f == "h-worm") {
    const Worm a = parse_worm(req.index, nodes);
    BattleTrace trace;
    const Evaluation e = hardy_worm(a, x, budget, std::nullopt, req.trace ? &trace : nullptr);
    if (req.trace) {
      if (cfg.format == Format::csv) {
        write_csv(out, trace);
        return e.value ? kOk : kBudget;
      }
      if (cfg.format == Format::json_lines) {
        write_json_lines(out, trace);
      } else {
        for (const auto& r : trace.records) {
          if (r.worm) out << r.step << ": " << r.worm->to_string() << '\n';
        }
      }
    }
    return report_evaluation(cfg, req, e, out);
  }
  EvalTrace trace;
  EvalTrace* tp = req.trace ? &trace : nullptr;
  Evaluation e;
  if (f == "H-ord") {
    e = hardy_ord(parse_ordinal(req.index, nodes), x, budget, tp);
  } else if (f == "H-tree") {
    e = hardy_tree(parse_tree(req.index, nodes), x, budget, tp);
  } else if (f == "h-tree") {
    e = hardy_tree_wormstyle(parse_tree(req.index, nodes), x, budget, tp);
  } else {
    throw InputError("unknown flavor '" + f + "'");
  }
  if (tp) write_eval_trace(cfg, trace, out);
  return report_evaluation(cfg, req, e, out);
}

int translate_command(const Config& cfg, const std::string& text, std::ostream& out) {
  require_format(cfg.format, false, "translate");
  const Worm a = parse_worm(text, cfg.budget().max_term_size);
  const TreeOrdinal t = tau(a);
  const Ordinal o = collapse(t);
  if (cfg.format == Format::json_lines) {
    out << nlohmann::json{{"worm", a.to_string()}, {"tau", t.to_string()}, {"o", o.to_string()}, {"N", norm(o)}}.dump()
        << '\n';
  } else {
    out << "tau = " << t.to_string() << '\n' << "o = " << o.to_string() << '\n' << "N = " << norm(o) << '\n';
  }
  return kOk;
}

int compare_command(const Config& cfg, const std::string& lhs, const std::string& rhs, std::ostream& out) {
  require_format(cfg.format, false, "compare");
  const std::size_t nodes = cfg.budget().max_term_size;
  const Worm a = parse_worm(lhs, nodes);
  const Worm b = parse_worm(rhs, nodes);
  const std::string rel = lt0(a, b) ? "<0" : lt0(b, a) ? ">0" : "=0";
  if (cfg.format == Format::json_lines) {
    out << nlohmann::json{{"lhs", a.to_string()}, {"rhs", b.to_string()}, {"relation", rel}}.dump() << '\n';
  } else {
    out << a.to_string() << ' ' << rel << ' ' << b.to_string() << '\n';
  }
  return kOk;
}

int parse_command(const Config& cfg, const std::string& text, const std::string& kind, std::ostream& out) {
  require_format(cfg.format, false, "parse");
  const std::size_t nodes = cfg.budget().max_term_size;
  std::string canonical;
  if (kind == "ordinal") {
    canonical = parse_ordinal(text, nodes).to_string();
  } else if (kind == "tree") {
    canonical = parse_tree(text, nodes).to_string();
  } else if (kind == "worm") {
    canonical = parse_worm(text, nodes).to_string();
  } else {
    throw InputError("unknown kind '" + kind + "'");
  }
  if (cfg.format == Format::json_lines) {
    out << nlohmann::json{{"kind", kind}, {"input", text}, {"canonical", canonical}}.dump() << '\n';
  } else {
    out << canonical << '\n';
  }
  return kOk;
}

struct CheckRequest {
  std::string suite;
  std::uint64_t count = 100;
  std::uint64_t seed = 42;
  std::string instance_file;
  bool serial = false;
};

std::vector<nlohmann::json> read_instances(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open instance file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  std::vector<nlohmann::json> out;
  try {
    const nlohmann::json whole = nlohmann::json::parse(text);
    if (whole.is_array()) return whole.get<std::vector<nlohmann::json>>();
    out.push_back(whole);
    return out;
  } catch (const nlohmann::json::parse_error&) {
  }
  std::istringstream lines(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(lines, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(nlohmann::json::parse(line));
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(path + ":" + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

int check_command(const Config& cfg, const CheckRequest& req, std::ostream& out) {
  require_format(cfg.format, false, "check");
  const Budget budget = cfg.budget();
  SweepReport report;
  if (!req.instance_file.empty()) {
    std::vector<CheckReport> reports;
    for (const auto& instance : read_instances(req.instance_file)) {
      reports.push_back(check_instance(req.suite, instance, budget));
    }
    report = aggregate(req.suite, std::move(reports), 0, budget);
  } else {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), req.suite) == names.end()) {
      throw InputError("unknown suite '" + req.suite + "'");
    }
    report = sweep(req.suite, req.count, req.seed, budget,
                   req.serial ? ExecutionPolicy::serial : ExecutionPolicy::parallel);
  }
  if (cfg.format == Format::json_lines) {
    out << to_json(report).dump() << '\n';
  } else {
    write_text(out, report);
  }
  if (report.failed > 0) return kLemmaFailed;
  return report.unknown > 0 ? kBudget : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Worm battles, ordinals below epsilon_0 and Hardy hierarchies", "wormlab"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  const std::map<std::string, Format> formats{
      {"text", Format::text}, {"json-lines", Format::json_lines}, {"csv", Format::csv}};
  app.add_option("--format", cfg.format, "text, json-lines or csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--output,-o", cfg.output, "Write output to this file");
  app.add_option("--max-steps", cfg.max_steps, "Step budget")->check(CLI::PositiveNumber);
  app.add_option("--max-bits", cfg.max_bits, "Bit budget for big values")->check(CLI::PositiveNumber);
  app.add_option("--max-term-size", cfg.max_term_size, "Worm length / term size budget")->check(CLI::PositiveNumber);
  app.add_flag("--full", cfg.full, "Print big values in full");

  std::string worm_text;
  auto* battle_cmd = app.add_subcommand("battle", "Run the worm battle A, A[[1]], A[[1]][[2]], ...");
  battle_cmd->add_option("worm", worm_text, "Worm, e.g. 1.0.w+2 (T for the empty worm)")->required();

  HardyRequest hardy;
  auto* hardy_cmd = app.add_subcommand("hardy", "Evaluate a Hardy or fast-growing function");
  hardy_cmd->add_option("--flavor", hardy.flavor, "H-ord, H-tree, h-tree, h-worm, F or collapsed")
      ->check(CLI::IsMember({"H-ord", "H-tree", "h-tree", "h-worm", "F", "collapsed"}));
  hardy_cmd->add_option("--index", hardy.index, "Index term")->required();
  hardy_cmd->add_option("--arg", hardy.arg, "Argument")->required();
  hardy_cmd->add_flag("--trace", hardy.trace, "Emit the evaluation sequence");

  auto* translate_cmd = app.add_subcommand("translate", "Print tau(A), o(tau(A)) and its norm");
  translate_cmd->add_option("worm", worm_text, "Natural-entry worm")->required();

  std::string lhs;
  std::string rhs;
  auto* compare_cmd = app.add_subcommand("compare", "Compare two worms under <0");
  compare_cmd->add_option("lhs", lhs)->required();
  compare_cmd->add_option("rhs", rhs)->required();

  CheckRequest check;
  auto* check_cmd = app.add_subcommand("check", "Check a lemma on random or given instances");
  std::string suites;
  for (const auto& name : suite_names()) suites += (suites.empty() ? "" : ", ") + name;
  check_cmd->add_option("suite", check.suite, "Suite or lemma name: " + suites)->required();
  auto* random_opt = check_cmd->add_option("--random", check.count, "Number of random instances");
  check_cmd->add_option("--seed", check.seed, "Sweep seed");
  check_cmd->add_option("--instance", check.instance_file, "JSON or JSON-lines file of instance arguments")
      ->excludes(random_opt);
  check_cmd->add_flag("--serial", check.serial, "Run instances serially");

  std::string term;
  std::string kind = "ordinal";
  auto* parse_cmd = app.add_subcommand("parse", "Print the canonical form of a term");
  parse_cmd->add_option("term", term)->required();
  parse_cmd->add_option("--kind", kind, "ordinal, tree or worm")->check(CLI::IsMember({"ordinal", "tree", "worm"}));

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) {
      err << "error: cannot open output file '" << cfg.output << "'\n";
      return kInputError;
    }
    sink = &file;
  }

  try {
    if (*battle_cmd) return battle_command(cfg, worm_text, *sink);
    if (*hardy_cmd) return hardy_command(cfg, hardy, *sink);
    if (*translate_cmd) return translate_command(cfg, worm_text, *sink);
    if (*compare_cmd) return compare_command(cfg, lhs, rhs, *sink);
    if (*check_cmd) {
      const int code = check_command(cfg, check, *sink);
      if (code == kLemmaFailed) err << "error: lemma check failed (counterexamples above)\n";
      return code;
    }
    if (*parse_cmd) return parse_command(cfg, term, kind, *sink);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const TermBudgetExceeded& e) {
    err << "error: budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace wormlab::cli

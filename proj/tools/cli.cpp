#include "cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "stablenorm/cfg.hpp"
#include "stablenorm/serialize.hpp"
#include "stablenorm/stable_norm.hpp"
#include "stablenorm/word.hpp"

namespace stablenorm::cli {

namespace {

struct Config {
  std::string group;
  std::vector<std::string> word;
  std::vector<std::string> words;
  std::size_t kmax = 40;
  std::string method = "both";
  std::size_t max_period = 8;
  std::size_t min_tail_reps = 3;
  std::size_t budget_trees = Budgets{}.parikh_work;
  std::size_t budget_items = Budgets{}.product_items;
  std::string coordinates = "merged";
  std::string format = "pretty";
  std::string out_path;
  std::string grammar_file;
};

std::vector<std::string> word_texts(const Config& c) {
  std::vector<std::string> out = c.word;
  for (const auto& list : c.words) {
    std::stringstream in(list);
    std::string item;
    while (std::getline(in, item, ',')) {
      // tolerate quotes left over from shell-style lists such as "a","b"
      std::erase(item, '"');
      out.push_back(item);
    }
  }
  if (out.empty()) {
    throw ParseError("no words given; use --word or --words");
  }
  return out;
}

NormQuery make_query(const Config& c) {
  NormQuery q{parse_presentation(c.group), {}};
  for (const auto& text : word_texts(c)) {
    q.words.push_back(parse_word(q.presentation, text));
  }
  return q;
}

void add_common(CLI::App* cmd, Config& c) {
  cmd->add_option("--group", c.group, "free:<rank>, coxeter:<n> or custom:<grammar-file>")
      ->required();
  cmd->add_option("--word", c.word, "a word, tokens separated by spaces (repeatable)");
  cmd->add_option("--words", c.words, "comma-separated words");
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));
  cmd->add_option("--out", c.out_path, "write output to this file");
}

void add_sequence(CLI::App* cmd, Config& c) {
  cmd->add_option("--kmax", c.kmax, "largest k")->check(CLI::PositiveNumber);
}

void add_tau(CLI::App* cmd, Config& c) {
  cmd->add_option("--method", c.method, "empirical, symbolic or both")
      ->check(CLI::IsMember({"empirical", "symbolic", "both"}));
  cmd->add_option("--max-period", c.max_period, "largest period tried by the fit")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--min-tail-reps", c.min_tail_reps, "confirming steps required per class")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--budget-trees", c.budget_trees, "work budget of the Parikh stage")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--budget-items", c.budget_items, "item budget of the product grammar")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--parikh-coordinates", c.coordinates, "merged or full")
      ->check(CLI::IsMember({"merged", "full"}));
}

int cmd_norm(const Config& c, std::ostream& out) {
  const Presentation p = parse_presentation(c.group);
  const auto texts = word_texts(c);
  std::vector<std::pair<std::string, ExtNat>> rows;
  std::optional<Cfg> grammar = p.grammar();
  for (const auto& text : texts) {
    const Word w = parse_word(p, text);
    const ExtNat norm = grammar ? deletion_distance(*grammar, p, w)
                                : ExtNat(cancellation_norm(p, w));
    rows.emplace_back(format_word(p, w), norm);
  }
  if (c.format == "json") {
    nlohmann::json norms = nlohmann::json::array();
    for (const auto& [word, norm] : rows) {
      norms.push_back({{"word", word},
                       {"norm", norm.is_finite() ? nlohmann::json(norm.value())
                                                 : nlohmann::json("inf")}});
    }
    out << nlohmann::json{{"schema", kReportSchema}, {"group", p.describe()}, {"norms", norms}}
               .dump(2)
        << '\n';
  } else if (c.format == "csv") {
    out << "word,norm\n";
    for (const auto& [word, norm] : rows) {
      out << word << ',' << norm << '\n';
    }
  } else {
    for (const auto& row : rows) {
      out << row.second << '\n';
    }
  }
  return kExitOk;
}

int cmd_seq(const Config& c, std::ostream& out) {
  const NormQuery q = make_query(c);
  const auto values = empirical_sequence(q, c.kmax);
  if (c.format == "json") {
    nlohmann::json list = nlohmann::json::array();
    for (ExtNat v : values) {
      list.push_back(v.is_finite() ? nlohmann::json(v.value()) : nlohmann::json("inf"));
    }
    out << nlohmann::json{{"schema", kReportSchema}, {"values", list}}.dump(2) << '\n';
  } else if (c.format == "csv") {
    out << values_to_csv(values);
  } else {
    for (std::size_t k = 0; k < values.size(); ++k) {
      out << k << ' ' << values[k] << '\n';
    }
  }
  return kExitOk;
}

int cmd_tau(const Config& c, std::ostream& out) {
  const NormQuery q = make_query(c);
  EmpiricalOptions options;
  options.kmax = c.kmax;
  options.max_period = c.max_period;
  options.min_tail_reps = c.min_tail_reps;
  Budgets budgets;
  budgets.parikh_work = c.budget_trees;
  budgets.product_items = c.budget_items;
  budgets.coordinates =
      c.coordinates == "full" ? ParikhCoordinates::kFull : ParikhCoordinates::kMerged;

  PipelineReport report = c.method == "empirical" ? empirical_tau(q, options)
                          : c.method == "symbolic" ? symbolic_tau(q, budgets)
                                                   : cross_check(q, options, budgets);
  if (c.format == "json") {
    out << report_to_json(report) << '\n';
  } else if (c.format == "csv") {
    if (!report.empirical) {
      throw ParseError("csv output needs the empirical values; use --method empirical or both");
    }
    out << values_to_csv(report.empirical->values);
  } else {
    out << report_to_text(report);
  }
  return exit_code_for(report);
}

int cmd_grammar_check(const Config& c, std::ostream& out) {
  std::ifstream in(c.grammar_file);
  if (!in) {
    throw ParseError("cannot open grammar file '" + c.grammar_file + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const Cfg g = parse_grammar(buffer.str());
  const Cfg cnf = to_cnf(g);
  const ChartParser parser(g);
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& text : c.word) {
    std::vector<std::string> tokens;
    std::istringstream words(text);
    for (std::string t; words >> t;) {
      if (t != "e") {
        tokens.push_back(t);
      }
    }
    const TerminalString w = g.encode(tokens);
    const ExtNat distance = parser.deletion_distance(w);
    checks.push_back({{"word", text},
                      {"member", parser.accepts(w)},
                      {"deletion_distance", distance.is_finite()
                                                ? nlohmann::json(distance.value())
                                                : nlohmann::json("inf")}});
  }
  const nlohmann::json summary{{"schema", kReportSchema},
                               {"terminals", g.terminals()},
                               {"variables", g.variables().size()},
                               {"rules", g.rules().size()},
                               {"cnf_rules", cnf.rules().size()},
                               {"checks", checks}};
  if (c.format == "json") {
    out << summary.dump(2) << '\n';
  } else {
    out << "terminals " << g.terminals().size() << '\n'
        << "variables " << g.variables().size() << '\n'
        << "rules     " << g.rules().size() << '\n'
        << "cnf rules " << cnf.rules().size() << '\n';
    for (const auto& check : checks) {
      out << check["word"].get<std::string>() << ": "
          << (check["member"].get<bool>() ? "member" : "not a member") << ", distance "
          << (check["deletion_distance"].is_string() ? std::string("inf")
                                                    : check["deletion_distance"].dump())
          << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stable cancellation lengths of words in free and universal Coxeter groups",
               "stablenorm"};
  app.require_subcommand(1);
  Config c;

  CLI::App* norm = app.add_subcommand("norm", "cancellation norm of each word");
  add_common(norm, c);
  CLI::App* seq = app.add_subcommand("seq", "norms of w_1^k ... w_n^k for k = 0..kmax");
  add_common(seq, c);
  add_sequence(seq, c);
  CLI::App* tau = app.add_subcommand("tau", "closed form and stable length");
  add_common(tau, c);
  add_sequence(tau, c);
  add_tau(tau, c);
  CLI::App* grammar = app.add_subcommand("grammar", "grammar utilities");
  grammar->require_subcommand(1);
  CLI::App* check = grammar->add_subcommand("check", "parse a grammar file and test words");
  check->add_option("file", c.grammar_file, "grammar file")->required();
  check->add_option("--word", c.word, "word to test (repeatable)");
  check->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"json", "pretty"}));
  check->add_option("--out", c.out_path, "write output to this file");

  std::vector<const char*> argv{"stablenorm"};
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  std::ofstream file;
  if (!c.out_path.empty()) {
    file.open(c.out_path);
    if (!file) {
      err << "error: cannot write '" << c.out_path << "'\n";
      return kExitFailure;
    }
  }
  std::ostream& sink = c.out_path.empty() ? out : file;
  try {
    if (norm->parsed()) {
      return cmd_norm(c, sink);
    }
    if (seq->parsed()) {
      return cmd_seq(c, sink);
    }
    if (tau->parsed()) {
      return cmd_tau(c, sink);
    }
    return cmd_grammar_check(c, sink);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const BudgetExceeded& e) {
    err << "budget exhausted: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace stablenorm::cli

// Command-line front end for the Lithuanian text normalizer: batch
// normalization, rule-fire tracing, data-table evaluation, split
// experiments, and builtin rule-pack export.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "ltnorm/eval.hpp"
#include "ltnorm/rule_engine.hpp"
#include "ltnorm/rulepack_lt.hpp"
#include "ltnorm/tags.hpp"

namespace {

ltnorm::RulePack resolve_pack(const std::string& rules) {
  if (auto profile = ltnorm::profile_from_name(rules))
    return ltnorm::build_rulepack(*profile);
  return ltnorm::load_rulepack_file(rules, ltnorm::Profile::DelFlf);
}

std::unique_ptr<std::istream> open_input(const std::string& path) {
  if (path.empty() || path == "-") return nullptr;  // stdin
  auto in = std::make_unique<std::ifstream>(path, std::ios::binary);
  if (!*in) throw std::runtime_error("cannot open input: " + path);
  return in;
}

std::unique_ptr<std::ostream> open_output(const std::string& path) {
  if (path.empty() || path == "-") return nullptr;  // stdout
  auto out = std::make_unique<std::ofstream>(path, std::ios::binary);
  if (!*out) throw std::runtime_error("cannot open output: " + path);
  return out;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Lithuanian text normalizer for speech synthesis front ends"};
  app.require_subcommand(1);

  std::string rules = "del_flf";
  std::string in_path, out_path, data_path, articles_path;
  std::string mode = "halves";
  bool strict = false;
  bool json_lines = false;

  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("--rules", rules,
                    "rule file path or builtin profile (del_flf, nav)");
    cmd->add_option("--in", in_path, "input file (default: stdin)");
    cmd->add_option("--out", out_path, "output file (default: stdout)");
  };

  CLI::App* normalize = app.add_subcommand(
      "normalize", "normalize text line by line");
  add_io(normalize);
  normalize->add_flag("--strict", strict,
                      "fail if a morphological tag leaks into the output");

  CLI::App* trace = app.add_subcommand(
      "trace", "print every fired rule with before/after text");
  add_io(trace);
  trace->add_flag("--json-lines", json_lines,
                  "one JSON object per fired rule");

  CLI::App* eval_cmd = app.add_subcommand(
      "eval", "score a data table against its reference expansions");
  add_io(eval_cmd);
  eval_cmd->add_option("--data", data_path, "data table (TSV)")->required();

  CLI::App* split = app.add_subcommand(
      "split-exp", "rule-selection split experiment over a data table");
  add_io(split);
  split->add_option("--data", data_path, "data table (TSV)")->required();
  split->add_option("--mode", mode, "halves | articles");
  split->add_option("--articles", articles_path,
                    "article boundaries file (1-based \"first last\" lines)");

  CLI::App* emit = app.add_subcommand(
      "emit-rules", "write a builtin rule pack in the rule-file format");
  add_io(emit);

  CLI11_PARSE(app, argc, argv);

  auto in_file = open_input(in_path);
  std::istream& in = in_file ? *in_file : std::cin;
  auto out_file = open_output(out_path);
  std::ostream& out = out_file ? *out_file : std::cout;

  if (emit->parsed()) {
    auto profile = ltnorm::profile_from_name(rules);
    if (!profile) {
      std::cerr << "emit-rules requires a builtin profile name\n";
      return 2;
    }
    out << ltnorm::emit_rulepack(ltnorm::build_rulepack(*profile));
    return out.good() ? 0 : 1;
  }

  ltnorm::RulePack pack = resolve_pack(rules);

  if (normalize->parsed()) {
    std::string line;
    int leaks = 0;
    while (std::getline(in, line)) {
      std::string guarded = ltnorm::escape_guillemets(line);
      std::string result =
          ltnorm::restore_guillemets(ltnorm::apply_cascade(pack, guarded));
      out << result << "\n";
      if (strict) {
        ltnorm::TagCheck check = ltnorm::assert_no_tags(
            ltnorm::apply_cascade(pack, guarded));
        if (!check.ok) {
          ++leaks;
          std::cerr << "tag leak in: " << result << "\n";
        }
      }
    }
    return leaks ? 3 : 0;
  }

  if (trace->parsed()) {
    std::string line;
    while (std::getline(in, line)) {
      std::string guarded = ltnorm::escape_guillemets(line);
      ltnorm::TraceResult traced = ltnorm::trace_cascade(pack, guarded);
      if (json_lines) {
        for (const auto& step : traced.trace.steps) {
          out << "{\"rule\":\"" << json_escape(step.rule_id) << "\",\"count\":"
              << step.match_count << ",\"before\":\""
              << json_escape(ltnorm::restore_guillemets(step.before))
              << "\",\"after\":\""
              << json_escape(ltnorm::restore_guillemets(step.after))
              << "\"}\n";
        }
        out << "{\"final\":\""
            << json_escape(ltnorm::restore_guillemets(traced.text)) << "\"}\n";
      } else {
        for (const auto& step : traced.trace.steps)
          out << step.rule_id << " x" << step.match_count << ": "
              << ltnorm::restore_guillemets(step.before) << " => "
              << ltnorm::restore_guillemets(step.after) << "\n";
        out << "final: " << ltnorm::restore_guillemets(traced.text) << "\n";
      }
    }
    return 0;
  }

  if (eval_cmd->parsed()) {
    std::vector<ltnorm::DataEntry> entries =
        ltnorm::load_data_table_file(data_path);
    ltnorm::EvalReport report = ltnorm::evaluate(pack, entries);
    out << ltnorm::render_report(report);
    return 0;
  }

  if (split->parsed()) {
    std::vector<ltnorm::DataEntry> entries =
        ltnorm::load_data_table_file(data_path);
    ltnorm::SplitSpec spec;
    if (mode == "halves") {
      spec.mode = ltnorm::SplitMode::HALVES;
    } else if (mode == "articles") {
      spec.mode = ltnorm::SplitMode::PER_ARTICLE_HALVES;
      if (articles_path.empty()) {
        std::cerr << "--mode articles requires --articles <path>\n";
        return 2;
      }
      spec.articles = ltnorm::load_article_boundaries_file(articles_path);
    } else {
      std::cerr << "unknown --mode: " << mode << "\n";
      return 2;
    }
    ltnorm::SplitResult result =
        ltnorm::split_experiment(pack, std::move(entries), spec);
    out << "# direction 1 -> 2 (selected " << result.selected_forward
        << " rules, " << result.used_forward << " used on test half)\n"
        << ltnorm::render_report(result.forward) << "\n"
        << "# direction 2 -> 1 (selected " << result.selected_backward
        << " rules, " << result.used_backward << " used on test half)\n"
        << ltnorm::render_report(result.backward) << "\n";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", result.averaged_total_pct);
    out << "averaged_total_pct=" << buf << "\n";
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

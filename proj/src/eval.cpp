#include "ltnorm/eval.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace ltnorm {

namespace {

const char* kHeader[] = {"No.",  "Entry", "NSW1", "NSW2", "NSW3", "NSW4",
                         "Correct expansion", "Generated expansion"};

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      cells.push_back(line.substr(start));
      break;
    }
    cells.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return cells;
}

std::string format_pct(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

}  // namespace

std::string normalize_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool in_space = false;
  for (char c : text) {
    if (c == ' ' || c == '\t') {
      in_space = true;
      continue;
    }
    if (in_space && !out.empty()) out.push_back(' ');
    in_space = false;
    out.push_back(c);
  }
  return out;
}

std::vector<DataEntry> load_data_table(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw DataError("empty data table");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::vector<std::string> header = split_tabs(line);
  if (header.size() < 7)
    throw DataError("bad header: expected at least 7 tab-separated columns");
  for (std::size_t i = 0; i < 7; ++i) {
    if (header[i] != kHeader[i])
      throw DataError("bad header: column " + std::to_string(i + 1) +
                      " is \"" + header[i] + "\", expected \"" + kHeader[i] +
                      "\"");
  }

  std::vector<DataEntry> entries;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells = split_tabs(line);
    if (cells.size() < 7 || cells.size() > 8)
      throw DataError("line " + std::to_string(lineno) +
                      ": expected 7 or 8 columns, got " +
                      std::to_string(cells.size()));
    DataEntry e;
    std::string no = cells[0];
    if (!no.empty() && no.back() == '.') no.pop_back();
    try {
      e.index = std::stoi(no);
    } catch (...) {
      throw DataError("line " + std::to_string(lineno) + ": bad row number \"" +
                      cells[0] + "\"");
    }
    e.entry = cells[1];
    for (int k = 2; k <= 5; ++k) {
      const std::string& cell = cells[static_cast<std::size_t>(k)];
      if (cell.empty() || cell == "-") continue;
      auto cls = semiotic_class_from_name(cell);
      if (!cls)
        throw DataError("line " + std::to_string(lineno) +
                        ": unknown class code \"" + cell + "\"");
      e.classes.push_back(*cls);
    }
    if (e.classes.empty() || e.classes.size() > 4)
      throw DataError("line " + std::to_string(lineno) +
                      ": entries carry 1 to 4 class labels");
    e.correct_expansion = cells[6];
    if (cells.size() == 8) e.generated_expansion = cells[7];
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<DataEntry> load_data_table_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open data table: " + path);
  return load_data_table(in);
}

std::vector<std::pair<int, int>> load_article_boundaries(std::istream& in) {
  std::vector<std::pair<int, int>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    int first = 0, last = 0;
    if (!(ss >> first >> last) || first < 1 || last < first)
      throw DataError("articles file line " + std::to_string(lineno) +
                      ": expected \"first last\" with 1 <= first <= last");
    out.emplace_back(first, last);
  }
  if (out.empty()) throw DataError("articles file defines no ranges");
  return out;
}

std::vector<std::pair<int, int>> load_article_boundaries_file(
    const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open articles file: " + path);
  return load_article_boundaries(in);
}

void fill_generated(const RulePack& pack, std::vector<DataEntry>& entries) {
  for (DataEntry& e : entries) {
    std::string guarded = escape_guillemets(e.entry);
    e.generated_expansion = restore_guillemets(apply_cascade(pack, guarded));
  }
}

EvalReport evaluate(const RulePack& pack, std::vector<DataEntry>& entries) {
  fill_generated(pack, entries);
  EvalReport report;
  report.per_class.resize(kSemioticClassCount);
  for (int i = 0; i < kSemioticClassCount; ++i)
    report.per_class[static_cast<std::size_t>(i)].cls =
        static_cast<SemioticClass>(i);
  for (const DataEntry& e : entries) {
    bool error = normalize_whitespace(e.generated_expansion) !=
                 normalize_whitespace(e.correct_expansion);
    for (SemioticClass cls : e.classes) {
      ClassStats& s = report.per_class[static_cast<std::size_t>(cls)];
      s.total += 1;
      report.total_nsw += 1;
      if (error) {
        s.errors += 1;
        report.total_errors += 1;
      }
    }
  }
  for (ClassStats& s : report.per_class) {
    s.pct_of_class = s.total ? 100.0 * s.errors / s.total : 0.0;
    s.pct_of_all_errors =
        report.total_errors ? 100.0 * s.errors / report.total_errors : 0.0;
  }
  report.total_pct =
      report.total_nsw ? 100.0 * report.total_errors / report.total_nsw : 0.0;
  return report;
}

RulePack select_used_rules(const RulePack& pack,
                           const std::vector<DataEntry>& entries) {
  std::set<std::string> used;
  for (const DataEntry& e : entries) {
    std::string guarded = escape_guillemets(e.entry);
    TraceResult traced = trace_cascade(pack, guarded);
    for (const FireStep& step : traced.trace.steps) used.insert(step.rule_id);
  }
  RulePack selected;
  selected.profile = pack.profile;
  for (const RewriteRule& rule : pack.rules)
    if (used.count(rule.id))
      selected.rules.push_back(make_rule(rule.id, rule.order, rule.pattern,
                                         rule.replacement, rule.comment));
  return selected;
}

namespace {

std::pair<std::vector<DataEntry>, std::vector<DataEntry>> partition(
    const std::vector<DataEntry>& entries, const SplitSpec& spec) {
  std::vector<DataEntry> part1, part2;
  if (spec.mode == SplitMode::HALVES) {
    std::size_t half = (entries.size() + 1) / 2;
    part1.assign(entries.begin(), entries.begin() + static_cast<long>(half));
    part2.assign(entries.begin() + static_cast<long>(half), entries.end());
  } else {
    if (spec.articles.empty())
      throw DataError("per-article split requires article boundaries");
    for (auto [first, last] : spec.articles) {
      if (first < 1 || last > static_cast<int>(entries.size()))
        throw DataError("article range " + std::to_string(first) + "-" +
                        std::to_string(last) + " is outside the table");
      int len = last - first + 1;
      int half = (len + 1) / 2;
      for (int i = first; i <= last; ++i) {
        const DataEntry& e = entries[static_cast<std::size_t>(i - 1)];
        (i < first + half ? part1 : part2).push_back(e);
      }
    }
  }
  if (part1.empty() || part2.empty())
    throw EmptyPartition("split produced an empty partition");
  return {std::move(part1), std::move(part2)};
}

int count_used(const RulePack& selected,
               const std::vector<DataEntry>& entries) {
  RulePack used = select_used_rules(selected, entries);
  return static_cast<int>(used.rules.size());
}

}  // namespace

SplitResult split_experiment(const RulePack& pack,
                             std::vector<DataEntry> entries,
                             const SplitSpec& spec) {
  auto [part1, part2] = partition(entries, spec);
  SplitResult result;

  RulePack rules1 = select_used_rules(pack, part1);
  result.selected_forward = static_cast<int>(rules1.rules.size());
  result.used_forward = count_used(rules1, part2);
  result.forward = evaluate(rules1, part2);

  RulePack rules2 = select_used_rules(pack, part2);
  result.selected_backward = static_cast<int>(rules2.rules.size());
  result.used_backward = count_used(rules2, part1);
  result.backward = evaluate(rules2, part1);

  result.averaged_total_pct =
      (result.forward.total_pct + result.backward.total_pct) / 2.0;
  return result;
}

std::string render_report(const EvalReport& report) {
  std::ostringstream out;
  out << "Class   Errors  % of class  % of all errors\n";
  for (const ClassStats& s : report.per_class) {
    out << semiotic_class_name(s.cls);
    for (std::size_t pad = semiotic_class_name(s.cls).size(); pad < 8; ++pad)
      out << ' ';
    std::string errors = std::to_string(s.errors) + "/" +
                         std::to_string(s.total);
    out << errors;
    for (std::size_t pad = errors.size(); pad < 8; ++pad) out << ' ';
    std::string pc = format_pct(s.pct_of_class);
    out << pc;
    for (std::size_t pad = pc.size(); pad < 12; ++pad) out << ' ';
    out << format_pct(s.pct_of_all_errors) << "\n";
  }
  out << "Total   " << report.total_errors << "/" << report.total_nsw << "  "
      << format_pct(report.total_pct) << "%\n\n";
  out << "total_nsw=" << report.total_nsw << "\n";
  out << "total_errors=" << report.total_errors << "\n";
  out << "total_pct=" << format_pct(report.total_pct) << "\n";
  for (const ClassStats& s : report.per_class)
    out << semiotic_class_name(s.cls) << "_errors=" << s.errors << "\n";
  return out.str();
}

}  // namespace ltnorm

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ltnorm/rule_engine.hpp"
#include "ltnorm/tags.hpp"

// Evaluation harness: loads annotated data tables, scores cascade output
// against reference expansions per semiotic class, and runs the
// split-rulemaking experiments.
//
// Entries are scored independently, so evaluation over a shared immutable
// pack may be parallelized by the caller; the report counts commute.
//
// Data table: UTF-8 TSV with header
//   No.  Entry  NSW1  NSW2  NSW3  NSW4  Correct expansion  Generated expansion
// Class cells hold a taxonomy code or "-" for absent.

namespace ltnorm {

struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DataEntry {
  int index = 0;
  std::string entry;
  std::vector<SemioticClass> classes;  // 1..4 labels
  std::string correct_expansion;
  std::string generated_expansion;
};

struct ClassStats {
  SemioticClass cls = SemioticClass::NONE;
  int total = 0;
  int errors = 0;
  double pct_of_class = 0.0;
  double pct_of_all_errors = 0.0;
};

struct EvalReport {
  std::vector<ClassStats> per_class;  // Table 1 order
  int total_nsw = 0;
  int total_errors = 0;
  double total_pct = 0.0;
};

enum class SplitMode { HALVES, PER_ARTICLE_HALVES };

struct SplitSpec {
  SplitMode mode = SplitMode::HALVES;
  // 1-based inclusive [first, last] row ranges; required for
  // PER_ARTICLE_HALVES
  std::vector<std::pair<int, int>> articles;
};

std::vector<DataEntry> load_data_table(std::istream& in);
std::vector<DataEntry> load_data_table_file(const std::string& path);

// Article boundaries file: one "first last" pair per line, 1-based.
std::vector<std::pair<int, int>> load_article_boundaries(std::istream& in);
std::vector<std::pair<int, int>> load_article_boundaries_file(
    const std::string& path);

// Collapses space runs and trims; rule replacements may introduce double
// spaces a human check would ignore.
std::string normalize_whitespace(std::string_view text);

// Runs the cascade over each entry (guillemets in input are escaped first)
// and fills generated_expansion.
void fill_generated(const RulePack& pack, std::vector<DataEntry>& entries);

// An entry is an error iff generated != correct after whitespace
// normalization; the error counts toward every class labeled on the entry.
EvalReport evaluate(const RulePack& pack, std::vector<DataEntry>& entries);

// Sub-pack of rules that fired at least once on at least one entry,
// preserving cascade order.
RulePack select_used_rules(const RulePack& pack,
                           const std::vector<DataEntry>& entries);

struct SplitResult {
  EvalReport forward;    // rules from part 1, scored on part 2
  EvalReport backward;   // rules from part 2, scored on part 1
  double averaged_total_pct = 0.0;
  // Table 6 shape: rules selected on the rulemaking half / used on the
  // test half, for each direction.
  int selected_forward = 0, used_forward = 0;
  int selected_backward = 0, used_backward = 0;
};

struct EmptyPartition : std::runtime_error {
  explicit EmptyPartition(const std::string& msg) : std::runtime_error(msg) {}
};

SplitResult split_experiment(const RulePack& pack,
                             std::vector<DataEntry> entries,
                             const SplitSpec& spec);

// Plain-text table (Table 7 layout) plus a machine-readable key=value block.
std::string render_report(const EvalReport& report);

}  // namespace ltnorm

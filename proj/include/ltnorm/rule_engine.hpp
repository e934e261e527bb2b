#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ltnorm/regex.hpp"

// Ordered rewrite-rule cascade. Rules are applied sequentially: each rule
// replaces all non-overlapping matches in a single left-to-right pass, and
// the output of rule k is the input of rule k+1.
//
// Rule file format: UTF-8, line oriented, `pattern<TAB>replacement`.
// Lines starting with '#' are comments, blank lines are ignored, file
// order is cascade order.
//
// A RulePack is immutable once built; apply_cascade and trace_cascade are
// pure functions, safe to call concurrently over a shared pack.

namespace ltnorm {

enum class Profile { DelFlf, Nav };

std::string profile_name(Profile p);
std::optional<Profile> profile_from_name(std::string_view name);

struct MalformedRule : std::runtime_error {
  explicit MalformedRule(const std::string& msg) : std::runtime_error(msg) {}
};

struct RewriteRule {
  std::string id;           // stable identifier, unique within a pack
  int order = 0;            // position in the cascade, ascending
  std::string pattern;      // regex source text
  std::string replacement;  // template with $k group references
  std::string comment;
  re::Pattern compiled;
  re::Replacement repl;
};

struct RulePack {
  Profile profile = Profile::DelFlf;
  std::vector<RewriteRule> rules;
};

struct FireStep {
  std::string rule_id;
  std::string before;
  std::string after;
  int match_count = 0;
};

struct FireTrace {
  std::vector<FireStep> steps;  // only rules with match_count >= 1
};

// Compiles a rule from its parts. Throws re::PatternError / re::BadGroupRef.
RewriteRule make_rule(std::string id, int order, std::string_view pattern,
                      std::string_view replacement, std::string comment = "");

// Parses one rule-file line. Returns nullopt for comments and blank lines.
// Throws MalformedRule (no tab separator), re::PatternError, re::BadGroupRef.
std::optional<RewriteRule> parse_rule_line(std::string_view line, int order);

// Loads a pack from a rule-file stream; errors are annotated with the
// 1-based line number. Rejects invalid UTF-8.
RulePack load_rulepack(std::istream& in, Profile profile);
RulePack load_rulepack_file(const std::string& path, Profile profile);

// Serializes a pack back to the rule-file format (ids become comments).
std::string emit_rulepack(const RulePack& pack);

struct ApplyResult {
  std::string text;
  int match_count = 0;
};

ApplyResult apply_rule(const RewriteRule& rule, std::string_view text);
std::string apply_cascade(const RulePack& pack, std::string_view text);

struct TraceResult {
  std::string text;
  FireTrace trace;
};

TraceResult trace_cascade(const RulePack& pack, std::string_view text);

}  // namespace ltnorm

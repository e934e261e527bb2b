#include "ltnorm/rule_engine.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace ltnorm {

std::string profile_name(Profile p) {
  return p == Profile::DelFlf ? "del_flf" : "nav";
}

std::optional<Profile> profile_from_name(std::string_view name) {
  if (name == "del_flf") return Profile::DelFlf;
  if (name == "nav") return Profile::Nav;
  return std::nullopt;
}

RewriteRule make_rule(std::string id, int order, std::string_view pattern,
                      std::string_view replacement, std::string comment) {
  RewriteRule rule;
  rule.id = std::move(id);
  rule.order = order;
  rule.pattern.assign(pattern);
  rule.replacement.assign(replacement);
  rule.comment = std::move(comment);
  rule.compiled = re::Pattern::compile(rule.pattern);
  rule.repl = re::Replacement::parse(rule.replacement, rule.compiled.group_count());
  return rule;
}

std::optional<RewriteRule> parse_rule_line(std::string_view line, int order) {
  // strip a trailing CR so files with Windows line endings load
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  if (line.empty()) return std::nullopt;
  if (line.front() == '#') return std::nullopt;
  std::size_t tab = line.find('\t');
  if (tab == std::string_view::npos)
    throw MalformedRule("rule line has no tab separator: \"" +
                        std::string(line) + "\"");
  return make_rule("L" + std::to_string(order), order, line.substr(0, tab),
                   line.substr(tab + 1));
}

RulePack load_rulepack(std::istream& in, Profile profile) {
  RulePack pack;
  pack.profile = profile;
  std::string line;
  int lineno = 0;
  int order = 0;
  while (std::getline(in, line)) {
    ++lineno;
    try {
      re::decode_utf8(line);  // reject invalid UTF-8 at load
      if (auto rule = parse_rule_line(line, order + 1)) {
        pack.rules.push_back(std::move(*rule));
        ++order;
      }
    } catch (const std::exception& e) {
      throw MalformedRule("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return pack;
}

RulePack load_rulepack_file(const std::string& path, Profile profile) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedRule("cannot open rule file: " + path);
  return load_rulepack(in, profile);
}

std::string emit_rulepack(const RulePack& pack) {
  std::ostringstream out;
  out << "# profile: " << profile_name(pack.profile) << "\n";
  for (const auto& rule : pack.rules) {
    out << "# " << rule.id;
    if (!rule.comment.empty()) out << " — " << rule.comment;
    out << "\n" << rule.pattern << "\t" << rule.replacement << "\n";
  }
  return out.str();
}

ApplyResult apply_rule(const RewriteRule& rule, std::string_view text) {
  std::u32string t32 = re::decode_utf8(text);
  re::ReplaceResult r = rule.compiled.replace_all(t32, rule.repl);
  return {re::encode_utf8(r.text), r.match_count};
}

std::string apply_cascade(const RulePack& pack, std::string_view text) {
  std::u32string t32 = re::decode_utf8(text);
  for (const auto& rule : pack.rules) {
    re::ReplaceResult r = rule.compiled.replace_all(t32, rule.repl);
    if (r.match_count > 0) t32 = std::move(r.text);
  }
  return re::encode_utf8(t32);
}

TraceResult trace_cascade(const RulePack& pack, std::string_view text) {
  TraceResult result;
  std::u32string t32 = re::decode_utf8(text);
  for (const auto& rule : pack.rules) {
    re::ReplaceResult r = rule.compiled.replace_all(t32, rule.repl);
    if (r.match_count > 0) {
      FireStep step;
      step.rule_id = rule.id;
      step.before = re::encode_utf8(t32);
      step.after = re::encode_utf8(r.text);
      step.match_count = r.match_count;
      result.trace.steps.push_back(std::move(step));
      t32 = std::move(r.text);
    }
  }
  result.text = re::encode_utf8(t32);
  return result;
}

}  // namespace ltnorm

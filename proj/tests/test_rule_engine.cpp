#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "ltnorm/rule_engine.hpp"
#include "ltnorm/rulepack_lt.hpp"

using namespace ltnorm;

TEST_CASE("parse_rule_line splits on the first tab") {
  auto rule = parse_rule_line("(p\\.) (\\d)\t$2 $1", 1);
  REQUIRE(rule.has_value());
  CHECK(rule->pattern == "(p\\.) (\\d)");
  CHECK(rule->replacement == "$2 $1");
  CHECK(apply_rule(*rule, "p. 7").text == "7 p.");
}

TEST_CASE("comments and blank lines yield nothing") {
  CHECK_FALSE(parse_rule_line("# comment", 1).has_value());
  CHECK_FALSE(parse_rule_line("", 1).has_value());
  CHECK_FALSE(parse_rule_line("\r", 1).has_value());
}

TEST_CASE("malformed lines throw") {
  CHECK_THROWS_AS(parse_rule_line("abc", 1), MalformedRule);
  CHECK_THROWS_AS(parse_rule_line("(ab\tx", 1), re::PatternError);
  CHECK_THROWS_AS(parse_rule_line("(a)\t$2", 1), re::BadGroupRef);
}

TEST_CASE("load_rulepack keeps file order and counts comments out") {
  std::istringstream in(
      "# header\n"
      "a\tb\n"
      "\n"
      "c\td\n"
      "e\tf\n");
  RulePack pack = load_rulepack(in, Profile::DelFlf);
  REQUIRE(pack.rules.size() == 3);
  CHECK(pack.rules[0].order == 1);
  CHECK(pack.rules[1].order == 2);
  CHECK(pack.rules[2].order == 3);
}

TEST_CASE("empty stream loads an empty pack") {
  std::istringstream in("");
  CHECK(load_rulepack(in, Profile::Nav).rules.empty());
}

TEST_CASE("load errors carry the line number") {
  std::istringstream in("a\tb\n(bad\tx\n");
  try {
    load_rulepack(in, Profile::DelFlf);
    FAIL("expected MalformedRule");
  } catch (const MalformedRule& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("apply_rule counts and single pass") {
  RewriteRule rule = make_rule("r", 1, "(ab)+", "X");
  ApplyResult r = apply_rule(rule, "ababab");
  CHECK(r.text == "X");
  CHECK(r.match_count == 1);
  ApplyResult empty = apply_rule(rule, "");
  CHECK(empty.text.empty());
  CHECK(empty.match_count == 0);
}

TEST_CASE("apply_cascade equals a left fold of apply_rule") {
  std::istringstream in("a\tbb\nbb+\tc\nc\td\n");
  RulePack pack = load_rulepack(in, Profile::DelFlf);
  std::string text = "aa a";
  std::string folded = text;
  for (const auto& rule : pack.rules) folded = apply_rule(rule, folded).text;
  CHECK(apply_cascade(pack, text) == folded);
  CHECK(apply_cascade(pack, text) == "d d");
}

TEST_CASE("empty pack is the identity") {
  RulePack pack;
  CHECK(apply_cascade(pack, "labas rytas") == "labas rytas");
}

TEST_CASE("text with no matches is unchanged byte for byte") {
  RulePack pack = build_rulepack(Profile::DelFlf);
  CHECK(apply_cascade(pack, "labas rytas") == "labas rytas");
}

TEST_CASE("trace only records firing rules and replays") {
  std::istringstream in("a\tb\nzz\tq\nb\tc\n");
  RulePack pack = load_rulepack(in, Profile::DelFlf);
  TraceResult traced = trace_cascade(pack, "a");
  CHECK(traced.text == "c");
  REQUIRE(traced.trace.steps.size() == 2);
  CHECK(traced.trace.steps[0].rule_id == "L1");
  CHECK(traced.trace.steps[1].rule_id == "L3");
  for (const auto& step : traced.trace.steps)
    CHECK(step.match_count >= 1);
  // replaying the recorded steps reproduces the final text
  std::string replay = "a";
  for (const auto& step : traced.trace.steps) {
    CHECK(replay == step.before);
    replay = step.after;
  }
  CHECK(replay == traced.text);
}

TEST_CASE("empty pack yields an empty trace") {
  RulePack pack;
  TraceResult traced = trace_cascade(pack, "whatever");
  CHECK(traced.trace.steps.empty());
  CHECK(traced.text == "whatever");
}

TEST_CASE("determinism") {
  RulePack pack = build_rulepack(Profile::DelFlf);
  std::string input = "Nuo 2013 m. sausio 4 d. 15 val. LSP ir 21 min.";
  CHECK(apply_cascade(pack, input) == apply_cascade(pack, input));
}

TEST_CASE("trace replay matches apply_cascade on a date") {
  RulePack pack = build_rulepack(Profile::DelFlf);
  std::string input = "Nuo 2013 m. sausio 4 d.";
  TraceResult traced = trace_cascade(pack, input);
  CHECK(traced.text == apply_cascade(pack, input));
  CHECK(traced.trace.steps.size() >= 3);
  std::string replay = input;
  for (const auto& step : traced.trace.steps) replay = step.after;
  CHECK(replay == traced.text);
}

TEST_CASE("emit and reload round-trips behavior") {
  RulePack pack = build_rulepack(Profile::Nav);
  std::string emitted = emit_rulepack(pack);
  std::istringstream in(emitted);
  RulePack reloaded = load_rulepack(in, Profile::Nav);
  CHECK(reloaded.rules.size() == pack.rules.size());
  for (const char* text : {"Už 1 km 700 m", "5 m.", "13:15 val."})
    CHECK(apply_cascade(reloaded, text) == apply_cascade(pack, text));
}

TEST_CASE("rejects invalid utf-8 at load") {
  std::istringstream in("a\tb\n\xFF\tc\n");
  CHECK_THROWS_AS(load_rulepack(in, Profile::DelFlf), MalformedRule);
}

TEST_CASE("order sensitivity: long dates must precede bare years") {
  RulePack pack = build_rulepack(Profile::DelFlf);
  std::string input = "Nuo 2013 m. sausio 4 d.";
  std::string correct = apply_cascade(pack, input);

  // move the prepositional long-date rule behind the bare-year rule
  RulePack reordered;
  reordered.profile = pack.profile;
  std::vector<const RewriteRule*> rules;
  const RewriteRule* date_rule = nullptr;
  std::size_t year_pos = 0;
  for (const auto& rule : pack.rules) {
    if (rule.id == "date.long_prep") {
      date_rule = &rule;
      continue;
    }
    rules.push_back(&rule);
    if (rule.id == "year.bare") year_pos = rules.size();
  }
  REQUIRE(date_rule != nullptr);
  REQUIRE(year_pos > 0);
  rules.insert(rules.begin() + static_cast<long>(year_pos), date_rule);
  int order = 0;
  for (const RewriteRule* rule : rules)
    reordered.rules.push_back(make_rule(rule->id, ++order, rule->pattern,
                                        rule->replacement, rule->comment));
  std::string corrupted = apply_cascade(reordered, input);
  CHECK(corrupted != correct);
}

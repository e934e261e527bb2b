#pragma once

#include <string>
#include <vector>

#include "ltnorm/lexicon.hpp"
#include "ltnorm/rule_engine.hpp"
#include "ltnorm/tags.hpp"

// Generators for the builtin Lithuanian rule packs. Each family emits one
// ordered group of rules; build_rulepack concatenates families by stage
// band. Families are generated, not hand-copied: terminal expansions are
// enumerated per digit, case, and gender.

namespace ltnorm {

struct RuleSrc {
  std::string id;
  std::string pattern;
  std::string replacement;
  std::string comment;
};

struct RuleFamily {
  SemioticClass cls = SemioticClass::NONE;
  int stage = 0;  // band controlling global ordering
  std::vector<RuleSrc> rules;
};

struct StageCollision : std::runtime_error {
  explicit StageCollision(const std::string& msg) : std::runtime_error(msg) {}
};

RuleFamily gen_preposition_rules(Profile profile);
RuleFamily gen_tag_duplication_rules(Profile profile);
RuleFamily gen_number_split_rules(Profile profile);
RuleFamily gen_three_digit_rules(Profile profile);
RuleFamily gen_unit_rules(Profile profile);
RuleFamily gen_ordinal_hyphen_rules(Profile profile);
RuleFamily gen_ordinal_keyword_rules(Profile profile);
RuleFamily gen_roman_rules(Profile profile);
RuleFamily gen_date_rules(Profile profile);
RuleFamily gen_year_rules(Profile profile);
RuleFamily gen_time_rules(Profile profile);
RuleFamily gen_phone_rules(Profile profile);
RuleFamily gen_code_rules(Profile profile);
RuleFamily gen_url_rules(Profile profile);
RuleFamily gen_lseq_rules(Profile profile);
RuleFamily gen_aswd_rules(Profile profile);
RuleFamily gen_expn_rules(Profile profile);

// Assembles the full cascade for a profile and compiles it.
// Throws StageCollision if two families claim the same stage band.
RulePack build_rulepack(Profile profile);

}  // namespace ltnorm

#include "ltnorm/rulepack_lt.hpp"

#include <algorithm>
#include <map>

// Rule families for the Lithuanian cascade. Stage bands order the families
// so that wider-context constructs are consumed first (dates before years,
// years before bare cardinals) and so that tag producers run before tag
// consumers. Within a family, rule order is the emission order below.

namespace ltnorm {

namespace {

constexpr const char* kLet = "[a-ząčęėįšųūž]";  // lowercase incl. diacritics

std::string cardinal_n(int d) { return digit_word(d, Case::N, Gender::M); }

// "«P([GAI])»" with the case letter captured.
constexpr const char* kPTagCap = "«P([GAI])»";

struct FamilyBuilder {
  RuleFamily family;
  void add(std::string id, std::string pattern, std::string replacement,
           std::string comment = "") {
    family.rules.push_back({std::move(id), std::move(pattern),
                            std::move(replacement), std::move(comment)});
  }
};

std::string case_tag(char number, Case c) {
  return std::string("«") + number + case_code(c) + "»";
}

// ── internal prologue families ─────────────────────────────────────────

// Time ranges rewritten to nuo/iki constructions before preposition
// tagging, so the inserted prepositions still receive their case tags.
RuleFamily time_prologue_rules() {
  FamilyBuilder b;
  b.family.cls = SemioticClass::NTIME;
  b.family.stage = 10;
  b.add("time.range",
        "([12]?\\d)([:.][0-5]\\d)?[-–]([12]?\\d)([:.][0-5]\\d)? val\\.",
        "nuo «SG» $1$2 val. iki «SG» $3$4 val.");
  b.add("time.nuo_iki",
        "\\b([Nn]uo) ([12]?\\d)([:.][0-5]\\d)? (iki) ([12]?\\d)([:.][0-5]\\d)? "
        "(val\\.)",
        "$1 «SG» $2$3 val. $4 «SG» $5$6 $7");
  b.add("time.tarp_val",
        "\\b([Tt]arp) (\\d{1,2})([:.][0-5]\\d)? (ir|arba) ((\\d{1,2})"
        "([:.][0-5]\\d)? val\\.)",
        "$1 $2$3 val. $4 $5");
  return std::move(b.family);
}

// "š. m." constructions: tag insertion after the preposition, then the
// abbreviation itself.
RuleFamily sm_rules() {
  FamilyBuilder b;
  b.family.cls = SemioticClass::EXPN;
  b.family.stage = 15;
  b.add("sm.prep",
        "\\b([Nn]uo|[Ii]ki|[Ll]igi) (š\\. ?m\\.|šių metų) (" +
            months_genitive_alt() + ")",
        "$1 $2 «PG» $3");
  b.add("sm.expand", "\\b([šŠ])\\. ?m\\.", "$1ių metų");
  return std::move(b.family);
}

RuleFamily cleanup_rules() {
  FamilyBuilder b;
  b.family.cls = SemioticClass::NONE;
  b.family.stage = 95;
  b.add("cleanup.str_guard", "st\uE002r", "str");
  // hundreds-of-an-ordinal leftovers have no word form
  b.add("cleanup.ord_zero", " ?0 «[FM]O»", "");
  // case tags passed beyond a date or emitted by year ranges may stay
  // unconsumed; they are working markers, not output
  b.add("cleanup.tag_left", " «[SP][GAIN]»", "");
  b.add("cleanup.tag_right", "«[SP][GAIN]» ", "");
  b.add("cleanup.tag", "«[SP][GAIN]»", "");
  return std::move(b.family);
}

}  // namespace

// ── prepositions ───────────────────────────────────────────────────────

RuleFamily gen_preposition_rules(Profile) {
  const auto& lex = lexicon();
  FamilyBuilder b;
  b.family.cls = SemioticClass::NUM;
  b.family.stage = 20;

  auto alt_anycase = [](std::vector<std::string> words) {
    // longer entries first so "iš už" wins over "iš", "aplinkui" over "aplink"
    std::stable_sort(words.begin(), words.end(),
                     [](const std::string& a, const std::string& b2) {
                       return a.size() > b2.size();
                     });
    std::string out;
    for (const auto& w : words) {
      if (!out.empty()) out += "|";
      // first letter letter-case alternation; all list heads are ASCII
      // or two-byte Lithuanian letters handled via explicit pairs below
      if (w == "į") {
        out += "[Įį]";
      } else if (w.rfind("š", 0) == 0) {
        out += "[Šš]" + w.substr(std::string("š").size());
      } else if (w.rfind("ž", 0) == 0) {
        out += "[Žž]" + w.substr(std::string("ž").size());
      } else if (w.rfind("į", 0) == 0) {
        out += "[Įį]" + w.substr(std::string("į").size());
      } else {
        char lower = w[0];
        char upper = static_cast<char>(lower - 'a' + 'A');
        out += "[" + std::string(1, upper) + std::string(1, lower) + "]" +
               w.substr(1);
      }
    }
    return out;
  };

  // Clock readings take the genitive ordinal path; a bare one- digit hour
  // after a preposition stays a cardinal duration ("iki 2 val.").
  b.add("prep.clock_min",
        "\\b([Nn]uo|[Ii]ki|[Ll]igi|[Tt]arp|[Pp]o|[Uu]ž) ((\\d|1\\d|2[0-4])"
        "[:.][0-5]\\d val\\.)",
        "$1 «SG» $2");
  b.add("prep.clock_hh", "\\b([Nn]uo|[Ii]ki|[Ll]igi) ((1\\d|2[0-4]) val\\.)",
        "$1 «SG» $2");
  b.add("prep.clock_tarp", "\\b([Tt]arp) ((\\d|1\\d|2[0-4]) val\\.)",
        "$1 «SG» $2");

  // "už" and "po" alone are handled below by the unit-of-measure
  // disambiguation; the compounds "iš už" / "iš po" stay in the list.
  b.add("prep.gen",
        "\\b(" + alt_anycase(lex.prepositions_genitive) + ") (\\d)",
        "$1 «PG» $2");
  b.add("prep.acc", "\\b(" + alt_anycase(lex.prepositions_accusative) +
                        ") (\\d)",
        "$1 «PA» $2");
  b.add("prep.inst", "\\b([Ss]u|[Ss]ulig|[Tt]ies) (\\d)", "$1 «PI» $2");

  // už/po take the genitive for time and distance units, else accusative.
  std::string td_units;
  for (const auto& u : lex.units) {
    if (!u.time_or_distance) continue;
    if (!td_units.empty()) td_units += "|";
    td_units += u.abbrev_re == "m\\." ? "m\\." : u.abbrev_re;
  }
  b.add("prep.uzpo_gen",
        "\\b([Uu]ž|[Pp]o) (\\d+,?\\d*) ?(" + td_units + ")",
        "$1 «PG» $2 $3");
  b.add("prep.uzpo_acc", "\\b([Uu]ž|[Pp]o) (\\d)", "$1 «PA» $2");

  b.add("prep.month",
        "\\b([Aa]rti|[Ii]ki|[Ll]igi|[Nn]uo|[Tt]arp|[Vv]ietoj|[Uu]ž|[Pp]o) (" +
            months_genitive_alt() + ")\\b",
        "$1 «PG» $2");
  return std::move(b.family);
}

// ── tag duplication over unit sequences ────────────────────────────────

RuleFamily gen_tag_duplication_rules(Profile) {
  FamilyBuilder b;
  b.family.cls = SemioticClass::NUM;
  b.family.stage = 25;
  auto pair_rule = [&](const std::string& id, const std::string& first,
                       const std::string& second) {
    b.add(id,
          "(«[SP][GAI]») (\\d+) (" + first + ") (\\d+) (" + second + ")",
          "$1 $2 $3 $1 $4 $5");
  };
  pair_rule("dup.km_m", "km\\b\\.?", "m\\b\\.?");
  pair_rule("dup.val_min", "val\\b\\.?", "min\\b\\.?");
  pair_rule("dup.min_sek", "min\\b\\.?", "sek\\b\\.?");
  return std::move(b.family);
}

// ── dates ──────────────────────────────────────────────────────────────

RuleFamily gen_date_rules(Profile) {
  FamilyBuilder b;
  b.family.cls = SemioticClass::NDATE;
  b.family.stage = 30;
  const std::string mg = "(" + months_genitive_alt() + ")";
  const std::string mgc = "(" + months_genitive_alt_anycase() + ")";
  const std::string day = "(\\d?\\d)";
  const std::string dd = "(d\\.|dien)";
  const std::string year = "([12]\\d\\d\\d)";
  const std::string dash = " ?[–-] ?";

  // day ranges: days in the accusative, "d." in the instrumental plural;
  // a preposition, if any, is ignored
  b.add("date.range", "\\b" + year + " m\\. " + mg + " " + day + dash + day +
                          " ?" + dd,
        "$1-ų metų $2 «SA» $3 «FO» «SA» $4 «FO» «PI» $5");
  b.add("date.range_no_m",
        "\\b" + year + " " + mg + " " + day + dash + day + " ?" + dd,
        "$1-ų $2 «SA» $3 «FO» «SA» $4 «FO» «PI» $5");
  b.add("date.range_no_year",
        "\\b" + mgc + " " + day + dash + day + " ?" + dd,
        "$1 «SA» $2 «FO» «SA» $3 «FO» «PI» $4");

  // full long dates; the prepositional case tag is passed beyond the date
  b.add("date.long_prep",
        std::string(kPTagCap) + " " + year + " m\\. " + mg + " " + day + " " +
            dd,
        "$2-ų metų $3 «S$1» $4 «FO» «S$1» $5 «S$1»");
  b.add("date.long_prep_no_m",
        std::string(kPTagCap) + " " + year + " " + mg + " " + day + " " + dd,
        "$2-ų $3 «S$1» $4 «FO» «S$1» $5 «S$1»");
  b.add("date.long", "\\b" + year + " m\\. " + mg + " " + day + " " + dd,
        "$1-ų metų $2 «SA» $3 «FO» «SA» $4");
  b.add("date.long_no_m", "\\b" + year + " " + mg + " " + day + " " + dd,
        "$1-ų $2 «SA» $3 «FO» «SA» $4");

  // dates without a year
  b.add("date.no_year_prep",
        std::string(kPTagCap) + " " + mg + " " + day + " " + dd,
        "$2 «S$1» $3 «FO» «S$1» $4 «S$1»");
  b.add("date.no_year", "\\b" + mgc + " " + day + " " + dd,
        "$1 «SA» $2 «FO» «SA» $3");

  // month-only dates with mėn., and nominative month constructions
  b.add("date.men_prep",
        std::string(kPTagCap) + " " + year + " m\\. " + mg + " mėn\\.",
        "$2-ų metų $3 «S$1» mėn.");
  b.add("date.men", "\\b" + year + " m\\. " + mg + " mėn\\.",
        "$1-ų metų $2 «SA» mėn.");
  b.add("date.month_nom",
        "\\b" + year + " m\\. (" + months_nominative_alt() + ")\\b",
        "$1-ų metų $2");

  // short-format dates become the long template plus a month-code tag
  b.add("date.short_prep",
        std::string(kPTagCap) + " " + year +
            "[ -](0[1-9]|10|11|12)[ -]([0-3]\\d)\\b",
        "$2-ų metų «$3mėn» «S$1» $4 «FO» «S$1» d.");
  b.add("date.short",
        "\\b" + year + "[ -](0[1-9]|10|11|12)[ -]([0-3]\\d)\\b",
        "$1-ų metų «$2mėn» $3 «FO» «SN» d.");

  const auto& months = lexicon().months_genitive;
  for (int m = 1; m <= 12; ++m) {
    std::string code = (m < 10 ? "0" : "") + std::to_string(m);
    b.add("date.mcode." + code, "«" + code + "mėn»", months[m - 1]);
  }

  b.add("date.d_gen", "«SG» d\\.", "dienos");
  b.add("date.d_acc", "«SA» d\\.", "dieną");
  b.add("date.d_inst", "«SI» d\\.", "diena");
  b.add("date.d_nom", "«SN» d\\.", "diena");
  b.add("date.d_pl", "«PI» d\\.", "dienomis");
  // the full word "diena" is left as written
  b.add("date.dien_word", "«S[GAIN]» dien", "dien");
  b.add("date.dien_word_pl", "«PI» dien", "dien");
  b.add("date.men_gen", "«SG» mėn\\.", "mėnesio");
  b.add("date.men_acc", "«SA» mėn\\.", "mėnesį");
  b.add("date.men_inst", "«SI» mėn\\.", "mėnesiu");
  return std::move(b.family);
}

// ── years ──────────────────────────────────────────────────────────────

RuleFamily gen_year_rules(Profile) {
  FamilyBuilder b;
  b.family.cls = SemioticClass::NYEAR;
  b.family.stage = 35;
  const std::string gate = "(1[5-9]\\d\\d|20[0-5]\\d)";
  const std::string wide = "([12]\\d\\d\\d)";  // relaxed gate for ranges

  b.add("year.nuo_iki",
        "(«PG») " + wide + " iki («PG») " + wide + " (m\\.|metų)",
        "$2-ų iki $4-ų $1 $5");
  b.add("year.range_gen", "«PG» " + wide + " ?[-–/] ?" + wide + "\\b",
        "$1-ų $2-ų «PG»");
  b.add("year.range_acc", "«PA» " + wide + " ?[-–/] ?" + wide + "\\b",
        "$1-us $2-us «PA»");
  b.add("year.range_inst", "\\b" + wide + " ?[-–/] ?" + wide + "\\b",
        "$1-ais $2-ais «PI»");

  // the inflection of a following "metai" word wins over any preposition
  b.add("year.word_acc", "\\b" + gate + " (metus)", "$1-us $2");
  b.add("year.word_gen", "\\b" + gate + " (metų)", "$1-ų $2");
  b.add("year.word_inst", "\\b" + gate + " (metais)", "$1-ais $2");

  b.add("year.prep_gen", "(«PG») " + gate + " (m\\.)", "$2-ų $1 $3");
  b.add("year.prep_acc", "(«PA») " + gate + " (m\\.)", "$2-us $1 $3");
  b.add("year.prep_inst", "(«PI») " + gate + " (m\\.)", "$2-ais $1 $3");
  b.add("year.bare", "\\b" + gate + " (m\\.)", "$1-ais «PI» $2");

  // a year followed by punctuation takes the pronominal nominative plural;
  // numbers already carrying a case tag are spoken as cardinals instead
  b.add("year.punct", "(^|[^ »\\d]|[^»\\d ] )" + gate + "([,.;)]|$)",
        "$1$2-ieji$3");
  // the consumed punctuation blocks the next year in "(1970, 2001)", so
  // a second pass picks it up
  b.add("year.punct.2", "(^|[^ »\\d]|[^»\\d ] )" + gate + "([,.;)]|$)",
        "$1$2-ieji$3");
  return std::move(b.family);
}

// ── time ───────────────────────────────────────────────────────────────

RuleFamily gen_time_rules(Profile) {
  FamilyBuilder b;
  b.family.cls = SemioticClass::NTIME;
  b.family.stage = 40;
  const std::string hour = "(\\d|1\\d|2[0-4])";
  const std::string ctx = "(^|[^,\\d ]|[^»,\\d] )";

  // accusative prepositions are dropped (time already reads accusative),
  // other genitive prepositions convert to the clock genitive
  b.add("time.pa_drop", "«P[AI]» (" + hour + "[:.][0-5]\\d val\\.)", "$1");
  b.add("time.pg_conv", "«PG» (" + hour + "[:.][0-5]\\d val\\.)", "«SG» $1");

  b.add("time.tarp_dup_min",
        "(«S[GAI]») (\\d{1,2}[:.]\\d\\d) (val\\.) (ir|arba) "
        "(\\d{1,2}[:.]\\d\\d) (val\\.)",
        "$1 $2 $3 $4 $1 $5 $6");
  b.add("time.tarp_dup",
        "(«S[GAI]») (\\d{1,2}) (val\\.) (ir|arba) (\\d{1,2}) (val\\.)",
        "$1 $2 $3 $4 $1 $5 $6");

  b.add("time.gen_00", "«SG» " + hour + "[:.]00 val\\.",
        "«SG» $1 «FO» «SG» val.");
  b.add("time.gen_mm", "«SG» " + hour + "[:.]([0-5]\\d) val\\.",
        "«SG» $1 «FO» «SG» val. «PG» $2 min.");
  b.add("time.gen", "«SG» " + hour + " val\\.", "«SG» $1 «FO» «SG» val.");

  // the context class keeps decimals ("38,5 val.") and digit tails out
  b.add("time.acc_00", ctx + hour + "[:.]00 val\\.",
        "$1«SA» $2 «FO» «SA» val.");
  b.add("time.acc_mm", ctx + hour + "[:.]([0-5]\\d) val\\.",
        "$1«SA» $2 «FO» «SA» val. $3 min.");
  b.add("time.acc", ctx + hour + " val\\.", "$1«SA» $2 «FO» «SA» val.");
  return std::move(b.family);
}

// ── hyphen-ending ordinals ─────────────────────────────────────────────

RuleFamily gen_ordinal_hyphen_rules(Profile) {
  const auto& lex = lexicon();
  FamilyBuilder b;
  b.family.cls = SemioticClass::NORD;
  b.family.stage = 45;
  const std::string suf = "(-" + std::string(kLet) + "+)";

  // a written ending outranks the preposition: case tag resets to the
  // nominative, and the nominative needs no tag at all
  b.add("oh.case_reset",
        "«[SP]([GAI])» (\\d{1,12})(-" + std::string(kLet) + "+)",
        "«SN» $2$3");
  b.add("oh.nom_drop", "«SN» (\\d)", "$1");

  // round thousands contract to one pronominal word (2000-ieji ->
  // dutūkstantieji)
  static const char* kThousandPrefix[9] = {"",        "du",      "tri",
                                           "keturi",  "penki",   "šeši",
                                           "septyni", "aštuoni", "devyni"};
  static const std::pair<const char*, const char*> kRoundSuffix[] = {
      {"ieji", "ieji"},     {"ųjų", "ųjų"},   {"ų", "ųjų"},
      {"uosius", "uosius"}, {"us", "uosius"}, {"aisiais", "aisiais"},
      {"ais", "aisiais"}};
  for (int d = 1; d <= 9; ++d) {
    for (const auto& [in, out] : kRoundSuffix) {
      b.add("oh.round_k." + std::to_string(d) + "." + in,
            "\\b" + std::to_string(d) + "000-" + in + "\\b",
            std::string(kThousandPrefix[d - 1]) + "tūkstant" + out);
    }
  }

  b.add("oh.k_split.1", "\\b1(\\d\\d\\d)" + suf, "tūkstantis $1$2");
  for (int d = 2; d <= 9; ++d)
    b.add("oh.k_split." + std::to_string(d),
          "\\b" + std::to_string(d) + "(\\d\\d\\d)" + suf,
          cardinal_n(d) + " tūkstančiai $1$2");

  b.add("oh.h_round.1", "\\b100" + suf, "šimtas$1");
  for (int d = 2; d <= 9; ++d)
    b.add("oh.h_round." + std::to_string(d),
          "\\b" + std::to_string(d) + "00" + suf,
          cardinal_n(d) + " šimtai$1");
  b.add("oh.h_split.1", "\\b1(\\d\\d)" + suf, "šimtas $1$2");
  for (int d = 2; d <= 9; ++d)
    b.add("oh.h_split." + std::to_string(d),
          "\\b" + std::to_string(d) + "(\\d\\d)" + suf,
          cardinal_n(d) + " šimtai $1$2");

  b.add("oh.zero_strip.1", "\\b0(\\d\\d?-" + std::string(kLet) + ")", "$1");
  b.add("oh.zero_strip.2", "\\b0(\\d\\d?-" + std::string(kLet) + ")", "$1");

  for (int n = 10; n <= 19; ++n)
    b.add("oh.teen." + std::to_string(n),
          "\\b" + std::to_string(n) + suf,
          lex.teen_cardinal[n - 10] + "$1");
  for (int t = 2; t <= 9; ++t) {
    b.add("oh.tens_round." + std::to_string(t),
          "\\b" + std::to_string(t) + "0" + suf,
          lex.tens_cardinal[t - 2] + "$1");
    b.add("oh.tens_split." + std::to_string(t),
          "\\b" + std::to_string(t) + "([1-9])" + suf,
          lex.tens_cardinal[t - 2] + " $1$2");
  }
  for (int d = 1; d <= 9; ++d)
    b.add("oh.digit." + std::to_string(d),
          "\\b" + std::to_string(d) + suf, cardinal_n(d) + "$1");

  // word + hyphen + ending -> ordinal form ("keturi-ųjų" -> "ketvirtųjų");
  // the shared tails cover all teens and tens in one rule per ending
  for (const auto& s : lex.ordinal_suffixes) {
    for (int d = 1; d <= 9; ++d)
      b.add("oh.fix." + std::to_string(d) + "." + s,
            "\\b" + cardinal_n(d) + "-" + s + "\\b",
            ordinal_with_suffix(d, s));
    b.add("oh.fix.lika." + s, "lika-" + s + "\\b", "likt" + s);
    b.add("oh.fix.desimt." + s, "dešimt-" + s + "\\b", "dešimt" + s);
    b.add("oh.fix.simtas." + s, "šimtas-" + s + "\\b", "šimt" + s);
    b.add("oh.fix.simtai." + s, "šimtai-" + s + "\\b", "šimt" + s);
    b.add("oh.fix.tukstantis." + s, "tūkstantis-" + s + "\\b",
          "tūkstant" + s);
    b.add("oh.fix.tukstanciai." + s, "tūkstančiai-" + s + "\\b",
          "tūkstant" + s);
  }
  return std::move(b.family);
}

// ── arabic ordinals flagged by keywords, and ordinal terminals ─────────

RuleFamily gen_ordinal_keyword_rules(Profile profile) {
  FamilyBuilder b;
  b.family.cls = SemioticClass::NORD;
  b.family.stage = 50;

  if (profile == Profile::DelFlf) {
    b.add("kw.aud", "\\b([1-9]\\d?\\d?) (aud\\b)", "$1 «FO» $2");
    b.add("kw.aud_letter", "\\b([1-9]\\d?\\d?)([ABC]) (aud\\b)",
          "$1 «FO» $2 $3");
    b.add("kw.kab", "\\b([1-9]\\d?\\d?) (kab)", "$1 «MO» $2");
    b.add("kw.kab_letter", "\\b([1-9]\\d?\\d?)([ABC]) (kab)",
          "$1 «MO» $2 $3");
    b.add("kw.str", "\\b([1-9]\\d?\\d?) (str)", "$1 «MO» $2");
  }

  // ordinal terminal forms: case tag from the left, gender tag from the
  // right, bare means nominative
  for (Case c : std::array<Case, 3>{Case::G, Case::A, Case::I}) {
    for (int m = 1; m <= 9; ++m) {
      std::string hw = m == 1 ? "šimtas" : cardinal_n(m) + " šimtai";
      b.add(std::string("od.h_split.") + case_code(c) + "." +
                std::to_string(m),
            case_tag('S', c) + " " + std::to_string(m) +
                "(\\d\\d) («[FM]O»)",
            hw + " " + case_tag('S', c) + " $1 $2");
    }
  }
  for (int m = 1; m <= 9; ++m) {
    std::string hw = m == 1 ? "šimtas" : cardinal_n(m) + " šimtai";
    b.add("od.h_split.bare." + std::to_string(m),
          "\\b" + std::to_string(m) + "(\\d\\d) («[FM]O»)", hw + " $1 $2");
  }
  b.add("od.strip_tag", "(«S[GAIN]») 0(\\d)", "$1 $2");
  b.add("od.strip", "\\b0(\\d) («[FM]O»)", "$1 $2");

  auto emit_final = [&](const std::string& id, const std::string& numeral,
                        auto word_fn) {
    for (Case c : std::array<Case, 3>{Case::G, Case::A, Case::I})
      for (Gender g : {Gender::F, Gender::M})
        b.add("od." + id + "." + case_code(c) + "." + gender_code(g),
              case_tag('S', c) + " " + numeral + " «" + gender_code(g) +
                  "O»",
              word_fn(c, g));
    for (Gender g : {Gender::F, Gender::M})
      b.add("od." + id + ".bare." + gender_code(g),
            "\\b" + numeral + " «" + gender_code(g) + "O»",
            word_fn(Case::N, g));
  };
  for (int n = 10; n <= 19; ++n)
    emit_final("teen." + std::to_string(n), std::to_string(n),
               [n](Case c, Gender g) { return teen_ordinal_word(n, c, g); });
  for (int t = 2; t <= 9; ++t)
    emit_final("tens." + std::to_string(t), std::to_string(t) + "0",
               [t](Case c, Gender g) {
                 return tens_ordinal_word(t * 10, c, g);
               });
  for (Case c : std::array<Case, 3>{Case::G, Case::A, Case::I})
    for (int t = 2; t <= 9; ++t)
      b.add(std::string("od.t_split.") + case_code(c) + "." +
                std::to_string(t),
            case_tag('S', c) + " " + std::to_string(t) +
                "([1-9]) («[FM]O»)",
            tens_word(t * 10, Case::N) + " " + case_tag('S', c) + " $1 $2");
  for (int t = 2; t <= 9; ++t)
    b.add("od.t_split.bare." + std::to_string(t),
          "\\b" + std::to_string(t) + "([1-9]) («[FM]O»)",
          tens_word(t * 10, Case::N) + " $1 $2");
  for (int d = 1; d <= 9; ++d)
    emit_final("digit." + std::to_string(d), std::to_string(d),
               [d](Case c, Gender g) { return digit_ordinal_word(d, c, g); });
  return std::move(b.family);
}

// ── roman numerals ─────────────────────────────────────────────────────

RuleFamily gen_roman_rules(Profile profile) {
  const auto& lex = lexicon();
  FamilyBuilder b;
  b.family.cls = SemioticClass::NORD;
  b.family.stage = 55;
  if (profile != Profile::DelFlf) return std::move(b.family);

  b.add("rom.fraction_d", "\\bIII/IV d\\.", "trečia dalis iš keturių");
  b.add("rom.fraction", "\\bIII/IV\\b", "trečia iš keturių");

  // "a." after a Roman numeral: floors I-IV, centuries above; a following
  // lowercase word selects the genitive
  for (const auto& rf : lex.roman_ordinals) {
    int n = static_cast<int>(&rf - lex.roman_ordinals.data()) + 1;
    std::string noun_nom = n <= 4 ? "aukštas" : "amžius";
    std::string noun_gen = n <= 4 ? "aukšto" : "amžiaus";
    b.add("rom.a_gen." + rf.roman,
          "\\b" + rf.roman + " a\\. (" + std::string(kLet) + ")",
          rf.masc_gen + " " + noun_gen + " $1");
    b.add("rom.a." + rf.roman, "\\b" + rf.roman + " a\\.",
          rf.masc_nom + " " + noun_nom);
  }

  // agreement with the ending of the following word
  struct Ending {
    const char* text;
    std::string LexiconTables::RomanForms::* form;
  };
  static const Ending kEndings[] = {
      {"as", &LexiconTables::RomanForms::masc_nom},
      {"o", &LexiconTables::RomanForms::masc_gen},
      {"a", &LexiconTables::RomanForms::fem_nom},
      {"os", &LexiconTables::RomanForms::fem_gen},
      {"is", &LexiconTables::RomanForms::fem_nom},
      {"ai", &LexiconTables::RomanForms::masc_nom_pl},
      {"e", &LexiconTables::RomanForms::masc_loc},
      {"aus", &LexiconTables::RomanForms::masc_gen},
      {"us", &LexiconTables::RomanForms::masc_nom},
      {"ės", &LexiconTables::RomanForms::fem_gen},
      {"ė", &LexiconTables::RomanForms::fem_nom},
      {"ą", &LexiconTables::RomanForms::acc},
  };
  for (const auto& rf : lex.roman_ordinals) {
    for (const auto& e : kEndings) {
      b.add("rom.end." + rf.roman + "." + e.text,
            "\\b" + rf.roman + " (" + std::string(kLet) + "+)(" + e.text +
                ")\\b",
            rf.*(e.form) + " $1$2");
    }
  }

  // bare Roman numerals expand to the nominative masculine; I and V are
  // never touched before a period (initials), and the context classes
  // keep III from firing inside XIII
  for (const auto& rf : lex.roman_ordinals) {
    bool initial_risk = rf.roman == "I" || rf.roman == "V";
    std::string right = initial_risk ? "([^\\w\\.ąčęėįšųūž]|$)" : "([^\\w]|$)";
    b.add("rom.bare." + rf.roman,
          "(^|[\\s(])" + rf.roman + right, "$1" + rf.masc_nom + "$2");
  }

  // a Roman numeral written with an ending yields an ordinal word plus the
  // hyphenated ending ("I-ieji" -> "pirmas-ieji"), patched here; the
  // "-tas" tail covers 4..9, teens, and tens in one rule per ending
  for (const auto& s : lex.ordinal_suffixes) {
    b.add("rom.fix.pirmas." + s, "\\bpirmas-" + s + "\\b", "pirm" + s);
    b.add("rom.fix.antras." + s, "\\bantras-" + s + "\\b", "antr" + s);
    b.add("rom.fix.trecias." + s, "\\btrečias-" + s + "\\b",
          ordinal_with_suffix(3, s));
    b.add("rom.fix.tas." + s, "tas-" + s + "\\b", "t" + s);
  }
  return std::move(b.family);
}

// ── phones ─────────────────────────────────────────────────────────────

RuleFamily gen_phone_rules(Profile profile) {
  FamilyBuilder b;
  b.family.cls = SemioticClass::NTEL;
  b.family.stage = 60;
  if (profile != Profile::DelFlf) return std::move(b.family);
  b.add("phone.seven",
        "\\b([Tt])(\\.:|el\\.) (\\d)(\\d)(\\d) ?(\\d) ?(\\d) ?(\\d) ?(\\d)",
        "$1elefonas $3 $4 $5 $6 $7 $8 $9");
  b.add("phone.national",
        "\\b([Tt])(\\.:|el\\.) \\(?8[ -](\\d)\\)?[ -]?(\\d)(\\d) ?(\\d) "
        "?(\\d) ?(\\d) ?(\\d) ?(\\d)",
        "$1elefonas 8 $3 $4 $5 $6 $7 $8 $9 $10");
  b.add("phone.intl",
        "\\b([Tt])(\\.:|el\\.) ?\\(?\\+ ?(\\d)(\\d)(\\d) ?(\\d)\\)? ?(\\d)"
        "(\\d) ?(\\d) ?(\\d) ?(\\d) ?(\\d) ?(\\d)",
        "$1elefonas plius $3 $4 $5 $6 $7 $8 $9 $10 $11 $12 $13");
  return std::move(b.family);
}

// ── urls ───────────────────────────────────────────────────────────────

RuleFamily gen_url_rules(Profile profile) {
  FamilyBuilder b;
  b.family.cls = SemioticClass::URL;
  b.family.stage = 65;
  if (profile != Profile::DelFlf) return std::move(b.family);
  b.add("url.at", "@", " eta ");
  b.add("url.scheme", "://", " ");
  b.add("url.slash_l", "([^\\d\\s])/", "$1 ");
  b.add("url.slash_r", "/([^\\d\\s])", " $1");
  // a single pass cannot rewrite chained periods (the right letters of one
  // match are the left letters of the next), so the rule repeats
  for (int i = 1; i <= 3; ++i)
    b.add("url.dot." + std::to_string(i),
          "([a-z][a-z])\\.([a-z][a-z])", "$1 taškas $2");
  return std::move(b.family);
}

// ── fixed abbreviation expansions ──────────────────────────────────────

RuleFamily gen_expn_rules(Profile profile) {
  FamilyBuilder b;
  b.family.cls = SemioticClass::EXPN;
  b.family.stage = 70;
  if (profile != Profile::DelFlf) return std::move(b.family);
  b.add("expn.reg_nr", "\\bReg\\. ?Nr\\.", "Registracijos numeris");
  b.add("expn.eil_nr", "\\bEil\\. ?Nr\\.", "Eilės numeris");
  b.add("expn.nr", "\\bNr\\.", "Numeris");
  b.add("expn.tel", "\\b([tT]el)\\.", "$1efonas");
  b.add("expn.aa", "\\ba\\. ?a\\.", "amžiną atilsį");
  b.add("expn.lep", "\\b([lL])\\. ?e\\. ?p\\.", "$1aikinai einantis pareigas");
  b.add("expn.el_p", "\\b([eE]l)\\. ?p\\.", "$1ektroninis paštas");
  b.add("expn.angl", "\\b([aA]ngl)\\.", "$1iškai");
  b.add("expn.pvz", "\\b([pP])vz\\.", "$1avyzdžiui");
  // sentence-final abbreviations keep their period
  b.add("expn.ir_kt", "\\bir kt\\.", "ir kita.");
  b.add("expn.ir_pan", "\\bir pan\\.", "ir panašiai.");
  b.add("expn.ir_tt", "\\bir t\\. ?t\\.", "ir taip toliau.");
  b.add("expn.ty", "\\bt\\. ?y\\.", "tai yra");
  b.add("expn.vyr_es", "\\b([vV]yr)\\. ?([a-zA-Z]+ės)", "$1iausiosios $2");
  b.add("expn.vyr_e", "\\b([vV]yr)\\. ?([a-zA-Z]+ė)", "$1iausioji $2");
  b.add("expn.vyr_s", "\\b([vV]yr)\\. ?([a-zA-Z]+s)", "$1iausiasis $2");
  b.add("expn.sv_u", "\\b([šŠ]v)\\. ?([a-zA-Ząčęėįšūž]+ų)", "$1entų $2");
  b.add("expn.sv_os", "\\b([šŠ]v)\\. ?([a-zA-Ząčęėįšūž]+os)", "$1entos $2");
  b.add("expn.sv_cap", "\\b([šŠ]v)\\. ?([A-Z])", "$1ento $2");
  return std::move(b.family);
}

// ── read-as-word adjustments ───────────────────────────────────────────

RuleFamily gen_aswd_rules(Profile) {
  FamilyBuilder b;
  b.family.cls = SemioticClass::ASWD;
  b.family.stage = 88;
  b.add("aswd.l_stroke", "ł", "l");
  b.add("aswd.u_umlaut", "ü", "iu");
  b.add("aswd.w", "([a-ząčęėįšųūžA-ZĄČĘĖĮŠŲŪŽ])w", "$1v");
  b.add("aswd.prof", "\\b([pP])rof\\.", "$1ro`f");
  b.add("aswd.bus", "\\bBUS\\b", "BU`S");
  b.add("aswd.arksi", "\\bARKSI\\b", "ARKSI`");
  b.add("aswd.ulica", "\\bUlica\\b", "Uly~ca");
  b.add("aswd.strasse", "\\bStrasse\\b", "Štra~se");
  b.add("aswd.strada", "\\bStrada\\b", "Stra~da");
  b.add("aswd.avenue", "\\bAvenue\\b", "Aveniu`");
  return std::move(b.family);
}

// ── letter sequences ───────────────────────────────────────────────────

RuleFamily gen_lseq_rules(Profile profile) {
  FamilyBuilder b;
  b.family.cls = SemioticClass::LSEQ;
  b.family.stage = 86;

  // the guillemet-free contexts keep these from firing inside tags
  const std::string wl = "(^|[\\s(\\{\\[„-])";
  const std::string wr = "([\\s.,:;\\-–+“)\\}\\]]|$)";
  if (profile == Profile::DelFlf) {
    b.add("lseq.vu", wl + "VU" + wr, "$1Vė-U` $2");
    b.add("lseq.vu_lc", wl + "vu" + wr, "$1vė-u` $2");
    b.add("lseq.sa", wl + "SA" + wr, "$1eS-A~ $2");
    b.add("lseq.bkki", wl + "BKKI" + wr, "$1Bė-Ka-Ka-I` $2");
    b.add("lseq.it", wl + "IT" + wr, "$1I-Tė~ $2");
  }

  // all-consonant tokens of 1..7 letters, longest first; the final letter
  // carries the accent tag
  const std::string cons = "[b-df-hj-np-tv-xzčšžB-DF-HJ-NP-TV-XZČŠŽ]";
  const std::string left = "(^|[\\s(\\{\\[„-])";
  const std::string right = "([\\s.,:;\\-–+“)\\}\\]]|$)";
  // a single letter is spelled only before punctuation or at the end:
  // a period would swallow initials, and whitespace would swallow the
  // letter-plus-digit readings emitted for codes
  const std::string right1 = "([,:;\\-–+“)\\}\\]]|$)";
  for (int len = 7; len >= 1; --len) {
    std::string pattern = left;
    for (int i = 0; i < len; ++i) pattern += "(" + cons + ")";
    pattern += len == 1 ? right1 : right;
    std::string repl = "$1";
    for (int i = 0; i < len; ++i) {
      repl += (i + 1 == len) ? "«SpellA»" : "«Spell»";
      repl += "$" + std::to_string(i + 2);
    }
    repl += "${" + std::to_string(len + 2) + "}";
    b.add("lseq.band." + std::to_string(len), pattern, repl);
  }

  const auto& lex = lexicon();
  b.add("lseq.stop", "(«Spell»)([" + lex.spell_stops + "])", "$2ė-");
  b.add("lseq.stop_a", "(«SpellA»)([" + lex.spell_stops + "])", "$2ė~ ");
  b.add("lseq.cont", "(«Spell»)([" + lex.spell_continuants + "])", "e$2-");
  b.add("lseq.cont_a", "(«SpellA»)([" + lex.spell_continuants + "])",
        "e`$2 ");
  b.add("lseq.h", "(«Spell»)([hH])", "$2aš-");
  b.add("lseq.h_a", "(«SpellA»)([hH])", "$2aš~ ");
  b.add("lseq.k", "(«Spell»)([kK])", "$2a-");
  b.add("lseq.k_a", "(«SpellA»)([kK])", "$2a~ ");
  b.add("lseq.j", "(«Spell»)([jJ])", "$2ot-");
  b.add("lseq.j_a", "(«SpellA»)([jJ])", "$2ot~ ");
  b.add("lseq.w", "«Spell»w", "vė-");
  b.add("lseq.w_uc", "«Spell»W", "Vė-");
  b.add("lseq.w_a", "«SpellA»w", "vė~ ");
  b.add("lseq.w_uc_a", "«SpellA»W", "Vė~ ");
  b.add("lseq.x", "«Spell»x", "iks-");
  b.add("lseq.x_uc", "«Spell»X", "Iks-");
  b.add("lseq.x_a", "«SpellA»x", "iks~ ");
  b.add("lseq.x_uc_a", "«SpellA»X", "Iks~ ");
  b.add("lseq.q", "«Spell»q", "kū-");
  b.add("lseq.q_uc", "«Spell»Q", "Kū-");
  b.add("lseq.q_a", "«SpellA»q", "kū~ ");
  b.add("lseq.q_uc_a", "«SpellA»Q", "Kū~ ");
  return std::move(b.family);
}

// ── codes ──────────────────────────────────────────────────────────────

RuleFamily gen_code_rules(Profile profile) {
  FamilyBuilder b;
  b.family.cls = SemioticClass::NCODE;
  b.family.stage = 75;
  if (profile == Profile::DelFlf) {
    std::string d13, d10, r13 = "I-eS-Bė-e` N", r10 = "I-eS-Bė-e` N";
    for (int i = 1; i <= 13; ++i) {
      d13 += i == 1 ? "(\\d)" : "-?(\\d)";
      r13 += " $" + std::to_string(i);
      if (i <= 10) {
        d10 += i == 1 ? "(\\d)" : "-?(\\d)";
        r10 += " $" + std::to_string(i);
      }
    }
    b.add("code.isbn13", "ISBN:? ?" + d13, r13);
    b.add("code.isbn10", "ISBN:? ?" + d10, r10);
  }
  // five-digit numbers are postal codes; the context class skips numbers
  // that already carry a case tag or sit inside a longer digit run
  b.add("code.postal", "(^|[^ »\\d]|[^»\\d] )(\\d)(\\d)(\\d)(\\d)(\\d)\\b",
        "$1$2 $3 $4 $5 $6");
  return std::move(b.family);
}

namespace {

// Study-program codes keep "NX" verbatim, so they expand after the
// letter-sequence bands have run; the raw form survives until then
// because its letters sit between digits.
RuleFamily program_code_rules(Profile profile) {
  FamilyBuilder b;
  b.family.cls = SemioticClass::NCODE;
  b.family.stage = 92;
  if (profile == Profile::DelFlf)
    b.add("code.program", "\\((\\d)(\\d)(\\d)(\\d)NX(\\d)(\\d)(\\d)\\)",
          "($1 $2 $3 $4 NX $5 $6 $7)");
  return std::move(b.family);
}

// "str" survives as a written keyword after ordinal expansion; a
// placeholder keeps the spelling bands away from it.
RuleFamily keyword_guard_rules() {
  FamilyBuilder b;
  b.family.cls = SemioticClass::NONE;
  b.family.stage = 85;
  b.add("guard.str", "\\bstr", "st\uE002r");
  return std::move(b.family);
}

}  // namespace

// ── cardinal splitting ─────────────────────────────────────────────────

RuleFamily gen_number_split_rules(Profile) {
  const auto& lex = lexicon();
  FamilyBuilder b;
  b.family.cls = SemioticClass::NUM;
  b.family.stage = 80;

  // the duplicated tag marks the unit-of-measure slot; the context group
  // keeps decimals intact and skips numbers already carrying a gender tag
  b.add("ns.eq1", "(«[SP][GAI]») (\\d{1,12})( [^«]|[^,\\d ]| ?$)",
        "$1 $2 $1$3");
  b.add("ns.eq2_mlrd", "(«[SP][GAI]») (\\d{1,3})(\\d{9})\\b",
        "$1 $2 $1 mlrd $1 $3");
  b.add("ns.eq2_mln", "(«[SP][GAI]») (\\d{1,3})(\\d{6})\\b",
        "$1 $2 $1 mln $1 $3");
  b.add("ns.eq2_tukst", "(«[SP][GAI]») (\\d{1,3})(\\d{3})\\b",
        "$1 $2 $1 tūkst $1 $3");
  b.add("ns.bare_mlrd", "\\b(\\d{1,3})(\\d{9})\\b", "$1 mlrd $2");
  b.add("ns.bare_mln", "\\b(\\d{1,3})(\\d{6})\\b", "$1 mln $2");
  b.add("ns.bare_tukst", "\\b(\\d{1,3})(\\d{3})\\b", "$1 tūkst $2");
  b.add("ns.bare_strip.1", "\\b0(\\d)", "$1");
  b.add("ns.bare_strip.2", "\\b0(\\d)", "$1");

  // decimals: both parts take the unit's gender, the unit itself reads in
  // the genitive singular ("43,91 sek." -> "... viena sekundės")
  for (const auto& u : lex.units) {
    Gender g = u.gender;
    std::string gc = std::string("«") + gender_code(g) + "C»";
    b.add("ns.dec_tag." + u.key,
          "(«[SP][GAI]») (\\d+),(\\d+) ?(" + u.abbrev_re + ")",
          "$1 $2 " + gc + " kablelis $3 " + gc + " «SG» $4");
    b.add("ns.dec." + u.key, "\\b(\\d+),(\\d+) ?(" + u.abbrev_re + ")",
          "$1 " + gc + " kablelis $2 " + gc + " «SG» $3");
  }
  for (const auto& u : lex.units)
    b.add("ns.unit_tag." + u.key, "(\\d) (" + u.abbrev_re + ")",
          "$1 «PN» $2");
  b.add("ns.dec_plain", "(\\d+),(\\d+)", "$1 kablelis $2");
  return std::move(b.family);
}

// ── three-digit group expansion ────────────────────────────────────────

RuleFamily gen_three_digit_rules(Profile) {
  const auto& lex = lexicon();
  FamilyBuilder b;
  b.family.cls = SemioticClass::NUM;
  b.family.stage = 82;

  // leftover singular case tags in front of digits behave like plural ones
  b.add("td.s_to_p", "«S([GAI])» (\\d)", "«P$1» $2");

  // endings 11..19 and 0 force the genitive on the unit of measure; an
  // ending 1 (not 11) selects the singular; neither moves across groups
  b.add("td.teens_gen", "(1[1-9]) «P([GAIN])»", "$1 «PG»");
  b.add("td.zero_gen", "0 «P([GAIN])»", "0 «PG»");
  b.add("td.one_sing", "\\b1 «P([GAIN])»", "1 «S$1»");
  b.add("td.one_sing_tail", "([02-9])1 «P([GAIN])»", "${1}1 «S$2»");
  b.add("td.one_k_drop", "\\b1 «SN» (tūkst)", "«SN» $1");

  // the unit contributes its gender to the number on its left
  for (const auto& u : lex.units) {
    b.add("td.gender." + u.key,
          "(\\d) («[SP][GAIN]») (" + u.abbrev_re + ")",
          std::string("$1 «") + gender_code(u.gender) + "C» $2 $3");
  }
  // no unit of measure: masculine
  b.add("td.default_masc", "(\\d{1,3}) «[SP][GAI]»", "$1 «MC»");

  // tagged terminals: hundreds first, then a zero strip for the "01".."09"
  // remainders they leave, then the final tens/teens/digit forms
  for (Case c : kObliqueCases) {
    std::string pt = case_tag('P', c);
    for (int m = 1; m <= 9; ++m) {
      b.add(std::string("td.x00.") + case_code(c) + "." + std::to_string(m),
            pt + " " + std::to_string(m) + "00 «[FM]C»",
            hundreds_words(m * 100, c));
      b.add(std::string("td.h_split.") + case_code(c) + "." +
                std::to_string(m),
            pt + " " + std::to_string(m) + "(\\d\\d) («[FM]C»)",
            hundreds_words(m * 100, c) + " " + pt + " $1 $2");
    }
  }
  b.add("td.strip.1", "(«[SP][GAIN]») 0(\\d)", "$1 $2");
  b.add("td.strip.2", "(«[SP][GAIN]») 0(\\d)", "$1 $2");
  for (Case c : kObliqueCases) {
    std::string pt = case_tag('P', c);
    for (int n = 10; n <= 19; ++n)
      b.add(std::string("td.teen.") + case_code(c) + "." + std::to_string(n),
            pt + " " + std::to_string(n) + " «[FM]C»", teen_word(n, c));
    for (int t = 2; t <= 9; ++t) {
      b.add(std::string("td.x0.") + case_code(c) + "." + std::to_string(t),
            pt + " " + std::to_string(t) + "0 «[FM]C»",
            tens_word(t * 10, c));
      b.add(std::string("td.t_split.") + case_code(c) + "." +
                std::to_string(t),
            pt + " " + std::to_string(t) + "([1-9]) («[FM]C»)",
            tens_word(t * 10, Case::N) + " " + pt + " $1 $2");
    }
    for (int d = 1; d <= 9; ++d)
      for (Gender g : {Gender::F, Gender::M})
        b.add(std::string("td.digit.") + case_code(c) + "." +
                  std::to_string(d) + "." + gender_code(g),
              pt + " " + std::to_string(d) + " «" + gender_code(g) + "C»",
              digit_word(d, c, g));
    static const char* kZero[4] = {"nulis", "nulio", "nulį", "nuliu"};
    b.add(std::string("td.zero.") + case_code(c),
          pt + " 0 «[FM]C»", kZero[static_cast<int>(c)]);
  }

  // bare terminals carrying only a gender tag: nominative
  for (int m = 1; m <= 9; ++m) {
    b.add("td.b_x00." + std::to_string(m),
          "\\b" + std::to_string(m) + "00 «[FM]C»",
          hundreds_words(m * 100, Case::N));
    b.add("td.b_hsplit." + std::to_string(m),
          "\\b" + std::to_string(m) + "(\\d\\d) («[FM]C»)",
          hundreds_words(m * 100, Case::N) + " $1 $2");
  }
  b.add("td.b_strip", "\\b0([1-9]) («[FM]C»)", "$1 $2");
  for (int n = 10; n <= 19; ++n)
    b.add("td.b_teen." + std::to_string(n),
          "\\b" + std::to_string(n) + " «[FM]C»", teen_word(n, Case::N));
  for (int t = 2; t <= 9; ++t) {
    b.add("td.b_x0." + std::to_string(t),
          "\\b" + std::to_string(t) + "0 «[FM]C»", tens_word(t * 10, Case::N));
    b.add("td.b_tsplit." + std::to_string(t),
          "\\b" + std::to_string(t) + "([1-9]) («[FM]C»)",
          tens_word(t * 10, Case::N) + " $1 $2");
  }
  for (int d = 1; d <= 9; ++d)
    for (Gender g : {Gender::F, Gender::M})
      b.add("td.b_digit." + std::to_string(d) + "." + gender_code(g),
            "\\b" + std::to_string(d) + " «" + gender_code(g) + "C»",
            digit_word(d, Case::N, g));
  b.add("td.b_zero", "\\b0 «[FM]C»", "nulis");

  // untagged leftovers read as nominative masculine cardinals; the guards
  // keep digit-spaced phone and code readings intact
  for (int m = 1; m <= 9; ++m) {
    b.add("td.p_x00." + std::to_string(m), "\\b" + std::to_string(m) + "00\\b",
          hundreds_words(m * 100, Case::N));
    b.add("td.p_hsplit." + std::to_string(m),
          "\\b" + std::to_string(m) + "(\\d\\d)\\b",
          hundreds_words(m * 100, Case::N) + " $1");
  }
  b.add("td.p_strip", "\\b0([1-9])\\b", "$1");
  for (int n = 10; n <= 19; ++n)
    b.add("td.p_teen." + std::to_string(n),
          "\\b" + std::to_string(n) + "\\b", teen_word(n, Case::N));
  for (int t = 2; t <= 9; ++t) {
    b.add("td.p_x0." + std::to_string(t), "\\b" + std::to_string(t) + "0\\b",
          tens_word(t * 10, Case::N));
    b.add("td.p_tsplit." + std::to_string(t),
          "\\b" + std::to_string(t) + "([1-9])\\b",
          tens_word(t * 10, Case::N) + " $1");
  }
  for (int d = 1; d <= 9; ++d)
    b.add("td.p_digit." + std::to_string(d),
          "(^|[^\\d ]|[^\\d] )" + std::to_string(d) +
              "( [^\\d ]|[^ \\d]|$)",
          "$1" + cardinal_n(d) + "$2");
  b.add("td.p_zero", "(^|[^\\d ]|[^\\d] )0( [^\\d ]|[^ \\d]|$)", "$1nulis$2");
  return std::move(b.family);
}

// ── units of measure ───────────────────────────────────────────────────

RuleFamily gen_unit_rules(Profile profile) {
  const auto& lex = lexicon();
  FamilyBuilder b;
  b.family.cls = SemioticClass::EXPN;
  b.family.stage = 84;
  for (const auto& u : lex.units) {
    UnitInfo eff = u;
    if (profile == Profile::Nav && u.key == "m_dot") {
      // in navigation text "m." means metres, not years
      eff.forms = {{{"metras", "metro", "metrą", "metru"},
                    {"metrai", "metrų", "metrus", "metrais"}}};
    }
    for (char number : {'P', 'S'}) {
      for (Case c : kAllCases) {
        int num_idx = number == 'P' ? 1 : 0;
        b.add(std::string("unit.") + u.key + "." + number + case_code(c),
              case_tag(number, c) + " (" + u.abbrev_re + ")",
              eff.forms[num_idx][static_cast<int>(c)]);
      }
    }
  }
  return std::move(b.family);
}

// ── pack assembly ──────────────────────────────────────────────────────

RulePack build_rulepack(Profile profile) {
  std::vector<RuleFamily> families;
  families.push_back(time_prologue_rules());
  if (profile == Profile::DelFlf) families.push_back(sm_rules());
  families.push_back(gen_preposition_rules(profile));
  families.push_back(gen_tag_duplication_rules(profile));
  if (profile == Profile::DelFlf) {
    families.push_back(gen_date_rules(profile));
    families.push_back(gen_year_rules(profile));
  }
  families.push_back(gen_time_rules(profile));
  if (profile == Profile::DelFlf)
    families.push_back(gen_ordinal_hyphen_rules(profile));
  families.push_back(gen_ordinal_keyword_rules(profile));
  families.push_back(gen_roman_rules(profile));
  families.push_back(gen_phone_rules(profile));
  families.push_back(gen_url_rules(profile));
  families.push_back(gen_expn_rules(profile));
  families.push_back(gen_code_rules(profile));
  families.push_back(gen_number_split_rules(profile));
  families.push_back(gen_three_digit_rules(profile));
  families.push_back(gen_unit_rules(profile));
  families.push_back(keyword_guard_rules());
  families.push_back(gen_lseq_rules(profile));
  families.push_back(gen_aswd_rules(profile));
  families.push_back(program_code_rules(profile));
  families.push_back(cleanup_rules());

  std::map<int, std::string> stages;
  for (const auto& f : families) {
    if (f.rules.empty()) continue;
    auto [it, inserted] = stages.emplace(f.stage, f.rules.front().id);
    if (!inserted)
      throw StageCollision("families \"" + it->second + "\" and \"" +
                           f.rules.front().id + "\" both claim stage " +
                           std::to_string(f.stage));
  }
  std::stable_sort(families.begin(), families.end(),
                   [](const RuleFamily& a, const RuleFamily& b2) {
                     return a.stage < b2.stage;
                   });

  RulePack pack;
  pack.profile = profile;
  int order = 0;
  for (const auto& f : families)
    for (const auto& r : f.rules)
      pack.rules.push_back(
          make_rule(r.id, ++order, r.pattern, r.replacement, r.comment));
  return pack;
}

}  // namespace ltnorm

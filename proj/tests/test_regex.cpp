#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ltnorm/regex.hpp"

using namespace ltnorm;

namespace {

std::string replace(const std::string& pattern, const std::string& repl,
                    const std::string& text, int* count = nullptr) {
  re::Pattern p = re::Pattern::compile(pattern);
  re::Replacement r = re::Replacement::parse(repl, p.group_count());
  re::ReplaceResult res = p.replace_all(re::decode_utf8(text), r);
  if (count) *count = res.match_count;
  return re::encode_utf8(res.text);
}

bool matches(const std::string& pattern, const std::string& text) {
  return re::Pattern::compile(pattern).search(re::decode_utf8(text));
}

}  // namespace

TEST_CASE("utf8 round trip and rejection") {
  std::string s = "ąčęėįšųūž ĄČĘĖĮŠŲŪŽ «PG»";
  CHECK(re::encode_utf8(re::decode_utf8(s)) == s);
  CHECK_THROWS_AS(re::decode_utf8("\xFF"), re::Utf8Error);
  CHECK_THROWS_AS(re::decode_utf8("\xC3"), re::Utf8Error);
  CHECK_THROWS_AS(re::decode_utf8("\xE0\x80\x80"), re::Utf8Error);
}

TEST_CASE("literals and case sensitivity") {
  CHECK(matches("aBc", "xxaBcxx"));
  CHECK_FALSE(matches("aBc", "abc"));
}

TEST_CASE("quantified group matches ababab") {
  int count = 0;
  CHECK(replace("(ab)+", "X", "ababab", &count) == "X");
  CHECK(count == 1);
}

TEST_CASE("alternation in group") {
  CHECK(matches("entit(y|ies)", "entity"));
  CHECK(matches("entit(y|ies)", "entities"));
  CHECK_FALSE(matches("entit(y|ies)", "entit"));
}

TEST_CASE("pattern backreferences") {
  // $k inside a pattern must match the text captured by group k
  CHECK(matches("the ([a-z]+)er they ([a-z]+), the $1er we $2",
                "the faster they ran, the faster we ran"));
  CHECK_FALSE(matches("the ([a-z]+)er they ([a-z]+), the $1er we $2",
                      "the faster they ran, the slower we ran"));
}

TEST_CASE("group substitution reorders") {
  CHECK(replace("(p\\.) (\\d)", "$2 $1", "p. 7") == "7 p.");
}

TEST_CASE("single pass global replacement") {
  int count = 0;
  CHECK(replace("a", "b", "aaa", &count) == "bbb");
  CHECK(count == 3);
  // resumption after each replacement: overlapping matches are skipped
  CHECK(replace("([a-z][a-z])\\.([a-z][a-z])", "$1 taškas $2", "cr.vu.lt") ==
        "cr taškas vu.lt");
}

TEST_CASE("empty input") {
  int count = 0;
  CHECK(replace("x", "y", "", &count).empty());
  CHECK(count == 0);
}

TEST_CASE("character classes with Lithuanian ranges") {
  CHECK(matches("[a-ząčęėįšųūž]+", "žodis"));
  CHECK_FALSE(matches("^[a-z]+$", "žodis"));
  CHECK(matches("[^a-z]", "Ž"));
}

TEST_CASE("word boundary includes Lithuanian letters") {
  CHECK(re::is_word_char(U'ž'));
  CHECK(re::is_word_char(U'Ų'));
  CHECK_FALSE(re::is_word_char(U'«'));
  // the boundary must not fire between ASCII and a diacritic letter
  CHECK(matches("\\bketuri-ųjų\\b", "apie keturi-ųjų kalno"));
  CHECK_FALSE(matches("\\bketuri-ųjų\\b", "viketuri-ųjųlas"));
}

TEST_CASE("anchors") {
  CHECK(matches("^abc$", "abc"));
  CHECK_FALSE(matches("^abc$", "xabc"));
  CHECK(replace("^", "Y", "abc") == "Yabc");
}

TEST_CASE("quantifier bounds") {
  CHECK(matches("\\d{4}", "2013"));
  CHECK_FALSE(matches("^\\d{4}$", "201"));
  CHECK(matches("^\\d{1,3}$", "12"));
  CHECK(matches("a?b", "b"));
  // greedy with backtracking across alternation
  CHECK(replace("(\\d|1\\d|2[0-4]) val", "[$1] val", "13 val") == "[13] val");
}

TEST_CASE("dollar group references parse longest digit run") {
  re::Pattern p = re::Pattern::compile(
      "(\\d)(\\d)(\\d)(\\d)(\\d)(\\d)(\\d)(\\d)(\\d)(\\d)(\\d)");
  // $11 is group eleven; a literal digit after a reference needs ${k}
  re::Replacement r = re::Replacement::parse("$11|${2}9", p.group_count());
  re::ReplaceResult res = p.replace_all(re::decode_utf8("12345678901"), r);
  CHECK(re::encode_utf8(res.text) == "1|29");
}

TEST_CASE("dollar escaping") {
  CHECK(replace("(a)", "$$ $1", "a") == "$ a");
  CHECK_THROWS_AS(
      re::Replacement::parse("$2", re::Pattern::compile("(a)").group_count()),
      re::BadGroupRef);
}

TEST_CASE("optional groups substitute empty") {
  CHECK(replace("([12]?\\d)([:.][0-5]\\d)?", "H=$1 M=$2", "9") == "H=9 M=");
}

TEST_CASE("negated class and dot") {
  CHECK(replace("([^\\d\\s])/", "$1 ", "lt/zodynas") == "lt zodynas");
  CHECK(matches("a.c", "axc"));
  CHECK_FALSE(matches("a.c", "a\nc"));
}

TEST_CASE("bad patterns throw") {
  CHECK_THROWS_AS(re::Pattern::compile("(ab"), re::PatternError);
  CHECK_THROWS_AS(re::Pattern::compile("a{2,1}"), re::PatternError);
  CHECK_THROWS_AS(re::Pattern::compile("[z-a]"), re::PatternError);
  CHECK_THROWS_AS(re::Pattern::compile("*a"), re::PatternError);
}

TEST_CASE("guillemet literals") {
  CHECK(replace("«P([GAI])» (\\d)", "«S$1» $2", "nuo «PG» 5") ==
        "nuo «SG» 5");
}

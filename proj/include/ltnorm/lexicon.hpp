#pragma once

#include <array>
#include <string>
#include <vector>

// Lithuanian word-form tables shared by the rule generators: prepositions
// grouped by the case they govern, month names, declined cardinal and
// ordinal numeral forms, unit-of-measure paradigms, ordinal stems for
// hyphen-ending fixups, and letter names for spelled-out abbreviations.

namespace ltnorm {

enum class Case { N = 0, G = 1, A = 2, I = 3 };
enum class Gender { F = 0, M = 1 };

constexpr std::array<Case, 4> kAllCases = {Case::N, Case::G, Case::A, Case::I};
constexpr std::array<Case, 3> kObliqueCases = {Case::G, Case::A, Case::I};

char case_code(Case c);      // 'N' 'G' 'A' 'I'
char gender_code(Gender g);  // 'F' 'M'

struct UnitInfo {
  std::string key;        // stable id ("km", "m_dot", ...)
  std::string abbrev_re;  // regex for the abbreviation, consumes an optional dot
  Gender gender = Gender::M;
  // forms[number][case]: 0 = singular, 1 = plural
  std::array<std::array<std::string, 4>, 2> forms;
  bool time_or_distance = false;  // triggers genitive after "už" / "po"
};

struct LexiconTables {
  // 44 genitive, 13 accusative, 3 instrumental prepositions.
  std::vector<std::string> prepositions_genitive;
  std::vector<std::string> prepositions_accusative;
  std::vector<std::string> prepositions_instrumental;

  std::array<std::string, 12> months_genitive;
  std::array<std::string, 12> months_nominative;

  // Cardinals. Digits decline by gender and case; teens and tens decline
  // in the genitive only (nominative form elsewhere); the hundred word
  // declines by case with a declined multiplier.
  std::array<std::array<std::array<std::string, 9>, 4>, 2> digit_cardinal;
  std::array<std::string, 10> teen_cardinal;       // 10..19 nominative
  std::array<std::string, 10> teen_cardinal_gen;   // 10..19 genitive
  std::array<std::string, 8> tens_cardinal;        // 20..90 nominative
  std::array<std::string, 8> tens_cardinal_gen;    // 20..90 genitive
  std::array<std::string, 4> hundred_sg;           // šimtas šimto šimtą šimtu
  std::array<std::string, 4> hundred_pl;           // šimtai šimtų šimtus šimtais

  // Ordinals: [gender][case][...]
  std::array<std::array<std::array<std::string, 9>, 4>, 2> digit_ordinal;
  std::array<std::array<std::array<std::string, 10>, 4>, 2> teen_ordinal;
  std::array<std::array<std::array<std::string, 8>, 4>, 2> tens_ordinal;

  // Roman-numeral agreement: masc/fem nominative & genitive, masc
  // nominative plural, masc locative, shared accusative, for 1..30.
  struct RomanForms {
    std::string roman;
    std::string masc_nom, masc_gen, fem_nom, fem_gen;
    std::string masc_nom_pl, masc_loc, acc;
  };
  std::vector<RomanForms> roman_ordinals;

  // Ordinal stems for hyphen-ending fixups ("keturi" -> "ketvirt").
  std::array<std::string, 9> digit_ordinal_stem;
  std::vector<std::string> ordinal_suffixes;

  std::vector<UnitInfo> units;  // m_dot carries the del_flf (metai) paradigm

  std::string spell_stops;        // letters named "Xė"
  std::string spell_continuants;  // letters named "eX"
};

const LexiconTables& lexicon();

// Declined cardinal/ordinal words for rule generation.
std::string digit_word(int d, Case c, Gender g);            // 1..9 cardinal
std::string teen_word(int n, Case c);                       // 10..19 cardinal
std::string tens_word(int n, Case c);                       // 20..90 cardinal
std::string hundreds_words(int h, Case c);                  // 100..900 cardinal
std::string digit_ordinal_word(int d, Case c, Gender g);    // 1..9
std::string teen_ordinal_word(int n, Case c, Gender g);     // 10..19
std::string tens_ordinal_word(int n, Case c, Gender g);     // 20..90

// Ordinal form of digit word + hyphen suffix ("keturi" + "ųjų" -> "ketvirtųjų").
std::string ordinal_with_suffix(int digit, const std::string& suffix);

// Alternation source text helpers ("sausio|vasario|...").
std::string months_genitive_alt();
std::string months_genitive_alt_anycase();  // [sS]ausio|...
std::string months_nominative_alt();

}  // namespace ltnorm

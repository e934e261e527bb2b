#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Guillemet-delimited morphological tags («PG», «FO», «Spell», «01mėn», …)
// carry case/number/gender/kind between cascade rules. They are working
// markers only: none may survive into a cascade's final output.

namespace ltnorm {

enum class TagKind { CaseNumber, GenderKind, Spell, MonthCode };

// Case codes: N nominative, G genitive, A accusative, I instrumental;
// S singular, P plural; F feminine, M masculine; O ordinal, C cardinal.
struct MorphTag {
  TagKind kind = TagKind::CaseNumber;
  char number = 'P';   // CaseNumber: 'S' | 'P'
  char case_ = 'G';    // CaseNumber: 'N' | 'G' | 'A' | 'I'
  char gender = 'F';   // GenderKind: 'F' | 'M'
  char gkind = 'C';    // GenderKind: 'O' | 'C'
  bool accented = false;  // Spell: «SpellA» vs «Spell»
  int month = 1;       // MonthCode: 1..12

  bool operator==(const MorphTag&) const = default;
};

MorphTag case_number_tag(char number, char case_);
MorphTag gender_kind_tag(char gender, char gkind);
MorphTag spell_tag(bool accented);
MorphTag month_code_tag(int month);

// Renders a tag in guillemets, e.g. «PG», «FO», «SpellA», «01mėn».
std::string render_tag(const MorphTag& tag);

// Parses the text between guillemets; nullopt for unknown codes.
std::optional<MorphTag> parse_tag_body(std::string_view body);

struct TagOccurrence {
  MorphTag tag;
  std::size_t position = 0;  // codepoint index of the opening «
};

struct MalformedSpan {
  std::string text;          // the offending span, including guillemets
  std::size_t position = 0;  // codepoint index
};

struct TagScan {
  std::vector<TagOccurrence> tags;        // well-formed tags, in order
  std::vector<MalformedSpan> malformed;   // unknown codes, lone guillemets
};

TagScan scan_tags(std::string_view text);

// Final-output gate: ok iff no tags and no stray guillemets remain.
struct TagCheck {
  bool ok = true;
  std::vector<TagOccurrence> leaked;
  std::vector<MalformedSpan> malformed;
};

TagCheck assert_no_tags(std::string_view text);

// Guillemets are reserved for tags. Input text is pre-escaped to private-use
// placeholders before the cascade and restored after, so user text can never
// forge a tag.
std::string escape_guillemets(std::string_view text);
std::string restore_guillemets(std::string_view text);

// Table 1 taxonomy codes. MISSP is recognized but never normalized.
enum class SemioticClass {
  EXPN, LSEQ, ASWD, NUM, NORD, NTEL, NTIME, NDATE, NYEAR, NCODE,
  MISSP, URL, NONE
};

constexpr int kSemioticClassCount = 13;

std::string semiotic_class_name(SemioticClass c);
std::optional<SemioticClass> semiotic_class_from_name(std::string_view name);

}  // namespace ltnorm

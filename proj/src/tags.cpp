#include "ltnorm/tags.hpp"

#include <array>

#include "ltnorm/regex.hpp"

namespace ltnorm {

namespace {

constexpr char32_t kOpen = U'«';
constexpr char32_t kClose = U'»';
// Private-use placeholders for guillemets found in input text.
constexpr char32_t kOpenEsc = U'';
constexpr char32_t kCloseEsc = U'';

bool valid_number(char c) { return c == 'S' || c == 'P'; }
bool valid_case(char c) { return c == 'N' || c == 'G' || c == 'A' || c == 'I'; }
bool valid_gender(char c) { return c == 'F' || c == 'M'; }
bool valid_gkind(char c) { return c == 'O' || c == 'C'; }

}  // namespace

MorphTag case_number_tag(char number, char case_) {
  MorphTag t;
  t.kind = TagKind::CaseNumber;
  t.number = number;
  t.case_ = case_;
  return t;
}

MorphTag gender_kind_tag(char gender, char gkind) {
  MorphTag t;
  t.kind = TagKind::GenderKind;
  t.gender = gender;
  t.gkind = gkind;
  return t;
}

MorphTag spell_tag(bool accented) {
  MorphTag t;
  t.kind = TagKind::Spell;
  t.accented = accented;
  return t;
}

MorphTag month_code_tag(int month) {
  MorphTag t;
  t.kind = TagKind::MonthCode;
  t.month = month;
  return t;
}

std::string render_tag(const MorphTag& tag) {
  std::string body;
  switch (tag.kind) {
    case TagKind::CaseNumber:
      body = {tag.number, tag.case_};
      break;
    case TagKind::GenderKind:
      body = {tag.gender, tag.gkind};
      break;
    case TagKind::Spell:
      body = tag.accented ? "SpellA" : "Spell";
      break;
    case TagKind::MonthCode:
      body = (tag.month < 10 ? "0" : "") + std::to_string(tag.month) + "mėn";
      break;
  }
  return "«" + body + "»";
}

std::optional<MorphTag> parse_tag_body(std::string_view body) {
  if (body.size() == 2 && valid_number(body[0]) && valid_case(body[1]))
    return case_number_tag(body[0], body[1]);
  if (body.size() == 2 && valid_gender(body[0]) && valid_gkind(body[1]))
    return gender_kind_tag(body[0], body[1]);
  if (body == "Spell") return spell_tag(false);
  if (body == "SpellA") return spell_tag(true);
  // month codes: two digits + "mėn"
  if (body.size() >= 3 && body[0] >= '0' && body[0] <= '9' && body[1] >= '0' &&
      body[1] <= '9' && body.substr(2) == "mėn") {
    int m = (body[0] - '0') * 10 + (body[1] - '0');
    if (m >= 1 && m <= 12) return month_code_tag(m);
  }
  return std::nullopt;
}

TagScan scan_tags(std::string_view text) {
  TagScan result;
  std::u32string t = re::decode_utf8(text);
  std::size_t i = 0;
  while (i < t.size()) {
    if (t[i] == kClose) {
      result.malformed.push_back({"»", i});
      ++i;
      continue;
    }
    if (t[i] != kOpen) {
      ++i;
      continue;
    }
    std::size_t close = t.find(kClose, i + 1);
    std::size_t next_open = t.find(kOpen, i + 1);
    if (close == std::u32string::npos ||
        (next_open != std::u32string::npos && next_open < close)) {
      result.malformed.push_back({"«", i});
      ++i;
      continue;
    }
    std::string body = re::encode_utf8(t.substr(i + 1, close - i - 1));
    if (auto tag = parse_tag_body(body)) {
      result.tags.push_back({*tag, i});
    } else {
      result.malformed.push_back(
          {re::encode_utf8(t.substr(i, close - i + 1)), i});
    }
    i = close + 1;
  }
  return result;
}

TagCheck assert_no_tags(std::string_view text) {
  TagScan scan = scan_tags(text);
  TagCheck check;
  check.leaked = std::move(scan.tags);
  check.malformed = std::move(scan.malformed);
  check.ok = check.leaked.empty() && check.malformed.empty();
  return check;
}

std::string escape_guillemets(std::string_view text) {
  std::u32string t = re::decode_utf8(text);
  for (char32_t& cp : t) {
    if (cp == kOpen) cp = kOpenEsc;
    if (cp == kClose) cp = kCloseEsc;
  }
  return re::encode_utf8(t);
}

std::string restore_guillemets(std::string_view text) {
  std::u32string t = re::decode_utf8(text);
  for (char32_t& cp : t) {
    if (cp == kOpenEsc) cp = kOpen;
    if (cp == kCloseEsc) cp = kClose;
  }
  return re::encode_utf8(t);
}

namespace {

constexpr std::array<const char*, kSemioticClassCount> kClassNames = {
    "EXPN", "LSEQ", "ASWD", "NUM",   "NORD", "NTEL", "NTIME",
    "NDATE", "NYEAR", "NCODE", "MISSP", "URL", "NONE"};

}  // namespace

std::string semiotic_class_name(SemioticClass c) {
  return kClassNames[static_cast<std::size_t>(c)];
}

std::optional<SemioticClass> semiotic_class_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kClassNames.size(); ++i)
    if (name == kClassNames[i]) return static_cast<SemioticClass>(i);
  return std::nullopt;
}

}  // namespace ltnorm

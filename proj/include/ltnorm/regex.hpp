#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

// Small backtracking regex engine over Unicode scalar values.
//
// Supported syntax: literals, escaped metacharacters, character classes
// with ranges and negation, predefined classes \d \s \w, anchors ^ $ \b,
// quantifiers * + ? {n} {n,m} {n,}, alternation, capturing groups, and
// $k backreferences inside patterns. No lookaround, no recursion.
//
// \w and \b are evaluated against ASCII alphanumerics, '_', and the 18
// Lithuanian letters ąčęėįšųūž / ĄČĘĖĮŠŲŪŽ, so word boundaries behave
// correctly next to diacritics. Matching is case-sensitive.

namespace ltnorm::re {

struct Utf8Error : std::runtime_error {
  explicit Utf8Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct PatternError : std::runtime_error {
  PatternError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at offset " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

struct BadGroupRef : std::runtime_error {
  explicit BadGroupRef(const std::string& msg) : std::runtime_error(msg) {}
};

// Strict UTF-8 <-> UTF-32. decode throws Utf8Error on malformed input.
std::u32string decode_utf8(std::string_view utf8);
std::string encode_utf8(std::u32string_view text);

bool is_word_char(char32_t cp);

struct ReplaceResult {
  std::u32string text;
  int match_count = 0;
};

// Replacement template: literal pieces and group references. "$" followed
// by the longest digit run references that group; "${k}" delimits a
// reference when a literal digit follows; "$$" is a literal dollar sign.
class Replacement {
 public:
  static Replacement parse(std::string_view source, int group_count);

  const std::string& source() const { return source_; }

 private:
  friend class Pattern;
  using Piece = std::variant<std::u32string, int>;
  std::string source_;
  std::vector<Piece> pieces_;
};

class Pattern {
 public:
  static Pattern compile(std::string_view source);

  const std::string& source() const { return source_; }
  int group_count() const { return group_count_; }

  // True if the pattern matches anywhere in text.
  bool search(std::u32string_view text) const;

  // Leftmost match at or after `from`; fills group spans (npos = no match).
  // Span slots: [2k, 2k+1] for group k, group 0 = whole match.
  bool find(std::u32string_view text, std::size_t from,
            std::vector<std::size_t>& spans) const;

  // Replaces all non-overlapping matches left-to-right in a single pass,
  // resuming after each replacement (an empty match advances one position).
  ReplaceResult replace_all(std::u32string_view text,
                            const Replacement& repl) const;

  // Compiled program representation; public for the compiler in regex.cpp.
  struct CharClass {
    bool negated = false;
    std::vector<std::pair<char32_t, char32_t>> ranges;
    bool contains(char32_t cp) const;
  };

  enum class Op : uint8_t {
    Char, Any, Class, Split, Jmp, Save, Bol, Eol, WordB,
    BackRef, Mark, CheckProgress, Accept
  };
  struct Insn {
    Op op;
    char32_t cp = 0;
    int a = 0;
    int b = 0;
  };

 private:

  bool run(std::u32string_view text, std::size_t start,
           std::vector<std::size_t>& saves) const;

  std::string source_;
  int group_count_ = 0;
  int mark_slots_ = 0;
  std::vector<Insn> prog_;
  std::vector<CharClass> classes_;
  // Cheap skip checks: a codepoint every match must contain (0 = none)
  // and the minimum possible match length.
  char32_t required_char_ = 0;
  std::size_t min_length_ = 0;
};

}  // namespace ltnorm::re

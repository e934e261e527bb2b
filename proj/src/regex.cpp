#include "ltnorm/regex.hpp"

#include <algorithm>
#include <memory>

namespace ltnorm::re {

namespace {

constexpr std::size_t kNpos = static_cast<std::size_t>(-1);

const char32_t kLithuanianLetters[] = {
    U'ą', U'č', U'ę', U'ė', U'į', U'š', U'ų', U'ū', U'ž',
    U'Ą', U'Č', U'Ę', U'Ė', U'Į', U'Š', U'Ų', U'Ū', U'Ž'};

}  // namespace

std::u32string decode_utf8(std::string_view utf8) {
  std::u32string out;
  out.reserve(utf8.size());
  std::size_t i = 0;
  const auto* s = reinterpret_cast<const unsigned char*>(utf8.data());
  const std::size_t n = utf8.size();
  while (i < n) {
    unsigned char c = s[i];
    char32_t cp = 0;
    std::size_t len = 0;
    if (c < 0x80) {
      cp = c;
      len = 1;
    } else if ((c & 0xE0) == 0xC0) {
      cp = c & 0x1F;
      len = 2;
    } else if ((c & 0xF0) == 0xE0) {
      cp = c & 0x0F;
      len = 3;
    } else if ((c & 0xF8) == 0xF0) {
      cp = c & 0x07;
      len = 4;
    } else {
      throw Utf8Error("invalid UTF-8 lead byte at offset " + std::to_string(i));
    }
    if (i + len > n)
      throw Utf8Error("truncated UTF-8 sequence at offset " + std::to_string(i));
    for (std::size_t k = 1; k < len; ++k) {
      if ((s[i + k] & 0xC0) != 0x80)
        throw Utf8Error("invalid UTF-8 continuation at offset " +
                        std::to_string(i + k));
      cp = (cp << 6) | (s[i + k] & 0x3F);
    }
    static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (len > 1 && cp < kMin[len])
      throw Utf8Error("overlong UTF-8 sequence at offset " + std::to_string(i));
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
      throw Utf8Error("invalid code point at offset " + std::to_string(i));
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string encode_utf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

bool is_word_char(char32_t cp) {
  if ((cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z') ||
      (cp >= U'0' && cp <= U'9') || cp == U'_')
    return true;
  for (char32_t lt : kLithuanianLetters)
    if (cp == lt) return true;
  return false;
}

// ── Pattern AST ────────────────────────────────────────────────────────

namespace {

struct Node;
using NodePtr = std::unique_ptr<Node>;

enum class NodeKind {
  Literal, Any, Class, Seq, Alt, Repeat, Group, Anchor, BackRef
};
enum class AnchorKind { Bol, Eol, WordB };

struct ClassDef {
  bool negated = false;
  std::vector<std::pair<char32_t, char32_t>> ranges;
};

struct Node {
  NodeKind kind;
  char32_t cp = 0;                    // Literal
  ClassDef cls;                       // Class
  std::vector<NodePtr> children;      // Seq, Alt
  NodePtr child;                      // Repeat, Group
  int min = 0, max = 0;               // Repeat (max = -1 means unbounded)
  int group_index = 0;                // Group
  AnchorKind anchor = AnchorKind::Bol;
  int backref = 0;
};

NodePtr make_node(NodeKind k) {
  auto n = std::make_unique<Node>();
  n->kind = k;
  return n;
}

class Parser {
 public:
  Parser(std::u32string pattern, const std::string& source)
      : pat_(std::move(pattern)), source_(source) {}

  NodePtr parse(int& group_count) {
    NodePtr root = parse_alt();
    if (pos_ != pat_.size()) fail("unbalanced ')'");
    group_count = next_group_ - 1;
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw PatternError(msg + " in pattern \"" + source_ + "\"", pos_);
  }

  bool eof() const { return pos_ >= pat_.size(); }
  char32_t peek() const { return pat_[pos_]; }
  char32_t take() { return pat_[pos_++]; }

  NodePtr parse_alt() {
    std::vector<NodePtr> alts;
    alts.push_back(parse_seq());
    while (!eof() && peek() == U'|') {
      take();
      alts.push_back(parse_seq());
    }
    if (alts.size() == 1) return std::move(alts[0]);
    auto node = make_node(NodeKind::Alt);
    node->children = std::move(alts);
    return node;
  }

  NodePtr parse_seq() {
    auto node = make_node(NodeKind::Seq);
    while (!eof() && peek() != U'|' && peek() != U')')
      node->children.push_back(parse_repeat());
    return node;
  }

  NodePtr parse_repeat() {
    NodePtr atom = parse_atom();
    while (!eof()) {
      char32_t c = peek();
      int min = 0, max = -1;
      if (c == U'*') {
        take();
      } else if (c == U'+') {
        take();
        min = 1;
      } else if (c == U'?') {
        take();
        max = 1;
      } else if (c == U'{') {
        take();
        min = parse_number();
        max = min;
        if (!eof() && peek() == U',') {
          take();
          max = (!eof() && peek() != U'}') ? parse_number() : -1;
        }
        if (eof() || take() != U'}') fail("expected '}'");
        if (max != -1 && max < min) fail("bad quantifier bounds");
      } else {
        break;
      }
      if (atom->kind == NodeKind::Anchor) fail("quantifier after anchor");
      auto rep = make_node(NodeKind::Repeat);
      rep->min = min;
      rep->max = max;
      rep->child = std::move(atom);
      atom = std::move(rep);
    }
    return atom;
  }

  int parse_number() {
    if (eof() || peek() < U'0' || peek() > U'9') fail("expected number");
    long v = 0;
    while (!eof() && peek() >= U'0' && peek() <= U'9') {
      v = v * 10 + (take() - U'0');
      if (v > 1000) fail("quantifier bound too large");
    }
    return static_cast<int>(v);
  }

  NodePtr parse_atom() {
    if (eof()) fail("pattern ends unexpectedly");
    char32_t c = take();
    switch (c) {
      case U'(': {
        auto node = make_node(NodeKind::Group);
        node->group_index = next_group_++;
        node->child = parse_alt();
        if (eof() || take() != U')') fail("expected ')'");
        return node;
      }
      case U')':
        fail("unbalanced ')'");
      case U'[':
        return parse_class();
      case U'.':
        return make_node(NodeKind::Any);
      case U'^': {
        auto node = make_node(NodeKind::Anchor);
        node->anchor = AnchorKind::Bol;
        return node;
      }
      case U'$': {
        if (!eof() && peek() >= U'0' && peek() <= U'9') {
          auto node = make_node(NodeKind::BackRef);
          node->backref = parse_number();
          if (node->backref == 0) fail("$0 is not a valid backreference");
          return node;
        }
        auto node = make_node(NodeKind::Anchor);
        node->anchor = AnchorKind::Eol;
        return node;
      }
      case U'*':
      case U'+':
      case U'?':
        fail("quantifier with nothing to repeat");
      case U'{':
        fail("unescaped '{'");
      case U'\\':
        return parse_escape();
      default: {
        auto node = make_node(NodeKind::Literal);
        node->cp = c;
        return node;
      }
    }
  }

  NodePtr parse_escape() {
    if (eof()) fail("trailing backslash");
    char32_t c = take();
    switch (c) {
      case U'd': case U's': case U'w': {
        auto node = make_node(NodeKind::Class);
        add_builtin(node->cls, c);
        return node;
      }
      case U'b': {
        auto node = make_node(NodeKind::Anchor);
        node->anchor = AnchorKind::WordB;
        return node;
      }
      case U't': return literal(U'\t');
      case U'n': return literal(U'\n');
      case U'r': return literal(U'\r');
      default:
        if ((c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z'))
          fail("unknown escape");
        return literal(c);
    }
  }

  NodePtr literal(char32_t cp) {
    auto node = make_node(NodeKind::Literal);
    node->cp = cp;
    return node;
  }

  static void add_builtin(ClassDef& cls, char32_t which) {
    switch (which) {
      case U'd':
        cls.ranges.emplace_back(U'0', U'9');
        break;
      case U's':
        for (char32_t cp : {U' ', U'\t', U'\n', U'\r', U'\f', U'\v',
                            char32_t{0x00A0}})
          cls.ranges.emplace_back(cp, cp);
        break;
      case U'w':
        cls.ranges.emplace_back(U'a', U'z');
        cls.ranges.emplace_back(U'A', U'Z');
        cls.ranges.emplace_back(U'0', U'9');
        cls.ranges.emplace_back(U'_', U'_');
        for (char32_t cp : kLithuanianLetters) cls.ranges.emplace_back(cp, cp);
        break;
      default:
        break;
    }
  }

  NodePtr parse_class() {
    auto node = make_node(NodeKind::Class);
    ClassDef& cls = node->cls;
    if (!eof() && peek() == U'^') {
      take();
      cls.negated = true;
    }
    bool first = true;
    while (true) {
      if (eof()) fail("unterminated character class");
      char32_t c = take();
      if (c == U']' && !first) break;
      first = false;
      char32_t lo;
      bool is_single_set = false;
      if (c == U'\\') {
        if (eof()) fail("trailing backslash in class");
        char32_t e = take();
        if (e == U'd' || e == U's' || e == U'w') {
          add_builtin(cls, e);
          is_single_set = true;
          lo = 0;
        } else if (e == U't') {
          lo = U'\t';
        } else if (e == U'n') {
          lo = U'\n';
        } else if (e == U'r') {
          lo = U'\r';
        } else {
          lo = e;
        }
      } else {
        lo = c;
      }
      if (is_single_set) continue;
      if (!eof() && peek() == U'-' && pos_ + 1 < pat_.size() &&
          pat_[pos_ + 1] != U']') {
        take();  // '-'
        char32_t hi = take();
        if (hi == U'\\') {
          if (eof()) fail("trailing backslash in class");
          hi = take();
          if (hi == U't') hi = U'\t';
        }
        if (hi < lo) fail("inverted range in class");
        cls.ranges.emplace_back(lo, hi);
      } else {
        cls.ranges.emplace_back(lo, lo);
      }
    }
    if (cls.ranges.empty() && !cls.negated) fail("empty character class");
    return node;
  }

  std::u32string pat_;
  const std::string& source_;
  std::size_t pos_ = 0;
  int next_group_ = 1;
};

bool nullable(const Node& n) {
  switch (n.kind) {
    case NodeKind::Literal:
    case NodeKind::Any:
    case NodeKind::Class:
      return false;
    case NodeKind::Anchor:
      return true;
    case NodeKind::BackRef:
      return true;  // referenced group may have matched empty
    case NodeKind::Group:
      return nullable(*n.child);
    case NodeKind::Repeat:
      return n.min == 0 || nullable(*n.child);
    case NodeKind::Seq:
      for (const auto& c : n.children)
        if (!nullable(*c)) return false;
      return true;
    case NodeKind::Alt:
      for (const auto& c : n.children)
        if (nullable(*c)) return true;
      return false;
  }
  return true;
}

std::size_t min_len(const Node& n) {
  switch (n.kind) {
    case NodeKind::Literal:
    case NodeKind::Any:
    case NodeKind::Class:
      return 1;
    case NodeKind::Anchor:
    case NodeKind::BackRef:
      return 0;
    case NodeKind::Group:
      return min_len(*n.child);
    case NodeKind::Repeat:
      return static_cast<std::size_t>(n.min) * min_len(*n.child);
    case NodeKind::Seq: {
      std::size_t total = 0;
      for (const auto& c : n.children) total += min_len(*c);
      return total;
    }
    case NodeKind::Alt: {
      std::size_t best = kNpos;
      for (const auto& c : n.children) best = std::min(best, min_len(*c));
      return best == kNpos ? 0 : best;
    }
  }
  return 0;
}

// Codepoints guaranteed to occur in every match: used for a cheap skip
// check before scanning. Approximate (may return an empty set).
void must_chars(const Node& n, std::vector<char32_t>& out) {
  switch (n.kind) {
    case NodeKind::Literal:
      out.push_back(n.cp);
      break;
    case NodeKind::Group:
      must_chars(*n.child, out);
      break;
    case NodeKind::Repeat:
      if (n.min >= 1) must_chars(*n.child, out);
      break;
    case NodeKind::Seq:
      for (const auto& c : n.children) must_chars(*c, out);
      break;
    case NodeKind::Alt: {
      if (n.children.empty()) return;
      std::vector<char32_t> common;
      must_chars(*n.children[0], common);
      for (std::size_t i = 1; i < n.children.size() && !common.empty(); ++i) {
        std::vector<char32_t> other;
        must_chars(*n.children[i], other);
        std::vector<char32_t> kept;
        for (char32_t cp : common)
          if (std::find(other.begin(), other.end(), cp) != other.end())
            kept.push_back(cp);
        common = std::move(kept);
      }
      out.insert(out.end(), common.begin(), common.end());
      break;
    }
    default:
      break;
  }
}

int rarity_score(char32_t cp) {
  if (cp == U'«' || cp == U'»') return 100;
  if (cp >= 0x80) return 90;
  if (cp >= U'A' && cp <= U'Z') return 70;
  if (cp == U'@' || cp == U':' || cp == U'/' || cp == U'+' || cp == U'%')
    return 65;
  if (cp >= U'0' && cp <= U'9') return 40;
  if (cp >= U'a' && cp <= U'z') return 20;
  if (cp == U' ') return 0;
  return 50;
}

}  // namespace

// ── Compilation ────────────────────────────────────────────────────────

bool Pattern::CharClass::contains(char32_t cp) const {
  bool in = false;
  for (const auto& [lo, hi] : ranges) {
    if (cp >= lo && cp <= hi) {
      in = true;
      break;
    }
  }
  return negated ? !in : in;
}

namespace {

struct Compiler {
  std::vector<Pattern::Insn>* prog;
  std::vector<Pattern::CharClass>* classes;
  int group_count = 0;
  int mark_slots = 0;

  int emit(Pattern::Op op, char32_t cp = 0, int a = 0, int b = 0) {
    prog->push_back({op, cp, a, b});
    return static_cast<int>(prog->size()) - 1;
  }

  void compile(const Node& n) {
    switch (n.kind) {
      case NodeKind::Literal:
        emit(Pattern::Op::Char, n.cp);
        break;
      case NodeKind::Any:
        emit(Pattern::Op::Any);
        break;
      case NodeKind::Class: {
        Pattern::CharClass cc;
        cc.negated = n.cls.negated;
        cc.ranges = n.cls.ranges;
        classes->push_back(std::move(cc));
        emit(Pattern::Op::Class, 0, static_cast<int>(classes->size()) - 1);
        break;
      }
      case NodeKind::Anchor:
        switch (n.anchor) {
          case AnchorKind::Bol: emit(Pattern::Op::Bol); break;
          case AnchorKind::Eol: emit(Pattern::Op::Eol); break;
          case AnchorKind::WordB: emit(Pattern::Op::WordB); break;
        }
        break;
      case NodeKind::BackRef:
        emit(Pattern::Op::BackRef, 0, n.backref);
        break;
      case NodeKind::Group:
        emit(Pattern::Op::Save, 0, n.group_index * 2);
        compile(*n.child);
        emit(Pattern::Op::Save, 0, n.group_index * 2 + 1);
        break;
      case NodeKind::Seq:
        for (const auto& c : n.children) compile(*c);
        break;
      case NodeKind::Alt: {
        // split a,(split b,(... z))
        std::vector<int> jumps;
        for (std::size_t i = 0; i < n.children.size(); ++i) {
          if (i + 1 < n.children.size()) {
            int sp = emit(Pattern::Op::Split);
            compile(*n.children[i]);
            jumps.push_back(emit(Pattern::Op::Jmp));
            (*prog)[sp].a = sp + 1;
            (*prog)[sp].b = static_cast<int>(prog->size());
          } else {
            compile(*n.children[i]);
          }
        }
        int end = static_cast<int>(prog->size());
        for (int j : jumps) (*prog)[j].a = end;
        break;
      }
      case NodeKind::Repeat:
        compile_repeat(n);
        break;
    }
  }

  void compile_repeat(const Node& n) {
    const Node& body = *n.child;
    for (int i = 0; i < n.min; ++i) compile(body);
    if (n.max == -1) {
      // greedy star over the remaining repetitions
      bool guard = nullable(body);
      int slot = guard ? mark_slots++ : 0;
      int loop = static_cast<int>(prog->size());
      int sp = emit(Pattern::Op::Split);
      if (guard) emit(Pattern::Op::Mark, 0, slot);
      compile(body);
      if (guard) emit(Pattern::Op::CheckProgress, 0, slot);
      emit(Pattern::Op::Jmp, 0, loop);
      (*prog)[sp].a = sp + 1;
      (*prog)[sp].b = static_cast<int>(prog->size());
    } else {
      // up to (max - min) optional copies, greedy
      std::vector<int> splits;
      for (int i = n.min; i < n.max; ++i) {
        splits.push_back(emit(Pattern::Op::Split));
        compile(body);
      }
      int end = static_cast<int>(prog->size());
      for (int sp : splits) {
        (*prog)[sp].a = sp + 1;
        (*prog)[sp].b = end;
      }
    }
  }
};

}  // namespace

Pattern Pattern::compile(std::string_view source) {
  Pattern p;
  p.source_.assign(source);
  std::u32string pat32 = decode_utf8(source);
  Parser parser(std::move(pat32), p.source_);
  int groups = 0;
  NodePtr root = parser.parse(groups);
  if (groups > 30)
    throw PatternError("too many capture groups in \"" + p.source_ + "\"", 0);
  p.group_count_ = groups;

  Compiler c{&p.prog_, &p.classes_};
  c.compile(*root);
  c.emit(Op::Accept);
  p.mark_slots_ = c.mark_slots;

  p.min_length_ = min_len(*root);
  std::vector<char32_t> req;
  must_chars(*root, req);
  if (!req.empty()) {
    char32_t best = req[0];
    for (char32_t cp : req)
      if (rarity_score(cp) > rarity_score(best)) best = cp;
    p.required_char_ = best;
  }
  return p;
}

// ── Matching ───────────────────────────────────────────────────────────

bool Pattern::run(std::u32string_view text, std::size_t start,
                  std::vector<std::size_t>& saves) const {
  struct Frame {
    int pc;
    std::size_t pos;
    std::vector<std::size_t> saves;
    std::vector<std::size_t> marks;
  };
  const std::size_t n = text.size();
  std::vector<Frame> stack;
  int pc = 0;
  std::size_t pos = start;
  std::vector<std::size_t> marks(static_cast<std::size_t>(mark_slots_), kNpos);
  long steps = 0;

  auto backtrack = [&]() -> bool {
    if (stack.empty()) return false;
    Frame& f = stack.back();
    pc = f.pc;
    pos = f.pos;
    saves = std::move(f.saves);
    marks = std::move(f.marks);
    stack.pop_back();
    return true;
  };

  while (true) {
    if (++steps > 2000000)
      throw std::runtime_error("regex step limit exceeded for pattern \"" +
                               source_ + "\"");
    const Insn& in = prog_[static_cast<std::size_t>(pc)];
    bool ok = true;
    switch (in.op) {
      case Op::Char:
        ok = pos < n && text[pos] == in.cp;
        if (ok) ++pos;
        break;
      case Op::Any:
        ok = pos < n && text[pos] != U'\n' && text[pos] != U'\r';
        if (ok) ++pos;
        break;
      case Op::Class:
        ok = pos < n && classes_[static_cast<std::size_t>(in.a)].contains(text[pos]);
        if (ok) ++pos;
        break;
      case Op::Bol:
        ok = pos == 0;
        break;
      case Op::Eol:
        ok = pos == n;
        break;
      case Op::WordB: {
        bool before = pos > 0 && is_word_char(text[pos - 1]);
        bool after = pos < n && is_word_char(text[pos]);
        ok = before != after;
        break;
      }
      case Op::Save:
        saves[static_cast<std::size_t>(in.a)] = pos;
        break;
      case Op::Mark:
        marks[static_cast<std::size_t>(in.a)] = pos;
        break;
      case Op::CheckProgress:
        ok = pos != marks[static_cast<std::size_t>(in.a)];
        break;
      case Op::BackRef: {
        std::size_t lo = saves[static_cast<std::size_t>(in.a) * 2];
        std::size_t hi = saves[static_cast<std::size_t>(in.a) * 2 + 1];
        if (lo == kNpos || hi == kNpos) {
          ok = true;  // unmatched group references the empty string
        } else {
          std::size_t len = hi - lo;
          ok = pos + len <= n &&
               text.compare(pos, len, text, lo, len) == 0;
          if (ok) pos += len;
        }
        break;
      }
      case Op::Split:
        stack.push_back({in.b, pos, saves, marks});
        pc = in.a;
        continue;
      case Op::Jmp:
        pc = in.a;
        continue;
      case Op::Accept:
        saves[1] = pos;
        return true;
    }
    if (ok) {
      ++pc;
    } else if (!backtrack()) {
      return false;
    }
  }
}

bool Pattern::find(std::u32string_view text, std::size_t from,
                   std::vector<std::size_t>& spans) const {
  const std::size_t n = text.size();
  if (min_length_ > n) return false;
  if (required_char_ != 0 &&
      text.find(required_char_, from) == std::u32string_view::npos)
    return false;
  spans.assign(static_cast<std::size_t>(group_count_ + 1) * 2, kNpos);
  for (std::size_t s = from; s + min_length_ <= n; ++s) {
    std::fill(spans.begin(), spans.end(), kNpos);
    spans[0] = s;
    if (run(text, s, spans)) return true;
  }
  return false;
}

bool Pattern::search(std::u32string_view text) const {
  std::vector<std::size_t> spans;
  return find(text, 0, spans);
}

ReplaceResult Pattern::replace_all(std::u32string_view text,
                                   const Replacement& repl) const {
  ReplaceResult result;
  std::vector<std::size_t> spans;
  std::size_t cursor = 0;
  std::size_t scan = 0;
  while (scan <= text.size()) {
    if (!find(text, scan, spans)) break;
    std::size_t mb = spans[0], me = spans[1];
    result.text.append(text.substr(cursor, mb - cursor));
    for (const auto& piece : repl.pieces_) {
      if (std::holds_alternative<std::u32string>(piece)) {
        result.text.append(std::get<std::u32string>(piece));
      } else {
        int g = std::get<int>(piece);
        std::size_t lo = spans[static_cast<std::size_t>(g) * 2];
        std::size_t hi = spans[static_cast<std::size_t>(g) * 2 + 1];
        if (lo != kNpos && hi != kNpos)
          result.text.append(text.substr(lo, hi - lo));
      }
    }
    ++result.match_count;
    cursor = me;
    scan = (me > mb) ? me : me + 1;  // resume after the match
  }
  if (result.match_count == 0) {
    result.text.assign(text);
    return result;
  }
  result.text.append(text.substr(cursor));
  return result;
}

// ── Replacement templates ──────────────────────────────────────────────

Replacement Replacement::parse(std::string_view source, int group_count) {
  Replacement r;
  r.source_.assign(source);
  std::u32string src = decode_utf8(source);
  std::u32string literal;
  std::size_t i = 0;
  auto flush = [&]() {
    if (!literal.empty()) {
      r.pieces_.emplace_back(literal);
      literal.clear();
    }
  };
  while (i < src.size()) {
    char32_t c = src[i];
    if (c == U'$') {
      ++i;
      if (i < src.size() && src[i] == U'$') {
        literal.push_back(U'$');
        ++i;
        continue;
      }
      bool braced = i < src.size() && src[i] == U'{';
      if (braced) ++i;
      std::size_t start = i;
      long g = 0;
      while (i < src.size() && src[i] >= U'0' && src[i] <= U'9') {
        g = g * 10 + (src[i] - U'0');
        ++i;
      }
      if (i == start)
        throw BadGroupRef("'$' must be followed by a group number in \"" +
                          r.source_ + "\"");
      if (braced) {
        if (i >= src.size() || src[i] != U'}')
          throw BadGroupRef("unterminated ${...} in \"" + r.source_ + "\"");
        ++i;
      }
      if (g < 1 || g > group_count)
        throw BadGroupRef("replacement \"" + r.source_ + "\" references group " +
                          std::to_string(g) + " but pattern defines " +
                          std::to_string(group_count));
      flush();
      r.pieces_.emplace_back(static_cast<int>(g));
    } else if (c == U'\\' && i + 1 < src.size()) {
      char32_t e = src[i + 1];
      if (e == U't') {
        literal.push_back(U'\t');
        i += 2;
      } else if (e == U'n') {
        literal.push_back(U'\n');
        i += 2;
      } else if (e == U'\\') {
        literal.push_back(U'\\');
        i += 2;
      } else {
        literal.push_back(c);
        ++i;
      }
    } else {
      literal.push_back(c);
      ++i;
    }
  }
  flush();
  return r;
}

}  // namespace ltnorm::re

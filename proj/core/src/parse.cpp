#include "skew/parse.hpp"

#include <cctype>
#include <charconv>

namespace skew {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

enum class Tok { Ident, Arrow, LParen, RParen, Comma, Bar, Turnstile, Dash, End };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string_view text;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return cur_; }

  Token next() {
    Token t = cur_;
    advance();
    return t;
  }

  Token expect(Tok kind, const char* what) {
    if (cur_.kind != kind) fail(std::string("expected ") + what);
    return next();
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(msg, cur_.offset);
  }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    std::size_t start = pos_;
    if (pos_ >= src_.size()) {
      cur_ = {Tok::End, start, {}};
      return;
    }
    char c = src_[pos_];
    auto one = [&](Tok k, std::size_t len) {
      pos_ += len;
      cur_ = {k, start, src_.substr(start, len)};
    };
    if (src_.substr(pos_, 3) == "\xE2\x8A\xB8") return one(Tok::Arrow, 3);
    switch (c) {
      case '(': return one(Tok::LParen, 1);
      case ')': return one(Tok::RParen, 1);
      case ',': return one(Tok::Comma, 1);
      case '|':
        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '-') return one(Tok::Turnstile, 2);
        return one(Tok::Bar, 1);
      case '-':
        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == 'o') return one(Tok::Arrow, 2);
        return one(Tok::Dash, 1);
      default: break;
    }
    if (ident_start(c)) {
      while (pos_ < src_.size() && ident_char(src_[pos_])) ++pos_;
      cur_ = {Tok::Ident, start, src_.substr(start, pos_ - start)};
      return;
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", start);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token cur_{Tok::End, 0, {}};
};

Formula formula(Lexer& lx);

Formula primary(Lexer& lx) {
  if (lx.peek().kind == Tok::LParen) {
    lx.next();
    Formula f = formula(lx);
    lx.expect(Tok::RParen, "')'");
    return f;
  }
  Token t = lx.expect(Tok::Ident, "atom or '('");
  return Formula::atom(t.text);
}

Formula formula(Lexer& lx) {
  Formula lhs = primary(lx);
  if (lx.peek().kind != Tok::Arrow) return lhs;
  lx.next();
  return Formula::imp(lhs, formula(lx));
}

Stoup stoup(Lexer& lx) {
  if (lx.peek().kind == Tok::Dash) {
    lx.next();
    return std::nullopt;
  }
  return formula(lx);
}

void expect_end(Lexer& lx) {
  if (lx.peek().kind != Tok::End) lx.fail("trailing input");
}

}  // namespace

Formula parse_formula(std::string_view text) {
  Lexer lx(text);
  Formula f = formula(lx);
  expect_end(lx);
  return f;
}

Sequent parse_sequent(std::string_view text) {
  Lexer lx(text);
  Stoup s = stoup(lx);
  lx.expect(Tok::Bar, "'|'");
  Context ctx;
  if (lx.peek().kind != Tok::Turnstile) {
    ctx.push_back(formula(lx));
    while (lx.peek().kind == Tok::Comma) {
      lx.next();
      ctx.push_back(formula(lx));
    }
  }
  lx.expect(Tok::Turnstile, "'|-'");
  Formula c = formula(lx);
  expect_end(lx);
  return {std::move(s), std::move(ctx), std::move(c)};
}

Sequent parse_cat_sequent(std::string_view text) {
  Lexer lx(text);
  Stoup s;
  if (lx.peek().kind != Tok::Turnstile) s = stoup(lx);
  if (lx.peek().kind == Tok::Bar) {
    lx.next();
    if (lx.peek().kind != Tok::Turnstile)
      lx.fail("categorical sequents have an empty context");
  }
  lx.expect(Tok::Turnstile, "'|-'");
  Formula c = formula(lx);
  expect_end(lx);
  return {std::move(s), {}, std::move(c)};
}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view src) : src_(src) {}

  RawTerm parse() {
    RawTerm t = term();
    skip();
    if (pos_ < src_.size()) throw SyntaxError("trailing input", pos_);
    return t;
  }

 private:
  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) throw SyntaxError(std::string("expected '") + c + "'", pos_);
  }

  RawTerm term() {
    RawTerm lhs = app();
    skip();
    if (!eat('.')) return lhs;
    RawTerm rhs = term();
    RawTerm comp;
    comp.head = "comp";
    comp.offset = lhs.offset;
    comp.has_parens = true;
    comp.children.push_back(std::move(rhs));
    comp.children.push_back(std::move(lhs));
    return comp;
  }

  RawTerm app() {
    skip();
    if (eat('(')) {
      RawTerm t = term();
      expect(')');
      return t;
    }
    RawTerm t;
    t.offset = pos_;
    if (pos_ >= src_.size() || !ident_start(src_[pos_]))
      throw SyntaxError("expected term", pos_);
    std::size_t start = pos_;
    while (pos_ < src_.size() && (ident_char(src_[pos_]) || src_[pos_] == '\'')) ++pos_;
    t.head = std::string(src_.substr(start, pos_ - start));
    skip();
    if (pos_ < src_.size() && src_[pos_] == '[') bracket(t);
    skip();
    if (eat('(')) {
      t.has_parens = true;
      if (!eat(')')) {
        t.children.push_back(term());
        while (eat(',')) t.children.push_back(term());
        expect(')');
      }
    }
    return t;
  }

  void bracket(RawTerm& t) {
    t.has_bracket = true;
    ++pos_;
    std::size_t start = pos_;
    int depth = 0;
    std::size_t item = start;
    auto flush = [&](std::size_t end) {
      std::string_view s = src_.substr(item, end - item);
      std::size_t lead = 0;
      while (lead < s.size() && std::isspace(static_cast<unsigned char>(s[lead]))) ++lead;
      std::size_t trail = s.size();
      while (trail > lead && std::isspace(static_cast<unsigned char>(s[trail - 1]))) --trail;
      return RawParam{std::string(s.substr(lead, trail - lead)), item + lead};
    };
    while (true) {
      if (pos_ >= src_.size()) throw SyntaxError("unterminated '['", start - 1);
      char c = src_[pos_];
      if (c == '(' || c == '[') {
        ++depth;
      } else if ((c == ')' || c == ']') && depth > 0) {
        --depth;
      } else if (c == ']') {
        RawParam p = flush(pos_);
        if (!p.text.empty() || !t.params.empty()) t.params.push_back(std::move(p));
        ++pos_;
        return;
      } else if (c == ';' && depth == 0) {
        if (t.label || !t.params.empty()) throw SyntaxError("unexpected ';'", pos_);
        t.label = flush(pos_).text;
        item = pos_ + 1;
      } else if (c == ',' && depth == 0) {
        t.params.push_back(flush(pos_));
        item = pos_ + 1;
      }
      ++pos_;
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

RawTerm parse_term(std::string_view text) { return TermParser(text).parse(); }

Formula param_formula(const RawTerm& t, std::size_t i, const std::string& path) {
  if (i >= t.params.size())
    throw TypeError(t.head + " needs at least " + std::to_string(i + 1) + " annotation(s)", path);
  try {
    return parse_formula(t.params[i].text);
  } catch (const SyntaxError& e) {
    throw TypeError(t.head + ": bad formula annotation '" + t.params[i].text + "' (" +
                        e.what() + ")",
                    path);
  }
}

std::size_t param_index(const RawTerm& t, std::size_t i, const std::string& path) {
  if (i >= t.params.size())
    throw TypeError(t.head + " needs at least " + std::to_string(i + 1) + " index(es)", path);
  const std::string& s = t.params[i].text;
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw TypeError(t.head + ": bad index '" + s + "'", path);
  return v;
}

std::string to_string(const RawTerm& t) {
  std::string out = t.head;
  if (t.has_bracket) {
    out += '[';
    if (t.label) out += *t.label + (t.params.empty() ? ";" : "; ");
    for (std::size_t i = 0; i < t.params.size(); ++i) {
      if (i) out += ", ";
      out += t.params[i].text;
    }
    out += ']';
  }
  if (t.has_parens) {
    out += '(';
    for (std::size_t i = 0; i < t.children.size(); ++i) {
      if (i) out += ", ";
      out += to_string(t.children[i]);
    }
    out += ')';
  }
  return out;
}

}  // namespace skew

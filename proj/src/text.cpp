#include "ctxdrt/text.hpp"

#include <algorithm>

namespace ctxdrt {

namespace {

enum class Tok { LBracket, RBracket, Bar, Comma, LParen, RParen, Colon, Arrow, Amp, Ident, End, Bad };

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Bar: return "'|'";
    case Tok::Comma: return "','";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Colon: return "':'";
    case Tok::Arrow: return "'=>'";
    case Tok::Amp: return "'&'";
    case Tok::Ident: return "identifier";
    case Tok::End: return "end of input";
    case Tok::Bad: return "invalid character";
  }
  return "?";
}

bool ident_start(char c) { return c >= 'a' && c <= 'z'; }
bool ident_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (true) {
    while (i < s.size()) {
      char c = s[i];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++i;
      } else if (c == '#') {
        while (i < s.size() && s[i] != '\n') ++i;
      } else {
        break;
      }
    }
    if (i >= s.size()) {
      out.push_back({Tok::End, "", {s.size(), s.size()}});
      return out;
    }
    std::size_t start = i;
    char c = s[i];
    auto single = [&](Tok t) {
      out.push_back({t, std::string(1, c), {start, start + 1}});
      ++i;
    };
    switch (c) {
      case '[': single(Tok::LBracket); continue;
      case ']': single(Tok::RBracket); continue;
      case '|': single(Tok::Bar); continue;
      case ',': single(Tok::Comma); continue;
      case '(': single(Tok::LParen); continue;
      case ')': single(Tok::RParen); continue;
      case ':': single(Tok::Colon); continue;
      case '&': single(Tok::Amp); continue;
      default: break;
    }
    if (c == '=' && i + 1 < s.size() && s[i + 1] == '>') {
      out.push_back({Tok::Arrow, "=>", {start, start + 2}});
      i += 2;
      continue;
    }
    if (ident_start(c)) {
      while (i < s.size() && ident_char(s[i])) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), {start, i}});
      continue;
    }
    // Stop at the first bad byte; the parser reports it.
    out.push_back({Tok::Bad, std::string(1, c), {start, start + 1}});
    out.push_back({Tok::End, "", {s.size(), s.size()}});
    return out;
  }
}

constexpr int kMaxNesting = 200;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text), toks_(lex(text)) {}

  Drs top_drs() {
    Drs k = drs();
    expect_end();
    return k;
  }

  std::vector<Drs> drs_list() {
    std::vector<Drs> out;
    while (peek().kind != Tok::End) out.push_back(drs());
    return out;
  }

  LConFormula top_lcon() {
    LConFormula f = lcon();
    expect_end();
    return f;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }

  bool peek_keyword(const char* kw, Tok next) const {
    return peek().kind == Tok::Ident && peek().text == kw && peek(1).kind == next;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::Ident ? "'" + t.text + "'" : tok_name(t.kind);
    if (t.kind == Tok::Bad) found = "invalid character '" + t.text + "'";
    std::string msg = "expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    msg += ", found " + found + " at " + describe_position(text_, t.span.start);
    throw ParseError(msg, t.span, std::move(expected));
  }

  Token take(Tok kind) {
    if (peek().kind != kind) fail({tok_name(kind)});
    return toks_[pos_++];
  }

  void expect_end() {
    if (peek().kind != Tok::End) fail({tok_name(Tok::End)});
  }

  struct DepthGuard {
    Parser& p;
    explicit DepthGuard(Parser& parser) : p(parser) {
      if (++p.depth_ > kMaxNesting) {
        const Token& t = p.peek();
        throw ParseError("nesting deeper than " + std::to_string(kMaxNesting) + " at " +
                             describe_position(p.text_, t.span.start),
                         t.span, {});
      }
    }
    ~DepthGuard() { --p.depth_; }
  };

  Drs drs() {
    DepthGuard guard(*this);
    take(Tok::LBracket);
    Drs k;
    if (peek().kind == Tok::Ident) {
      k.universe.push_back(Referent{take(Tok::Ident).text});
      while (peek().kind == Tok::Comma) {
        ++pos_;
        k.universe.push_back(Referent{take(Tok::Ident).text});
      }
      if (peek().kind != Tok::Bar) fail({"','", "'|'"});
    } else if (peek().kind != Tok::Bar) {
      fail({"identifier", "'|'"});
    }
    take(Tok::Bar);
    if (peek().kind != Tok::RBracket) {
      k.conditions.push_back(condition());
      while (peek().kind == Tok::Comma) {
        ++pos_;
        k.conditions.push_back(condition());
      }
      if (peek().kind != Tok::RBracket) fail({"','", "']'"});
    }
    take(Tok::RBracket);
    return k;
  }

  Condition condition() {
    if (peek_keyword("not", Tok::LBracket)) {
      ++pos_;
      return neg(drs());
    }
    if (peek_keyword("alpha", Tok::Colon)) {
      pos_ += 2;
      return alpha(drs());
    }
    if (peek().kind == Tok::Ident && peek(1).kind == Tok::LParen) {
      Atom a{take(Tok::Ident).text, {}};
      take(Tok::LParen);
      a.args.push_back(Referent{take(Tok::Ident).text});
      while (peek().kind == Tok::Comma) {
        ++pos_;
        a.args.push_back(Referent{take(Tok::Ident).text});
      }
      if (peek().kind != Tok::RParen) fail({"','", "')'"});
      take(Tok::RParen);
      return Condition{std::move(a)};
    }
    if (peek().kind == Tok::LBracket) {
      Drs left = drs();
      if (peek().kind == Tok::Arrow) {
        ++pos_;
        return imp(std::move(left), drs());
      }
      if (peek().kind == Tok::Ident && peek().text == "or") {
        ++pos_;
        return disj(std::move(left), drs());
      }
      fail({"'=>'", "'or'"});
    }
    fail({"atom", "'not'", "'alpha'", "'['"});
  }

  LConFormula lcon() {
    DepthGuard guard(*this);
    std::vector<LConFormula> items{lterm()};
    while (peek().kind == Tok::Bar) {
      ++pos_;
      items.push_back(lterm());
    }
    return items.size() == 1 ? std::move(items.front()) : lor(std::move(items));
  }

  LConFormula lterm() {
    std::vector<LConFormula> items{lfac()};
    while (peek().kind == Tok::Amp) {
      ++pos_;
      items.push_back(lfac());
    }
    return items.size() == 1 ? std::move(items.front()) : land(std::move(items));
  }

  LConFormula lfac() {
    if (peek().kind == Tok::LBracket) return lit(drs());
    if (peek_keyword("in", Tok::LParen)) {
      pos_ += 2;
      Drs ctx = drs();
      take(Tok::Comma);
      LConFormula body = lcon();
      take(Tok::RParen);
      return in(std::move(ctx), std::move(body));
    }
    if (peek().kind == Tok::LParen) {
      ++pos_;
      LConFormula f = lcon();
      take(Tok::RParen);
      return f;
    }
    fail({"'['", "'in'", "'('"});
  }

  std::string_view text_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

void print_into(std::string& out, const Drs& k);

void print_into(std::string& out, const Condition& c) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Atom>) {
          out += n.predicate;
          out += '(';
          for (std::size_t i = 0; i < n.args.size(); ++i) {
            if (i) out += ',';
            out += n.args[i].name;
          }
          out += ')';
        } else if constexpr (std::is_same_v<T, Neg>) {
          out += "not ";
          print_into(out, *n.body);
        } else if constexpr (std::is_same_v<T, Imp>) {
          print_into(out, *n.antecedent);
          out += " => ";
          print_into(out, *n.consequent);
        } else if constexpr (std::is_same_v<T, Or>) {
          print_into(out, *n.left);
          out += " or ";
          print_into(out, *n.right);
        } else {
          out += "alpha:";
          print_into(out, *n.body);
        }
      },
      c.node);
}

void print_into(std::string& out, const Drs& k) {
  out += '[';
  for (std::size_t i = 0; i < k.universe.size(); ++i) {
    if (i) out += ", ";
    out += k.universe[i].name;
  }
  out += " | ";
  for (std::size_t i = 0; i < k.conditions.size(); ++i) {
    if (i) out += ", ";
    print_into(out, k.conditions[i]);
  }
  out += ']';
}

void print_into(std::string& out, const LConFormula& f);

void print_item(std::string& out, const LConFormula& f, bool parenthesize) {
  if (parenthesize) out += '(';
  print_into(out, f);
  if (parenthesize) out += ')';
}

void print_into(std::string& out, const LConFormula& f) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, DrsLit>) {
          print_into(out, n.drs);
        } else if constexpr (std::is_same_v<T, In>) {
          out += "in(";
          print_into(out, n.context);
          out += ", ";
          print_into(out, *n.body);
          out += ')';
        } else if constexpr (std::is_same_v<T, LAnd>) {
          for (std::size_t i = 0; i < n.items.size(); ++i) {
            if (i) out += " & ";
            const auto& item = n.items[i];
            print_item(out, item, item.template is<LAnd>() || item.template is<LOr>());
          }
        } else {
          for (std::size_t i = 0; i < n.items.size(); ++i) {
            if (i) out += " | ";
            print_item(out, n.items[i], n.items[i].template is<LOr>());
          }
        }
      },
      f.node);
}

}  // namespace

Drs parse_drs(std::string_view text) { return Parser(text).top_drs(); }
std::vector<Drs> parse_drs_list(std::string_view text) { return Parser(text).drs_list(); }
LConFormula parse_lcon(std::string_view text) { return Parser(text).top_lcon(); }

std::string print_drs(const Drs& k) {
  std::string out;
  print_into(out, k);
  return out;
}

std::string print_condition(const Condition& c) {
  std::string out;
  print_into(out, c);
  return out;
}

std::string print_lcon(const LConFormula& f) {
  std::string out;
  print_into(out, f);
  return out;
}

std::string describe_position(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace ctxdrt

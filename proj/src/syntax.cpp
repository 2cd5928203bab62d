#include "ccbl/syntax.hpp"

#include <utility>
#include <vector>

namespace ccbl {

SyntaxError::SyntaxError(std::size_t position, std::string expected)
    : std::runtime_error("syntax error at offset " + std::to_string(position) + ": expected " +
                         expected),
      position_(position),
      expected_(std::move(expected)) {}

namespace {

enum class Tok { Ident, Top, Bottom, Not, And, Or, Implies, Iff, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Top: return "'t'";
    case Tok::Bottom: return "'f'";
    case Tok::Not: return "'~'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Implies: return "'->'";
    case Tok::Iff: return "'<->'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) {
        out.push_back({Tok::End, pos_, {}});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r' || text_[pos_] == '\n'))
      ++pos_;
  }

  bool starts_with(std::string_view s) const { return text_.substr(pos_).starts_with(s); }

  Token next() {
    static const std::pair<std::string_view, Tok> symbols[] = {
        {"<->", Tok::Iff}, {"->", Tok::Implies}, {"~", Tok::Not},    {"&", Tok::And},
        {"|", Tok::Or},    {"(", Tok::LParen},   {")", Tok::RParen}, {"¬", Tok::Not},
        {"∧", Tok::And}, {"∨", Tok::Or}, {"→", Tok::Implies}, {"↔", Tok::Iff},
    };
    std::size_t start = pos_;
    for (const auto& [sym, kind] : symbols) {
      if (starts_with(sym)) {
        pos_ += sym.size();
        return {kind, start, std::string(sym)};
      }
    }
    auto ident_char = [](char c, bool first) {
      return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
             (!first && c >= '0' && c <= '9');
    };
    if (ident_char(text_[pos_], true)) {
      while (pos_ < text_.size() && ident_char(text_[pos_], false)) ++pos_;
      std::string word(text_.substr(start, pos_ - start));
      if (word == "t") return {Tok::Top, start, word};
      if (word == "f") return {Tok::Bottom, start, word};
      return {Tok::Ident, start, word};
    }
    throw SyntaxError(start, "formula symbol");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula run() {
    if (peek().kind == Tok::End) throw SyntaxError(peek().pos, "formula");
    Formula f = iff();
    expect(Tok::End);
    return f;
  }

 private:
  const Token& peek() const { return tokens_[index_]; }
  const Token& advance() { return tokens_[index_++]; }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++index_;
    return true;
  }

  void expect(Tok kind) {
    if (!accept(kind)) throw SyntaxError(peek().pos, describe(kind));
  }

  Formula iff() {
    Formula lhs = imp();
    if (accept(Tok::Iff)) return Formula::biconditional(lhs, iff());
    return lhs;
  }

  Formula imp() {
    Formula lhs = disj();
    if (accept(Tok::Implies)) return Formula::implication(lhs, imp());
    return lhs;
  }

  Formula disj() {
    Formula lhs = conj();
    while (accept(Tok::Or)) lhs = Formula::disjunction(lhs, conj());
    return lhs;
  }

  Formula conj() {
    Formula lhs = unary();
    while (accept(Tok::And)) lhs = Formula::conjunction(lhs, unary());
    return lhs;
  }

  Formula unary() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::Not:
        advance();
        return Formula::negation(unary());
      case Tok::LParen: {
        advance();
        Formula inner = iff();
        expect(Tok::RParen);
        return inner;
      }
      case Tok::Top:
        advance();
        return Formula::top();
      case Tok::Bottom:
        advance();
        return Formula::bottom();
      case Tok::Ident:
        advance();
        return Formula::var(tok.text);
      default:
        throw SyntaxError(tok.pos, "operand");
    }
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

int precedence(const Formula& f) {
  switch (f.kind()) {
    case Connective::Iff: return 1;
    case Connective::Implies: return 2;
    case Connective::Or: return 3;
    case Connective::And: return 4;
    default: return 5;
  }
}

void emit(const Formula& f, std::string& out);

void emit_operand(const Formula& f, bool parens, std::string& out) {
  if (parens) out += '(';
  emit(f, out);
  if (parens) out += ')';
}

void emit(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Connective::Top:
      out += 't';
      return;
    case Connective::Bottom:
      out += 'f';
      return;
    case Connective::Var:
      out += f.name();
      return;
    case Connective::Not:
      out += '~';
      emit_operand(f.lhs(), f.lhs().is_binary(), out);
      return;
    default:
      break;
  }
  int p = precedence(f);
  const char* op = f.kind() == Connective::And       ? " & "
                   : f.kind() == Connective::Or      ? " | "
                   : f.kind() == Connective::Implies ? " -> "
                                                     : " <-> ";
  // & and | associate to the left; -> and <-> operands of the same tier are
  // always parenthesized.
  bool left_parens = p <= 2 ? precedence(f.lhs()) <= 2 : precedence(f.lhs()) < p;
  bool right_parens = p <= 2 ? precedence(f.rhs()) <= 2 : precedence(f.rhs()) <= p;
  emit_operand(f.lhs(), left_parens, out);
  out += op;
  emit_operand(f.rhs(), right_parens, out);
}

}  // namespace

Formula parse(std::string_view text) { return Parser(Lexer(text).run()).run(); }

std::string render(const Formula& f) {
  std::string out;
  emit(f, out);
  return out;
}

}  // namespace ccbl

#include "zf/parse.hpp"

#include <cctype>

namespace zf {

namespace {

enum class Tok { number, ident, plus, minus, times, divide, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::number, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) {
        ++j;
      }
      out.push_back({Tok::ident, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::plus; break;
      case '-': kind = Tok::minus; break;
      case '*': kind = Tok::times; break;
      case '/': kind = Tok::divide; break;
      case '^': kind = Tok::caret; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({kind, std::string(1, c), i});
    ++i;
  }
  out.push_back({Tok::end, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, RingPtr ring) : toks_(std::move(toks)), ring_(std::move(ring)) {}

  MultiPoly parse() {
    MultiPoly e = expr();
    expect(Tok::end, "trailing input");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }
  void expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) throw SyntaxError("expected " + what, peek().pos);
    ++pos_;
  }

  bool starts_base(Tok k) const {
    return k == Tok::number || k == Tok::ident || k == Tok::lparen;
  }

  MultiPoly expr() {
    bool negate = false;
    if (peek().kind == Tok::minus) {
      take();
      negate = true;
    }
    MultiPoly acc = term();
    if (negate) acc = -acc;
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      bool minus = take().kind == Tok::minus;
      MultiPoly rhs = term();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (true) {
      if (peek().kind == Tok::times) {
        take();
        acc *= factor();
      } else if (starts_base(peek().kind)) {
        acc *= factor();  // juxtaposition
      } else {
        return acc;
      }
    }
  }

  MultiPoly factor() {
    MultiPoly b = base();
    if (peek().kind == Tok::caret) {
      take();
      if (peek().kind != Tok::number) throw SyntaxError("expected a natural exponent", peek().pos);
      long e = std::stol(take().text);
      return b.pow(static_cast<int>(e));
    }
    return b;
  }

  MultiPoly base() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::number: {
        Token num = take();
        Rational value(num.text, 10);
        if (peek().kind == Tok::divide) {
          take();
          if (peek().kind != Tok::number) {
            throw SyntaxError("expected a denominator", peek().pos);
          }
          Token den = take();
          Rational d(den.text, 10);
          if (d == 0) throw SyntaxError("zero denominator", den.pos);
          value /= d;
        }
        value.canonicalize();
        return MultiPoly::constant(ring_, value);
      }
      case Tok::ident: {
        Token id = take();
        int var = ring_->index_of(id.text);
        if (var >= 0) return MultiPoly::variable(ring_, var);
        if (id.text == "w" || id.text == "i" || id.text == "theta") {
          if (ring_->field->kind != FieldKind::quadratic) {
            throw FieldSymbolMismatch("'" + id.text + "' needs a quadratic coefficient field");
          }
          bool is_omega = ring_->field->b == 1 && ring_->field->c == 1;
          bool is_gauss = ring_->field->b == 0 && ring_->field->c == 1;
          if ((id.text == "w" && !is_omega) || (id.text == "i" && !is_gauss)) {
            throw FieldSymbolMismatch("'" + id.text + "' does not name this field's theta");
          }
          return MultiPoly::constant(ring_, theta(ring_->field));
        }
        throw UnknownVariable("unknown variable '" + id.text + "'");
      }
      case Tok::lparen: {
        take();
        MultiPoly inner = expr();
        expect(Tok::rparen, "')'");
        return inner;
      }
      default:
        throw SyntaxError("expected a number, variable or '('", t.pos);
    }
  }

  std::vector<Token> toks_;
  RingPtr ring_;
  size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly_expr(const std::string& text, const RingPtr& ring) {
  return Parser(tokenize(text), ring).parse();
}

}  // namespace zf

#include "asram/parse.hpp"

#include <cctype>

namespace asram {

namespace {

struct Token {
  enum Kind { number, symbol, op, end } kind;
  std::string text;
  long long value = 0;  // number tokens
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return cur_; }

  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    cur_.pos = i_;
    if (i_ >= text_.size()) {
      cur_ = Token{Token::end, "", 0, i_};
      return;
    }
    char c = text_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      long long v = 0;
      while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
        if (v > (1LL << 60)) fail(Errc::syntax_error, syntax_msg("integer literal too large", start));
        v = v * 10 + (text_[i_] - '0');
        ++i_;
      }
      cur_ = Token{Token::number, text_.substr(start, i_ - start), v, start};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[i_]))) ++i_;
      cur_ = Token{Token::symbol, text_.substr(start, i_ - start), 0, start};
      return;
    }
    if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^' || c == '(' || c == ')') {
      cur_ = Token{Token::op, std::string(1, c), 0, i_};
      ++i_;
      return;
    }
    fail(Errc::syntax_error, syntax_msg(std::string("unexpected character '") + c + "'", i_));
  }

  static std::string syntax_msg(const std::string& what, std::size_t pos) {
    return what + " at position " + std::to_string(pos);
  }

  const std::string& text_;
  std::size_t i_ = 0;
  Token cur_{Token::end, "", 0, 0};
};

class Parser {
 public:
  Parser(const Fq& f, const std::string& text, const ParseOptions& opt)
      : f_(f), lex_(text), opt_(opt) {}

  RatFunc parse() {
    RatFunc v = expr();
    const Token& t = lex_.peek();
    if (t.kind != Token::end)
      fail(Errc::syntax_error, "unexpected trailing input at position " + std::to_string(t.pos));
    return v;
  }

 private:
  bool at_op(const char* s) const {
    return lex_.peek().kind == Token::op && lex_.peek().text == s;
  }

  RatFunc expr() {
    bool neg = false;
    if (at_op("-")) {
      lex_.take();
      neg = true;
    }
    RatFunc v = term();
    if (neg) v = -v;
    while (at_op("+") || at_op("-")) {
      bool plus = lex_.take().text == "+";
      RatFunc rhs = term();
      v = plus ? v + rhs : v - rhs;
    }
    return v;
  }

  RatFunc term() {
    RatFunc v = factor();
    while (at_op("*") || at_op("/")) {
      bool mul = lex_.take().text == "*";
      RatFunc rhs = factor();
      v = mul ? v * rhs : v / rhs;
    }
    return v;
  }

  RatFunc factor() {
    RatFunc v = atom();
    if (!at_op("^")) return v;
    lex_.take();
    long long sign = 1;
    if (at_op("-")) {
      lex_.take();
      sign = -1;
    }
    Token e = lex_.take();
    if (e.kind != Token::number)
      fail(Errc::syntax_error, "exponent must be an integer at position " + std::to_string(e.pos));
    return v.pow(sign * e.value);
  }

  RatFunc atom() {
    Token t = lex_.take();
    if (t.kind == Token::number) return RatFunc::constant(f_.from_int(t.value));
    if (t.kind == Token::symbol) {
      if (t.text.size() == 1 && t.text[0] == opt_.indeterminate) return RatFunc::t(f_);
      if (t.text == "g" && opt_.allow_generator) {
        if (f_.r() < 2)
          fail(Errc::unknown_symbol, "'g' needs an extension field (r >= 2)");
        return RatFunc::constant(f_.gen());
      }
      fail(Errc::unknown_symbol,
           "unknown symbol '" + t.text + "' at position " + std::to_string(t.pos));
    }
    if (t.kind == Token::op && t.text == "(") {
      RatFunc v = expr();
      if (!at_op(")"))
        fail(Errc::syntax_error,
             "missing ')' at position " + std::to_string(lex_.peek().pos));
      lex_.take();
      return v;
    }
    fail(Errc::syntax_error, t.kind == Token::end
                                 ? "unexpected end of input"
                                 : "unexpected '" + t.text + "' at position " + std::to_string(t.pos));
  }

  const Fq& f_;
  Lexer lex_;
  ParseOptions opt_;
};

}  // namespace

RatFunc parse_expression(const Fq& f, const std::string& text, const ParseOptions& opt) {
  return Parser(f, text, opt).parse();
}

FqElem parse_field_element(const Fq& f, const std::string& text) {
  RatFunc v = parse_expression(f, text);
  if (v.den().degree() != 0 || v.num().degree() > 0)
    fail(Errc::invalid_parameter, "expression is not a constant: " + text);
  return v.num().coeff(0);
}

Place parse_place(const Fq& f, const std::string& text) {
  Lexer probe(text);
  if (probe.peek().kind == Token::symbol && probe.peek().text == "inf") {
    Lexer rest = probe;
    rest.take();
    if (rest.peek().kind == Token::end) return Place::infinity(f);
  }
  RatFunc v = parse_expression(f, text);
  if (v.den().degree() != 0)
    fail(Errc::invalid_parameter, "a finite place must be a polynomial: " + text);
  return Place::finite(v.num() * Poly::constant(f.inv(v.den().coeff(0))));
}

std::vector<int> parse_modulus_string(int p, const std::string& text) {
  Fq base(p, 1);
  ParseOptions opt;
  opt.indeterminate = 'g';
  opt.allow_generator = false;
  RatFunc v = parse_expression(base, text, opt);
  if (v.den().degree() != 0)
    fail(Errc::invalid_parameter, "modulus must be a polynomial: " + text);
  Poly num = v.num() * Poly::constant(base.inv(v.den().coeff(0)));
  std::vector<int> out;
  out.reserve(num.degree() + 1);
  for (int i = 0; i <= num.degree(); ++i) out.push_back(num.coeff(i).coeffs()[0]);
  return out;
}

}  // namespace asram

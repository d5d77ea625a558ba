#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "sextic/groups/presentation.hpp"

namespace sextic {

namespace {

struct Token {
  enum Kind { Ident, Int, Sym, Note, End } kind;
  std::string text;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '\'')) ++j;
      out.push_back({Token::Ident, s.substr(i, j - i)});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c)) || (c == '-' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
      std::size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Int, s.substr(i, j - i)});
      i = j;
    } else if (c == '{') {
      auto j = s.find('}', i);
      if (j == std::string::npos) throw std::invalid_argument("unterminated note");
      out.push_back({Token::Note, s.substr(i + 1, j - i - 1)});
      i = j + 1;
    } else if (std::string("():;,=^[]").find(c) != std::string::npos) {
      out.push_back({Token::Sym, std::string(1, c)});
      ++i;
    } else {
      throw std::invalid_argument(std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::End, ""});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, Presentation& p) : t_(std::move(toks)), p_(p) {}

  void document() {
    while (peek().kind != Token::End) {
      const Token& head = next();
      if (head.kind != Token::Ident) fail("expected 'gens' or 'rels'");
      expect(":");
      if (head.text == "gens") {
        gens();
      } else if (head.text == "rels") {
        rels();
      } else {
        fail("unknown section " + head.text);
      }
      expect(";");
    }
  }

  Word word_only() {
    Word w = expr();
    if (peek().kind != Token::End) fail("trailing input in word");
    return w;
  }

 private:
  const Token& peek() const { return t_[pos_]; }
  const Token& next() { return t_[pos_++]; }
  bool accept(const char* sym) {
    if (peek().kind == Token::Sym && peek().text == sym) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(const char* sym) {
    if (!accept(sym)) fail(std::string("expected '") + sym + "'");
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("presentation parse error: " + msg + " near token '" + peek().text + "'");
  }

  void gens() {
    if (peek().kind == Token::Sym && peek().text == ";") return;
    do {
      const Token& id = next();
      if (id.kind != Token::Ident) fail("expected generator name");
      if (p_.find(id.text)) fail("duplicate generator " + id.text);
      p_.generators.push_back(id.text);
    } while (accept(","));
  }

  void rels() {
    if (peek().kind == Token::Sym && peek().text == ";") return;
    do {
      std::vector<Word> sides{expr()};
      while (accept("=")) sides.push_back(expr());
      std::string note;
      if (peek().kind == Token::Note) note = next().text;
      if (sides.size() == 1) {
        p_.add_relator(sides[0], note);
      } else {
        for (std::size_t i = 0; i + 1 < sides.size(); ++i)
          p_.add_relator(concat(sides[i], inverse(sides[i + 1])), note);
      }
    } while (accept(","));
  }

  bool starts_factor() const {
    const Token& k = peek();
    if (k.kind == Token::Ident) return true;
    if (k.kind == Token::Int && k.text == "1") return true;
    return k.kind == Token::Sym && (k.text == "(" || k.text == "[");
  }

  Word expr() {
    Word w;
    while (starts_factor()) {
      Word f = factor();
      w.insert(w.end(), f.begin(), f.end());
    }
    return free_reduce(w);
  }

  Word factor() {
    Word base;
    if (accept("(")) {
      base = expr();
      expect(")");
    } else if (accept("[")) {
      Word a = expr();
      expect(",");
      Word b = expr();
      expect("]");
      base = commutator(a, b);
    } else if (peek().kind == Token::Int) {
      next();  // the identity "1"
    } else {
      const Token& id = next();
      int g = p_.find(id.text);
      if (!g) fail("unknown generator " + id.text);
      base = {g};
    }
    if (accept("^")) {
      const Token& e = next();
      if (e.kind != Token::Int) fail("expected exponent");
      base = power(base, std::stoi(e.text));
    }
    return base;
  }

  std::vector<Token> t_;
  Presentation& p_;
  std::size_t pos_ = 0;
};

}  // namespace

Presentation parse_presentation(const std::string& text) {
  Presentation p;
  Parser(tokenize(text), p).document();
  return p;
}

Word Presentation::parse_word(const std::string& text) const {
  Presentation copy = *this;
  return Parser(tokenize(text), copy).word_only();
}

}  // namespace sextic

#include <cctype>

#include "lat34/errors.hpp"
#include "lat34/fpgroup.hpp"

namespace lat34 {
namespace {

struct Token {
  enum Kind { kName, kInt, kSym, kEnd } kind;
  std::string text;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char ch = s[i];
    if (std::isspace(ch)) {
      ++i;
    } else if (std::isalpha(ch) || ch == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::kName, std::string(s.substr(i, j - i))});
      i = j;
    } else if (std::isdigit(ch)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::kInt, std::string(s.substr(i, j - i))});
      i = j;
    } else if (std::string_view("^*()[],=-").find(static_cast<char>(ch)) != std::string_view::npos) {
      out.push_back({Token::kSym, std::string(1, static_cast<char>(ch))});
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + static_cast<char>(ch) + "'");
    }
  }
  out.push_back({Token::kEnd, ""});
  return out;
}

class Parser {
 public:
  Parser(const Presentation& pres, std::vector<Token> tokens) : pres_(pres), toks_(std::move(tokens)) {}

  bool at_end() const { return toks_[pos_].kind == Token::kEnd; }

  bool accept(std::string_view sym) {
    if (toks_[pos_].kind == Token::kSym && toks_[pos_].text == sym) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(std::string_view sym) {
    if (!accept(sym)) throw ParseError("expected '" + std::string(sym) + "' near token " + std::to_string(pos_));
  }

  // relation := expr ('=' expr)*
  std::vector<Word> relation() {
    std::vector<Word> sides{expr()};
    while (accept("=")) sides.push_back(expr());
    if (sides.size() == 1) return sides;
    std::vector<Word> out;
    for (std::size_t i = 0; i + 1 < sides.size(); ++i) out.push_back(sides[i] * sides[i + 1].inverse());
    return out;
  }

  // expr := factor ('*' factor)*
  Word expr() {
    Word w = factor();
    while (accept("*")) w = w * factor();
    return w;
  }

  void skip_commas() {
    while (accept(",")) {
    }
  }

 private:
  // factor := atom ('^' exponent)*
  Word factor() {
    Word w = atom();
    while (accept("^")) {
      if (accept("-")) {
        w = w.power(-integer());
      } else if (toks_[pos_].kind == Token::kInt) {
        w = w.power(integer());
      } else {
        w = conjugate(w, atom());
      }
    }
    return w;
  }

  int integer() {
    if (toks_[pos_].kind != Token::kInt) throw ParseError("expected integer exponent");
    return std::stoi(toks_[pos_++].text);
  }

  Word atom() {
    const Token& t = toks_[pos_];
    if (t.kind == Token::kName) {
      int g = pres_.index_of(t.text);
      if (g < 0) throw ParseError("unknown generator '" + t.text + "'");
      ++pos_;
      return Word::generator(g);
    }
    if (t.kind == Token::kInt) {
      if (t.text != "1") throw ParseError("only 1 may appear as a bare integer");
      ++pos_;
      return Word{};
    }
    if (accept("(")) {
      Word w = expr();
      expect(")");
      return w;
    }
    if (accept("[")) {
      Word x = expr();
      expect(",");
      Word y = expr();
      expect("]");
      return commutator(x, y);
    }
    throw ParseError("unexpected token '" + t.text + "'");
  }

  const Presentation& pres_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view strip_label(std::string_view s, std::string_view label) {
  s = trim(s);
  if (s.substr(0, label.size()) != label) throw ParseError("expected '" + std::string(label) + "'");
  s.remove_prefix(label.size());
  s = trim(s);
  if (s.empty() || s.front() != ':') throw ParseError("expected ':' after " + std::string(label));
  s.remove_prefix(1);
  return s;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  std::size_t semi = text.find(';');
  std::string_view gens_part = strip_label(text.substr(0, semi), "gens");
  std::string_view rels_part = semi == std::string_view::npos ? std::string_view{} : strip_label(text.substr(semi + 1), "rels");

  std::vector<std::string> names;
  for (const Token& t : tokenize(gens_part)) {
    if (t.kind == Token::kName) {
      names.push_back(t.text);
    } else if (t.kind == Token::kSym && t.text == ",") {
      continue;
    } else if (t.kind != Token::kEnd) {
      throw ParseError("bad generator list near '" + t.text + "'");
    }
  }
  Presentation bare(names, {});
  Parser p(bare, tokenize(rels_part));
  std::vector<Word> rels;
  p.skip_commas();
  while (!p.at_end()) {
    for (Word& w : p.relation()) rels.push_back(std::move(w));
    p.skip_commas();
  }
  return Presentation(std::move(names), std::move(rels));
}

Word parse_word(const Presentation& pres, std::string_view text) {
  Parser p(pres, tokenize(text));
  Word w = p.expr();
  if (!p.at_end()) throw ParseError("trailing input in word: " + std::string(text));
  return w;
}

std::vector<Word> parse_relation(const Presentation& pres, std::string_view text) {
  Parser p(pres, tokenize(text));
  std::vector<Word> w = p.relation();
  if (!p.at_end()) throw ParseError("trailing input in relation: " + std::string(text));
  return w;
}

}  // namespace lat34

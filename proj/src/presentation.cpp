#include "cgt/presentation.hpp"

#include <cctype>
#include <map>

#include "cgt/errors.hpp"

namespace cgt {

FreeWord FreeWord::inverse() const {
  FreeWord w;
  w.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(-*it);
  return w;
}

FreeWord FreeWord::concat(const FreeWord& o) const {
  FreeWord w = *this;
  w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
  return w;
}

FreeWord FreeWord::pow(int e) const {
  FreeWord base = e < 0 ? inverse() : *this;
  int k = e < 0 ? -e : e;
  FreeWord w;
  for (int i = 0; i < k; ++i) w = w.concat(base);
  return w;
}

FreeWord FreeWord::reduced() const {
  FreeWord w;
  for (int l : letters) {
    if (!w.letters.empty() && w.letters.back() == -l)
      w.letters.pop_back();
    else
      w.letters.push_back(l);
  }
  return w;
}

int evaluate_word(const FreeWord& w, const std::vector<int>& images, const FiniteGroup& g) {
  int x = FiniteGroup::kIdentity;
  for (int l : w.letters) {
    int idx = (l > 0 ? l : -l) - 1;
    if (idx >= static_cast<int>(images.size()))
      throw validation_error("word references generator " + std::to_string(idx) +
                             " beyond image list");
    int img = images[idx];
    if (img < 0 || img >= g.order()) throw validation_error("generator image out of range");
    x = g.mul(x, l > 0 ? img : g.inv(img));
  }
  return x;
}

namespace {

struct Token {
  enum Kind { kLAngle, kRAngle, kPipe, kComma, kLParen, kRParen, kCaret, kEquals, kName, kInt, kEnd };
  Kind kind;
  std::string text;
  long long value = 0;
  int line, col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  Token next() {
    skip_ws();
    int line = line_, col = col_;
    if (pos_ >= s_.size()) return {Token::kEnd, "", 0, line, col};
    char c = s_[pos_];
    auto simple = [&](Token::Kind k) {
      advance();
      return Token{k, std::string(1, c), 0, line, col};
    };
    switch (c) {
      case '<': return simple(Token::kLAngle);
      case '>': return simple(Token::kRAngle);
      case '|': return simple(Token::kPipe);
      case ',': return simple(Token::kComma);
      case '(': return simple(Token::kLParen);
      case ')': return simple(Token::kRParen);
      case '^': return simple(Token::kCaret);
      case '=': return simple(Token::kEquals);
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        name += s_[pos_];
        advance();
      }
      return {Token::kName, name, 0, line, col};
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      if (c == '-') {
        num += c;
        advance();
      }
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        throw parse_error("expected digits after '-'", line, col);
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        num += s_[pos_];
        advance();
      }
      Token t{Token::kInt, num, 0, line, col};
      t.value = std::stoll(num);
      return t;
    }
    throw parse_error(std::string("unexpected character '") + c + "'", line, col);
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) advance();
  }
  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  const std::string& s_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

class Parser {
 public:
  explicit Parser(const std::string& s) : lex_(s) { shift(); }

  FreeWord run_word(const std::vector<std::string>& names) {
    for (size_t i = 0; i < names.size(); ++i) index_[names[i]] = static_cast<int>(i);
    FreeWord w = word();
    if (cur_.kind != Token::kEnd)
      throw parse_error("trailing input after word", cur_.line, cur_.col);
    return w;
  }

  Presentation run() {
    expect(Token::kLAngle, "'<'");
    Presentation p;
    if (cur_.kind == Token::kPipe)
      throw parse_error("empty generator list", cur_.line, cur_.col);
    for (;;) {
      Token t = expect(Token::kName, "generator name");
      if (index_.count(t.text))
        throw parse_error("duplicate generator '" + t.text + "'", t.line, t.col);
      index_[t.text] = static_cast<int>(p.generator_names.size());
      p.generator_names.push_back(t.text);
      if (cur_.kind == Token::kComma) {
        shift();
        continue;
      }
      break;
    }
    expect(Token::kPipe, "'|'");
    if (cur_.kind != Token::kRAngle) {
      for (;;) {
        p.relators.push_back(relator());
        if (cur_.kind == Token::kComma) {
          shift();
          continue;
        }
        break;
      }
    }
    expect(Token::kRAngle, "'>'");
    if (cur_.kind != Token::kEnd)
      throw parse_error("trailing input after '>'", cur_.line, cur_.col);
    return p;
  }

 private:
  FreeWord relator() {
    FreeWord w = word();
    if (cur_.kind == Token::kEquals) {
      shift();
      FreeWord rhs = word();
      w = w.concat(rhs.inverse());
    }
    if (cur_.kind == Token::kEquals)
      throw parse_error("chained '=' is not allowed", cur_.line, cur_.col);
    return w;
  }

  FreeWord word() {
    FreeWord w;
    bool any = false;
    while (cur_.kind == Token::kName || cur_.kind == Token::kLParen) {
      w = w.concat(term());
      any = true;
    }
    if (!any) throw parse_error("expected a word", cur_.line, cur_.col);
    return w;
  }

  FreeWord term() {
    FreeWord atom;
    if (cur_.kind == Token::kName) {
      auto it = index_.find(cur_.text);
      if (it == index_.end())
        throw parse_error("undeclared generator '" + cur_.text + "'", cur_.line, cur_.col);
      atom = FreeWord::generator(it->second);
      shift();
    } else if (cur_.kind == Token::kLParen) {
      shift();
      atom = word();
      expect(Token::kRParen, "')'");
    } else {
      throw parse_error("expected generator or '('", cur_.line, cur_.col);
    }
    if (cur_.kind == Token::kCaret) {
      shift();
      Token e = expect(Token::kInt, "integer exponent");
      if (e.value > 1024 || e.value < -1024)
        throw parse_error("exponent out of range", e.line, e.col);
      atom = atom.pow(static_cast<int>(e.value));
    }
    return atom;
  }

  Token expect(Token::Kind k, const std::string& what) {
    if (cur_.kind != k)
      throw parse_error("expected " + what, cur_.line, cur_.col);
    Token t = cur_;
    shift();
    return t;
  }
  void shift() { cur_ = lex_.next(); }

  Lexer lex_;
  Token cur_;
  std::map<std::string, int> index_;
};

}  // namespace

Presentation parse_presentation(const std::string& text) { return Parser(text).run(); }

FreeWord parse_word(const std::string& text, const std::vector<std::string>& names) {
  return Parser(text).run_word(names);
}

std::string presentation_text(const Presentation& p) {
  std::string s = "<";
  for (size_t i = 0; i < p.generator_names.size(); ++i) {
    if (i) s += ", ";
    s += p.generator_names[i];
  }
  s += " | ";
  std::vector<const FreeWord*> rels;
  for (const auto& r : p.relators)
    if (!r.letters.empty()) rels.push_back(&r);
  for (size_t r = 0; r < rels.size(); ++r) {
    if (r) s += ", ";
    const auto& letters = rels[r]->letters;
    size_t i = 0;
    bool first = true;
    while (i < letters.size()) {
      size_t j = i;
      while (j < letters.size() && letters[j] == letters[i]) ++j;
      int idx = (letters[i] > 0 ? letters[i] : -letters[i]) - 1;
      long long e = static_cast<long long>(j - i) * (letters[i] > 0 ? 1 : -1);
      if (!first) s += " ";
      s += p.generator_names[idx];
      if (e != 1) s += "^" + std::to_string(e);
      first = false;
      i = j;
    }
  }
  s += ">";
  return s;
}

}  // namespace cgt

#include "degloci/parse.hpp"

#include <algorithm>
#include <cctype>

#include "degloci/errors.hpp"

namespace degloci {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Poly parse() {
    Poly lhs = expr();
    skip_ws();
    if (peek() == '=') {
      ++pos_;
      Poly rhs = expr();
      lhs -= rhs;
    }
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return lhs;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = factor();
    while (peek() == '*') {
      ++pos_;
      acc *= factor();
    }
    return acc;
  }

  Poly factor() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '+') {
      ++pos_;
      return factor();
    }
    bool laurent_base = false;
    Poly base = primary(laurent_base);
    if (peek() == '^') {
      ++pos_;
      bool negative = false;
      bool paren = false;
      if (peek() == '(') {
        paren = true;
        ++pos_;
      }
      if (peek() == '-') {
        negative = true;
        ++pos_;
      }
      long e = integer();
      if (paren) {
        if (peek() != ')') fail("expected ')'");
        ++pos_;
      }
      if (negative) {
        if (!laurent_base) fail("negative exponent on a non-Laurent expression");
        Monomial m(ring_->width());
        m[ring_->laurent_slot()] = static_cast<int>(-e);
        return Poly::term(ring_, m, 1);
      }
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  long integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 6) fail("exponent too large");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  Poly primary(bool& laurent_base) {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::size_t save = pos_;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_ws();
        std::size_t dstart = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (dstart == pos_) fail("expected denominator");
        std::string lit = std::string(text_.substr(start, save - start)) + "/" +
                          std::string(text_.substr(dstart, pos_ - dstart));
        return Poly::constant(ring_, parse_rational(lit));
      }
      pos_ = save;
      return Poly::constant(ring_, parse_rational(text_.substr(start, save - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      auto slot = ring_->index_of(name);
      if (!slot) throw UndeclaredVariable(name);
      laurent_base = ring_->has_laurent() && *slot == ring_->laurent_slot();
      Monomial m(ring_->width());
      m[*slot] = 1;
      return Poly::term(ring_, m, 1);
    }
    fail(c == '\0' ? "unexpected end of input" : "unexpected character");
  }

  std::string_view text_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const RingPtr& ring) { return Parser(text, ring).parse(); }

std::vector<std::string> collect_identifiers(const std::vector<std::string>& texts) {
  std::vector<std::string> out;
  for (const auto& s : texts) {
    std::size_t i = 0;
    while (i < s.size()) {
      auto c = static_cast<unsigned char>(s[i]);
      if (std::isalpha(c) || c == '_') {
        std::size_t start = i;
        while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
        std::string name = s.substr(start, i - start);
        if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
      } else if (std::isdigit(c)) {
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      } else {
        ++i;
      }
    }
  }
  return out;
}

}  // namespace degloci

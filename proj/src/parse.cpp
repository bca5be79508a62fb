#include "nadyn/parse.hpp"

#include <cctype>
#include <map>
#include <string>

#include "nadyn/error.hpp"

namespace nadyn {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RationalPoly parse() {
    std::map<std::size_t, Rational> terms;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      advance();
    }
    for (;;) {
      auto [coeff, exponent] = term();
      terms[exponent] += negative ? Rational(-coeff) : coeff;
      skip_space();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail(std::string("unexpected '") + peek() + "'");
      negative = peek() == '-';
      advance();
    }
    std::size_t degree = terms.empty() ? 0 : terms.rbegin()->first;
    std::vector<Rational> coeffs(degree + 1);
    for (auto& [e, c] : terms) coeffs[e] += c;
    return RationalPoly(std::move(coeffs));
  }

 private:
  std::pair<Rational, std::size_t> term() {
    skip_space();
    if (at_end()) fail("expected a term");
    if (is_var(peek())) return {Rational(1), var()};
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(std::string("unexpected '") + peek() + "'");
    Rational coeff(digits());
    skip_space();
    if (!at_end() && peek() == '/') {
      advance();
      skip_space();
      const std::size_t where = pos_;
      if (at_end() || peek() == '-') fail("expected a natural denominator");
      Integer den = digits();
      if (den == 0) fail_at("zero denominator", where);
      coeff /= den;
      skip_space();
    }
    if (!at_end() && peek() == '*') {
      advance();
      skip_space();
      if (at_end() || !is_var(peek())) fail("expected 'X' after '*'");
    }
    if (!at_end() && is_var(peek())) return {coeff, var()};
    return {coeff, 0};
  }

  std::size_t var() {
    advance();  // X
    skip_space();
    if (at_end() || peek() != '^') return 1;
    advance();
    skip_space();
    if (!at_end() && peek() == '-') fail("negative exponents are not allowed");
    const std::size_t where = pos_;
    const Integer e = digits();
    if (e > Integer(static_cast<unsigned long>(kDefaultDegreeCap))) fail_at("exponent exceeds the degree cap", where);
    return e.get_ui();
  }

  Integer digits() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) advance();
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  static bool is_var(char c) { return c == 'X' || c == 'x'; }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void advance() { ++pos_; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }
  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }
  [[noreturn]] static void fail_at(const std::string& msg, std::size_t where) { throw ParseError(msg, where); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalPoly parse_polynomial(std::string_view text) { return Parser(text).parse(); }

}  // namespace nadyn

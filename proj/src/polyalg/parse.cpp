#include "thermoid/polyalg/parse.hpp"

#include <cctype>
#include <sstream>
#include <string>

#include "thermoid/error.hpp"

namespace thermoid::polyalg {
namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const VariableSet& vars) : text_(text), vars_(vars) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    Polynomial p = sum();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_ + 1); }

  bool starts_factor() const {
    char c = peek();
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  Polynomial sum() {
    skip_space();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    Polynomial acc = product();
    if (negate) acc = -acc;
    for (;;) {
      skip_space();
      char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      Polynomial rhs = product();
      if (c == '+') acc += rhs; else acc -= rhs;
    }
  }

  Polynomial product() {
    Polynomial acc = power();
    for (;;) {
      skip_space();
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= power();
      } else if (c == '/') {
        ++pos_;
        std::size_t at = pos_;
        Polynomial d = power();
        if (!d.is_constant() || d.is_zero()) {
          pos_ = at;
          fail("division only by a nonzero constant");
        }
        acc = acc.scaled(1 / d.constant_term());
      } else if (starts_factor()) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  Polynomial power() {
    Polynomial base = primary();
    skip_space();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an unsigned integer exponent");
    unsigned long e = integer_digits().get_ui();
    Polynomial out = Polynomial::constant(vars_, 1);
    for (unsigned long i = 0; i < e; ++i) out *= base;
    return out;
  }

  Integer integer_digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '.' || peek() == 'e' || peek() == 'E') fail("floating-point literals are not allowed");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial primary() {
    skip_space();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = sum();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(vars_, Rational(integer_digits()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      auto index = vars_.index_of(name);
      if (!index) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return Polynomial::variable(vars_, *index);
    }
    if (at_end()) fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const VariableSet& vars_;
  std::size_t pos_ = 0;
};

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  std::string s = hash == std::string::npos ? line : line.substr(0, hash);
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const VariableSet& vars) {
  return PolyParser(text, vars).parse();
}

RelationFile read_relation_file(std::istream& in) {
  RelationFile file;
  bool have_vars = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = strip_comment(line);
    if (body.empty()) continue;
    if (body.rfind("vars:", 0) == 0) {
      if (have_vars) throw ParseError("line " + std::to_string(line_no) + ": duplicate vars header", 1);
      std::istringstream names(body.substr(5));
      std::vector<std::string> list;
      for (std::string n; names >> n;) list.push_back(n);
      file.vars = VariableSet(std::move(list));
      have_vars = true;
      continue;
    }
    if (!have_vars)
      throw ParseError("line " + std::to_string(line_no) + ": relation before the 'vars:' header", 1);
    try {
      file.relations.push_back(parse_polynomial(body, file.vars));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), e.position());
    }
  }
  if (!have_vars) throw ParseError("missing 'vars:' header", 1);
  return file;
}

}  // namespace thermoid::polyalg

#include <cctype>
#include <string>
#include <vector>

#include "thermoid/cli/expression.hpp"
#include "thermoid/error.hpp"

namespace thermoid::cli {
namespace {

using derivcalc::QuantityCode;

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  Expression parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    Expression e = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return e;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }
  [[noreturn]] static void fail_at(std::size_t pos, const std::string& message) {
    throw ParseError(message, pos + 1);
  }
  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Expression expr() {
    Expression acc = term();
    for (;;) {
      skip_space();
      char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      Expression rhs = term();
      acc = Expression::binary(c == '+' ? BinaryOp::add : BinaryOp::sub, std::move(acc), std::move(rhs));
    }
  }

  Expression term() {
    Expression acc = factor();
    for (;;) {
      skip_space();
      char c = peek();
      if (c != '*' && c != '/') return acc;
      ++pos_;
      Expression rhs = factor();
      acc = Expression::binary(c == '*' ? BinaryOp::mul : BinaryOp::div, std::move(acc), std::move(rhs));
    }
  }

  Expression factor() {
    skip_space();
    if (peek() == '-') {
      ++pos_;
      return Expression::negate(factor());
    }
    Expression b = base();
    skip_space();
    if (peek() != '^') return b;
    ++pos_;
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an unsigned integer exponent");
    std::size_t start = pos_;
    std::string digits = integer_digits();
    if (digits.size() > 6) fail_at(start, "exponent too large");
    return Expression::power(std::move(b), static_cast<unsigned>(std::stoul(digits)));
  }

  std::string integer_digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '.' || peek() == 'e' || peek() == 'E')
      fail("floating-point literals are not allowed; use integer fractions like 5/3");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Expression base() {
    skip_space();
    const std::size_t start = pos_;
    char c = peek();
    if (at_end()) fail("unexpected end of input");
    if (c == '(') {
      ++pos_;
      Expression inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return Expression::literal(polyalg::Rational(polyalg::Integer(integer_digits())));
    if (!std::isalpha(static_cast<unsigned char>(c))) fail(std::string("unexpected '") + c + "'");

    std::string name = identifier();
    skip_space();
    if (peek() == '(' && (name == "D" || name == "J" || name == "DD")) {
      ++pos_;
      return coded(name, start);
    }
    if (auto p = ratfun::primitive_from_name(name)) return Expression::symbol(*p);
    if (name == "p") return Expression::symbol(ratfun::Primitive::X);
    if (name == "V") return Expression::symbol(ratfun::Primitive::Y);
    if (name == "T") return Expression::symbol(ratfun::Primitive::F);
    if (name == "S") return Expression::symbol(ratfun::Primitive::G);
    if (name == "cv") return Expression::named(NamedQuantity::cv);
    if (name == "cp") return Expression::named(NamedQuantity::cp);
    if (name == "gamma") return Expression::named(NamedQuantity::gamma);
    if (name == "cp_minus_cv") return Expression::named(NamedQuantity::cp_minus_cv);
    if (auto q = derivcalc::quantity_from_text(name); q && q->is_energy())
      return Expression::energy_value(*q);
    fail_at(start, "unknown symbol '" + name + "'");
  }

  struct Index {
    QuantityCode code;
    std::size_t pos;
  };

  Index index() {
    skip_space();
    std::size_t start = pos_;
    std::string token = std::isdigit(static_cast<unsigned char>(peek())) ? integer_digits() : identifier();
    if (token.empty()) fail("expected a quantity index");
    auto q = derivcalc::quantity_from_text(token);
    if (!q) fail_at(start, "invalid quantity index '" + token + "'");
    return Index{*q, start};
  }

  void require_distinct(const Index& a, const Index& b, const char* what) {
    if (a.code == b.code) fail_at(b.pos, std::string("coordinates must be distinct in ") + what);
  }

  Expression coded(const std::string& head, std::size_t) {
    std::vector<Index> ids;
    auto list = [&](std::size_t n) {
      for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) expect(',');
        ids.push_back(index());
      }
    };
    if (head == "D") {
      list(3);
      expect(')');
      require_distinct(ids[1], ids[2], "D(a,b,c)");
      return Expression::deriv(derivcalc::DerivTriple{ids[0].code, ids[1].code, ids[2].code});
    }
    if (head == "J") {
      list(2);
      expect(';');
      list(2);
      expect(')');
      require_distinct(ids[2], ids[3], "J(a,b;c,d)");
      return Expression::jacobian(derivcalc::JacobianSpec{ids[0].code, ids[1].code, ids[2].code, ids[3].code});
    }
    list(3);
    expect(';');
    list(2);
    expect(')');
    require_distinct(ids[1], ids[2], "DD(a,b,c;d,e)");
    require_distinct(ids[3], ids[4], "DD(a,b,c;d,e)");
    return Expression::second(derivcalc::SecondDerivSpec{
        derivcalc::DerivTriple{ids[0].code, ids[1].code, ids[2].code}, ids[3].code, ids[4].code});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression parse_expression(std::string_view text) { return ExpressionParser(text).parse(); }

}  // namespace thermoid::cli

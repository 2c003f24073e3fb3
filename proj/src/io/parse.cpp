#include "idcert/io/parse.hpp"

#include <cctype>

#include "idcert/errors.hpp"

namespace idcert {

namespace {

constexpr unsigned kMaxExponent = 4096;

using Poly = MPoly<RationalField>;

class Parser {
 public:
  Parser(std::string_view text, const TensorSpace& space) : text_(text), space_(space) {}

  Poly parse() {
    skip();
    if (pos_ == text_.size()) fail("empty expression");
    Poly p = expr();
    skip();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc = term();
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  Poly term() {
    Poly acc = unary();
    while (true) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        Poly d = unary();
        if (d.is_zero()) throw ParseError(at, "division by zero");
        if (d.size() != 1 || !d.leading().monomial.is_one())
          throw ParseError(at, "division by a non-constant");
        acc = acc.scaled(inverse(d.leading().coeff));
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (!accept('^')) return base;
    skip();
    const std::size_t at = pos_;
    const mpz_class e = integer();
    if (e > kMaxExponent) throw ParseError(at, "exponent too large");
    return base.pow(static_cast<unsigned>(e.get_ui()));
  }

  mpz_class integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Poly atom() {
    skip();
    if (pos_ == text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Poly::constant(RationalField{}, mpq_class(integer()));
    }
    if (c == 'x') return variable();
    fail(std::string("unexpected '") + c + "'");
  }

  Poly variable() {
    const std::size_t start = pos_;
    ++pos_;  // 'x'
    auto number = [&]() -> unsigned long {
      const std::size_t s = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (s == pos_ || pos_ - s > 6) throw ParseError(start, "malformed variable name");
      return std::stoul(std::string(text_.substr(s, pos_ - s)));
    };
    const unsigned long group = number();
    if (pos_ >= text_.size() || text_[pos_] != '_') throw ParseError(start, "malformed variable name");
    ++pos_;
    const unsigned long index = number();
    const std::string name(text_.substr(start, pos_ - start));
    if (group < 1 || group > space_.factor_count() || index >= space_.group_sizes()[group - 1]) {
      throw ParseError(start, "unknown variable '" + name + "'");
    }
    return Poly::variable(RationalField{}, space_.group_offset(group - 1) + index);
  }

  std::string_view text_;
  const TensorSpace& space_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly<RationalField> parse_polynomial_raw(std::string_view text, const TensorSpace& space) {
  return Parser(text, space).parse();
}

MPoly<RationalField> parse_polynomial(std::string_view text, const TensorSpace& space) {
  Poly p = parse_polynomial_raw(text, space);
  for (const auto& t : p.terms()) {
    const Multidegree deg = space.multidegree_of(t.monomial);
    if (deg != space.degrees()) {
      throw DomainError("not multihomogeneous: monomial " + format_monomial(t.monomial, space) +
                        " has multidegree " + format_multidegree(deg) + ", expected " +
                        format_multidegree(space.degrees()));
    }
  }
  return p;
}

mpq_class parse_rational(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  const std::string s(text.substr(b, e - b));
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  const std::size_t digits = i;
  bool slash = false;
  for (; i < s.size(); ++i) {
    if (s[i] == '/' && !slash && i > digits && i + 1 < s.size()) {
      slash = true;
    } else if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw ParseError(b + i, "malformed number '" + s + "'");
    }
  }
  if (digits == s.size()) throw ParseError(b, "expected a number");
  mpq_class q(s[0] == '+' ? s.substr(1) : s, 10);
  if (q.get_den() == 0) throw ParseError(b, "zero denominator");
  q.canonicalize();
  return q;
}

}  // namespace idcert

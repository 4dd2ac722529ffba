#include "valext/poly_io.hpp"

#include <cctype>
#include <sstream>

namespace valext {

namespace {

// Recursive-descent parser over the expression grammar
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := primary ['^' integer]
//   primary:= integer | 'x' | 't' | '(' expr ')'
// evaluated directly into a BasePoly. Division is restricted to constant
// divisors; 't' is valid only over F_p(t).
class Parser {
 public:
  Parser(const std::string& text, const BaseValuation& v) : s_(text), v_(v) {}

  BasePoly run() {
    skip_ws();
    BasePoly r = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
    return r;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  BasePoly expr() {
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    BasePoly acc = term();
    if (neg) acc = poly_scale(acc, -v_.one());
    while (true) {
      if (eat('+')) {
        acc = acc + term();
      } else if (eat('-')) {
        acc = acc - term();
      } else {
        break;
      }
    }
    return acc;
  }

  BasePoly term() {
    BasePoly acc = factor();
    while (true) {
      if (eat('*')) {
        acc = acc * factor();
      } else if (eat('/')) {
        std::size_t at = pos_;
        BasePoly d = factor();
        if (d.degree() > 0) throw ParseError("division by a non-constant expression", at);
        if (d.is_zero()) throw ParseError("division by zero", at);
        acc = poly_scale(acc, v_.one() / d.c[0]);
      } else {
        break;
      }
    }
    return acc;
  }

  BasePoly factor() {
    BasePoly base = primary();
    if (eat('^')) {
      skip_ws();
      std::size_t at = pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        throw ParseError("expected integer exponent", at);
      long e = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        e = e * 10 + (s_[pos_] - '0');
        if (e > 4096) throw ParseError("exponent too large", at);
        ++pos_;
      }
      return poly_pow(base, static_cast<int>(e));
    }
    return base;
  }

  BasePoly primary() {
    skip_ws();
    std::size_t at = pos_;
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", at);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      BasePoly r = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return r;
    }
    if (c == 'x') {
      ++pos_;
      BasePoly r;
      r.c = {v_.zero(), v_.one()};
      return r;
    }
    if (c == 't') {
      if (v_.kind() != BaseKind::TAdic)
        throw ParseError("'t' is only valid over the rational function field base", at);
      ++pos_;
      BasePoly r;
      r.c = {v_.uniformizer()};
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int n = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        n = n * 10 + (s_[pos_] - '0');
        ++pos_;
      }
      BasePoly r;
      r.c = {make_const(n)};
      r.strip();
      return r;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", at);
  }

  BaseElem make_const(const Int& n) const {
    if (v_.kind() == BaseKind::PAdic) return BaseElem(Rat(n));
    Int m = n % Int(v_.p());
    return BaseElem(RatFunc{FpPoly::constant(v_.p(), m.convert_to<std::uint64_t>()),
                            FpPoly::constant(v_.p(), 1)});
  }

  const std::string& s_;
  const BaseValuation& v_;
  std::size_t pos_ = 0;
};

std::string rational_coeff_str(const Rat& r) { return rat_to_string(r); }

}  // namespace

BasePoly parse_poly(const std::string& text, const BaseValuation& v) {
  return Parser(text, v).run();
}

std::string print_poly(const BaseValuation& v, const BasePoly& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = f.c.size(); i-- > 0;) {
    const BaseElem& a = f.c[i];
    if (a.is_zero()) continue;
    if (v.kind() == BaseKind::PAdic) {
      Rat r = a.rat();
      bool negative = r < 0;
      if (first) {
        if (negative) os << "-";
      } else {
        os << (negative ? " - " : " + ");
      }
      Rat mag = negative ? -r : r;
      bool coeff_one = mag == 1;
      if (i == 0 || !coeff_one) os << rational_coeff_str(mag);
      if (i > 0) {
        if (!coeff_one) os << "*";
        os << var;
        if (i > 1) os << "^" << i;
      }
    } else {
      if (!first) os << " + ";
      const RatFunc& rf = a.rat_func();
      bool unit_den = rf.den == FpPoly::constant(v.p(), 1);
      std::string num = fp_poly_str(rf.num);
      bool composite = num.find('+') != std::string::npos;
      std::string cs;
      if (unit_den)
        cs = composite ? "(" + num + ")" : num;
      else
        cs = "(" + num + ")/(" + fp_poly_str(rf.den) + ")";
      bool coeff_one = cs == "1";
      if (i == 0 || !coeff_one) os << cs;
      if (i > 0) {
        if (!coeff_one) os << "*";
        os << var;
        if (i > 1) os << "^" << i;
      }
    }
    first = false;
  }
  return os.str();
}

}  // namespace valext

#include "valext/base_field.hpp"

#include "valext/errors.hpp"
#include "valext/fp.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace valext {

// ---------------------------------------------------------------------------
// FpPoly
// ---------------------------------------------------------------------------

namespace {
void strip(std::vector<std::uint64_t>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}
}  // namespace

int FpPoly::t_order() const {
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) return static_cast<int>(i);
  return -1;
}

FpPoly FpPoly::constant(std::uint64_t p, std::uint64_t v) {
  FpPoly f{p, {v % p}};
  strip(f.c);
  return f;
}

bool operator==(const FpPoly& a, const FpPoly& b) { return a.p == b.p && a.c == b.c; }

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  assert(a.p == b.p);
  FpPoly r{a.p, {}};
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    std::uint64_t x = i < a.c.size() ? a.c[i] : 0;
    std::uint64_t y = i < b.c.size() ? b.c[i] : 0;
    r.c[i] = fp::add(x, y, a.p);
  }
  strip(r.c);
  return r;
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
  assert(a.p == b.p);
  FpPoly r{a.p, {}};
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    std::uint64_t x = i < a.c.size() ? a.c[i] : 0;
    std::uint64_t y = i < b.c.size() ? b.c[i] : 0;
    r.c[i] = fp::sub(x, y, a.p);
  }
  strip(r.c);
  return r;
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  assert(a.p == b.p);
  FpPoly r{a.p, {}};
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = fp::add(r.c[i + j], fp::mul(a.c[i], b.c[j], a.p), a.p);
  strip(r.c);
  return r;
}

std::pair<FpPoly, FpPoly> fp_poly_divmod(const FpPoly& a, const FpPoly& b) {
  assert(a.p == b.p);
  if (b.is_zero()) throw std::domain_error("fp_poly_divmod: division by zero");
  FpPoly q{a.p, {}}, r = a;
  std::uint64_t lead_inv = fp::inv(b.c.back(), a.p);
  int db = b.degree();
  while (!r.is_zero() && r.degree() >= db) {
    int k = r.degree() - db;
    std::uint64_t coef = fp::mul(r.c.back(), lead_inv, a.p);
    if (static_cast<int>(q.c.size()) < k + 1) q.c.resize(static_cast<std::size_t>(k) + 1, 0);
    q.c[static_cast<std::size_t>(k)] = fp::add(q.c[static_cast<std::size_t>(k)], coef, a.p);
    for (int i = 0; i <= db; ++i) {
      auto idx = static_cast<std::size_t>(k + i);
      r.c[idx] = fp::sub(r.c[idx], fp::mul(coef, b.c[static_cast<std::size_t>(i)], a.p), a.p);
    }
    strip(r.c);
  }
  strip(q.c);
  return {q, r};
}

FpPoly fp_poly_gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = fp_poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return fp_poly_monic(a);
}

FpPoly fp_poly_monic(const FpPoly& a) {
  if (a.is_zero()) return a;
  std::uint64_t inv = fp::inv(a.c.back(), a.p);
  FpPoly r = a;
  for (auto& x : r.c) x = fp::mul(x, inv, a.p);
  return r;
}

std::string fp_poly_str(const FpPoly& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = a.c.size(); i-- > 0;) {
    if (a.c[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || a.c[i] != 1) os << a.c[i];
    if (i > 0) {
      if (a.c[i] != 1) os << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// RatFunc
// ---------------------------------------------------------------------------

void RatFunc::reduce() {
  if (num.is_zero()) {
    den = FpPoly::constant(num.p, 1);
    return;
  }
  FpPoly g = fp_poly_gcd(num, den);
  if (g.degree() > 0) {
    num = fp_poly_divmod(num, g).first;
    den = fp_poly_divmod(den, g).first;
  }
  std::uint64_t inv = fp::inv(den.c.back(), den.p);
  for (auto& x : den.c) x = fp::mul(x, inv, den.p);
  for (auto& x : num.c) x = fp::mul(x, inv, num.p);
}

bool operator==(const RatFunc& a, const RatFunc& b) { return a.num == b.num && a.den == b.den; }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  RatFunc r{a.num * b.den + b.num * a.den, a.den * b.den};
  r.reduce();
  return r;
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  RatFunc r{a.num * b.den - b.num * a.den, a.den * b.den};
  r.reduce();
  return r;
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  RatFunc r{a.num * b.num, a.den * b.den};
  r.reduce();
  return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
  RatFunc r{a.num * b.den, a.den * b.num};
  r.reduce();
  return r;
}

RatFunc rat_func_neg(const RatFunc& a) {
  RatFunc r{FpPoly::zero(a.num.p) - a.num, a.den};
  return r;
}

// ---------------------------------------------------------------------------
// BaseElem
// ---------------------------------------------------------------------------

bool BaseElem::is_zero() const {
  return is_rational() ? rat() == 0 : rat_func().is_zero();
}

BaseElem operator+(const BaseElem& a, const BaseElem& b) {
  if (a.is_rational()) return BaseElem(a.rat() + b.rat());
  return BaseElem(a.rat_func() + b.rat_func());
}

BaseElem operator-(const BaseElem& a, const BaseElem& b) {
  if (a.is_rational()) return BaseElem(a.rat() - b.rat());
  return BaseElem(a.rat_func() - b.rat_func());
}

BaseElem operator*(const BaseElem& a, const BaseElem& b) {
  if (a.is_rational()) return BaseElem(a.rat() * b.rat());
  return BaseElem(a.rat_func() * b.rat_func());
}

BaseElem operator/(const BaseElem& a, const BaseElem& b) {
  if (b.is_zero()) throw std::domain_error("BaseElem: division by zero");
  if (a.is_rational()) return BaseElem(a.rat() / b.rat());
  return BaseElem(a.rat_func() / b.rat_func());
}

BaseElem BaseElem::operator-() const {
  if (is_rational()) return BaseElem(-rat());
  return BaseElem(rat_func_neg(rat_func()));
}

// ---------------------------------------------------------------------------
// BasePoly
// ---------------------------------------------------------------------------

void BasePoly::strip() {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

bool operator==(const BasePoly& a, const BasePoly& b) { return a.c == b.c; }

BasePoly operator+(const BasePoly& a, const BasePoly& b) {
  BasePoly r;
  std::size_t n = std::max(a.c.size(), b.c.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= a.c.size())
      r.c.push_back(b.c[i]);
    else if (i >= b.c.size())
      r.c.push_back(a.c[i]);
    else
      r.c.push_back(a.c[i] + b.c[i]);
  }
  r.strip();
  return r;
}

BasePoly operator-(const BasePoly& a, const BasePoly& b) {
  BasePoly r;
  std::size_t n = std::max(a.c.size(), b.c.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= a.c.size())
      r.c.push_back(-b.c[i]);
    else if (i >= b.c.size())
      r.c.push_back(a.c[i]);
    else
      r.c.push_back(a.c[i] - b.c[i]);
  }
  r.strip();
  return r;
}

BasePoly operator*(const BasePoly& a, const BasePoly& b) {
  BasePoly r;
  if (a.is_zero() || b.is_zero()) return r;
  BaseElem z = a.c[0] - a.c[0];
  r.c.assign(a.c.size() + b.c.size() - 1, z);
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
  r.strip();
  return r;
}

BasePoly poly_scale(const BasePoly& a, const BaseElem& s) {
  BasePoly r;
  if (s.is_zero()) return r;
  r.c.reserve(a.c.size());
  for (const auto& x : a.c) r.c.push_back(x * s);
  r.strip();
  return r;
}

std::pair<BasePoly, BasePoly> poly_divmod(const BasePoly& a, const BasePoly& b) {
  if (b.is_zero()) throw std::domain_error("poly_divmod: division by zero polynomial");
  BasePoly q, r = a;
  if (a.is_zero()) return {q, r};
  BaseElem z = a.c[0] - a.c[0];
  int db = b.degree();
  while (!r.is_zero() && r.degree() >= db) {
    int k = r.degree() - db;
    BaseElem coef = r.leading() / b.leading();
    if (static_cast<int>(q.c.size()) < k + 1) q.c.resize(static_cast<std::size_t>(k) + 1, z);
    q.c[static_cast<std::size_t>(k)] = q.c[static_cast<std::size_t>(k)] + coef;
    for (int i = 0; i <= db; ++i) {
      auto idx = static_cast<std::size_t>(k + i);
      r.c[idx] = r.c[idx] - coef * b.c[static_cast<std::size_t>(i)];
    }
    r.strip();
  }
  q.strip();
  return {q, r};
}

BasePoly poly_derivative(const BasePoly& a) {
  BasePoly r;
  for (std::size_t i = 1; i < a.c.size(); ++i) {
    // i * a_i by repeated addition so the coefficient vanishes mod p when it should
    BaseElem k = a.c[i];
    BaseElem acc = k - k;
    for (std::size_t j = 0; j < i; ++j) acc = acc + k;
    r.c.push_back(acc);
  }
  r.strip();
  return r;
}

BasePoly poly_gcd(BasePoly a, BasePoly b) {
  while (!b.is_zero()) {
    BasePoly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a = poly_scale(a, (a.leading() / a.leading()) / a.leading());
  return a;
}

BasePoly poly_pow(const BasePoly& a, int e) {
  if (e < 0) throw std::domain_error("poly_pow: negative exponent");
  if (a.is_zero() && e > 0) return a;
  if (a.is_zero()) throw std::domain_error("poly_pow: 0^0 needs a field context");
  BasePoly r;
  r.c = {a.c.back() / a.c.back()};
  BasePoly base = a;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

// ---------------------------------------------------------------------------
// BaseValuation
// ---------------------------------------------------------------------------

BaseValuation::BaseValuation(BaseKind kind, std::uint64_t p) : kind_(kind), p_(p), tower_(p) {}

BaseElem BaseValuation::zero() const { return from_int(0); }

BaseElem BaseValuation::from_int(long v) const {
  if (kind_ == BaseKind::PAdic) return BaseElem(Rat(v));
  std::uint64_t r = v >= 0 ? static_cast<std::uint64_t>(v) % p_
                           : fp::neg(static_cast<std::uint64_t>(-v) % p_, p_);
  return BaseElem(RatFunc{FpPoly::constant(p_, r), FpPoly::constant(p_, 1)});
}

BaseElem BaseValuation::uniformizer() const {
  if (kind_ == BaseKind::PAdic) return BaseElem(Rat(Int(p_)));
  return BaseElem(RatFunc{FpPoly::var(p_), FpPoly::constant(p_, 1)});
}

BaseElem BaseValuation::uniformizer_pow(long k) const {
  if (kind_ == BaseKind::PAdic) {
    Int num = 1, den = 1;
    for (long i = 0; i < (k >= 0 ? k : -k); ++i) (k >= 0 ? num : den) *= Int(p_);
    return BaseElem(Rat(num, den));
  }
  FpPoly tpow{p_, {}};
  tpow.c.assign(static_cast<std::size_t>(k >= 0 ? k : -k) + 1, 0);
  tpow.c.back() = 1;
  if (k >= 0) return BaseElem(RatFunc{tpow, FpPoly::constant(p_, 1)});
  return BaseElem(RatFunc{FpPoly::constant(p_, 1), tpow});
}

namespace {

int ord_p(Int n, std::uint64_t p) {
  int k = 0;
  Int q(p);
  while (n % q == 0) {
    n /= q;
    ++k;
  }
  return k;
}

}  // namespace

Value BaseValuation::value(const BaseElem& a) const {
  if (a.is_zero()) return Value::infinity();
  if (kind_ == BaseKind::PAdic) {
    const Rat& r = a.rat();
    return Value(Rat(ord_p(rat_num(r), p_) - ord_p(rat_den(r), p_)));
  }
  const RatFunc& f = a.rat_func();
  return Value(Rat(f.num.t_order() - f.den.t_order()));
}

FFElem BaseValuation::residue(const BaseElem& a) const {
  Value v = value(a);
  if (!(v == Value(Rat(0))))
    throw std::domain_error("residue: element has value " + v.str() + ", expected 0");
  if (kind_ == BaseKind::PAdic) {
    const Rat& r = a.rat();
    Int p(p_);
    Int num = rat_num(r) % p;
    if (num < 0) num += p;
    Int den = rat_den(r) % p;
    std::uint64_t n = num.convert_to<std::uint64_t>();
    std::uint64_t d = den.convert_to<std::uint64_t>();
    return tower_.from_uint(fp::mul(n, fp::inv(d, p_), p_), 0);
  }
  const RatFunc& f = a.rat_func();
  // Reduced fraction of value 0: both parts are units at t.
  return tower_.from_uint(fp::mul(f.num.c[0], fp::inv(f.den.c[0], p_), p_), 0);
}

BaseElem BaseValuation::lift(const FFElem& r) const {
  if (r.level != 0) throw std::domain_error("lift: residue must live in the degree-1 tower");
  return from_int(static_cast<long>(r.scalar));
}

std::string BaseValuation::elem_str(const BaseElem& a) const {
  if (a.is_rational()) return rat_to_string(a.rat());
  const RatFunc& f = a.rat_func();
  if (f.den == FpPoly::constant(p_, 1)) return fp_poly_str(f.num);
  return "(" + fp_poly_str(f.num) + ")/(" + fp_poly_str(f.den) + ")";
}

NormalizedInput BaseValuation::normalize_input(const BasePoly& f) const {
  if (f.degree() < 1) throw Error("input polynomial must have degree >= 1");
  BasePoly g = poly_scale(f, one() / f.leading());

  BasePoly d = poly_derivative(g);
  BasePoly gc = poly_gcd(g, d);
  if (gc.degree() != 0) {
    std::ostringstream os;
    for (std::size_t i = gc.c.size(); i-- > 0;) {
      if (gc.c[i].is_zero()) continue;
      if (static_cast<int>(i) != gc.degree()) os << " + ";
      os << elem_str(gc.c[i]);
      if (i > 0) os << "*x";
      if (i > 1) os << "^" << i;
    }
    throw NotSquarefree(os.str());
  }

  int n = g.degree();
  long k = 0;
  for (int i = 0; i < n; ++i) {
    if (g.c[static_cast<std::size_t>(i)].is_zero()) continue;
    Value v = value(g.c[static_cast<std::size_t>(i)]);
    // least k with v + k*(n-i) >= 1
    Rat need = (Rat(1) - v.rat()) / Rat(n - i);
    Int ki = rat_ceil(need);
    if (ki > k) k = ki.convert_to<long>();
  }
  if (k > 0) {
    for (int i = 0; i < n; ++i)
      g.c[static_cast<std::size_t>(i)] =
          g.c[static_cast<std::size_t>(i)] * uniformizer_pow(k * (n - i));
  }
  return NormalizedInput{std::move(g), static_cast<int>(k)};
}

}  // namespace valext

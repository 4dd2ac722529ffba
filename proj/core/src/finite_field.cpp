#include "valext/finite_field.hpp"

#include "valext/fp.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace valext {

namespace {

void strip(std::vector<FFElem>& cs) {
  while (!cs.empty() && cs.back().is_zero()) cs.pop_back();
}

}  // namespace

bool operator==(const FFElem& a, const FFElem& b) {
  if (a.level != b.level) return false;
  if (a.level == 0) return a.scalar == b.scalar;
  return a.coeffs == b.coeffs;
}

int ff_cmp(const FFElem& a, const FFElem& b) {
  if (a.level != b.level) return a.level < b.level ? -1 : 1;
  if (a.level == 0) {
    if (a.scalar != b.scalar) return a.scalar < b.scalar ? -1 : 1;
    return 0;
  }
  std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
  static const FFElem kZero{};
  for (std::size_t i = 0; i < n; ++i) {
    FFElem za = kZero, zb = kZero;
    za.level = zb.level = a.level - 1;
    const FFElem& ca = i < a.coeffs.size() ? a.coeffs[i] : za;
    const FFElem& cb = i < b.coeffs.size() ? b.coeffs[i] : zb;
    int c = ff_cmp(ca, cb);
    if (c != 0) return c;
  }
  return 0;
}

bool operator==(const FFPoly& a, const FFPoly& b) { return a.level == b.level && a.c == b.c; }

int ff_poly_cmp(const FFPoly& a, const FFPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    int c = ff_cmp(a.c[i], b.c[i]);
    if (c != 0) return c;
  }
  return 0;
}

FiniteFieldTower::FiniteFieldTower(std::uint64_t p) : p_(p) { check_prime(p); }

void FiniteFieldTower::check_level(int level) const {
  if (level < 0 || level > levels()) throw std::out_of_range("tower level out of range");
}

int FiniteFieldTower::absolute_degree(int level) const {
  if (level < 0) level = levels();
  check_level(level);
  int d = 1;
  for (int k = 1; k <= level; ++k) d *= minpoly(k).degree();
  return d;
}

FFElem FiniteFieldTower::zero(int level) const {
  check_level(level);
  FFElem e;
  e.level = level;
  return e;
}

FFElem FiniteFieldTower::one(int level) const { return from_uint(1, level); }

FFElem FiniteFieldTower::from_uint(std::uint64_t v, int level) const {
  check_level(level);
  FFElem e;
  e.level = 0;
  e.scalar = v % p_;
  return embed(e, level);
}

FFElem FiniteFieldTower::generator(int k) const {
  if (k < 1 || k > levels()) throw std::out_of_range("tower generator level out of range");
  FFElem e;
  e.level = k;
  e.coeffs = {zero(k - 1), one(k - 1)};
  return e;
}

FFElem FiniteFieldTower::embed(const FFElem& a, int to_level) const {
  check_level(to_level);
  if (a.level > to_level) throw std::invalid_argument("embed: cannot lower a tower element");
  FFElem e = a;
  while (e.level < to_level) {
    FFElem up;
    up.level = e.level + 1;
    if (!e.is_zero()) up.coeffs = {e};
    e = std::move(up);
  }
  return e;
}

FFElem FiniteFieldTower::add(const FFElem& a, const FFElem& b) const {
  assert(a.level == b.level);
  FFElem r;
  r.level = a.level;
  if (a.level == 0) {
    r.scalar = fp::add(a.scalar, b.scalar, p_);
    return r;
  }
  std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
  r.coeffs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    FFElem ca = i < a.coeffs.size() ? a.coeffs[i] : zero(a.level - 1);
    FFElem cb = i < b.coeffs.size() ? b.coeffs[i] : zero(a.level - 1);
    r.coeffs.push_back(add(ca, cb));
  }
  strip(r.coeffs);
  return r;
}

FFElem FiniteFieldTower::neg(const FFElem& a) const {
  FFElem r;
  r.level = a.level;
  if (a.level == 0) {
    r.scalar = fp::neg(a.scalar, p_);
    return r;
  }
  r.coeffs.reserve(a.coeffs.size());
  for (const auto& c : a.coeffs) r.coeffs.push_back(neg(c));
  return r;
}

FFElem FiniteFieldTower::sub(const FFElem& a, const FFElem& b) const { return add(a, neg(b)); }

FFElem FiniteFieldTower::mul(const FFElem& a, const FFElem& b) const {
  assert(a.level == b.level);
  FFElem r;
  r.level = a.level;
  if (a.level == 0) {
    r.scalar = fp::mul(a.scalar, b.scalar, p_);
    return r;
  }
  if (a.is_zero() || b.is_zero()) return r;
  // Schoolbook product followed by reduction modulo the level minimal polynomial.
  std::vector<FFElem> prod(a.coeffs.size() + b.coeffs.size() - 1, zero(a.level - 1));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      prod[i + j] = add(prod[i + j], mul(a.coeffs[i], b.coeffs[j]));
  const FFPoly& m = minpoly(a.level);
  std::size_t d = static_cast<std::size_t>(m.degree());
  // m is monic: subtract lead * m * y^(k-d) for each overflowing coefficient.
  for (std::size_t k = prod.size(); k-- > d;) {
    FFElem lead = prod[k];
    if (lead.is_zero()) continue;
    prod[k] = zero(a.level - 1);
    for (std::size_t j = 0; j < d; ++j)
      prod[k - d + j] = sub(prod[k - d + j], mul(lead, m.c[j]));
  }
  prod.resize(d, zero(a.level - 1));
  strip(prod);
  r.coeffs = std::move(prod);
  return r;
}

FFElem FiniteFieldTower::inv(const FFElem& a) const {
  if (a.is_zero()) throw std::domain_error("FFElem inverse of zero");
  if (a.level == 0) {
    FFElem r;
    r.level = 0;
    r.scalar = fp::inv(a.scalar, p_);
    return r;
  }
  // Extended Euclid between a (as a polynomial over level-1) and the minimal
  // polynomial of this level.
  FFPoly f;
  f.level = a.level - 1;
  f.c = a.coeffs;
  FFPoly g = minpoly(a.level);
  FFPoly s0 = poly_constant(one(a.level - 1));
  FFPoly s1 = poly_zero(a.level - 1);
  FFPoly r0 = f, r1 = g;
  while (!r1.is_zero()) {
    auto [q, rem] = poly_divmod(r0, r1);
    FFPoly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != 0) throw std::domain_error("FFElem inverse: minimal polynomial not irreducible");
  FFPoly res = poly_scale(s0, inv(r0.c[0]));
  FFElem out;
  out.level = a.level;
  out.coeffs = res.c;
  strip(out.coeffs);
  return out;
}

FFElem FiniteFieldTower::pow(const FFElem& a, const Int& e) const {
  if (e < 0) return pow(inv(a), -e);
  FFElem r = one(a.level);
  FFElem base = a;
  Int k = e;
  while (k > 0) {
    if ((k & 1) != 0) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

FFPoly FiniteFieldTower::poly_zero(int level) const {
  check_level(level);
  FFPoly f;
  f.level = level;
  return f;
}

FFPoly FiniteFieldTower::poly_from_coeffs(int level, std::vector<FFElem> cs) const {
  FFPoly f;
  f.level = level;
  f.c = std::move(cs);
  strip(f.c);
  return f;
}

FFPoly FiniteFieldTower::poly_var(int level) const {
  return poly_from_coeffs(level, {zero(level), one(level)});
}

FFPoly FiniteFieldTower::poly_constant(const FFElem& a) const {
  FFPoly f;
  f.level = a.level;
  if (!a.is_zero()) f.c = {a};
  return f;
}

FFPoly FiniteFieldTower::poly_add(const FFPoly& a, const FFPoly& b) const {
  assert(a.level == b.level);
  FFPoly r;
  r.level = a.level;
  std::size_t n = std::max(a.c.size(), b.c.size());
  for (std::size_t i = 0; i < n; ++i) {
    FFElem ca = i < a.c.size() ? a.c[i] : zero(a.level);
    FFElem cb = i < b.c.size() ? b.c[i] : zero(a.level);
    r.c.push_back(add(ca, cb));
  }
  strip(r.c);
  return r;
}

FFPoly FiniteFieldTower::poly_sub(const FFPoly& a, const FFPoly& b) const {
  return poly_add(a, poly_scale(b, neg(one(b.level))));
}

FFPoly FiniteFieldTower::poly_mul(const FFPoly& a, const FFPoly& b) const {
  assert(a.level == b.level);
  FFPoly r;
  r.level = a.level;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, zero(a.level));
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = add(r.c[i + j], mul(a.c[i], b.c[j]));
  strip(r.c);
  return r;
}

FFPoly FiniteFieldTower::poly_scale(const FFPoly& a, const FFElem& s) const {
  FFPoly r;
  r.level = a.level;
  if (s.is_zero()) return r;
  r.c.reserve(a.c.size());
  for (const auto& c : a.c) r.c.push_back(mul(c, s));
  strip(r.c);
  return r;
}

std::pair<FFPoly, FFPoly> FiniteFieldTower::poly_divmod(const FFPoly& a, const FFPoly& b) const {
  assert(a.level == b.level);
  if (b.is_zero()) throw std::domain_error("poly_divmod: division by zero polynomial");
  FFPoly q = poly_zero(a.level);
  FFPoly r = a;
  FFElem lead_inv = inv(b.c.back());
  int db = b.degree();
  while (!r.is_zero() && r.degree() >= db) {
    int k = r.degree() - db;
    FFElem coef = mul(r.c.back(), lead_inv);
    if (static_cast<int>(q.c.size()) < k + 1) q.c.resize(static_cast<std::size_t>(k) + 1, zero(a.level));
    q.c[static_cast<std::size_t>(k)] = add(q.c[static_cast<std::size_t>(k)], coef);
    for (int i = 0; i <= db; ++i) {
      std::size_t idx = static_cast<std::size_t>(k + i);
      r.c[idx] = sub(r.c[idx], mul(coef, b.c[static_cast<std::size_t>(i)]));
    }
    strip(r.c);
  }
  strip(q.c);
  return {q, r};
}

FFPoly FiniteFieldTower::poly_gcd(FFPoly a, FFPoly b) const {
  while (!b.is_zero()) {
    FFPoly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a);
}

FFPoly FiniteFieldTower::poly_derivative(const FFPoly& a) const {
  FFPoly r;
  r.level = a.level;
  for (std::size_t i = 1; i < a.c.size(); ++i) {
    FFElem k = from_uint(static_cast<std::uint64_t>(i % p_), a.level);
    r.c.push_back(mul(a.c[i], k));
  }
  strip(r.c);
  return r;
}

FFElem FiniteFieldTower::poly_eval(const FFPoly& a, const FFElem& x) const {
  FFElem acc = zero(a.level);
  for (std::size_t i = a.c.size(); i-- > 0;) acc = add(mul(acc, x), a.c[i]);
  return acc;
}

FFPoly FiniteFieldTower::poly_monic(const FFPoly& a) const {
  if (a.is_zero()) return a;
  return poly_scale(a, inv(a.c.back()));
}

FFPoly FiniteFieldTower::poly_pow_mod(const FFPoly& base, const Int& e, const FFPoly& mod) const {
  if (e < 0) throw std::domain_error("poly_pow_mod: negative exponent");
  FFPoly r = poly_constant(one(base.level));
  FFPoly b = poly_mod(base, mod);
  Int k = e;
  while (k > 0) {
    if ((k & 1) != 0) r = poly_mod(poly_mul(r, b), mod);
    b = poly_mod(poly_mul(b, b), mod);
    k >>= 1;
  }
  return r;
}

FiniteFieldTower FiniteFieldTower::extend(const FFPoly& m) const {
  if (m.level != levels())
    throw std::invalid_argument("tower extend: minimal polynomial must live at the top level");
  if (m.degree() < 2)
    throw std::invalid_argument("tower extend: degree must be >= 2 (linear factors do not extend the field)");
  if (m.c.back() != one(m.level)) throw std::invalid_argument("tower extend: minimal polynomial must be monic");
  FiniteFieldTower t = *this;
  t.minpolys_.push_back(m);
  return t;
}

std::string FiniteFieldTower::elem_str(const FFElem& a) const {
  if (a.level == 0) return std::to_string(a.scalar);
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (i) os << ",";
    os << elem_str(a.coeffs[i]);
  }
  os << "]";
  return os.str();
}

std::string FiniteFieldTower::poly_str(const FFPoly& a, const std::string& var) const {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = a.c.size(); i-- > 0;) {
    if (a.c[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    bool is_one = a.c[i] == one(a.level);
    if (i == 0 || !is_one) os << elem_str(a.c[i]);
    if (i > 0) {
      if (!is_one) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace valext

#include "valext/maclane.hpp"

#include "valext/errors.hpp"
#include "valext/ff_factor.hpp"
#include "valext/fp.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace valext {

namespace {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.pi_exp = a.pi_exp + b.pi_exp;
  r.key_exps.resize(std::max(a.key_exps.size(), b.key_exps.size()), 0);
  for (std::size_t i = 0; i < a.key_exps.size(); ++i) r.key_exps[i] += a.key_exps[i];
  for (std::size_t i = 0; i < b.key_exps.size(); ++i) r.key_exps[i] += b.key_exps[i];
  return r;
}

Monomial mono_pow(const Monomial& a, int e) {
  Monomial r;
  r.pi_exp = a.pi_exp * e;
  r.key_exps = a.key_exps;
  for (auto& x : r.key_exps) x *= e;
  return r;
}

Monomial mono_key(int level_index, int exp) {
  Monomial r;
  r.key_exps.assign(static_cast<std::size_t>(level_index), 0);
  r.key_exps.back() = exp;
  return r;
}

long rat_to_long_exact(const Rat& v, const char* what) {
  if (rat_den(v) != 1) throw InvariantViolation(std::string(what) + ": expected integer, got " + rat_to_string(v));
  return rat_num(v).convert_to<long>();
}

}  // namespace

std::vector<BasePoly> standard_expansion(const BasePoly& h, const BasePoly& q) {
  if (q.degree() < 1) throw Error("standard_expansion: divisor must have degree >= 1");
  std::vector<BasePoly> out;
  BasePoly rest = h;
  while (!rest.is_zero()) {
    auto [quot, rem] = poly_divmod(rest, q);
    out.push_back(std::move(rem));
    rest = std::move(quot);
  }
  if (out.empty()) out.push_back(BasePoly{});
  return out;
}

InductiveValuation InductiveValuation::initial(const BaseValuation& base, const Rat& beta1) {
  if (!(beta1 > 0)) throw Error("initial chain requires beta_1 > 0 (normalize the input first)");
  InductiveValuation iv(base, base.residue_field());
  Level l1;
  l1.key.c = {base.zero(), base.one()};
  l1.beta = beta1;
  l1.e_rel = static_cast<int>(rat_den(beta1).convert_to<long>());
  l1.alpha = 1;
  l1.psi = iv.tower_.poly_var(0);
  l1.tower_level = 0;
  l1.zeta = iv.tower_.zero(0);
  l1.normalizer.pi_exp = rat_to_long_exact(Rat(l1.e_rel) * beta1, "level-1 normalizer");
  iv.levels_.push_back(std::move(l1));
  return iv;
}

InductiveValuation InductiveValuation::augment(const BasePoly& q_next, const Rat& beta_next,
                                               const FFPoly& psi_next, std::uint64_t seed) const {
  const Level& lt = top();
  int alpha_next = lt.e_rel * psi_next.degree();
  if (!(beta_next > Rat(alpha_next) * lt.beta))
    throw ConditionStarViolation(rat_to_string(beta_next), rat_to_string(Rat(alpha_next) * lt.beta));
  if (q_next.degree() != alpha_next * lt.key.degree())
    throw InvariantViolation("augment: key polynomial degree mismatch");
  if (psi_next.level != lt.tower_level)
    throw InvariantViolation("augment: residual factor lives at the wrong tower level");

  InductiveValuation iv(base_, tower_);
  iv.levels_ = levels_;

  Level nl;
  nl.key = q_next;
  nl.beta = beta_next;
  Rat scaled = beta_next * Rat(group_denominator());
  nl.e_rel = static_cast<int>(rat_den(scaled).convert_to<long>());
  nl.alpha = alpha_next;
  nl.psi = psi_next;
  if (psi_next.degree() >= 2) {
    iv.tower_ = ff_tower_extend(tower_, psi_next, seed);
    nl.tower_level = lt.tower_level + 1;
    nl.zeta = iv.tower_.generator(nl.tower_level);
  } else {
    nl.tower_level = lt.tower_level;
    nl.zeta = iv.tower_.neg(psi_next.c.empty() ? iv.tower_.zero(nl.tower_level) : psi_next.c[0]);
  }
  iv.levels_.push_back(std::move(nl));
  // The normalizer needs the new level list for digit extraction.
  Level& created = iv.levels_.back();
  created.normalizer = iv.monomial_of_value(length(), Rat(created.e_rel) * beta_next);
  return iv;
}

Int InductiveValuation::group_denominator(int upto_level) const {
  if (upto_level < 0) upto_level = length();
  Int e = 1;
  for (int i = 1; i <= upto_level; ++i) e *= level(i).e_rel;
  return e;
}

int InductiveValuation::residue_degree() const {
  int d = 1;
  for (const auto& l : levels_) d *= l.psi.degree();
  return d;
}

Value InductiveValuation::value_at(int lvl, const BasePoly& h) const {
  if (h.is_zero()) return Value::infinity();
  if (lvl == 0) {
    if (h.degree() > 0) throw InvariantViolation("value_at(0): nonconstant polynomial");
    return base_.value(h.c[0]);
  }
  const Level& lv = level(lvl);
  if (h.degree() < lv.key.degree()) return value_at(lvl - 1, h);
  Value best = Value::infinity();
  auto exp = valext::standard_expansion(h, lv.key);
  for (std::size_t j = 0; j < exp.size(); ++j) {
    if (exp[j].is_zero()) continue;
    Value v = Value(lv.beta * Rat(j)) + value_at(lvl - 1, exp[j]);
    if (v < best) best = v;
  }
  return best;
}

Expansion InductiveValuation::standard_expansion(const BasePoly& h) const {
  Expansion e;
  e.coeffs = valext::standard_expansion(h, top().key);
  e.values.reserve(e.coeffs.size());
  for (const auto& d : e.coeffs) e.values.push_back(value_at(length() - 1, d));
  return e;
}

NewtonPolygon InductiveValuation::polygon(const BasePoly& h) const {
  Expansion e = standard_expansion(h);
  std::vector<PolygonPoint> pts;
  pts.reserve(e.coeffs.size());
  for (std::size_t j = 0; j < e.coeffs.size(); ++j)
    pts.push_back(PolygonPoint{static_cast<int>(j), e.values[j]});
  return lower_hull(pts, group_denominator(length() - 1));
}

FFElem InductiveValuation::specialize(int lvl, const FFPoly& r) const {
  const Level& lv = level(lvl);
  int prev_t = lvl == 1 ? 0 : level(lvl - 1).tower_level;
  if (r.level != prev_t) throw InvariantViolation("specialize: tower level mismatch");
  if (lv.psi.degree() >= 2) {
    FFPoly rem = tower_.poly_mod(r, lv.psi);
    FFElem out;
    out.level = lv.tower_level;
    out.coeffs = rem.c;
    while (!out.coeffs.empty() && out.coeffs.back().is_zero()) out.coeffs.pop_back();
    return out;
  }
  return tower_.poly_eval(r, lv.zeta);
}

FFPoly InductiveValuation::reduce0(int lvl, const BasePoly& h) const {
  if (lvl == 0) {
    if (h.degree() > 0) throw InvariantViolation("reduce0(0): nonconstant polynomial");
    if (h.is_zero()) throw InvariantViolation("reduce0: zero input");
    return tower_.poly_constant(base_.residue(h.c[0]));
  }
  const Level& lv = level(lvl);
  auto exp = valext::standard_expansion(h, lv.key);
  BasePoly norm = realize(lv.normalizer);
  std::vector<FFElem> cs;
  for (std::size_t j = 0; j < exp.size(); ++j) {
    if (exp[j].is_zero()) continue;
    Value vj = value_at(lvl - 1, exp[j]);
    Value total = Value(lv.beta * Rat(j)) + vj;
    if (total == Value(Rat(0))) {
      if (static_cast<int>(j) % lv.e_rel != 0)
        throw InvariantViolation("reduce0: contributing index not divisible by e_rel");
      int m = static_cast<int>(j) / lv.e_rel;
      BasePoly prod = exp[j] * poly_pow(norm, m);
      FFElem cm = specialize(lvl, reduce0(lvl - 1, prod));
      if (static_cast<int>(cs.size()) < m + 1) cs.resize(static_cast<std::size_t>(m) + 1, tower_.zero(lv.tower_level));
      cs[static_cast<std::size_t>(m)] = cm;
    } else if (total < Value(Rat(0))) {
      throw InvariantViolation("reduce0: input has negative value");
    }
  }
  if (cs.empty()) throw InvariantViolation("reduce0: input has positive value");
  return tower_.poly_from_coeffs(lv.tower_level, std::move(cs));
}

FFPoly InductiveValuation::reduce(const BasePoly& h) const {
  Value v = value(h);
  if (!(v == Value(Rat(0)))) throw Error("reduce: element has chain value " + v.str() + ", expected 0");
  return reduce0(length(), h);
}

Monomial InductiveValuation::monomial_of_value(int upto_level, const Rat& v) const {
  Monomial m;
  m.key_exps.assign(static_cast<std::size_t>(upto_level), 0);
  Rat rest = v;
  for (int i = upto_level; i >= 1; --i) {
    const Level& lv = level(i);
    if (lv.e_rel == 1) continue;
    Int ei(lv.e_rel);
    Int e_upto = group_denominator(i);
    Rat w = rest * Rat(e_upto);
    if (rat_den(w) != 1)
      throw InvariantViolation("monomial_of_value: value outside the level-" + std::to_string(i) + " group");
    Rat bi = lv.beta * Rat(e_upto);
    Int b_int = rat_num(bi);  // integral since e_upto kills the denominator
    Int wm = ((rat_num(w) % ei) + ei) % ei;
    Int bm = ((b_int % ei) + ei) % ei;
    // b = w * B^{-1} mod e; gcd(B, e) = 1 because e is exactly the relative
    // ramification of beta_i.
    std::uint64_t inv = fp::inv(bm.convert_to<std::uint64_t>(), ei.convert_to<std::uint64_t>());
    Int digit = (wm * Int(inv)) % ei;
    int b = digit.convert_to<int>();
    m.key_exps[static_cast<std::size_t>(i - 1)] = b;
    rest -= Rat(b) * lv.beta;
  }
  m.pi_exp = rat_to_long_exact(rest, "monomial_of_value");
  return m;
}

BasePoly InductiveValuation::realize(const Monomial& m) const {
  BasePoly r;
  r.c = {base_.uniformizer_pow(m.pi_exp)};
  for (std::size_t i = 0; i < m.key_exps.size(); ++i) {
    if (m.key_exps[i] == 0) continue;
    r = r * poly_pow(level(static_cast<int>(i) + 1).key, m.key_exps[i]);
  }
  return r;
}

FFElem InductiveValuation::project_down(int lvl, const FFElem& x) const {
  int t_hi = level(lvl + 1).tower_level;
  int t_lo = lvl == 0 ? 0 : level(lvl).tower_level;
  if (x.level != t_hi) throw InvariantViolation("project_down: wrong source level");
  if (t_hi == t_lo) return x;
  if (x.coeffs.size() > 1)
    throw InvariantViolation("project_down: element does not lie in the lower field");
  return x.coeffs.empty() ? tower_.zero(t_lo) : x.coeffs[0];
}

FFElem InductiveValuation::embed_up(int lvl, const FFElem& x) const {
  return tower_.embed(x, level(lvl + 1).tower_level);
}

FFElem InductiveValuation::chi(int lvl, const Rat& v) const {
  int t_out = level(lvl + 1).tower_level;
  if (lvl == 0) return tower_.one(t_out);
  Monomial pos = monomial_of_value(lvl, v);
  Monomial neg = monomial_of_value(lvl, -v);
  BasePoly prod = realize(mono_mul(pos, neg));
  return tower_.embed(specialize(lvl + 1, reduce0(lvl, prod)), t_out);
}

BasePoly InductiveValuation::lift_tgt(int lvl, const FFElem& c, const Rat& v) const {
  if (c.is_zero()) throw InvariantViolation("lift_tgt: zero class");
  if (lvl == 0) {
    long k = rat_to_long_exact(v, "lift_tgt(0)");
    BasePoly r;
    r.c = {base_.lift(c) * base_.uniformizer_pow(k)};
    return r;
  }
  const Level& li = level(lvl);
  const Level& lnext = level(lvl + 1);
  int t_hi = lnext.tower_level;

  Monomial digits = monomial_of_value(lvl, v);
  int b = digits.key_exps[static_cast<std::size_t>(lvl - 1)];
  Rat vprime = v - Rat(b) * li.beta;

  // Coefficients of c over kappa_lvl with respect to the class of the
  // level-lvl residual variable.
  std::vector<FFElem> chat;
  if (lnext.psi.degree() >= 2) {
    if (c.level != t_hi) throw InvariantViolation("lift_tgt: class at wrong tower level");
    chat = c.coeffs;
  } else {
    chat = {c};
  }

  FFElem chi_here = chi(lvl, v);
  Monomial m_negv = monomial_of_value(lvl, -v);

  BasePoly out;
  for (std::size_t k = 0; k < chat.size(); ++k) {
    if (chat[k].is_zero()) continue;
    Rat vk = vprime - Rat(static_cast<long>(k)) * Rat(li.e_rel) * li.beta;
    Monomial mono = mono_mul(mono_key(lvl, li.e_rel * static_cast<int>(k) + b),
                             mono_mul(monomial_of_value(lvl - 1, vk), m_negv));
    FFElem J = tower_.embed(specialize(lvl + 1, reduce0(lvl, realize(mono))), t_hi);
    FFElem chi_prev = tower_.embed(chi(lvl - 1, vk), t_hi);
    FFElem zk = tower_.pow(lnext.zeta, Int(static_cast<long>(k)));
    FFElem u = tower_.mul(tower_.mul(zk, chi_here), tower_.inv(tower_.mul(chi_prev, J)));
    FFElem tk = tower_.mul(chat[k], project_down(lvl, u));
    BasePoly part = lift_tgt(lvl - 1, tk, vk) * poly_pow(li.key, li.e_rel * static_cast<int>(k) + b);
    out = out + part;
  }
  return out;
}

BasePoly InductiveValuation::lift(const FFPoly& r) const {
  int L = length();
  const Level& lv = top();
  if (r.level != lv.tower_level) throw Error("lift: residue element at the wrong tower level");
  if (r.is_zero()) return BasePoly{};
  BasePoly out;
  for (std::size_t m = 0; m < r.c.size(); ++m) {
    if (r.c[m].is_zero()) continue;
    Rat vm = -Rat(static_cast<long>(m)) * Rat(lv.e_rel) * lv.beta;
    Monomial mono = mono_mul(monomial_of_value(L - 1, vm), mono_pow(lv.normalizer, static_cast<int>(m)));
    FFElem K = specialize(L, reduce0(L - 1, realize(mono)));
    FFElem chi_prev = tower_.embed(chi(L - 1, vm), lv.tower_level);
    FFElem tau = tower_.mul(r.c[m], tower_.inv(tower_.mul(chi_prev, K)));
    BasePoly part = lift_tgt(L - 1, tau, vm) * poly_pow(lv.key, lv.e_rel * static_cast<int>(m));
    out = out + part;
  }
  return out;
}

FFPoly InductiveValuation::residual_polynomial(const BasePoly& h, const Side& side) const {
  int L = length();
  const Level& lv = top();
  if (side.beta != lv.beta)
    throw Error("residual_polynomial: side beta " + rat_to_string(side.beta) +
                " does not match the top level value " + rat_to_string(lv.beta));
  if (side.e_rel != lv.e_rel) throw InvariantViolation("residual_polynomial: e_rel mismatch");

  auto exp = valext::standard_expansion(h, lv.key);
  int left = side.left.index;
  int right = side.right.index;
  if (side.length % side.e_rel != 0)
    throw InvariantViolation("residual_polynomial: side length not divisible by e_rel");

  Value w = value_at(L - 1, exp[static_cast<std::size_t>(left)]);
  Value V = Value(lv.beta * Rat(left)) + w;
  BasePoly wneg = realize(monomial_of_value(L - 1, -w.rat()));
  BasePoly norm = realize(lv.normalizer);

  int deg_r = side.length / side.e_rel;
  std::vector<FFElem> cs(static_cast<std::size_t>(deg_r) + 1, tower_.zero(lv.tower_level));
  for (int m = 0; m <= deg_r; ++m) {
    int j = left + m * side.e_rel;
    if (j >= static_cast<int>(exp.size())) break;
    const BasePoly& dj = exp[static_cast<std::size_t>(j)];
    if (dj.is_zero()) continue;
    if (!(Value(lv.beta * Rat(j)) + value_at(L - 1, dj) == V)) continue;  // above the side
    BasePoly prod = dj * poly_pow(norm, m) * wneg;
    cs[static_cast<std::size_t>(m)] = specialize(L, reduce0(L - 1, prod));
  }
  FFPoly r = tower_.poly_from_coeffs(lv.tower_level, std::move(cs));
  if (r.degree() != deg_r || r.c[0].is_zero())
    throw InvariantViolation("residual_polynomial: degree or constant-term check failed");
  return r;
}

std::pair<BasePoly, int> InductiveValuation::lift_key(const Side& side, const FFPoly& psi) const {
  int L = length();
  const Level& lv = top();
  if (side.beta != lv.beta) throw Error("lift_key: side does not match the top level");
  if (psi.level != lv.tower_level) throw Error("lift_key: psi at the wrong tower level");
  if (psi.degree() < 1 || !(psi.c.back() == tower_.one(lv.tower_level)))
    throw Error("lift_key: psi must be monic of degree >= 1");
  if (psi.c[0].is_zero())
    throw Error("lift_key: psi may not be the residual variable itself");

  int dpsi = psi.degree();
  int e = lv.e_rel;
  int alpha_next = e * dpsi;
  Rat vstep = Rat(e) * lv.beta;           // value of the level normalizer
  Rat vtop = Rat(dpsi) * vstep;           // value of the lifted polynomial

  Monomial m_wneg = monomial_of_value(L - 1, -vtop);
  FFElem lead_unit =
      specialize(L, reduce0(L - 1, realize(mono_mul(mono_pow(lv.normalizer, dpsi), m_wneg))));

  BasePoly q = poly_pow(lv.key, alpha_next);
  for (int m = 0; m < dpsi; ++m) {
    const FFElem& pm = psi.c[static_cast<std::size_t>(m)];
    if (pm.is_zero()) continue;
    Rat vm = Rat(dpsi - m) * vstep;
    Monomial mono = mono_mul(monomial_of_value(L - 1, vm),
                             mono_mul(mono_pow(lv.normalizer, m), m_wneg));
    FFElem H = specialize(L, reduce0(L - 1, realize(mono)));
    FFElem chi_prev = tower_.embed(chi(L - 1, vm), lv.tower_level);
    FFElem tau = tower_.mul(tower_.mul(pm, lead_unit), tower_.inv(tower_.mul(chi_prev, H)));
    BasePoly part = lift_tgt(L - 1, tau, vm) * poly_pow(lv.key, e * m);
    q = q + part;
  }
  if (q.degree() != alpha_next * lv.key.degree() || !(value(q) == Value(Rat(alpha_next) * lv.beta)))
    throw InvariantViolation("lift_key: lifted polynomial fails the degree/value contract");
  return {q, alpha_next};
}

std::string InductiveValuation::describe() const {
  std::ostringstream os;
  for (int i = 1; i <= length(); ++i) {
    const Level& lv = level(i);
    if (i > 1) os << " ; ";
    os << "(deg " << lv.key.degree() << ", beta " << rat_to_string(lv.beta) << ", e " << lv.e_rel
       << ", f " << lv.psi.degree() << ")";
  }
  return os.str();
}

}  // namespace valext

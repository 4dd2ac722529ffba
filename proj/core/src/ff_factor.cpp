#include "valext/ff_factor.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace valext {

namespace {

Int int_pow(const Int& b, int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

FFElem random_elem(const FiniteFieldTower& t, int level, std::mt19937_64& rng) {
  if (level == 0) return t.from_uint(rng() % t.characteristic(), 0);
  int d = t.minpoly(level).degree();
  std::vector<FFElem> cs;
  cs.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) cs.push_back(random_elem(t, level - 1, rng));
  FFElem e;
  e.level = level;
  e.coeffs = std::move(cs);
  while (!e.coeffs.empty() && e.coeffs.back().is_zero()) e.coeffs.pop_back();
  return e;
}

FFPoly random_poly_below(const FiniteFieldTower& t, int level, int deg_bound, std::mt19937_64& rng) {
  std::vector<FFElem> cs;
  cs.reserve(static_cast<std::size_t>(deg_bound));
  for (int i = 0; i < deg_bound; ++i) cs.push_back(random_elem(t, level, rng));
  return t.poly_from_coeffs(level, std::move(cs));
}

/// Coefficient-wise p-th root; exponents divided by p. Valid only when the
/// derivative vanishes, i.e. g is a polynomial in y^p.
FFPoly pth_root(const FiniteFieldTower& t, const FFPoly& g) {
  std::uint64_t p = t.characteristic();
  int d = t.absolute_degree(g.level);
  Int root_exp = d > 1 ? int_pow(Int(p), d - 1) : Int(1);
  std::vector<FFElem> cs;
  for (std::size_t i = 0; i < g.c.size(); i += static_cast<std::size_t>(p))
    cs.push_back(t.pow(g.c[i], root_exp));
  return t.poly_from_coeffs(g.level, std::move(cs));
}

void squarefree_decompose(const FiniteFieldTower& t, const FFPoly& g, int outer_mult,
                          std::vector<std::pair<FFPoly, int>>& out) {
  std::uint64_t p = t.characteristic();
  FFPoly mon = t.poly_monic(g);
  FFPoly deriv = t.poly_derivative(mon);
  if (deriv.is_zero()) {
    squarefree_decompose(t, pth_root(t, mon), outer_mult * static_cast<int>(p), out);
    return;
  }
  FFPoly c = t.poly_gcd(mon, deriv);
  FFPoly w = t.poly_divmod(mon, c).first;
  int i = 1;
  while (w.degree() > 0) {
    FFPoly y = t.poly_gcd(w, c);
    FFPoly fac = t.poly_divmod(w, y).first;
    if (fac.degree() > 0) out.emplace_back(t.poly_monic(fac), i * outer_mult);
    w = std::move(y);
    c = t.poly_divmod(c, w).first;
    ++i;
  }
  if (c.degree() > 0) squarefree_decompose(t, pth_root(t, c), outer_mult * static_cast<int>(p), out);
}

/// Splits a squarefree product of irreducibles all of degree d.
void equal_degree_split(const FiniteFieldTower& t, const FFPoly& g, int d, const Int& q,
                        std::mt19937_64& rng, std::vector<FFPoly>& out) {
  if (g.degree() == d) {
    out.push_back(t.poly_monic(g));
    return;
  }
  FFPoly one_poly = t.poly_constant(t.one(g.level));
  while (true) {
    FFPoly u = random_poly_below(t, g.level, g.degree(), rng);
    if (u.degree() < 1) continue;
    FFPoly w;
    if (t.characteristic() == 2) {
      // Trace map over F_2: T(u) = u + u^2 + u^4 + ... (D*d squarings).
      int bits = t.absolute_degree(g.level) * d;
      FFPoly acc = t.poly_mod(u, g);
      FFPoly cur = acc;
      for (int i = 1; i < bits; ++i) {
        cur = t.poly_mod(t.poly_mul(cur, cur), g);
        acc = t.poly_add(acc, cur);
      }
      w = acc;
    } else {
      Int e = (int_pow(q, d) - 1) / 2;
      w = t.poly_sub(t.poly_pow_mod(u, e, g), one_poly);
    }
    FFPoly h = t.poly_gcd(w, g);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree_split(t, h, d, q, rng, out);
      equal_degree_split(t, t.poly_divmod(g, h).first, d, q, rng, out);
      return;
    }
  }
}

void factor_squarefree(const FiniteFieldTower& t, FFPoly g, std::mt19937_64& rng,
                       std::vector<FFPoly>& out) {
  Int q = int_pow(Int(t.characteristic()), t.absolute_degree(g.level));
  FFPoly y = t.poly_var(g.level);
  FFPoly h = y;  // y^(q^d) mod g, maintained incrementally
  for (int d = 1; 2 * d <= g.degree(); ++d) {
    h = t.poly_pow_mod(h, q, g);
    FFPoly gd = t.poly_gcd(t.poly_sub(h, y), g);
    if (gd.degree() > 0) {
      equal_degree_split(t, gd, d, q, rng, out);
      g = t.poly_divmod(g, gd).first;
      h = t.poly_mod(h, g);
    }
  }
  if (g.degree() > 0) out.push_back(t.poly_monic(g));
}

}  // namespace

std::vector<std::pair<FFPoly, int>> ff_factor(const FiniteFieldTower& t, const FFPoly& g,
                                              std::uint64_t seed) {
  if (g.is_zero()) throw std::domain_error("ff_factor: zero polynomial");
  std::vector<std::pair<FFPoly, int>> result;
  if (g.degree() == 0) return result;
  std::mt19937_64 rng(seed);
  std::vector<std::pair<FFPoly, int>> sqf;
  squarefree_decompose(t, g, 1, sqf);
  for (const auto& [part, mult] : sqf) {
    std::vector<FFPoly> irr;
    factor_squarefree(t, part, rng, irr);
    for (auto& f : irr) result.emplace_back(std::move(f), mult);
  }
  std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
    int c = ff_poly_cmp(a.first, b.first);
    if (c != 0) return c < 0;
    return a.second < b.second;
  });
  return result;
}

bool ff_is_irreducible(const FiniteFieldTower& t, const FFPoly& g, std::uint64_t seed) {
  if (g.degree() < 1) return false;
  auto fs = ff_factor(t, g, seed);
  return fs.size() == 1 && fs[0].second == 1;
}

FiniteFieldTower ff_tower_extend(const FiniteFieldTower& t, const FFPoly& m, std::uint64_t seed) {
  if (m.degree() < 2)
    throw std::invalid_argument("tower extend: degree must be >= 2 (linear factors do not extend the field)");
  auto fs = ff_factor(t, m, seed);
  if (fs.size() != 1 || fs[0].second != 1) {
    std::string msg = "tower extend: polynomial is reducible: " + t.poly_str(m) + " =";
    for (const auto& [f, mult] : fs) {
      msg += " (" + t.poly_str(f) + ")";
      if (mult > 1) msg += "^" + std::to_string(mult);
    }
    throw std::invalid_argument(msg);
  }
  return t.extend(t.poly_monic(m));
}

}  // namespace valext

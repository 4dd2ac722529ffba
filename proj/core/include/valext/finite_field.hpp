/// \file finite_field.hpp
/// Towers of finite fields F_p ⊂ κ_1 ⊂ κ_2 ⊂ ... built from iterated
/// irreducible extensions, with dense univariate polynomial arithmetic at
/// every level. Residue fields of inductive valuations are represented this
/// way and are never flattened to a single absolute extension.
#pragma once

#include "valext/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace valext {

/// Element of a tower level. Level 0 holds a scalar of F_p; level k >= 1
/// holds a coefficient vector over level k-1 of length < degree of the
/// level-k minimal polynomial, trailing zeros stripped.
struct FFElem {
  int level = 0;
  std::uint64_t scalar = 0;
  std::vector<FFElem> coeffs;

  bool is_zero() const { return level == 0 ? scalar == 0 : coeffs.empty(); }
};

bool operator==(const FFElem& a, const FFElem& b);
inline bool operator!=(const FFElem& a, const FFElem& b) { return !(a == b); }

/// Total order used for canonical factor ordering; compares levels, then
/// coefficient vectors lexicographically from the constant term up.
int ff_cmp(const FFElem& a, const FFElem& b);

/// Dense univariate polynomial over a tower level; trailing zeros stripped.
struct FFPoly {
  int level = 0;
  std::vector<FFElem> c;

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
};

bool operator==(const FFPoly& a, const FFPoly& b);
inline bool operator!=(const FFPoly& a, const FFPoly& b) { return !(a == b); }
int ff_poly_cmp(const FFPoly& a, const FFPoly& b);

class FiniteFieldTower {
 public:
  explicit FiniteFieldTower(std::uint64_t p);

  std::uint64_t characteristic() const { return p_; }

  /// Number of proper extension levels; 0 means the tower is just F_p.
  int levels() const { return static_cast<int>(minpolys_.size()); }

  /// Minimal polynomial defining level k (a polynomial over level k-1).
  const FFPoly& minpoly(int k) const { return minpolys_.at(static_cast<std::size_t>(k) - 1); }

  /// Product of the level degrees up to `level` (all levels by default).
  int absolute_degree(int level = -1) const;

  /// New tower with one more level on top, cut out by `m`. Rejects m of
  /// degree < 2 and reducible m (the caller sees the factorization as the
  /// witness in the error message).
  FiniteFieldTower extend(const FFPoly& m) const;

  // -- element constructors ------------------------------------------------
  FFElem zero(int level = 0) const;
  FFElem one(int level) const;
  FFElem from_uint(std::uint64_t v, int level = 0) const;
  /// Generator of level k (the class of the variable adjoined at level k).
  FFElem generator(int k) const;
  /// Reinterpret an element at a higher level of the same tower.
  FFElem embed(const FFElem& a, int to_level) const;

  // -- element arithmetic (operands must share a level) ----------------------
  FFElem add(const FFElem& a, const FFElem& b) const;
  FFElem sub(const FFElem& a, const FFElem& b) const;
  FFElem neg(const FFElem& a) const;
  FFElem mul(const FFElem& a, const FFElem& b) const;
  FFElem inv(const FFElem& a) const;
  FFElem div(const FFElem& a, const FFElem& b) const { return mul(a, inv(b)); }
  FFElem pow(const FFElem& a, const Int& e) const;

  // -- polynomial arithmetic -------------------------------------------------
  FFPoly poly_zero(int level) const;
  FFPoly poly_from_coeffs(int level, std::vector<FFElem> cs) const;
  FFPoly poly_var(int level) const;  // the polynomial y
  FFPoly poly_constant(const FFElem& a) const;
  FFPoly poly_add(const FFPoly& a, const FFPoly& b) const;
  FFPoly poly_sub(const FFPoly& a, const FFPoly& b) const;
  FFPoly poly_mul(const FFPoly& a, const FFPoly& b) const;
  FFPoly poly_scale(const FFPoly& a, const FFElem& s) const;
  /// (q, r) with a = q*b + r and deg r < deg b. Throws on b = 0.
  std::pair<FFPoly, FFPoly> poly_divmod(const FFPoly& a, const FFPoly& b) const;
  FFPoly poly_mod(const FFPoly& a, const FFPoly& b) const { return poly_divmod(a, b).second; }
  /// Monic gcd; gcd(0,0) = 0.
  FFPoly poly_gcd(FFPoly a, FFPoly b) const;
  FFPoly poly_derivative(const FFPoly& a) const;
  FFElem poly_eval(const FFPoly& a, const FFElem& x) const;
  FFPoly poly_monic(const FFPoly& a) const;
  FFPoly poly_pow_mod(const FFPoly& base, const Int& e, const FFPoly& mod) const;

  std::string elem_str(const FFElem& a) const;
  std::string poly_str(const FFPoly& a, const std::string& var = "y") const;

 private:
  void check_level(int level) const;
  std::uint64_t p_;
  std::vector<FFPoly> minpolys_;
};

}  // namespace valext

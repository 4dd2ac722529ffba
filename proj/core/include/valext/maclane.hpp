/// \file maclane.hpp
/// Inductive valuations on K[X]: chains of key polynomials (Q_i, beta_i)
/// with standard expansions, chain evaluation, reduce/lift maps into the
/// residue field tower, residual polynomials of Newton polygon sides, and
/// lifting of residual factors to the next key polynomial.
///
/// The graded algebra of the valuation is never materialized: homogeneous
/// elements are handled through residual coordinates over the tower, with a
/// fixed normalizer monomial per level. Changing the normalizer convention
/// rescales residual polynomials and their variable by units and therefore
/// changes no ramification/residue-degree output.
#pragma once

#include "valext/base_field.hpp"
#include "valext/finite_field.hpp"
#include "valext/newton.hpp"
#include "valext/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace valext {

/// pi^pi_exp * prod_i Q_i^{key_exps[i-1]} (key_exps is 1-based on levels).
struct Monomial {
  long pi_exp = 0;
  std::vector<int> key_exps;
};

struct Level {
  BasePoly key;        // Q_i, monic
  Rat beta;            // beta_i = nu'(Q_i) > 0
  int e_rel = 1;       // denominator of beta_i over the previous value group
  int alpha = 1;       // deg Q_i / deg Q_{i-1}
  FFPoly psi;          // residual minimal polynomial whose lift is Q_i, over
                       // kappa_{i-1}; level 1 stores the bare variable y
  int tower_level = 0; // tower level of kappa_i
  FFElem zeta;         // root of psi in kappa_i (class of the previous
                       // residual variable); 0 at level 1
  Monomial normalizer; // N_i: canonical monomial of value e_i*beta_i over
                       // levels < i
};

/// Standard expansion of h in the top key polynomial, with cached values.
struct Expansion {
  std::vector<BasePoly> coeffs;  // deg coeffs[j] < deg Q
  std::vector<Value> values;     // value of coeffs[j] under the lower chain
};

class InductiveValuation {
 public:
  /// One-level chain (Q_1 = x, beta_1), beta_1 > 0.
  static InductiveValuation initial(const BaseValuation& base, const Rat& beta1);

  /// Chain with one more level. psi_next is the residual factor (over the
  /// current top residue field) whose lift q_next is; Condition (*)
  /// beta_next > alpha_next * beta_top is enforced.
  InductiveValuation augment(const BasePoly& q_next, const Rat& beta_next, const FFPoly& psi_next,
                             std::uint64_t seed = 0) const;

  const BaseValuation& base() const { return base_; }
  int length() const { return static_cast<int>(levels_.size()); }
  const Level& level(int i) const { return levels_.at(static_cast<std::size_t>(i) - 1); }
  const Level& top() const { return levels_.back(); }
  const FiniteFieldTower& tower() const { return tower_; }

  /// E = prod e_rel_i; the chain's value group is (1/E)Z.
  Int group_denominator(int upto_level = -1) const;
  /// prod deg psi_i = absolute degree of the residue tower.
  int residue_degree() const;

  /// nu_l(h) for the full chain; Infinity iff h = 0.
  Value value(const BasePoly& h) const { return value_at(length(), h); }
  /// nu_i(h) for the sub-chain of the first `lvl` levels (0 = base valuation,
  /// defined for constant polynomials).
  Value value_at(int lvl, const BasePoly& h) const;

  /// Standard expansion of h in the top key polynomial.
  Expansion standard_expansion(const BasePoly& h) const;

  /// Newton polygon of h with respect to the chain: expansion in the top key
  /// polynomial, coefficient values from the lower levels, group denominator
  /// E/e_top.
  NewtonPolygon polygon(const BasePoly& h) const;

  /// Image of a value-0 element in kappa_top[y], y the top residual variable.
  FFPoly reduce(const BasePoly& h) const;
  /// Representative of a residue-ring element; reduce(lift(r)) = r.
  BasePoly lift(const FFPoly& r) const;

  /// Residual polynomial R over kappa_top of a side of the polygon of h.
  /// deg R = side.length / side.e_rel and R(0) != 0; the factorization of the
  /// side's initial form corresponds to a unit times the factorization of R.
  FFPoly residual_polynomial(const BasePoly& h, const Side& side) const;

  /// Monic key polynomial lifting the residual factor psi of the given side,
  /// together with alpha_next = e_rel * deg psi. The chain value of the
  /// result is exactly alpha_next * beta_top, and its own residual polynomial
  /// on that side is psi again (up to the recorded leading unit).
  std::pair<BasePoly, int> lift_key(const Side& side, const FFPoly& psi) const;

  /// Canonical monomial of value v over the first `upto_level` levels
  /// (digits of beta_i bounded by e_i, free power of the uniformizer).
  Monomial monomial_of_value(int upto_level, const Rat& v) const;
  BasePoly realize(const Monomial& m) const;

  std::string describe() const;

 private:
  InductiveValuation(BaseValuation base, FiniteFieldTower tower)
      : base_(std::move(base)), tower_(std::move(tower)) {}

  /// reduce at sub-chain level lvl; requires value_at(lvl, h) = 0. Output is
  /// a polynomial over kappa_lvl in the level-lvl residual variable.
  FFPoly reduce0(int lvl, const BasePoly& h) const;
  /// Specialization kappa_{lvl-1}[y] -> kappa_lvl through psi_lvl.
  FFElem specialize(int lvl, const FFPoly& r) const;
  /// Representative A with value_at(lvl, A) = v whose class relative to the
  /// canonical monomial of value v is c in kappa_{lvl+1}; deg A < deg Q_{lvl+1}.
  BasePoly lift_tgt(int lvl, const FFElem& c, const Rat& v) const;
  /// chi_i(v): class of M_i(v) * M_i(-v), an element of kappa_{i+1}.
  FFElem chi(int lvl, const Rat& v) const;
  FFElem project_down(int lvl, const FFElem& x) const;  // kappa_{lvl+1} -> kappa_lvl
  FFElem embed_up(int lvl, const FFElem& x) const;      // kappa_lvl -> kappa_{lvl+1}

  BaseValuation base_;  // by value: chains may outlive the caller's instance
  std::vector<Level> levels_;
  FiniteFieldTower tower_;
};

/// Base-Q digit expansion: h = sum d_j Q^j with deg d_j < deg Q. Q monic.
std::vector<BasePoly> standard_expansion(const BasePoly& h, const BasePoly& q);

}  // namespace valext

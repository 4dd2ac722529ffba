/// \file base_field.hpp
/// The two supported valued base fields (K, ν): Q with the p-adic order and
/// F_p(t) with the t-adic order. Both have value group Z, residue field F_p,
/// and are defectless for separable extensions.
#pragma once

#include "valext/finite_field.hpp"
#include "valext/rational.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace valext {

/// Dense polynomial over F_p in the indeterminate t.
struct FpPoly {
  std::uint64_t p = 0;
  std::vector<std::uint64_t> c;  // trailing zeros stripped

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  int t_order() const;  // index of lowest nonzero coefficient; -1 for zero

  static FpPoly zero(std::uint64_t p) { return FpPoly{p, {}}; }
  static FpPoly constant(std::uint64_t p, std::uint64_t v);
  static FpPoly var(std::uint64_t p) { return FpPoly{p, {0, 1}}; }
};

bool operator==(const FpPoly& a, const FpPoly& b);
FpPoly operator+(const FpPoly& a, const FpPoly& b);
FpPoly operator-(const FpPoly& a, const FpPoly& b);
FpPoly operator*(const FpPoly& a, const FpPoly& b);
std::pair<FpPoly, FpPoly> fp_poly_divmod(const FpPoly& a, const FpPoly& b);
FpPoly fp_poly_gcd(FpPoly a, FpPoly b);
FpPoly fp_poly_monic(const FpPoly& a);
std::string fp_poly_str(const FpPoly& a);

/// Element of F_p(t), stored as a reduced fraction with monic denominator.
struct RatFunc {
  FpPoly num;
  FpPoly den;

  bool is_zero() const { return num.is_zero(); }
  void reduce();
};

bool operator==(const RatFunc& a, const RatFunc& b);
RatFunc operator+(const RatFunc& a, const RatFunc& b);
RatFunc operator-(const RatFunc& a, const RatFunc& b);
RatFunc operator*(const RatFunc& a, const RatFunc& b);
RatFunc operator/(const RatFunc& a, const RatFunc& b);
RatFunc rat_func_neg(const RatFunc& a);

/// An element of the base field K: a rational number or a rational function.
class BaseElem {
 public:
  BaseElem() : v_(Rat(0)) {}
  explicit BaseElem(Rat r) : v_(std::move(r)) {}
  explicit BaseElem(RatFunc f) : v_(std::move(f)) {}

  bool is_rational() const { return std::holds_alternative<Rat>(v_); }
  const Rat& rat() const { return std::get<Rat>(v_); }
  const RatFunc& rat_func() const { return std::get<RatFunc>(v_); }

  bool is_zero() const;
  friend bool operator==(const BaseElem& a, const BaseElem& b) { return a.v_ == b.v_; }

  friend BaseElem operator+(const BaseElem& a, const BaseElem& b);
  friend BaseElem operator-(const BaseElem& a, const BaseElem& b);
  friend BaseElem operator*(const BaseElem& a, const BaseElem& b);
  friend BaseElem operator/(const BaseElem& a, const BaseElem& b);
  BaseElem operator-() const;

 private:
  std::variant<Rat, RatFunc> v_;
};

/// Dense univariate polynomial over K; leading coefficient nonzero.
struct BasePoly {
  std::vector<BaseElem> c;

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const BaseElem& leading() const { return c.back(); }
  void strip();
};

bool operator==(const BasePoly& a, const BasePoly& b);
BasePoly operator+(const BasePoly& a, const BasePoly& b);
BasePoly operator-(const BasePoly& a, const BasePoly& b);
BasePoly operator*(const BasePoly& a, const BasePoly& b);
BasePoly poly_scale(const BasePoly& a, const BaseElem& s);
/// (q, r), a = q*b + r, deg r < deg b; exact field arithmetic.
std::pair<BasePoly, BasePoly> poly_divmod(const BasePoly& a, const BasePoly& b);
BasePoly poly_derivative(const BasePoly& a);
BasePoly poly_gcd(BasePoly a, BasePoly b);
BasePoly poly_pow(const BasePoly& a, int e);

enum class BaseKind { PAdic, TAdic };

struct NormalizedInput {
  BasePoly poly;  // monic, every lower coefficient of positive value
  int shift = 0;  // x was replaced by x / pi^shift
};

/// (K, ν) with residue map, lifting, uniformizer and input normalization.
class BaseValuation {
 public:
  BaseValuation(BaseKind kind, std::uint64_t p);

  BaseKind kind() const { return kind_; }
  std::uint64_t p() const { return p_; }
  const FiniteFieldTower& residue_field() const { return tower_; }

  BaseElem zero() const;
  BaseElem one() const { return from_int(1); }
  BaseElem from_int(long v) const;
  BaseElem uniformizer() const;
  /// pi^k for any integer k (negative exponents give fractions in K).
  BaseElem uniformizer_pow(long k) const;

  /// ord_p / ord_t; Infinity iff a = 0.
  Value value(const BaseElem& a) const;
  /// Residue of a value-0 element in F_p (tower level 0).
  FFElem residue(const BaseElem& a) const;
  /// Canonical lift F_p -> K; residue(lift(r)) = r.
  BaseElem lift(const FFElem& r) const;

  std::string elem_str(const BaseElem& a) const;

  /// Monicizes f, verifies squarefreeness, and substitutes x -> x / pi^k with
  /// the least k >= 0 making every non-leading coefficient have positive
  /// value. The extensions of the scaled polynomial biject with those of f.
  NormalizedInput normalize_input(const BasePoly& f) const;

 private:
  BaseKind kind_;
  std::uint64_t p_;
  FiniteFieldTower tower_;
};

}  // namespace valext

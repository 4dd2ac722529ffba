/// \file rational.hpp
/// Exact rational numbers and values in the ordered group Q ∪ {∞}.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace valext {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline std::string rat_to_string(const Rat& r) {
  if (rat_den(r) == 1) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

/// Largest integer <= r.
inline Int rat_floor(const Rat& r) {
  Int q = rat_num(r) / rat_den(r);
  if (rat_num(r) < 0 && q * rat_den(r) != rat_num(r)) --q;
  return q;
}

inline Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

/// An element of the value group Q extended with the maximal element ∞.
/// ∞ absorbs addition and dominates every finite value.
class Value {
 public:
  Value() : finite_(true), v_(0) {}
  Value(Rat v) : finite_(true), v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  Value(long v) : finite_(true), v_(v) {}            // NOLINT(google-explicit-constructor)

  static Value infinity() {
    Value x;
    x.finite_ = false;
    return x;
  }

  bool is_finite() const { return finite_; }
  bool is_infinity() const { return !finite_; }

  const Rat& rat() const {
    if (!finite_) throw std::domain_error("Value: infinite value has no rational part");
    return v_;
  }

  friend Value operator+(const Value& a, const Value& b) {
    if (!a.finite_ || !b.finite_) return infinity();
    return Value(a.v_ + b.v_);
  }
  friend Value operator-(const Value& a, const Value& b) {
    if (!a.finite_ && b.finite_) return infinity();
    if (!a.finite_ || !b.finite_) throw std::domain_error("Value: ∞ - ∞ undefined");
    return Value(a.v_ - b.v_);
  }
  Value operator*(const Int& n) const {
    if (!finite_) return infinity();
    return Value(v_ * Rat(n));
  }

  friend bool operator==(const Value& a, const Value& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.v_ == b.v_;
  }
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }
  friend bool operator<(const Value& a, const Value& b) {
    if (!a.finite_) return false;       // ∞ < x never
    if (!b.finite_) return true;        // finite < ∞
    return a.v_ < b.v_;
  }
  friend bool operator>(const Value& a, const Value& b) { return b < a; }
  friend bool operator<=(const Value& a, const Value& b) { return !(b < a); }
  friend bool operator>=(const Value& a, const Value& b) { return !(a < b); }

  friend const Value& min(const Value& a, const Value& b) { return a < b ? a : b; }

  std::string str() const { return finite_ ? rat_to_string(v_) : "inf"; }

 private:
  bool finite_;
  Rat v_;
};

}  // namespace valext

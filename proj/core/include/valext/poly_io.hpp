/// \file poly_io.hpp
/// Text grammar for polynomials over the base field: terms c*x^k with
/// integer or rational c; over F_p(t) the coefficients are rational
/// expressions in t reduced mod p. parse_poly and print_poly round-trip.
#pragma once

#include "valext/base_field.hpp"
#include "valext/errors.hpp"

#include <cstddef>
#include <string>

namespace valext {

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " at offset " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

BasePoly parse_poly(const std::string& text, const BaseValuation& v);

std::string print_poly(const BaseValuation& v, const BasePoly& f, const std::string& var = "x");

}  // namespace valext

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace valext {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input polynomial has a repeated factor (or vanishing derivative, which on
/// the supported bases signals an inseparable extension).
struct NotSquarefree : Error {
  explicit NotSquarefree(std::string witness_gcd)
      : Error("input polynomial is not squarefree: gcd(f, f') = " + witness_gcd),
        witness(std::move(witness_gcd)) {}
  std::string witness;
};

/// The augmentation bound was exceeded before every branch terminated. The
/// beta sequence of the offending branch is kept for the diagnostic: a
/// bounded, strictly increasing sequence of key polynomial values is the
/// Case 2b regime (limit key polynomials), which cannot occur over the
/// supported defectless base fields and is out of scope by construction.
struct NonTermination : Error {
  NonTermination(std::string diagnostic, std::vector<std::string> betas)
      : Error(std::move(diagnostic)), beta_sequence(std::move(betas)) {}
  std::vector<std::string> beta_sequence;
};

/// A structural assertion derived from the theory failed; always a bug.
struct InvariantViolation : Error {
  using Error::Error;
};

/// Augmentation attempted with beta_next <= alpha_next * beta_top.
struct ConditionStarViolation : Error {
  ConditionStarViolation(const std::string& beta_next, const std::string& bound)
      : Error("Condition (*) violated: beta_next = " + beta_next +
              " must exceed alpha_next * beta_top = " + bound) {}
};

}  // namespace valext

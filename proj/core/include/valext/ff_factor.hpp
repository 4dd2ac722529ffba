/// \file ff_factor.hpp
/// Complete factorization of univariate polynomials over a finite field
/// tower level: squarefree decomposition, distinct-degree splitting and
/// seeded equal-degree splitting (Cantor-Zassenhaus; trace map in char 2).
#pragma once

#include "valext/finite_field.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace valext {

/// Monic irreducible factors with multiplicities, in canonical order
/// (degree, then lexicographic coefficient comparison). The leading
/// coefficient of g times the product of factors^multiplicities equals g.
/// Deterministic for a fixed seed.
std::vector<std::pair<FFPoly, int>> ff_factor(const FiniteFieldTower& t, const FFPoly& g,
                                              std::uint64_t seed = 0);

bool ff_is_irreducible(const FiniteFieldTower& t, const FFPoly& g, std::uint64_t seed = 0);

/// κ[y]/(m) on top of the tower. m must be monic irreducible of degree >= 2;
/// a reducible m is rejected with its factorization quoted as witness.
FiniteFieldTower ff_tower_extend(const FiniteFieldTower& t, const FFPoly& m, std::uint64_t seed = 0);

}  // namespace valext

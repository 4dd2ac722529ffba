/// \file report.hpp
/// Output renderers for extension reports: a per-leaf table, a byte-stable
/// JSON document, and the branching tree in DOT format.
#pragma once

#include "valext/extend.hpp"

#include <string>

namespace valext {

std::string render_table(const ExtensionReport& report);

/// Stable field order and "num/den" rational encodings; two runs with the
/// same input and seed produce byte-identical output.
std::string render_json(const ExtensionReport& report);

/// Tree with nodes labeled (deg Q, theta) and edges labeled
/// (beta, delta, psi, multiplicity).
std::string render_dot(const ExtensionReport& report);

}  // namespace valext

/// \file extend.hpp
/// Enumeration of all extensions of the base valuation to K[x]/(f): branch
/// over Newton polygon sides below the characteristic vertex and over the
/// irreducible factors of each side's residual polynomial, growing key
/// polynomial chains until every branch terminates. Each leaf carries the
/// ramification index e, residue degree f and defect d of one extension,
/// and the sum of e*f*d over all leaves equals deg f.
#pragma once

#include "valext/base_field.hpp"
#include "valext/maclane.hpp"
#include "valext/newton.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace valext {

struct Options {
  std::uint64_t seed = 0;
  int max_augmentations = 0;  // 0: use the default 16 * deg f
  bool check_invariants = true;
  bool parallel = false;  // explore root branches concurrently; output identical
};

struct ExtensionLeaf {
  long e = 1;  // ramification index: index of the base value group
  long f = 1;  // residue degree
  long d = 1;  // defect; 1 on the supported (defectless) base fields
  std::vector<Value> beta_chain;          // values of the key polynomial chain
  std::vector<std::string> key_polys;     // printed key polynomials, chain order
  BasePoly approx_factor;                 // final key polynomial; deg = e*f*d
  Value generator_value;                  // nu'(x) for the normalized input
  Value generator_value_original;         // shifted back to the original input
  std::optional<InductiveValuation> chain;  // levels with finite beta
  bool exact_factor = false;  // approx_factor has value infinity (divides f)
};

struct TreeEdge {
  Rat beta;             // side chosen (negative slope)
  int side_delta = 0;   // delta of that side
  std::string psi;      // printed residual factor
  int psi_degree = 1;
  int mult = 1;         // multiplicity of psi in the residual polynomial
  int alpha_child = 1;
  bool infinity_edge = false;  // key polynomial divides f exactly
  int child_node = -1;         // index into ExtensionReport::nodes
  int child_leaf = -1;         // index into ExtensionReport::leaves
};

struct TreeNode {
  int depth = 1;       // chain length including the pending key polynomial
  int key_degree = 1;
  int theta = 0;       // characteristic index carried from the parent edge
  std::string key;     // printed pending key polynomial
  std::vector<PolygonPoint> points;  // polygon input points of f at this node
  std::vector<TreeEdge> edges;
};

struct InvariantRecord {
  std::string name;
  std::string context;
  bool pass = true;
};

struct ExtensionReport {
  BaseKind base_kind = BaseKind::PAdic;
  std::uint64_t p = 2;
  std::string input_poly;       // canonical text of the original input
  std::string normalized_poly;  // canonical text after normalization
  int shift = 0;
  int n = 0;
  std::vector<TreeNode> nodes;  // nodes[0] is the root
  std::vector<ExtensionLeaf> leaves;
  bool unique = false;
  long sum_efd = 0;
  std::vector<InvariantRecord> invariants;
  Options options;
};

/// Runs the full enumeration. Throws NotSquarefree and NonTermination; an
/// InvariantViolation always indicates an internal bug.
ExtensionReport enumerate_extensions(const BasePoly& f, const BaseValuation& v,
                                     const Options& opts = Options{});

/// nu'(h) in the extension a leaf encodes, for deg h < n. h is reduced
/// modulo the final key polynomial first, then evaluated with the chain.
Value extension_value(const BaseValuation& v, const ExtensionLeaf& leaf, const BasePoly& h);

/// Exact check of sum e_j * f_j * d_j = n.
bool ramification_sum_check(const ExtensionReport& report);

/// True iff every node branches exactly once (single side below the
/// characteristic vertex, single irreducible residual factor). Must agree
/// with leaves.size() == 1; enumerate_extensions records that agreement.
bool is_unique(const ExtensionReport& report);

}  // namespace valext

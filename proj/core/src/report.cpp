#include "valext/report.hpp"

#include <json.hpp>

#include <sstream>

namespace valext {

namespace {

const char* base_name(BaseKind k) { return k == BaseKind::PAdic ? "q" : "fpt"; }

}  // namespace

std::string render_table(const ExtensionReport& report) {
  std::ostringstream os;
  for (const auto& leaf : report.leaves) {
    os << "e=" << leaf.e << " f=" << leaf.f << " d=" << leaf.d << " beta-chain=";
    for (std::size_t i = 0; i < leaf.beta_chain.size(); ++i) {
      if (i) os << ",";
      os << leaf.beta_chain[i].str();
    }
    os << " nu(x)=" << leaf.generator_value_original.str()
       << " unique=" << (report.unique ? "yes" : "no") << "\n";
  }
  os << "sum e*f*d = " << report.sum_efd << " = deg f";
  if (report.shift > 0) os << "  (input scaled by pi^" << report.shift << ")";
  os << "\n";
  return os.str();
}

std::string render_json(const ExtensionReport& report) {
  nlohmann::ordered_json j;
  j["input"] = {
      {"base", base_name(report.base_kind)},
      {"p", report.p},
      {"poly", report.input_poly},
      {"shift", report.shift},
  };
  j["leaves"] = nlohmann::ordered_json::array();
  for (const auto& leaf : report.leaves) {
    nlohmann::ordered_json jl;
    jl["e"] = leaf.e;
    jl["f"] = leaf.f;
    jl["d"] = leaf.d;
    auto betas = nlohmann::ordered_json::array();
    for (const auto& b : leaf.beta_chain) betas.push_back(b.str());
    jl["beta_chain"] = betas;
    jl["key_polynomials"] = leaf.key_polys;
    jl["generator_value"] = leaf.generator_value_original.str();
    jl["generator_value_normalized"] = leaf.generator_value.str();
    j["leaves"].push_back(jl);
  }
  j["unique"] = report.unique;
  j["sum_efd"] = report.sum_efd;
  j["invariants_checked"] = report.invariants.size();
  return j.dump(2) + "\n";
}

std::string render_dot(const ExtensionReport& report) {
  std::ostringstream os;
  os << "digraph U {\n";
  os << "  rankdir=TB;\n";
  for (std::size_t i = 0; i < report.nodes.size(); ++i) {
    const TreeNode& n = report.nodes[i];
    os << "  n" << i << " [label=\"deg " << n.key_degree << ", theta " << n.theta << "\"];\n";
  }
  for (std::size_t i = 0; i < report.leaves.size(); ++i) {
    const ExtensionLeaf& l = report.leaves[i];
    os << "  l" << i << " [shape=box,label=\"e=" << l.e << " f=" << l.f << " d=" << l.d << "\"];\n";
  }
  for (std::size_t i = 0; i < report.nodes.size(); ++i) {
    for (const TreeEdge& e : report.nodes[i].edges) {
      std::string label;
      if (e.infinity_edge) {
        label = "beta=inf";
      } else {
        label = "beta=" + rat_to_string(e.beta) + ", delta=" + std::to_string(e.side_delta) +
                ", psi=" + e.psi + (e.mult > 1 ? "^" + std::to_string(e.mult) : "");
      }
      os << "  n" << i << " -> ";
      if (e.child_node >= 0)
        os << "n" << e.child_node;
      else
        os << "l" << e.child_leaf;
      os << " [label=\"" << label << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace valext

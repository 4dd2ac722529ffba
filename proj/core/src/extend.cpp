#include "valext/extend.hpp"

#include "valext/errors.hpp"
#include "valext/ff_factor.hpp"
#include "valext/poly_io.hpp"

#include <algorithm>
#include <future>
#include <sstream>

namespace valext {

namespace {

struct WalkCtx {
  const BaseValuation* base = nullptr;
  const BasePoly* f = nullptr;
  int n = 0;
  Options opts;
  int max_depth = 0;
};

struct WalkResult {
  std::vector<TreeNode> nodes;  // nodes[0] = subtree root
  std::vector<ExtensionLeaf> leaves;
  std::vector<InvariantRecord> inv;
  bool unique = true;
};

void record(WalkResult& r, const WalkCtx& ctx, const std::string& name, const std::string& context,
            bool pass) {
  if (!ctx.opts.check_invariants) return;
  r.inv.push_back(InvariantRecord{name, context, pass});
  if (!pass) throw InvariantViolation(name + " failed at " + context);
}

std::vector<std::string> beta_strings(const std::optional<InductiveValuation>& iv) {
  std::vector<std::string> out;
  if (iv)
    for (int i = 1; i <= iv->length(); ++i) out.push_back(rat_to_string(iv->level(i).beta));
  return out;
}

ExtensionLeaf make_leaf(const WalkCtx& ctx, std::optional<InductiveValuation> chain,
                        int edge_psi_degree, BasePoly approx, bool exact_factor) {
  ExtensionLeaf leaf;
  leaf.e = chain ? chain->group_denominator().convert_to<long>() : 1;
  // edge_psi_degree is the residue growth of the final key polynomial: the
  // new factor for a multiplicity-1 leaf, the node's own residual minimal
  // polynomial when that key polynomial divides f exactly.
  leaf.f = (chain ? chain->residue_degree() : 1) * edge_psi_degree;
  leaf.d = 1;  // supported base fields are defectless for separable extensions
  leaf.exact_factor = exact_factor;
  if (chain) {
    for (int i = 1; i <= chain->length(); ++i) {
      leaf.beta_chain.push_back(Value(chain->level(i).beta));
      leaf.key_polys.push_back(print_poly(*ctx.base, chain->level(i).key));
    }
  }
  if (exact_factor) leaf.beta_chain.push_back(Value::infinity());
  leaf.key_polys.push_back(print_poly(*ctx.base, approx));
  leaf.generator_value = chain ? Value(chain->level(1).beta) : Value::infinity();
  leaf.approx_factor = std::move(approx);
  leaf.chain = std::move(chain);
  if (leaf.e * leaf.f * leaf.d != leaf.approx_factor.degree())
    throw InvariantViolation("leaf e*f*d does not equal the degree of its key polynomial");
  return leaf;
}

struct PendingChild {
  TreeEdge edge;
  InductiveValuation iv;
  BasePoly q_next;
  FFPoly psi;
  int theta = 1;
  int alpha = 1;
  std::pair<int, std::optional<int>> delta_eps;
  Value f_value;
};

WalkResult walk(const WalkCtx& ctx, const std::optional<InductiveValuation>& iv_prev,
                const BasePoly& q, const FFPoly& psi_edge, int theta, int alpha_l,
                std::optional<std::pair<int, std::optional<int>>> parent_delta_eps,
                std::optional<Value> parent_f_value, bool parallel_here);

WalkResult run_child(const WalkCtx& ctx, const PendingChild& pc) {
  return walk(ctx, pc.iv, pc.q_next, pc.psi, pc.theta, pc.alpha, pc.delta_eps, pc.f_value, false);
}

WalkResult walk(const WalkCtx& ctx, const std::optional<InductiveValuation>& iv_prev,
                const BasePoly& q, const FFPoly& psi_edge, int theta, int alpha_l,
                std::optional<std::pair<int, std::optional<int>>> parent_delta_eps,
                std::optional<Value> parent_f_value, bool parallel_here) {
  int depth = (iv_prev ? iv_prev->length() : 0) + 1;
  if (depth > ctx.max_depth) {
    auto betas = beta_strings(iv_prev);
    std::ostringstream os;
    os << "augmentation bound (" << ctx.max_depth << ") exceeded; key polynomial values so far:";
    for (const auto& b : betas) os << " " << b;
    os << ". A strictly increasing, bounded value sequence is the limit-key-polynomial regime"
          " (Case 2b), which cannot occur over the supported defectless base fields.";
    throw NonTermination(os.str(), betas);
  }

  WalkResult res;
  TreeNode node;
  node.depth = depth;
  node.key_degree = q.degree();
  node.theta = theta;
  node.key = print_poly(*ctx.base, q);

  auto exp = standard_expansion(*ctx.f, q);
  std::vector<PolygonPoint> pts;
  pts.reserve(exp.size());
  for (std::size_t j = 0; j < exp.size(); ++j) {
    Value vj;
    if (iv_prev)
      vj = iv_prev->value(exp[j]);
    else
      vj = exp[j].is_zero() ? Value::infinity() : ctx.base->value(exp[j].c[0]);
    pts.push_back(PolygonPoint{static_cast<int>(j), vj});
  }
  node.points = pts;
  int node_index_sum = 0;  // sum of alpha * theta over emitted children

  // Exact division event: q itself generates an extension with value ∞.
  bool exact_divides = exp[0].is_zero();
  if (exact_divides) {
    TreeEdge edge;
    edge.infinity_edge = true;
    edge.beta = Rat(0);
    edge.psi = "-";
    edge.mult = 1;
    edge.alpha_child = 1;
    edge.child_leaf = static_cast<int>(res.leaves.size());
    res.leaves.push_back(make_leaf(ctx, iv_prev, psi_edge.degree(), q, true));
    node.edges.push_back(std::move(edge));
    node_index_sum += 1;
  }

  NewtonPolygon poly =
      lower_hull(pts, iv_prev ? iv_prev->group_denominator() : Int(1));
  record(res, ctx, "hull_min_index",
         "depth " + std::to_string(depth) + " of " + node.key,
         poly.min_index() == (exact_divides ? 1 : 0));
  bool theta_is_vertex = false;
  for (const auto& vtx : poly.vertices())
    if (vtx.index == theta) theta_is_vertex = true;
  record(res, ctx, "theta_is_hull_vertex", "depth " + std::to_string(depth), theta_is_vertex);

  std::vector<PendingChild> pending;

  for (const auto& side : poly.sides()) {
    if (side.right.index > theta) continue;  // side above the characteristic vertex
    // Condition (*) is automatic for sides below the characteristic vertex.
    if (iv_prev) {
      bool cond = side.beta > Rat(alpha_l) * iv_prev->top().beta;
      record(res, ctx, "condition_star",
             "beta " + rat_to_string(side.beta) + " at depth " + std::to_string(depth), cond);
      if (!cond) continue;
    }
    InductiveValuation iv = iv_prev ? iv_prev->augment(q, side.beta, psi_edge, ctx.opts.seed)
                                    : InductiveValuation::initial(*ctx.base, side.beta);
    Value f_val = iv.value(*ctx.f);
    if (parent_f_value)
      record(res, ctx, "f_value_strictly_increases",
             f_val.str() + " > " + parent_f_value->str(), *parent_f_value < f_val);

    PolygonInvariants pinv = polygon_invariants(poly, side.beta);
    if (parent_delta_eps) {
      record(res, ctx, "alpha_delta_non_increasing",
             "depth " + std::to_string(depth),
             alpha_l * pinv.delta <= parent_delta_eps->first);
      bool lex_ok;
      if (pinv.delta != parent_delta_eps->first) {
        lex_ok = pinv.delta < parent_delta_eps->first;
      } else {
        // equal delta: compare epsilon with ∞ maximal
        lex_ok = !parent_delta_eps->second ||
                 (pinv.epsilon && *pinv.epsilon <= *parent_delta_eps->second);
      }
      record(res, ctx, "delta_epsilon_lex_non_increasing", "depth " + std::to_string(depth), lex_ok);
    }

    FFPoly r = iv.residual_polynomial(*ctx.f, side);
    record(res, ctx, "residual_degree",
           "beta " + rat_to_string(side.beta),
           r.degree() * side.e_rel == side.length);
    auto factors = ff_factor(iv.tower(), r, ctx.opts.seed);

    for (const auto& [psi, mult] : factors) {
      auto [q_next, alpha_next] = iv.lift_key(side, psi);
      TreeEdge edge;
      edge.beta = side.beta;
      edge.side_delta = pinv.delta;
      edge.psi = iv.tower().poly_str(psi);
      edge.psi_degree = psi.degree();
      edge.mult = mult;
      edge.alpha_child = alpha_next;
      node_index_sum += alpha_next * mult;
      if (mult == 1) {
        // Multiplicity one: the branch is complete and q_next cuts out the
        // extension; one more augmentation would make the initial form linear.
        res.leaves.push_back(make_leaf(ctx, iv, psi.degree(), q_next, false));
        edge.child_leaf = static_cast<int>(res.leaves.size()) - 1;
        node.edges.push_back(std::move(edge));
      } else {
        pending.push_back(PendingChild{std::move(edge), iv, std::move(q_next), psi, mult,
                                       alpha_next, {pinv.delta, pinv.epsilon}, f_val});
      }
    }
  }

  record(res, ctx, "sum_alpha_theta",
         std::to_string(node_index_sum) + " = " + std::to_string(theta) + " at depth " +
             std::to_string(depth),
         node_index_sum == theta);

  res.unique = (node.edges.size() + pending.size()) == 1;
  res.nodes.push_back(std::move(node));

  // Recurse; children are merged in deterministic (side, factor) order no
  // matter how they were scheduled.
  std::vector<WalkResult> children(pending.size());
  if (parallel_here && pending.size() > 1) {
    std::vector<std::future<WalkResult>> futs;
    futs.reserve(pending.size());
    for (const auto& pc : pending)
      futs.push_back(std::async(std::launch::async, [&ctx, &pc] { return run_child(ctx, pc); }));
    for (std::size_t i = 0; i < futs.size(); ++i) children[i] = futs[i].get();
  } else {
    for (std::size_t i = 0; i < pending.size(); ++i) children[i] = run_child(ctx, pending[i]);
  }

  for (std::size_t i = 0; i < pending.size(); ++i) {
    WalkResult& ch = children[i];
    TreeEdge edge = pending[i].edge;
    int node_off = static_cast<int>(res.nodes.size());
    int leaf_off = static_cast<int>(res.leaves.size());
    edge.child_node = node_off;
    for (TreeNode& cn : ch.nodes) {
      for (TreeEdge& ce : cn.edges) {
        if (ce.child_node >= 0) ce.child_node += node_off;
        if (ce.child_leaf >= 0) ce.child_leaf += leaf_off;
      }
      res.nodes.push_back(std::move(cn));
    }
    for (ExtensionLeaf& lf : ch.leaves) res.leaves.push_back(std::move(lf));
    for (InvariantRecord& ir : ch.inv) res.inv.push_back(std::move(ir));
    res.unique = res.unique && ch.unique;
    res.nodes[0].edges.push_back(std::move(edge));
  }
  return res;
}

void dfs_leaf_order(const std::vector<TreeNode>& nodes, int node_id, std::vector<int>& order) {
  for (const auto& e : nodes[static_cast<std::size_t>(node_id)].edges) {
    if (e.child_leaf >= 0)
      order.push_back(e.child_leaf);
    else if (e.child_node >= 0)
      dfs_leaf_order(nodes, e.child_node, order);
  }
}

}  // namespace

ExtensionReport enumerate_extensions(const BasePoly& f, const BaseValuation& v, const Options& opts) {
  ExtensionReport report;
  report.base_kind = v.kind();
  report.p = v.p();
  report.options = opts;
  report.input_poly = print_poly(v, f);

  NormalizedInput norm = v.normalize_input(f);
  report.normalized_poly = print_poly(v, norm.poly);
  report.shift = norm.shift;
  report.n = norm.poly.degree();

  WalkCtx ctx;
  ctx.base = &v;
  ctx.f = &norm.poly;
  ctx.n = report.n;
  ctx.opts = opts;
  ctx.max_depth = opts.max_augmentations > 0 ? opts.max_augmentations : 16 * report.n;

  BasePoly x;
  x.c = {v.zero(), v.one()};
  FFPoly psi_root = v.residue_field().poly_var(0);

  WalkResult res = walk(ctx, std::nullopt, x, psi_root, report.n, 1, std::nullopt, std::nullopt,
                        opts.parallel);

  report.nodes = std::move(res.nodes);
  report.leaves = std::move(res.leaves);
  report.invariants = std::move(res.inv);

  // Leaves in tree order: depth-first along sides of decreasing beta and
  // factors in canonical order, independent of scheduling.
  std::vector<int> order;
  dfs_leaf_order(report.nodes, 0, order);
  if (order.size() != report.leaves.size())
    throw InvariantViolation("leaf bookkeeping lost a branch");
  std::vector<int> new_index(order.size());
  std::vector<ExtensionLeaf> ordered;
  ordered.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    new_index[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    ordered.push_back(std::move(report.leaves[static_cast<std::size_t>(order[i])]));
  }
  report.leaves = std::move(ordered);
  for (auto& nodeRef : report.nodes)
    for (auto& e : nodeRef.edges)
      if (e.child_leaf >= 0) e.child_leaf = new_index[static_cast<std::size_t>(e.child_leaf)];

  report.sum_efd = 0;
  for (auto& leaf : report.leaves) {
    report.sum_efd += leaf.e * leaf.f * leaf.d;
    leaf.generator_value_original =
        leaf.generator_value.is_finite()
            ? Value(leaf.generator_value.rat() - Rat(report.shift))
            : Value::infinity();
  }
  if (report.sum_efd != report.n)
    throw InvariantViolation("sum of e*f*d = " + std::to_string(report.sum_efd) +
                             " differs from n = " + std::to_string(report.n));

  report.unique = report.leaves.size() == 1;
  if (res.unique != report.unique)
    throw InvariantViolation("structural uniqueness disagrees with the leaf count");
  if (opts.check_invariants)
    report.invariants.push_back(
        InvariantRecord{"unique_iff_single_leaf", std::to_string(report.leaves.size()), true});
  return report;
}

Value extension_value(const BaseValuation& v, const ExtensionLeaf& leaf, const BasePoly& h) {
  if (h.is_zero()) return Value::infinity();
  BasePoly r = poly_divmod(h, leaf.approx_factor).second;
  if (r.is_zero()) return Value::infinity();
  if (leaf.chain) return leaf.chain->value(r);
  return v.value(r.c[0]);
}

bool ramification_sum_check(const ExtensionReport& report) {
  long sum = 0;
  for (const auto& leaf : report.leaves) sum += leaf.e * leaf.f * leaf.d;
  return sum == report.n;
}

bool is_unique(const ExtensionReport& report) {
  for (const auto& node : report.nodes)
    if (node.edges.size() != 1) return false;
  return true;
}

}  // namespace valext

#include "treeramsey/tree.hpp"

#include <algorithm>

namespace trs {

const char* errc_name(errc e) {
  switch (e) {
    case errc::node_not_in_tree: return "node-not-in-tree";
    case errc::tree_not_prefix_closed: return "tree-not-prefix-closed";
    case errc::tree_exceeds_horizon: return "tree-exceeds-horizon";
    case errc::budget_exceeded: return "budget-exceeded";
    case errc::empty_value_set: return "empty-value-set";
    case errc::wrong_vector_length: return "wrong-vector-length";
    case errc::union_clause_violated: return "union-clause-violated";
    case errc::digit_out_of_range: return "digit-out-of-range";
    case errc::node_without_frontier_extension: return "node-without-frontier-extension";
    case errc::sub_not_inside_base: return "sub-not-inside-base";
    case errc::base_mismatch: return "base-mismatch";
    case errc::arity_mismatch: return "arity-mismatch";
    case errc::no_base_for_leaf: return "no-base-for-leaf";
    case errc::stage_missing: return "stage-missing";
    case errc::triple_allocation_failed: return "triple-allocation-failed";
    case errc::layer_tree_not_perfect: return "layer-tree-not-perfect";
    case errc::orphan_tree: return "orphan-tree";
    case errc::uncovered_leaf: return "uncovered-leaf";
    case errc::overlapping_trees: return "overlapping-trees";
    case errc::precondition_violated: return "precondition-violated";
    case errc::horizon_mismatch: return "horizon-mismatch";
    case errc::no_common_element: return "no-common-element";
    case errc::no_blocking_set: return "no-blocking-set";
    case errc::horizon_too_shallow: return "horizon-too-shallow";
    case errc::unknown_suite: return "unknown-suite";
    case errc::parse_error: return "parse-error";
    case errc::invalid_argument: return "invalid-argument";
  }
  return "unknown-error";
}

finite_tree::finite_tree(std::vector<node_id> nodes) : nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end());
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
}

finite_tree finite_tree::full_binary(int depth) {
  std::vector<node_id> nodes;
  nodes.emplace_back();
  for (size_t i = 0; i < nodes.size(); i++) {
    node_id n = nodes[i];
    if (n.length() + 1 < depth) {
      nodes.push_back(n.child(0));
      nodes.push_back(n.child(1));
    }
  }
  if (depth <= 0) nodes.clear();
  return finite_tree(std::move(nodes));
}

bool finite_tree::contains(node_id n) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), n);
}

int finite_tree::tlen(node_id rho) const {
  if (!contains(rho)) fail(errc::node_not_in_tree, rho.str().empty() ? "<root>" : rho.str());
  int count = 1;
  for (int m = 0; m < rho.length(); m++)
    if (contains(rho.prefix(m))) count++;
  return count;
}

int finite_tree::max_tlen() const {
  int best = 0;
  for (node_id n : nodes_) best = std::max(best, tlen(n));
  return best;
}

std::vector<node_id> finite_tree::leaf_nodes() const {
  if (nodes_.empty()) return {node_id::root()};
  std::vector<node_id> out;
  for (node_id n : nodes_) {
    bool has_ext = false;
    for (node_id m : nodes_)
      if (m.strictly_extends(n)) { has_ext = true; break; }
    if (!has_ext) out.push_back(n);
  }
  return out;
}

std::vector<node_id> finite_tree::roots() const {
  std::vector<node_id> out;
  for (node_id n : nodes_) {
    bool has_pred = false;
    for (int m = 0; m < n.length(); m++)
      if (contains(n.prefix(m))) { has_pred = true; break; }
    if (!has_pred) out.push_back(n);
  }
  return out;
}

std::vector<node_id> finite_tree::immediate_successors(node_id rho) const {
  std::vector<node_id> out;
  for (node_id n : nodes_) {
    if (!n.strictly_extends(rho)) continue;
    bool intermediate = false;
    for (int m = rho.length() + 1; m < n.length(); m++)
      if (contains(n.prefix(m))) { intermediate = true; break; }
    if (!intermediate) out.push_back(n);
  }
  return out;
}

finite_tree finite_tree::cone(node_id rho) const {
  std::vector<node_id> out;
  for (node_id n : nodes_)
    if (n.extends(rho)) out.push_back(n);
  return finite_tree(std::move(out));
}

std::optional<int> finite_tree::perfect_height() const {
  if (nodes_.empty()) return 0;
  if (roots().size() != 1) return std::nullopt;
  int h = max_tlen();
  for (node_id n : nodes_) {
    auto succ = immediate_successors(n);
    if (succ.empty()) {
      if (tlen(n) != h) return std::nullopt;  // leaf above the frontier
    } else if (succ.size() != 2) {
      return std::nullopt;
    }
  }
  return h;
}

std::strong_ordering finite_tree::operator<=>(const finite_tree& o) const {
  return std::lexicographical_compare_three_way(nodes_.begin(), nodes_.end(),
                                                o.nodes_.begin(), o.nodes_.end());
}

finite_tree finite_tree::set_union(const finite_tree& o) const {
  std::vector<node_id> all = nodes_;
  all.insert(all.end(), o.nodes_.begin(), o.nodes_.end());
  return finite_tree(std::move(all));
}

bool antichain::is_antichain(const std::vector<node_id>& nodes) {
  for (size_t i = 0; i < nodes.size(); i++)
    for (size_t j = i + 1; j < nodes.size(); j++)
      if (node_id::compatible(nodes[i], nodes[j]) && !(nodes[i] == nodes[j])) return false;
  return true;
}

antichain antichain::make(std::vector<node_id> nodes) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  if (!is_antichain(nodes)) fail(errc::invalid_argument, "nodes are not pairwise incompatible");
  antichain a;
  a.nodes_ = std::move(nodes);
  return a;
}

bool antichain::contains(node_id n) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), n);
}

antichain leaves(const finite_tree& t) { return antichain::make(t.leaf_nodes()); }

bool is_l_branching(const finite_tree& t, node_id over, int l, branching_mode mode) {
  finite_tree cone = t.cone(over);
  if (cone.empty()) return false;
  for (node_id sigma : cone) {
    auto succ = t.immediate_successors(sigma);
    if (succ.empty() && mode == branching_mode::frontier_exempt) continue;
    if (static_cast<int>(succ.size()) < l) return false;
  }
  return true;
}

bool extends_tree(const finite_tree& bigger, const finite_tree& smaller) {
  for (node_id n : smaller)
    if (!bigger.contains(n)) return false;
  auto ls = smaller.leaf_nodes();
  for (node_id n : bigger) {
    if (smaller.contains(n)) continue;
    bool above = false;
    for (node_id leaf : ls)
      if (n.extends(leaf)) { above = true; break; }
    if (!above) return false;
  }
  return true;
}

bool is_cover(const antichain& candidate, const finite_tree& covered, bool one_one) {
  for (node_id sigma : covered) {
    bool hit = false;
    for (node_id tau : candidate)
      if (tau.extends(sigma)) { hit = true; break; }
    if (!hit) return false;
  }
  if (!one_one) return true;
  auto ls = covered.leaf_nodes();
  if (candidate.size() != ls.size()) return false;
  // Each candidate member extends at most one leaf (leaves are incompatible);
  // with equal cardinalities a total surjection onto the leaves is a bijection.
  std::vector<bool> leaf_hit(ls.size(), false);
  for (node_id tau : candidate) {
    bool matched = false;
    for (size_t i = 0; i < ls.size(); i++) {
      if (tau.extends(ls[i])) {
        leaf_hit[i] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  for (bool h : leaf_hit)
    if (!h) return false;
  return true;
}

bool is_positive_measure(const finite_tree& t, rational r) {
  if (r.num <= 0 || r.den <= 0 || r.num > r.den)
    fail(errc::invalid_argument, "measure bound must lie in (0,1]");
  for (node_id n : t)
    if (n.length() > 0 && !t.contains(n.parent())) fail(errc::tree_not_prefix_closed, n.str());
  int height = 0;
  for (node_id n : t) height = std::max(height, n.length());
  if (t.empty()) return true;
  for (int s = 0; s <= height; s++) {
    long long count = 0;
    for (node_id n : t)
      if (n.length() == s) count++;
    // count / 2^s > num/den  <=>  count * den > num * 2^s
    if (count * r.den <= r.num * (1ll << s)) return false;
  }
  return true;
}

}  // namespace trs

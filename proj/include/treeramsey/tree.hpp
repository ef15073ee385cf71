#pragma once

#include <optional>
#include <vector>

#include "treeramsey/node.hpp"

namespace trs {

// A finite set of nodes ordered by the prefix relation.  Not required to be
// closed under initial segments; may have several roots.  Nodes are kept
// sorted in canonical (length-lex) order, so iteration is deterministic.
class finite_tree {
 public:
  finite_tree() = default;
  explicit finite_tree(std::vector<node_id> nodes);

  // All of 2^{<depth}: nodes of length < depth.
  static finite_tree full_binary(int depth);

  bool empty() const { return nodes_.empty(); }
  size_t size() const { return nodes_.size(); }
  bool contains(node_id n) const;
  const std::vector<node_id>& nodes() const { return nodes_; }
  auto begin() const { return nodes_.begin(); }
  auto end() const { return nodes_.end(); }

  // T-length |rho|_T: one plus the number of proper prefixes of rho in the
  // tree.  rho must be a member.
  int tlen(node_id rho) const;

  int max_tlen() const;  // 0 for the empty tree

  // Nodes with no proper extension in the tree; for the empty tree, {root}.
  std::vector<node_id> leaf_nodes() const;

  // Minimal nodes under the prefix order.
  std::vector<node_id> roots() const;

  // Immediate successors of rho inside the tree (rho need not be a member;
  // successors of a non-member are the minimal members strictly above it).
  std::vector<node_id> immediate_successors(node_id rho) const;

  // T cap [rho]^<=: members extending rho (reflexively).
  finite_tree cone(node_id rho) const;

  // Height h with the tree order-isomorphic to 2^{<h}; empty tree gives 0.
  std::optional<int> perfect_height() const;

  bool operator==(const finite_tree& o) const { return nodes_ == o.nodes_; }
  // Canonical order on trees: lexicographic over the sorted node lists.
  std::strong_ordering operator<=>(const finite_tree& o) const;

  finite_tree set_union(const finite_tree& o) const;

 private:
  std::vector<node_id> nodes_;
};

// A set of pairwise incompatible nodes.
class antichain {
 public:
  antichain() = default;
  // Validates pairwise incompatibility.
  static antichain make(std::vector<node_id> nodes);
  static bool is_antichain(const std::vector<node_id>& nodes);

  bool empty() const { return nodes_.empty(); }
  size_t size() const { return nodes_.size(); }
  bool contains(node_id n) const;
  const std::vector<node_id>& nodes() const { return nodes_; }
  auto begin() const { return nodes_.begin(); }
  auto end() const { return nodes_.end(); }
  bool operator==(const antichain& o) const { return nodes_ == o.nodes_; }

 private:
  std::vector<node_id> nodes_;
};

antichain leaves(const finite_tree& t);

enum class branching_mode { frontier_exempt, strict };

// True iff the cone above `over` is nonempty and every member of it that the
// mode does not exempt has at least l pairwise incompatible immediate
// extensions in the tree.
bool is_l_branching(const finite_tree& t, node_id over, int l,
                    branching_mode mode = branching_mode::frontier_exempt);

// F' extends F: F subset of F' and every node of F' \ F extends a leaf of F.
bool extends_tree(const finite_tree& bigger, const finite_tree& smaller);

// Every node of `covered` has a (reflexive) extension in `candidate`.  With
// one_one, additionally the assignment from candidate members to leaves of
// `covered` is a bijection.
bool is_cover(const antichain& candidate, const finite_tree& covered, bool one_one);

struct rational {
  long long num;
  long long den;
};

// Requires a prefix-closed tree.  Level s holds the nodes with s proper
// ancestors (equivalently string length s, given prefix closure); true iff
// |T_s|/2^s > r at every level up to the height.
bool is_positive_measure(const finite_tree& t, rational r);

}  // namespace trs

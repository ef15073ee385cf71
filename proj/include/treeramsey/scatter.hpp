#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "treeramsey/node.hpp"

namespace trs {

// An indexed family V_0..V_{d-1} of nonempty finite sets of nodes.
class set_family {
 public:
  static set_family make(std::vector<std::vector<node_id>> members);

  int count() const { return static_cast<int>(members_.size()); }
  const std::vector<node_id>& member(int m) const { return members_[m]; }
  const std::vector<std::vector<node_id>>& members() const { return members_; }

  // Subfamily restricted to the given indices (must be nonempty).
  set_family restricted(const std::vector<int>& indices) const;

 private:
  std::vector<std::vector<node_id>> members_;
};

// An ordered partition W_0..W_{l-1} of {0..d-1}; empty blocks permitted.
class index_partition {
 public:
  static index_partition make(int d, std::vector<std::vector<int>> blocks);
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<int>& block(int i) const { return blocks_[i]; }

 private:
  std::vector<std::vector<int>> blocks_;
};

bool is_blocking_set(const std::vector<node_id>& u, const set_family& family);

// Canonically least blocking set of size <= l (smaller sets first, ties by
// lexicographic order on the sorted elements), or absent.
std::optional<std::vector<node_id>> find_blocking_set(const set_family& family, int l);

// Direct quantification over all l-partitions of the index set: true iff every
// one has a nonempty block whose members intersect to the empty set.  This is
// the definitional route; its duality with find_blocking_set is a theorem the
// suites verify, not an assumption.
bool is_scattered(const set_family& family, int l);

// True iff every k-partition has a nonempty block whose restricted subfamily
// is l-scattered.  An empty block never serves as the witness.
bool is_group_scattered(const set_family& family, int k, int l);

// Visits all l-partitions of {0..d-1} (as block-assignment functions) until
// the visitor returns false; returns whether all partitions were accepted.
bool for_each_partition(int d, int l, const std::function<bool(const std::vector<int>&)>& visit);

}  // namespace trs

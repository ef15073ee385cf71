#include "treeramsey/scatter.hpp"

#include <algorithm>
#include <functional>

namespace trs {

set_family set_family::make(std::vector<std::vector<node_id>> members) {
  if (members.empty()) fail(errc::invalid_argument, "family needs at least one member");
  for (auto& v : members) {
    if (v.empty()) fail(errc::invalid_argument, "family members must be nonempty");
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  set_family f;
  f.members_ = std::move(members);
  return f;
}

set_family set_family::restricted(const std::vector<int>& indices) const {
  std::vector<std::vector<node_id>> sub;
  for (int m : indices) sub.push_back(members_[m]);
  return make(std::move(sub));
}

index_partition index_partition::make(int d, std::vector<std::vector<int>> blocks) {
  std::vector<bool> seen(d, false);
  for (auto& b : blocks)
    for (int m : b) {
      if (m < 0 || m >= d || seen[m]) fail(errc::invalid_argument, "blocks must be disjoint subsets of the index set");
      seen[m] = true;
    }
  for (bool s : seen)
    if (!s) fail(errc::invalid_argument, "blocks must exhaust the index set");
  index_partition p;
  p.blocks_ = std::move(blocks);
  return p;
}

bool is_blocking_set(const std::vector<node_id>& u, const set_family& family) {
  for (int m = 0; m < family.count(); m++) {
    bool hit = false;
    for (node_id x : u)
      if (std::binary_search(family.member(m).begin(), family.member(m).end(), x)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

namespace {

// Exact search over subsets of the union universe, smallest size first and
// elements in canonical order, with a cheap branch-and-bound cut: a partial
// choice is abandoned once the remaining budget cannot hit some untouched
// member drawn from the elements still ahead.
bool search_blocking(const set_family& family, const std::vector<node_id>& universe,
                     size_t start, int budget, std::vector<node_id>& chosen,
                     std::vector<int>& uncovered_count) {
  bool all_hit = true;
  for (int c : uncovered_count)
    if (c > 0) { all_hit = false; break; }
  if (all_hit) return true;
  if (budget == 0) return false;
  for (size_t i = start; i < universe.size(); i++) {
    node_id x = universe[i];
    chosen.push_back(x);
    std::vector<int> touched;
    for (int m = 0; m < family.count(); m++)
      if (uncovered_count[m] > 0 &&
          std::binary_search(family.member(m).begin(), family.member(m).end(), x)) {
        uncovered_count[m] = 0;
        touched.push_back(m);
      }
    if (!touched.empty() && search_blocking(family, universe, i + 1, budget - 1, chosen, uncovered_count))
      return true;
    for (int m : touched) uncovered_count[m] = 1;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<node_id>> find_blocking_set(const set_family& family, int l) {
  std::vector<node_id> universe;
  for (int m = 0; m < family.count(); m++)
    universe.insert(universe.end(), family.member(m).begin(), family.member(m).end());
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  for (int size = 0; size <= l; size++) {
    std::vector<node_id> chosen;
    std::vector<int> uncovered(family.count(), 1);
    if (search_blocking(family, universe, 0, size, chosen, uncovered) &&
        static_cast<int>(chosen.size()) <= size)
      return chosen;
  }
  return std::nullopt;
}

bool for_each_partition(int d, int l, const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> assign(d, 0);
  while (true) {
    if (!visit(assign)) return false;
    int i = 0;
    while (i < d && assign[i] == l - 1) assign[i++] = 0;
    if (i == d) return true;
    assign[i]++;
  }
}

bool is_scattered(const set_family& family, int l) {
  if (l <= 0) fail(errc::invalid_argument, "partition width must be positive");
  int d = family.count();
  return for_each_partition(d, l, [&](const std::vector<int>& assign) {
    // Some nonempty block must intersect to the empty set.
    for (int i = 0; i < l; i++) {
      std::vector<node_id> inter;
      bool first = true, present = false;
      for (int m = 0; m < d; m++) {
        if (assign[m] != i) continue;
        present = true;
        if (first) {
          inter = family.member(m);
          first = false;
        } else {
          std::vector<node_id> next;
          for (node_id x : inter)
            if (std::binary_search(family.member(m).begin(), family.member(m).end(), x))
              next.push_back(x);
          inter = std::move(next);
        }
        if (inter.empty()) break;
      }
      if (present && inter.empty()) return true;
    }
    return false;
  });
}

bool is_group_scattered(const set_family& family, int k, int l) {
  if (k <= 0) fail(errc::invalid_argument, "partition width must be positive");
  int d = family.count();
  return for_each_partition(d, k, [&](const std::vector<int>& assign) {
    for (int i = 0; i < k; i++) {
      std::vector<int> block;
      for (int m = 0; m < d; m++)
        if (assign[m] == i) block.push_back(m);
      if (block.empty()) continue;
      if (is_scattered(family.restricted(block), l)) return true;
    }
    return false;
  });
}

}  // namespace trs

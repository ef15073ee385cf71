#pragma once

#include <stdexcept>
#include <string>

namespace trs {

// Every domain error carries a stable machine-readable kind; the CLI maps
// kinds to JSON error documents and exit codes.
enum class errc {
  node_not_in_tree,
  tree_not_prefix_closed,
  tree_exceeds_horizon,
  budget_exceeded,
  empty_value_set,
  wrong_vector_length,
  union_clause_violated,
  digit_out_of_range,
  node_without_frontier_extension,
  sub_not_inside_base,
  base_mismatch,
  arity_mismatch,
  no_base_for_leaf,
  stage_missing,
  triple_allocation_failed,
  layer_tree_not_perfect,
  orphan_tree,
  uncovered_leaf,
  overlapping_trees,
  precondition_violated,
  horizon_mismatch,
  no_common_element,
  no_blocking_set,
  horizon_too_shallow,
  unknown_suite,
  parse_error,
  invalid_argument,
};

const char* errc_name(errc e);

class error : public std::runtime_error {
 public:
  error(errc kind, const std::string& what)
      : std::runtime_error(std::string(errc_name(kind)) + ": " + what), kind_(kind) {}
  errc kind() const { return kind_; }

 private:
  errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& what) { throw error(kind, what); }

}  // namespace trs

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "treeramsey/error.hpp"

namespace trs {

// A node of the full binary tree 2^{<w}: a finite bit string.  The empty
// string is the root.  Depth-j digit lives in bit j of `bits`.  Lengths are
// capped well above anything the finite searches use.
class node_id {
 public:
  static constexpr int max_length = 30;

  constexpr node_id() : bits_(0), len_(0) {}

  static node_id root() { return node_id(); }

  static std::optional<node_id> parse(std::string_view s) {
    if (s.size() > max_length) return std::nullopt;
    node_id n;
    for (char c : s) {
      if (c != '0' && c != '1') return std::nullopt;
      n = n.child(c - '0');
    }
    return n;
  }

  // Parse that throws on bad input; used by file readers.
  static node_id parse_or_throw(std::string_view s) {
    auto n = parse(s);
    if (!n) fail(errc::parse_error, "bad node string \"" + std::string(s) + "\"");
    return *n;
  }

  int length() const { return len_; }
  bool is_root() const { return len_ == 0; }

  int digit(int i) const { return (bits_ >> i) & 1u; }

  node_id child(int b) const {
    node_id n(*this);
    n.bits_ |= static_cast<uint32_t>(b & 1) << n.len_;
    n.len_++;
    return n;
  }

  node_id parent() const {
    node_id n(*this);
    n.len_--;
    n.bits_ &= (1u << n.len_) - 1;
    return n;
  }

  // Initial segment of length n (n <= length()).
  node_id prefix(int n) const {
    node_id p;
    p.len_ = static_cast<uint8_t>(n);
    p.bits_ = bits_ & ((1u << n) - 1);
    return p;
  }

  // Reflexive extension order: *this <= o in the prefix order.
  bool is_prefix_of(node_id o) const {
    if (len_ > o.len_) return false;
    return (o.bits_ & ((1u << len_) - 1)) == bits_;
  }
  bool extends(node_id o) const { return o.is_prefix_of(*this); }
  bool strictly_extends(node_id o) const { return len_ > o.len_ && o.is_prefix_of(*this); }

  static bool compatible(node_id a, node_id b) {
    return a.is_prefix_of(b) || b.is_prefix_of(a);
  }
  static bool incompatible(node_id a, node_id b) { return !compatible(a, b); }

  std::string str() const {
    std::string s(len_, '0');
    for (int i = 0; i < len_; i++) s[i] = static_cast<char>('0' + digit(i));
    return s;
  }

  // Canonical total order: length-lexicographic.
  std::strong_ordering operator<=>(const node_id& o) const {
    if (len_ != o.len_) return len_ <=> o.len_;
    for (int i = 0; i < len_; i++)
      if (digit(i) != o.digit(i)) return digit(i) <=> o.digit(i);
    return std::strong_ordering::equal;
  }
  bool operator==(const node_id& o) const { return len_ == o.len_ && bits_ == o.bits_; }

  uint64_t key() const { return (static_cast<uint64_t>(len_) << 32) | bits_; }

 private:
  uint32_t bits_;
  uint8_t len_;
};

}  // namespace trs

template <>
struct std::hash<trs::node_id> {
  size_t operator()(const trs::node_id& n) const { return std::hash<uint64_t>()(n.key()); }
};

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "incalg/errors.hpp"

namespace incalg {

using Pair = std::pair<std::uint32_t, std::uint32_t>;

/// A finite poset. Immutable after construction.
///
/// Elements are renumbered at construction so that the internal index of an
/// element is its position in a fixed linear extension of the order
/// (topological order, ties broken by input label order). Consequently
/// `leq(x, y)` implies `x <= y` as integers, and `strict_pairs()` sorted
/// lexicographically on internal indices is the canonical basis order used by
/// every matrix downstream.
class Poset {
 public:
  /// Reflexive-transitive closure of `relations` (pairs (a, b) meaning a <= b).
  /// Throws CycleError if antisymmetry fails, UnknownLabel for a label not in
  /// `labels`, and ParseError for duplicate labels.
  static Poset from_relations(const std::vector<std::string>& labels,
                              const std::vector<std::pair<std::string, std::string>>& relations);

  /// Chain 1 < 2 < ... < n, labelled "1".."n".
  static Poset chain(std::size_t n);
  /// Antichain of n elements labelled "1".."n".
  static Poset antichain(std::size_t n);

  std::size_t size() const noexcept { return labels_.size(); }
  bool leq(std::uint32_t x, std::uint32_t y) const noexcept { return leq_[x * size() + y] != 0; }
  bool lt(std::uint32_t x, std::uint32_t y) const noexcept { return x != y && leq(x, y); }
  bool comparable(std::uint32_t x, std::uint32_t y) const noexcept { return leq(x, y) || leq(y, x); }

  /// Labels in internal order.
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::uint32_t x) const { return labels_.at(x); }
  std::uint32_t index_of(std::string_view label) const;

  const std::vector<Pair>& hasse_edges() const noexcept { return hasse_; }
  const std::vector<Pair>& strict_pairs() const noexcept { return strict_; }
  /// All z with x <= z <= y, ascending.
  std::vector<std::uint32_t> interval(std::uint32_t x, std::uint32_t y) const;
  /// Maximum length (number of covering steps) of a chain.
  std::size_t length() const;

  bool operator==(const Poset& o) const { return labels_ == o.labels_ && leq_ == o.leq_; }

 private:
  Poset() = default;

  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;
  std::vector<Pair> hasse_;
  std::vector<Pair> strict_;
};

/// True iff every two elements are joined by a walk along covering relations.
/// Throws EmptyPoset on the empty poset.
bool is_connected(const Poset& p);

/// A bijection of the ground set that preserves (automorphism) or reverses
/// (anti-automorphism) the order.
struct OrderMap {
  enum class Kind { automorphism, anti_automorphism };

  std::vector<std::uint32_t> mapping;  // internal index -> internal index
  Kind kind;

  std::uint32_t operator()(std::uint32_t x) const { return mapping[x]; }
  OrderMap inverse() const;
  bool operator==(const OrderMap&) const = default;
};

const char* to_string(OrderMap::Kind k);

/// Checks the defining condition for `kind`.
bool is_order_map(const Poset& p, const std::vector<std::uint32_t>& mapping, OrderMap::Kind kind);

/// Every automorphism followed by every anti-automorphism, each group in
/// lexicographic order of the mapping (so the identity comes first). On posets
/// where a bijection is both, it is listed under both kinds.
std::vector<OrderMap> enumerate_order_maps(const Poset& p);

}  // namespace incalg

#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace toriplan {

/// Largest ground set a VertexSet can index.
inline constexpr int kMaxGround = 63;

/// A subset of [n] = {1, ..., n}, n <= 63, stored as a bit word. Element i
/// lives in bit i-1. The ground size is carried by the owning complex.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> members);

  /// Builds a set from 1-based indices; throws kIndexOutOfRange when an
  /// index falls outside 1..n.
  static VertexSet from_indices(std::span<const int> members, int n);
  /// {1, ..., n}.
  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet singleton(int i) {
    return VertexSet(std::uint64_t{1} << (i - 1));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int i) const { return (bits_ >> (i - 1)) & 1U; }
  constexpr bool subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool disjoint(VertexSet other) const {
    return (bits_ & other.bits_) == 0;
  }
  /// Largest element, 0 for the empty set.
  constexpr int max_element() const { return 64 - std::countl_zero(bits_); }
  /// True when every element lies in 1..n.
  constexpr bool within(int n) const { return subset_of(full(n)); }

  /// Members in increasing order.
  std::vector<int> members() const;
  std::string to_string() const;

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  /// Set difference.
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }

  /// Shifts every member up by `offset` (used to place a second factor).
  constexpr VertexSet shifted(int offset) const { return VertexSet(bits_ << offset); }

  constexpr auto operator<=>(const VertexSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Number of pairs (a, b) with a in `left`, b in `right` and a > b. The
/// parity of this count is the sign of the shuffle that merges two sorted
/// monomials.
int crossing_count(VertexSet left, VertexSet right);

}  // namespace toriplan

template <>
struct std::hash<toriplan::VertexSet> {
  std::size_t operator()(toriplan::VertexSet s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};

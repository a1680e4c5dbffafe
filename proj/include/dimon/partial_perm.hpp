#pragma once

// Injective partial transformations of {1..n} (elements of the symmetric
// inverse monoid I_n). Transformations act on the right: x(ab) = (xa)b.

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dimon {

inline constexpr int kMaxDegree = 32;

using Point = std::uint8_t;

// A subset of {1..kMaxDegree}, stored as a bitmask (bit p <=> point p).
class PointSet {
 public:
  constexpr PointSet() = default;
  PointSet(std::initializer_list<int> points);

  static constexpr PointSet from_mask(std::uint64_t mask) {
    PointSet s;
    s.mask_ = mask;
    return s;
  }
  // {lo, lo+1, ..., hi}; empty when lo > hi.
  static PointSet range(int lo, int hi);

  void insert(int p);
  void erase(int p);
  [[nodiscard]] bool contains(int p) const {
    return p >= 0 && p < 64 && ((mask_ >> p) & 1U) != 0;
  }
  [[nodiscard]] int size() const { return std::popcount(mask_); }
  [[nodiscard]] bool empty() const { return mask_ == 0; }
  [[nodiscard]] std::uint64_t mask() const { return mask_; }
  [[nodiscard]] int min() const { return std::countr_zero(mask_); }
  [[nodiscard]] int max() const { return 63 - std::countl_zero(mask_); }
  [[nodiscard]] bool is_subset_of(PointSet other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  // Ascending listing.
  [[nodiscard]] std::vector<int> to_vector() const;

  friend PointSet operator|(PointSet a, PointSet b) {
    return from_mask(a.mask_ | b.mask_);
  }
  friend PointSet operator&(PointSet a, PointSet b) {
    return from_mask(a.mask_ & b.mask_);
  }
  friend PointSet operator-(PointSet a, PointSet b) {
    return from_mask(a.mask_ & ~b.mask_);
  }
  friend constexpr bool operator==(PointSet, PointSet) = default;
  friend constexpr auto operator<=>(PointSet, PointSet) = default;

 private:
  std::uint64_t mask_ = 0;
};

std::string to_string(PointSet s);

struct Pair {
  Point from = 0;
  Point to = 0;
  friend constexpr bool operator==(Pair, Pair) = default;
  friend constexpr auto operator<=>(Pair, Pair) = default;
};

// Canonical form: the pair list sorted strictly ascending by domain point.
// Unused slots are kept zeroed, so the defaulted comparisons are structural:
// equality is pair-list equality and the order is (n, lexicographic pairs).
class PartialPerm {
 public:
  // Pairs may be given in any order; they are sorted and validated.
  PartialPerm(int n, std::span<const std::pair<int, int>> pairs);
  PartialPerm(int n, std::initializer_list<std::pair<int, int>> pairs);

  static PartialPerm identity(int n);
  static PartialPerm identity_on(int n, PointSet domain);
  static PartialPerm empty(int n);
  // e_i: the partial identity on {1..n} \ {i}.
  static PartialPerm partial_identity_complement(int n, int i);

  [[nodiscard]] int degree() const { return n_; }
  [[nodiscard]] int rank() const { return size_; }
  [[nodiscard]] std::span<const Pair> pairs() const {
    return {pairs_.data(), size_};
  }
  [[nodiscard]] PointSet domain() const;
  [[nodiscard]] PointSet image() const;
  // The image sequence listed by ascending domain.
  [[nodiscard]] std::vector<int> image_sequence() const;
  // 0 when x is not in the domain.
  [[nodiscard]] int image_of(int x) const;
  [[nodiscard]] bool is_idempotent() const;
  [[nodiscard]] bool is_permutation() const { return size_ == n_; }

  friend bool operator==(PartialPerm const&, PartialPerm const&) = default;
  friend auto operator<=>(PartialPerm const&, PartialPerm const&) = default;

  [[nodiscard]] std::size_t hash() const noexcept;

 private:
  struct Unchecked {};
  PartialPerm(Unchecked, int n) : n_(static_cast<Point>(n)) {}
  void push_unchecked(int a, int b) {
    pairs_[size_++] = Pair{static_cast<Point>(a), static_cast<Point>(b)};
  }

  friend PartialPerm compose(PartialPerm const&, PartialPerm const&);
  friend PartialPerm inverse(PartialPerm const&);
  friend PartialPerm restrict(PartialPerm const&, PointSet);

  Point n_ = 0;
  std::array<Pair, kMaxDegree> pairs_{};
  Point size_ = 0;
};

// The right-action product: x(compose(a, b)) = (xa)b.
PartialPerm compose(PartialPerm const& a, PartialPerm const& b);
inline PartialPerm operator*(PartialPerm const& a, PartialPerm const& b) {
  return compose(a, b);
}
PartialPerm inverse(PartialPerm const& a);
// Restriction to A ∩ dom(a); points of A outside the domain are ignored.
PartialPerm restrict(PartialPerm const& a, PointSet A);

struct OrderFlags {
  bool order_preserving = false;
  bool order_reversing = false;
  bool orientation_preserving = false;
  bool orientation_reversing = false;

  [[nodiscard]] bool monotone() const {
    return order_preserving || order_reversing;
  }
  [[nodiscard]] bool oriented() const {
    return orientation_preserving || orientation_reversing;
  }
  friend bool operator==(OrderFlags, OrderFlags) = default;
};

// Image sequences of length <= 1 count as cyclic and anti-cyclic (and as
// order-preserving and order-reversing), so every rank <= 1 map gets all four
// flags.
OrderFlags classify_order(PartialPerm const& a);

// Canonical text `n=5;2>1,4>3,5>4`; the empty map is `n=5;`.
std::string to_string(PartialPerm const& a);
// Accepts exactly the strings produced by to_string.
PartialPerm parse_partial_perm(std::string_view text);

}  // namespace dimon

template <>
struct std::hash<dimon::PartialPerm> {
  std::size_t operator()(dimon::PartialPerm const& a) const noexcept {
    return a.hash();
  }
};

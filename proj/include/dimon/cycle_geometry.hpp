#pragma once

// Geodesic metric of the cycle graph C_n (n >= 3) and the partial-isometry
// tests built on it.

#include <compare>
#include <string>
#include <vector>

#include "dimon/partial_perm.hpp"

namespace dimon {

// min(|x - y|, n - |x - y|). Requires n >= 3 and x, y in 1..n.
int distance(int n, int x, int y);

// d(A) for A = {i_1 < ... < i_k}, k >= 2: the consecutive distances
// d(i_p, i_{p+1}) followed by the extreme-point distance d(i_1, i_k).
class DistanceSequence {
 public:
  explicit DistanceSequence(std::vector<int> entries)
      : entries_(std::move(entries)) {}

  [[nodiscard]] std::vector<int> const& entries() const { return entries_; }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }

  friend bool operator==(DistanceSequence const&,
                         DistanceSequence const&) = default;
  friend auto operator<=>(DistanceSequence const&,
                          DistanceSequence const&) = default;

 private:
  std::vector<int> entries_;
};

std::string to_string(DistanceSequence const& d);

// Throws UndefinedSequenceError when |A| < 2.
DistanceSequence distance_sequence(int n, PointSet A);

// The unique order-preserving bijection from A onto B.
PartialPerm delta(int n, PointSet A, PointSet B);

// Checks every unordered pair of domain points.
bool is_partial_isometry(PartialPerm const& a);

// Checks only consecutive domain points and the two extreme points.
// Precondition (unchecked): a is oriented and rank(a) >= 2. Outside that
// domain the answer is meaningless; use in_dihedral_monoid for a checked
// entry point.
bool is_partial_isometry_oriented_fast(PartialPerm const& a);

}  // namespace dimon

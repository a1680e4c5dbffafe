#include "dimon/cycle_geometry.hpp"

#include <cstdlib>

#include "dimon/error.hpp"

namespace dimon {

namespace {

void check_cycle(int n) {
  if (n < 3 || n > kMaxDegree) {
    throw DomainError("cycle graph needs 3 <= n <= " +
                      std::to_string(kMaxDegree) + ", got " +
                      std::to_string(n));
  }
}

inline int raw_distance(int n, int x, int y) {
  int const diff = std::abs(x - y);
  return diff <= n - diff ? diff : n - diff;
}

}  // namespace

int distance(int n, int x, int y) {
  check_cycle(n);
  if (x < 1 || x > n || y < 1 || y > n) {
    throw DomainError("distance: point outside 1.." + std::to_string(n));
  }
  return raw_distance(n, x, y);
}

std::string to_string(DistanceSequence const& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.entries().size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(d.entries()[i]);
  }
  return out + ")";
}

DistanceSequence distance_sequence(int n, PointSet A) {
  check_cycle(n);
  if (A.size() < 2) {
    throw UndefinedSequenceError("distance sequence needs at least 2 points");
  }
  if (!A.is_subset_of(PointSet::range(1, n))) {
    throw DomainError("distance_sequence: set not contained in 1.." +
                      std::to_string(n));
  }
  auto const pts = A.to_vector();
  std::vector<int> d;
  d.reserve(pts.size());
  for (std::size_t p = 0; p + 1 < pts.size(); ++p) {
    d.push_back(raw_distance(n, pts[p], pts[p + 1]));
  }
  d.push_back(raw_distance(n, pts.front(), pts.back()));
  return DistanceSequence(std::move(d));
}

PartialPerm delta(int n, PointSet A, PointSet B) {
  if (A.size() != B.size()) {
    throw SizeMismatchError("delta: |A| = " + std::to_string(A.size()) +
                            " but |B| = " + std::to_string(B.size()));
  }
  auto const a = A.to_vector();
  auto const b = B.to_vector();
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) pairs.emplace_back(a[i], b[i]);
  return PartialPerm(n, pairs);
}

bool is_partial_isometry(PartialPerm const& a) {
  if (a.rank() <= 1) return true;
  int const n = a.degree();
  check_cycle(n);
  auto const pairs = a.pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      if (raw_distance(n, pairs[i].from, pairs[j].from) !=
          raw_distance(n, pairs[i].to, pairs[j].to)) {
        return false;
      }
    }
  }
  return true;
}

bool is_partial_isometry_oriented_fast(PartialPerm const& a) {
  int const n = a.degree();
  auto const pairs = a.pairs();
  std::size_t const k = pairs.size();
  if (raw_distance(n, pairs[0].from, pairs[k - 1].from) !=
      raw_distance(n, pairs[0].to, pairs[k - 1].to)) {
    return false;
  }
  for (std::size_t p = 0; p + 1 < k; ++p) {
    if (raw_distance(n, pairs[p].from, pairs[p + 1].from) !=
        raw_distance(n, pairs[p].to, pairs[p + 1].to)) {
      return false;
    }
  }
  return true;
}

}  // namespace dimon

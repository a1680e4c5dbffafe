#include "dimon/reference.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "dimon/error.hpp"

namespace dimon::reference {

namespace {

std::vector<std::vector<int>> distance_table(int n) {
  std::vector<std::vector<int>> table(n + 1, std::vector<int>(n + 1, -1));
  for (int s = 1; s <= n; ++s) {
    auto& dist = table[s];
    std::deque<int> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      int const v = queue.front();
      queue.pop_front();
      for (int w : {v % n + 1, (v + n - 2) % n + 1}) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return table;
}

std::vector<std::vector<int>> const& cached_table(int n) {
  static thread_local std::vector<std::vector<std::vector<int>>> cache(
      kMaxDegree + 1);
  if (cache[n].empty()) cache[n] = distance_table(n);
  return cache[n];
}

// Counts i in 1..t with a_i > a_(i+1) (or < when `ascents`), a_(t+1) = a_1.
int cyclic_breaks(std::vector<int> const& s, bool ascents) {
  int breaks = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    int const a = s[i];
    int const b = s[(i + 1) % s.size()];
    if (ascents ? a < b : a > b) ++breaks;
  }
  return breaks;
}

}  // namespace

int bfs_distance(int n, int x, int y) {
  if (n < 3 || n > kMaxDegree) throw DomainError("bfs_distance: bad n");
  return cached_table(n)[x][y];
}

bool is_isometry(PartialPerm const& a) {
  auto const p = a.pairs();
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (bfs_distance(a.degree(), p[i].from, p[j].from) !=
          bfs_distance(a.degree(), p[i].to, p[j].to)) {
        return false;
      }
    }
  }
  return true;
}

bool is_order_preserving(PartialPerm const& a) {
  auto const p = a.pairs();
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p[i].from <= p[j].from && p[i].to > p[j].to) return false;
    }
  }
  return true;
}

bool is_order_reversing(PartialPerm const& a) {
  auto const p = a.pairs();
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p[i].from <= p[j].from && p[i].to < p[j].to) return false;
    }
  }
  return true;
}

bool is_orientation_preserving(PartialPerm const& a) {
  return cyclic_breaks(a.image_sequence(), false) <= 1;
}

bool is_orientation_reversing(PartialPerm const& a) {
  return cyclic_breaks(a.image_sequence(), true) <= 1;
}

bool is_member(PartialPerm const& a, MonoidKind kind) {
  if (!is_isometry(a)) return false;
  switch (kind) {
    case MonoidKind::DI:
      return true;
    case MonoidKind::ODI:
      return is_order_preserving(a);
    case MonoidKind::MDI:
      return is_order_preserving(a) || is_order_reversing(a);
    case MonoidKind::OPDI:
      return is_orientation_preserving(a);
  }
  return false;
}

std::vector<std::vector<int>> dihedral_permutations(int n) {
  std::vector<int> g(n + 1);
  std::vector<int> h(n + 1);
  std::vector<int> id(n + 1);
  for (int i = 1; i <= n; ++i) {
    g[i] = i == n ? 1 : i + 1;
    h[i] = n - i + 1;
    id[i] = i;
  }
  std::set<std::vector<int>> group{id};
  std::deque<std::vector<int>> queue{id};
  while (!queue.empty()) {
    auto const p = queue.front();
    queue.pop_front();
    for (auto const* gen : {&g, &h}) {
      std::vector<int> q(n + 1);
      for (int i = 1; i <= n; ++i) q[i] = (*gen)[p[i]];
      if (group.insert(q).second) queue.push_back(q);
    }
  }
  return {group.begin(), group.end()};
}

int count_extensions(PartialPerm const& a) {
  int count = 0;
  for (auto const& p : dihedral_permutations(a.degree())) {
    bool agrees = true;
    for (auto const& pr : a.pairs()) agrees = agrees && p[pr.from] == pr.to;
    if (agrees) ++count;
  }
  return count;
}

std::vector<PartialPerm> enumerate_monoid(MonoidKind kind, int n) {
  std::set<PartialPerm> found;
  for (auto const& p : dihedral_permutations(n)) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<std::pair<int, int>> pairs;
      for (int i = 1; i <= n; ++i) {
        if ((mask >> (i - 1)) & 1U) pairs.emplace_back(i, p[i]);
      }
      PartialPerm a(n, pairs);
      if (is_member(a, kind)) found.insert(a);
    }
  }
  return {found.begin(), found.end()};
}

std::vector<PartialPerm> all_partial_perms(int n) {
  std::vector<PartialPerm> out;
  std::vector<std::pair<int, int>> pairs;
  std::vector<bool> used(n + 1, false);
  // Assign each point 1..n either nothing or an unused image.
  auto rec = [&](auto&& self, int point) -> void {
    if (point > n) {
      out.emplace_back(n, pairs);
      return;
    }
    self(self, point + 1);
    for (int b = 1; b <= n; ++b) {
      if (used[b]) continue;
      used[b] = true;
      pairs.emplace_back(point, b);
      self(self, point + 1);
      pairs.pop_back();
      used[b] = false;
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end());
  return out;
}

bool exists_bijection(int n, PointSet A, PointSet B,
                      std::function<bool(PartialPerm const&)> const& accept) {
  auto const from = A.to_vector();
  auto to = B.to_vector();
  if (from.size() != to.size()) return false;
  do {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < from.size(); ++i) {
      pairs.emplace_back(from[i], to[i]);
    }
    if (accept(PartialPerm(n, pairs))) return true;
  } while (std::next_permutation(to.begin(), to.end()));
  return false;
}

}  // namespace dimon::reference

#include "dimon/monoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>

#include "dimon/cycle_geometry.hpp"
#include "dimon/dihedral.hpp"
#include "dimon/error.hpp"

namespace dimon {

std::size_t EnumeratedMonoid::index_of(PartialPerm const& a) const {
  auto it = index_.find(a);
  if (it == index_.end()) {
    throw NotMemberError(to_string(a) + " is not an element of the monoid");
  }
  return it->second;
}

IndexWord EnumeratedMonoid::word(std::size_t i) const {
  IndexWord w;
  for (std::uint32_t at = static_cast<std::uint32_t>(i);
       origin_[at].parent != kNoParent; at = origin_[at].parent) {
    w.push_back(origin_[at].generator);
  }
  std::reverse(w.begin(), w.end());
  return w;
}

bool EnumeratedMonoid::is_closed_under_inverse() const {
  return std::all_of(elements_.begin(), elements_.end(),
                     [this](PartialPerm const& a) {
                       return contains(inverse(a));
                     });
}

namespace {

struct Candidate {
  PartialPerm value;
  std::uint32_t parent;
  std::uint16_t generator;
};

}  // namespace

EnumeratedMonoid close(int n, std::span<const PartialPerm> generators,
                       unsigned workers) {
  for (auto const& gen : generators) {
    if (gen.degree() != n) {
      throw AmbientMismatchError("close: generator " + to_string(gen) +
                                 " has degree other than " +
                                 std::to_string(n));
    }
  }
  if (generators.size() > 0xFFFF) throw DomainError("too many generators");
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());

  // Discovery order; sorted at the end.
  std::vector<PartialPerm> found{PartialPerm::identity(n)};
  std::vector<std::pair<std::uint32_t, std::uint16_t>> origin{
      {EnumeratedMonoid::kNoParent, 0}};
  std::unordered_map<PartialPerm, std::uint32_t> seen{{found.front(), 0}};

  std::size_t layer_begin = 0;
  std::size_t layer_end = 1;
  while (layer_begin < layer_end) {
    std::size_t const layer_size = layer_end - layer_begin;
    unsigned const chunks = static_cast<unsigned>(
        std::min<std::size_t>(workers, std::max<std::size_t>(1, layer_size / 64)));
    std::vector<std::vector<Candidate>> candidates(chunks);

    // Read-only phase: products of this layer not already known.
    auto expand = [&](unsigned c) {
      std::size_t const lo = layer_begin + layer_size * c / chunks;
      std::size_t const hi = layer_begin + layer_size * (c + 1) / chunks;
      for (std::size_t i = lo; i < hi; ++i) {
        for (std::size_t g = 0; g < generators.size(); ++g) {
          PartialPerm p = compose(found[i], generators[g]);
          if (!seen.contains(p)) {
            candidates[c].push_back({p, static_cast<std::uint32_t>(i),
                                     static_cast<std::uint16_t>(g)});
          }
        }
      }
    };
    if (chunks == 1) {
      expand(0);
    } else {
      std::vector<std::jthread> pool;
      pool.reserve(chunks);
      for (unsigned c = 0; c < chunks; ++c) pool.emplace_back(expand, c);
    }

    // Merge in (frontier, generator) order, keeping the first occurrence.
    for (auto& chunk : candidates) {
      for (auto& cand : chunk) {
        auto const next = static_cast<std::uint32_t>(found.size());
        if (seen.try_emplace(cand.value, next).second) {
          found.push_back(cand.value);
          origin.emplace_back(cand.parent, cand.generator);
        }
      }
    }
    layer_begin = layer_end;
    layer_end = found.size();
  }

  std::vector<std::uint32_t> order(found.size());
  std::iota(order.begin(), order.end(), 0U);
  std::sort(order.begin(), order.end(), [&found](auto x, auto y) {
    return found[x] < found[y];
  });
  std::vector<std::uint32_t> rank_of(found.size());
  for (std::uint32_t s = 0; s < order.size(); ++s) rank_of[order[s]] = s;

  EnumeratedMonoid m;
  m.n_ = n;
  m.generators_.assign(generators.begin(), generators.end());
  m.elements_.reserve(found.size());
  m.origin_.reserve(found.size());
  for (std::uint32_t s = 0; s < order.size(); ++s) {
    std::uint32_t const d = order[s];
    m.elements_.push_back(found[d]);
    auto const [parent, gen] = origin[d];
    m.origin_.push_back({parent == EnumeratedMonoid::kNoParent
                             ? EnumeratedMonoid::kNoParent
                             : rank_of[parent],
                         gen});
    m.index_.emplace(found[d], s);
  }
  return m;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

template <typename Key>
std::size_t assign_classes(std::vector<Key> const& keys,
                           std::vector<std::uint32_t>& out) {
  std::map<Key, std::uint32_t> ids;
  out.resize(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    auto [it, inserted] =
        ids.try_emplace(keys[i], static_cast<std::uint32_t>(ids.size()));
    out[i] = it->second;
  }
  return ids.size();
}

}  // namespace

GreenDecomposition green_structural(EnumeratedMonoid const& m) {
  if (!m.is_closed_under_inverse()) {
    throw NotInverseError("monoid is not closed under inversion");
  }
  auto const elems = m.elements();
  std::size_t const count = elems.size();

  std::vector<std::uint64_t> images(count);
  std::vector<std::uint64_t> domains(count);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> both(count);
  for (std::size_t i = 0; i < count; ++i) {
    images[i] = elems[i].image().mask();
    domains[i] = elems[i].domain().mask();
    both[i] = {domains[i], images[i]};
  }

  GreenDecomposition g;
  g.l_count = assign_classes(images, g.l_class);
  g.r_count = assign_classes(domains, g.r_class);
  g.h_count = assign_classes(both, g.h_class);

  UnionFind uf(count);
  std::vector<std::size_t> first_l(g.l_count, count);
  std::vector<std::size_t> first_r(g.r_count, count);
  for (std::size_t i = 0; i < count; ++i) {
    auto& fl = first_l[g.l_class[i]];
    if (fl == count) fl = i; else uf.unite(fl, i);
    auto& fr = first_r[g.r_class[i]];
    if (fr == count) fr = i; else uf.unite(fr, i);
  }
  std::vector<std::size_t> roots(count);
  for (std::size_t i = 0; i < count; ++i) roots[i] = uf.find(i);
  g.d_count = assign_classes(roots, g.d_class);
  return g;
}

bool j_related(PartialPerm const& a, PartialPerm const& b, MonoidKind kind) {
  if (a.degree() != b.degree()) {
    throw AmbientMismatchError("j_related: different degrees");
  }
  if (a.rank() != b.rank()) return false;
  if (a.rank() <= 1) return true;

  int const n = a.degree();
  auto const da = distance_sequence(n, a.domain());
  PointSet const dom_b = b.domain();
  switch (kind) {
    case MonoidKind::ODI:
      return da == distance_sequence(n, dom_b);
    case MonoidKind::MDI:
      return da == distance_sequence(n, dom_b) ||
             da == distance_sequence(n, DihedralElement::h(n).apply(dom_b));
    case MonoidKind::OPDI:
      // dom(g^s b) = dom(b) g^(-s); s ranges over all rotations.
      for (int s = 0; s < n; ++s) {
        DihedralElement const rot(n, false, (n - s) % n);
        if (da == distance_sequence(n, rot.apply(dom_b))) return true;
      }
      return false;
    case MonoidKind::DI:
      break;
  }
  throw DomainError("j_related is defined for odi, mdi and opdi");
}

GreenCrossCheck cross_check_green(EnumeratedMonoid const& m, MonoidKind kind) {
  GreenDecomposition const g = green_structural(m);
  auto const elems = m.elements();
  GreenCrossCheck report;
  report.d_classes = g.d_count;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i; j < elems.size(); ++j) {
      bool const in_d = g.d_class[i] == g.d_class[j];
      bool const in_j = j_related(elems[i], elems[j], kind);
      ++report.pairs_checked;
      if (in_d != in_j) {
        report.ok = false;
        report.counterexample.emplace(elems[i], elems[j]);
        report.counterexample_in_d = in_d;
        return report;
      }
    }
  }
  return report;
}

std::vector<PartialPerm> idempotents(EnumeratedMonoid const& m) {
  std::vector<PartialPerm> out;
  for (auto const& a : m.elements()) {
    if (compose(a, a) == a) out.push_back(a);
  }
  return out;
}

}  // namespace dimon

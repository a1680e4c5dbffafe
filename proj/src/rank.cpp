#include "dimon/rank.hpp"

#include <algorithm>

#include "dimon/dihedral.hpp"
#include "dimon/error.hpp"
#include "dimon/formulas.hpp"
#include "dimon/generators.hpp"

namespace dimon {

namespace {

bool has_gap(std::span<const PartialPerm> gens, int gap) {
  return std::any_of(gens.begin(), gens.end(), [gap](PartialPerm const& a) {
    return a.rank() == 2 && a.pairs()[1].from - a.pairs()[0].from == gap;
  });
}

bool has_corank1_missing(std::span<const PartialPerm> gens, int point) {
  return std::any_of(gens.begin(), gens.end(), [point](PartialPerm const& a) {
    return a.rank() == a.degree() - 1 && !a.image().contains(point);
  });
}

}  // namespace

LowerBoundCertificate lower_bound_certificate(MonoidKind kind, int n,
                                              std::span<const PartialPerm> gens,
                                              unsigned workers) {
  if (kind == MonoidKind::DI) throw DomainError("no rank certificate for di");
  if (n < 4) {
    throw DomainError("lower-bound certificate needs n >= 4 (rank 2 and rank "
                      "n-1 coincide at n = 3)");
  }
  for (auto const& a : gens) {
    if (!is_member(a, kind)) {
      throw NotGeneratingError(to_string(a) + " is not in " + to_string(kind));
    }
  }
  EnumeratedMonoid const m = close(n, gens, workers);
  if (m.size() != card(kind, n)) {
    throw NotGeneratingError("closure has " + std::to_string(m.size()) +
                             " elements, expected " +
                             std::to_string(card(kind, n)));
  }

  LowerBoundCertificate c;
  c.kind = kind;
  c.n = n;
  c.generator_count = gens.size();
  c.formula = rank_formula(kind, n);
  int const half = (n - 1) / 2;

  for (int i = 1; i <= half; ++i) {
    if (kind == MonoidKind::OPDI) {
      c.rank2.push_back(
          {"rank-2 generator with domain gap " + std::to_string(i) + " or " +
               std::to_string(n - i),
           has_gap(gens, i) || has_gap(gens, n - i)});
    } else {
      c.rank2.push_back({"rank-2 generator with domain gap " + std::to_string(i),
                         has_gap(gens, i)});
      c.rank2.push_back({"rank-2 generator with domain gap " +
                             std::to_string(n - i),
                         has_gap(gens, n - i)});
    }
  }

  switch (kind) {
    case MonoidKind::ODI:
      for (int i = 1; i <= n; ++i) {
        c.corank1.push_back({"rank-(n-1) generator with image missing " +
                                 std::to_string(i),
                             has_corank1_missing(gens, i)});
      }
      break;
    case MonoidKind::MDI: {
      // Images Ω\{i} and Ω\{n-i+1} are exchanged by h; for odd n the middle
      // point forms an orbit on its own.
      for (int i = 1; i <= (n + 1) / 2; ++i) {
        int const mirror = n - i + 1;
        c.corank1.push_back(
            {"rank-(n-1) generator with image missing " + std::to_string(i) +
                 (mirror != i ? " or " + std::to_string(mirror) : ""),
             has_corank1_missing(gens, i) || has_corank1_missing(gens, mirror)});
      }
      PartialPerm const h = generator_value(gen_h(), n);
      c.permutations.push_back(
          {"h", std::find(gens.begin(), gens.end(), h) != gens.end()});
      break;
    }
    case MonoidKind::OPDI: {
      c.corank1.push_back(
          {"some rank-(n-1) generator",
           std::any_of(gens.begin(), gens.end(), [n](PartialPerm const& a) {
             return a.rank() == n - 1;
           })});
      PartialPerm const id = PartialPerm::identity(n);
      c.permutations.push_back(
          {"some non-identity permutation",
           std::any_of(gens.begin(), gens.end(), [&id](PartialPerm const& a) {
             return a.is_permutation() && a != id;
           })});
      break;
    }
    case MonoidKind::DI:
      break;
  }

  for (auto const* group : {&c.rank2, &c.corank1, &c.permutations}) {
    c.implied_lower_bound += static_cast<int>(group->size());
    c.witnessed += static_cast<int>(
        std::count_if(group->begin(), group->end(),
                      [](Requirement const& r) { return r.witnessed; }));
  }
  c.orbit_bound_exceeds_set =
      static_cast<std::size_t>(c.implied_lower_bound) > c.generator_count;
  c.certified = c.witnessed == c.implied_lower_bound &&
                static_cast<std::size_t>(c.implied_lower_bound) ==
                    c.generator_count &&
                c.implied_lower_bound == c.formula;
  return c;
}

int minimal_generating_set_size(EnumeratedMonoid const& m,
                                std::size_t max_size) {
  PartialPerm const id = PartialPerm::identity(m.degree());
  std::vector<PartialPerm> candidates;
  for (auto const& a : m.elements()) {
    if (a != id) candidates.push_back(a);
  }
  if (candidates.empty()) return 0;

  std::vector<PartialPerm> subset;
  for (std::size_t r = 1; r <= std::min(max_size, candidates.size()); ++r) {
    std::vector<std::size_t> pick(r);
    for (std::size_t i = 0; i < r; ++i) pick[i] = i;
    while (true) {
      subset.clear();
      for (std::size_t i : pick) subset.push_back(candidates[i]);
      if (close(m.degree(), subset).size() == m.size()) {
        return static_cast<int>(r);
      }
      // Next r-combination in lexicographic order.
      std::size_t i = r;
      while (i > 0 && pick[i - 1] == candidates.size() - r + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return -1;
}

RankCertification certify_rank(MonoidKind kind, int n, unsigned workers) {
  RankCertification r;
  r.kind = kind;
  r.n = n;
  r.formula = rank_formula(kind, n);
  GeneratorSet const standard = standard_generators(kind, n);
  auto const gens = standard.values();
  if (n >= 4) {
    r.method = "generating set + lower-bound certificate";
    r.certificate = lower_bound_certificate(kind, n, gens, workers);
    r.upper_bound = static_cast<int>(gens.size());
    r.lower_bound = r.certificate->implied_lower_bound;
    r.certified = r.certificate->certified;
    return r;
  }
  r.method = "exhaustive minimal generating set search";
  EnumeratedMonoid const m = close(n, gens, workers);
  if (m.size() != card(kind, n)) {
    throw NotGeneratingError("standard generators do not generate " +
                             to_string(kind) + "_3");
  }
  int const minimum = minimal_generating_set_size(m);
  r.upper_bound = minimum;
  r.lower_bound = minimum;
  r.certified = minimum == r.formula;
  return r;
}

}  // namespace dimon

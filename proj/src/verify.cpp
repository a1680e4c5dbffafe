#include "dimon/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>

#include "dimon/cycle_geometry.hpp"
#include "dimon/dihedral.hpp"
#include "dimon/factorize.hpp"
#include "dimon/formulas.hpp"
#include "dimon/generators.hpp"
#include "dimon/io.hpp"
#include "dimon/monoid.hpp"
#include "dimon/rank.hpp"
#include "dimon/reference.hpp"

namespace dimon {

namespace {

struct Outcome {
  bool passed = true;
  bool skipped = false;
  std::string detail;
};

Outcome fail(std::string detail) { return {false, false, std::move(detail)}; }

// [lo, hi] clipped to max_n; empty when hi < lo.
struct Range {
  int lo;
  int hi;
  [[nodiscard]] bool empty() const { return hi < lo; }
};

Range clip(int lo, int hi, VerifyOptions const& o) {
  return {lo, std::min(hi, o.max_n)};
}

std::string kind_n(MonoidKind kind, int n) {
  return to_string(kind) + "_" + std::to_string(n);
}

std::vector<PartialPerm> closure_of_standard(MonoidKind kind, int n,
                                             unsigned workers) {
  auto const gens = standard_generators(kind, n).values();
  auto const m = close(n, gens, workers);
  return {m.elements().begin(), m.elements().end()};
}

// 1. Closed-form cardinalities against brute-force enumeration.
Outcome cardinalities(VerifyOptions const& o) {
  Range const r = clip(3, 10, o);
  if (r.empty()) return {true, true, "no degree in range"};
  for (int n = r.lo; n <= r.hi; ++n) {
    for (MonoidKind kind : kStudiedKinds) {
      auto const brute = reference::enumerate_monoid(kind, n).size();
      if (brute != card(kind, n)) {
        return fail(kind_n(kind, n) + ": formula " +
                    std::to_string(card(kind, n)) + " but enumeration " +
                    std::to_string(brute));
      }
    }
  }
  if (r.lo <= 4 && r.hi >= 4) {
    auto const odi4 = reference::enumerate_monoid(MonoidKind::ODI, 4);
    auto const low = std::count_if(odi4.begin(), odi4.end(),
                                   [](auto const& a) { return a.rank() <= 1; });
    if (odi4.size() != 44 || card(MonoidKind::ODI, 4) != 44) {
      return fail("|ODI_4| differs from 44");
    }
    if (low != 17 || card_rank_le1(4) != 17) return fail("|A| differs from 17");
  }
  return {true, false,
          "n=" + std::to_string(r.lo) + ".." + std::to_string(r.hi) +
              " exact; |ODI_4|=44, |A|=17"};
}

// 2. Closure of the standard generators equals the brute-force set.
Outcome closure_equals_enumeration(VerifyOptions const& o) {
  Range const r = clip(4, 8, o);
  if (r.empty()) return {true, true, "no degree in range"};
  for (int n = r.lo; n <= r.hi; ++n) {
    for (MonoidKind kind : kStudiedKinds) {
      if (closure_of_standard(kind, n, o.workers) !=
          reference::enumerate_monoid(kind, n)) {
        return fail(kind_n(kind, n) + ": closure differs from enumeration");
      }
    }
  }
  return {true, false, "set equality for n=" + std::to_string(r.lo) + ".." +
                           std::to_string(r.hi)};
}

// 3. Extension counts follow the rank / antipodal case split.
Outcome extension_counts(VerifyOptions const& o) {
  Range const r = clip(4, 7, o);
  if (r.empty()) return {true, true, "no degree in range"};
  std::size_t checked = 0;
  for (int n = r.lo; n <= r.hi; ++n) {
    for (auto const& a : reference::enumerate_monoid(MonoidKind::DI, n)) {
      std::size_t const count = extensions(a).size();
      std::size_t expected = 1;
      if (a.rank() == 0) {
        expected = static_cast<std::size_t>(2 * n);
      } else if (a.rank() == 1) {
        expected = 2;
      } else if (a.rank() == 2 &&
                 2 * reference::bfs_distance(n, a.pairs()[0].from,
                                             a.pairs()[1].from) == n) {
        expected = 2;
      }
      if (count != expected ||
          static_cast<std::size_t>(reference::count_extensions(a)) != count) {
        return fail(to_string(a) + ": " + std::to_string(count) +
                    " extensions, expected " + std::to_string(expected));
      }
      ++checked;
    }
  }
  return {true, false, std::to_string(checked) + " elements of DI_n checked"};
}

// 4. |B_2| = n^2/2 for even n.
Outcome b2_size(VerifyOptions const& o) {
  Range const r = clip(4, 10, o);
  if (r.empty()) return {true, true, "no degree in range"};
  for (int n = r.lo + (r.lo % 2); n <= r.hi; n += 2) {
    long long scanned = 0;
    long long flagged = 0;
    for (auto const& a : reference::enumerate_monoid(MonoidKind::DI, n)) {
      if (a.rank() == 2 && 2 * reference::bfs_distance(n, a.pairs()[0].from,
                                                       a.pairs()[1].from) == n) {
        ++scanned;
      }
      if (is_in_B2(a)) ++flagged;
    }
    long long const expected = static_cast<long long>(n) * n / 2;
    if (scanned != expected || flagged != expected || b2_count(n) != expected) {
      return fail("n=" + std::to_string(n) + ": scan " +
                  std::to_string(scanned) + ", is_in_B2 " +
                  std::to_string(flagged) + ", expected " +
                  std::to_string(expected));
    }
  }
  return {true, false, "even n in " + std::to_string(r.lo) + ".." +
                           std::to_string(r.hi)};
}

PartialPerm random_oriented(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> size_dist(2, n);
  std::vector<int> points(static_cast<std::size_t>(n));
  std::iota(points.begin(), points.end(), 1);
  auto sample = [&](int k) {
    std::shuffle(points.begin(), points.end(), rng);
    std::vector<int> s(points.begin(), points.begin() + k);
    std::sort(s.begin(), s.end());
    return s;
  };
  int const source = std::uniform_int_distribution<int>(0, 2)(rng);
  while (true) {
    int const k = size_dist(rng);
    auto const dom = sample(k);
    std::vector<int> img;
    if (source == 0) {
      // Any oriented map: rotate (and maybe reverse) a sorted image set.
      img = sample(k);
      std::rotate(img.begin(),
                  img.begin() + std::uniform_int_distribution<int>(0, k - 1)(rng),
                  img.end());
      if (rng() & 1U) std::reverse(img.begin(), img.end());
    } else {
      DihedralElement const s(n, (rng() & 1U) != 0,
                              std::uniform_int_distribution<int>(0, n - 1)(rng));
      for (int p : dom) img.push_back(s.apply(p));
      if (source == 2) {
        // Near miss: move one image to an unused point.
        std::vector<int> unused;
        for (int p = 1; p <= n; ++p) {
          if (std::find(img.begin(), img.end(), p) == img.end()) {
            unused.push_back(p);
          }
        }
        if (unused.empty()) continue;
        img[std::uniform_int_distribution<std::size_t>(0, img.size() - 1)(rng)] =
            unused[std::uniform_int_distribution<std::size_t>(
                0, unused.size() - 1)(rng)];
      }
    }
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < k; ++i) pairs.emplace_back(dom[i], img[i]);
    PartialPerm a(n, pairs);
    if (classify_order(a).oriented()) return a;
  }
}

// 5. The consecutive/extreme distance test agrees with the full test on
// oriented maps of rank >= 2.
Outcome fast_isometry(VerifyOptions const& o) {
  Range const exhaustive = clip(4, 6, o);
  Range const sampled = clip(7, 12, o);
  if (exhaustive.empty()) return {true, true, "no degree in range"};
  std::size_t checked = 0;
  std::size_t isometries = 0;
  auto compare = [&](PartialPerm const& a) -> bool {
    bool const fast = is_partial_isometry_oriented_fast(a);
    bool const full = is_partial_isometry(a);
    ++checked;
    if (full) ++isometries;
    return fast == full && full == reference::is_isometry(a);
  };
  for (int n = exhaustive.lo; n <= exhaustive.hi; ++n) {
    for (auto const& a : reference::all_partial_perms(n)) {
      if (a.rank() < 2 || (!reference::is_orientation_preserving(a) &&
                               !reference::is_orientation_reversing(a))) {
        continue;
      }
      if (!compare(a)) return fail("disagreement on " + to_string(a));
    }
  }
  std::mt19937_64 rng(o.seed);
  for (int n = sampled.lo; n <= sampled.hi; ++n) {
    for (int s = 0; s < kFastIsometrySamples; ++s) {
      PartialPerm const a = random_oriented(n, rng);
      if (!compare(a)) return fail("disagreement on " + to_string(a));
    }
  }
  return {true, false,
          std::to_string(checked) + " oriented maps (" +
              std::to_string(isometries) + " isometries), samples for n=" +
              (sampled.empty() ? std::string("none")
                               : std::to_string(sampled.lo) + ".." +
                                     std::to_string(sampled.hi))};
}

// 6. Distance-sequence conditions against brute-force existence of
// order-preserving / order-reversing / orientation-preserving isometries.
Outcome distance_sequence_equivalences(VerifyOptions const& o) {
  Range const r = clip(4, 7, o);
  if (r.empty()) return {true, true, "no degree in range"};
  std::size_t pairs_checked = 0;
  for (int n = r.lo; n <= r.hi; ++n) {
    DihedralElement const h = DihedralElement::h(n);
    std::vector<PointSet> subsets;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      PointSet const s = PointSet::from_mask(mask << 1);
      if (s.size() >= 2) subsets.push_back(s);
    }
    for (PointSet A : subsets) {
      for (PointSet B : subsets) {
        if (A.size() != B.size()) continue;
        ++pairs_checked;
        auto const dA = distance_sequence(n, A);
        bool const c1 = dA == distance_sequence(n, B);
        bool const c2 = dA == distance_sequence(n, h.apply(B));
        bool c3 = false;
        for (int s = 0; s < n && !c3; ++s) {
          c3 = dA == distance_sequence(n, DihedralElement(n, false, (n - s) % n)
                                              .apply(B));
        }
        bool const e1 = reference::exists_bijection(n, A, B, [](auto const& a) {
          return reference::is_order_preserving(a) && reference::is_isometry(a);
        });
        bool const e2 = reference::exists_bijection(n, A, B, [](auto const& a) {
          return reference::is_order_reversing(a) && reference::is_isometry(a);
        });
        bool const e3 = reference::exists_bijection(n, A, B, [](auto const& a) {
          return reference::is_orientation_preserving(a) &&
                 reference::is_isometry(a);
        });
        if (c1 != e1 || c2 != e2 || c3 != e3) {
          return fail("n=" + std::to_string(n) + " A=" + to_string(A) +
                      " B=" + to_string(B) + ": clauses " +
                      std::to_string(c1) + std::to_string(c2) +
                      std::to_string(c3) + " vs brute force " +
                      std::to_string(e1) + std::to_string(e2) +
                      std::to_string(e3));
        }
      }
    }
  }
  return {true, false, std::to_string(pairs_checked) + " set pairs"};
}

// 7. J from distance sequences equals D from the L/R join.
Outcome green_j(VerifyOptions const& o) {
  Range const r = clip(4, 7, o);
  if (r.empty()) return {true, true, "no degree in range"};
  std::ostringstream summary;
  for (int n = r.lo; n <= r.hi; ++n) {
    for (MonoidKind kind : kStudiedKinds) {
      auto const gens = standard_generators(kind, n).values();
      auto const m = close(n, gens, o.workers);
      auto const check = cross_check_green(m, kind);
      if (!check.ok) {
        return fail(kind_n(kind, n) + ": " +
                    to_string(check.counterexample->first) + " and " +
                    to_string(check.counterexample->second) +
                    (check.counterexample_in_d ? " D-related but not J-criterion"
                                               : " J-criterion but not D"));
      }
      if (n == r.hi) summary << (summary.tellp() > 0 ? " " : "") << kind_n(kind, n) << ":" << check.d_classes;
    }
  }
  return {true, false, "J classes " + summary.str()};
}

// 8. Every standard generator is needed.
Outcome minimality(VerifyOptions const& o) {
  Range const r = clip(4, 7, o);
  if (r.empty()) return {true, true, "no degree in range"};
  for (int n = r.lo; n <= r.hi; ++n) {
    for (MonoidKind kind : kStudiedKinds) {
      GeneratorSet const set = standard_generators(kind, n);
      for (std::size_t drop = 0; drop < set.size(); ++drop) {
        std::vector<PartialPerm> rest;
        for (std::size_t i = 0; i < set.size(); ++i) {
          if (i != drop) rest.push_back(set.generators[i].value);
        }
        if (close(n, rest, o.workers).size() >= card(kind, n)) {
          return fail(kind_n(kind, n) + ": still generated without " +
                      to_string(set.generators[drop].name));
        }
      }
    }
  }
  return {true, false, "n=" + std::to_string(r.lo) + ".." +
                           std::to_string(r.hi)};
}

// 9. Rank certification.
Outcome ranks(VerifyOptions const& o) {
  Range const r = clip(3, 9, o);
  if (r.empty()) return {true, true, "no degree in range"};
  for (int n = r.lo; n <= r.hi; ++n) {
    for (MonoidKind kind : kStudiedKinds) {
      if (n == 3 && reference::enumerate_monoid(kind, 3).size() != card(kind, 3)) {
        return fail(kind_n(kind, 3) + ": brute-force size mismatch");
      }
      RankCertification const c = certify_rank(kind, n, o.workers);
      if (!c.certified || c.upper_bound != c.formula ||
          c.lower_bound != c.formula) {
        return fail(kind_n(kind, n) + ": upper " + std::to_string(c.upper_bound) +
                    " lower " + std::to_string(c.lower_bound) + " formula " +
                    std::to_string(c.formula));
      }
    }
  }
  return {true, false, "certified for n=" + std::to_string(r.lo) + ".." +
                           std::to_string(r.hi)};
}

// 10. Factorization round trip and word-length guard.
Outcome factorization(VerifyOptions const& o) {
  Range const r = clip(4, 7, o);
  if (r.empty()) return {true, true, "no degree in range"};
  double worst = 0.0;
  std::size_t checked = 0;
  for (int n = r.lo; n <= r.hi; ++n) {
    for (MonoidKind kind : kStudiedKinds) {
      GeneratorSet const set = standard_generators(kind, n);
      for (auto const& a : reference::enumerate_monoid(kind, n)) {
        Word const w = factorize(a, kind);
        if (evaluate(w, n) != a) {
          return fail(kind_n(kind, n) + ": " + to_string(w) +
                      " does not evaluate to " + to_string(a));
        }
        for (GenName name : w) {
          if (!set.contains(name)) {
            return fail(kind_n(kind, n) + ": word for " + to_string(a) +
                        " uses non-standard generator " + to_string(name));
          }
        }
        if (w.size() > static_cast<std::size_t>(kWordLengthFactor * n)) {
          return fail(kind_n(kind, n) + ": word of length " +
                      std::to_string(w.size()) + " for " + to_string(a));
        }
        worst = std::max(worst, static_cast<double>(w.size()) / n);
        ++checked;
      }
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%zu elements; max length/n = %.2f (c = %d)",
                checked, worst, kWordLengthFactor);
  return {true, false, buf};
}

// 11. |MDI_n| = 2|ODI_n| - n^2 - 1.
Outcome mdi_identity(VerifyOptions const& o) {
  for (int n = 3; n <= 50; ++n) {
    std::uint64_t const u = static_cast<std::uint64_t>(n);
    if (card(MonoidKind::MDI, n) != 2 * card(MonoidKind::ODI, n) - u * u - 1) {
      return fail("formula identity fails at n=" + std::to_string(n));
    }
  }
  Range const r = clip(3, 9, o);
  for (int n = r.lo; n <= r.hi; ++n) {
    std::uint64_t const u = static_cast<std::uint64_t>(n);
    auto const odi = reference::enumerate_monoid(MonoidKind::ODI, n).size();
    auto const mdi = reference::enumerate_monoid(MonoidKind::MDI, n).size();
    if (mdi != 2 * odi - u * u - 1) {
      return fail("enumerated identity fails at n=" + std::to_string(n));
    }
  }
  return {true, false, "formula n=3..50, enumeration n=3.." +
                           std::to_string(std::max(r.hi, 2))};
}

// 12. Worker count does not change the export.
Outcome determinism(VerifyOptions const& o) {
  if (o.max_n < 7) return {true, true, "needs n = 7"};
  auto const gens = standard_generators(MonoidKind::ODI, 7).values();
  auto const one = close(7, gens, 1);
  auto const four = close(7, gens, 4);
  std::string const a = format_elements(one.elements(), ExportFormat::jsonl);
  std::string const b = format_elements(four.elements(), ExportFormat::jsonl);
  if (a != b) return fail("exports differ between 1 and 4 workers");
  for (std::size_t i = 0; i < one.size(); ++i) {
    if (one.word(i) != four.word(i)) {
      return fail("recorded words differ for " + to_string(one.elements()[i]));
    }
  }
  auto const g1 = green_structural(one);
  auto const g4 = green_structural(four);
  if (g1.d_count != g4.d_count || g1.l_count != g4.l_count ||
      g1.r_count != g4.r_count || g1.h_count != g4.h_count) {
    return fail("class counts differ between 1 and 4 workers");
  }
  return {true, false, std::to_string(a.size()) + " identical bytes"};
}

struct Criterion {
  char const* title;
  double budget;
  Outcome (*run)(VerifyOptions const&);
};

constexpr Criterion kCriteria[kCriterionCount] = {
    {"cardinality formulas match enumeration", 30.0, cardinalities},
    {"closure of standard generators equals enumeration", 60.0,
     closure_equals_enumeration},
    {"extension counts", 10.0, extension_counts},
    {"|B2| = n^2/2", 0.0, b2_size},
    {"fast isometry criterion", 0.0, fast_isometry},
    {"distance-sequence equivalences", 0.0, distance_sequence_equivalences},
    {"J-relation equals D-partition", 60.0, green_j},
    {"generating-set minimality", 0.0, minimality},
    {"rank certification", 120.0, ranks},
    {"factorization round trip", 0.0, factorization},
    {"|MDI_n| = 2|ODI_n| - n^2 - 1", 0.0, mdi_identity},
    {"closure determinism across workers", 0.0, determinism},
};

}  // namespace

CriterionResult run_criterion(int id, VerifyOptions const& options) {
  Criterion const& c = kCriteria[id - 1];
  CriterionResult r;
  r.id = id;
  r.title = c.title;
  r.budget_seconds = c.budget;
  auto const start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = c.run(options);
  } catch (std::exception const& e) {
    outcome = fail(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
  r.passed = outcome.passed;
  r.skipped = outcome.skipped;
  r.detail = outcome.detail;
  if (r.passed && c.budget > 0.0 && r.seconds > c.budget) {
    r.passed = false;
    r.detail += "; exceeded time budget";
  }
  if (options.inject_failure == id) {
    r.passed = false;
    r.detail = "injected failure";
  }
  return r;
}

std::vector<CriterionResult> run_acceptance(
    VerifyOptions const& options,
    std::function<void(CriterionResult const&)> const& on_result) {
  std::vector<CriterionResult> results;
  for (int id = 1; id <= kCriterionCount; ++id) {
    results.push_back(run_criterion(id, options));
    if (on_result) on_result(results.back());
  }
  return results;
}

std::string format_result_line(CriterionResult const& r) {
  char timing[48];
  std::snprintf(timing, sizeof timing, "%.2fs", r.seconds);
  std::string const status = !r.passed ? "FAIL" : r.skipped ? "SKIP" : "PASS";
  return status + " [" + std::to_string(r.id) + "] " + r.title + " (" +
         timing + "): " + r.detail;
}

}  // namespace dimon

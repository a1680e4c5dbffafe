#pragma once

// Finite monoids of partial permutations given by generators: closure,
// Green's relations and idempotents.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dimon/kind.hpp"
#include "dimon/partial_perm.hpp"

namespace dimon {

// A word over a generator list, as generator indices, read left to right.
using IndexWord = std::vector<std::uint16_t>;

class EnumeratedMonoid {
 public:
  [[nodiscard]] int degree() const { return n_; }
  [[nodiscard]] std::size_t size() const { return elements_.size(); }
  // Canonically sorted.
  [[nodiscard]] std::span<const PartialPerm> elements() const {
    return elements_;
  }
  [[nodiscard]] std::span<const PartialPerm> generators() const {
    return generators_;
  }
  [[nodiscard]] bool contains(PartialPerm const& a) const {
    return index_.contains(a);
  }
  // Position in elements(); throws NotMemberError when absent.
  [[nodiscard]] std::size_t index_of(PartialPerm const& a) const;
  // A shortest word (first found in breadth-first order) evaluating to
  // elements()[i].
  [[nodiscard]] IndexWord word(std::size_t i) const;

  [[nodiscard]] bool is_closed_under_inverse() const;

 private:
  friend EnumeratedMonoid close(int n, std::span<const PartialPerm> generators,
                                unsigned workers);

  struct Origin {
    std::uint32_t parent;  // index into elements_, or kNoParent
    std::uint16_t generator;
  };
  static constexpr std::uint32_t kNoParent = 0xFFFFFFFFU;

  int n_ = 0;
  std::vector<PartialPerm> generators_;
  std::vector<PartialPerm> elements_;
  std::vector<Origin> origin_;
  std::unordered_map<PartialPerm, std::uint32_t> index_;
};

// Breadth-first right-multiplication closure of {id} under the generators.
// The element list and the recorded words do not depend on `workers`
// (0 = hardware concurrency).
EnumeratedMonoid close(int n, std::span<const PartialPerm> generators,
                       unsigned workers = 1);

// Class index per element (indices follow elements() order of first
// appearance).
struct GreenDecomposition {
  std::vector<std::uint32_t> l_class;
  std::vector<std::uint32_t> r_class;
  std::vector<std::uint32_t> h_class;
  std::vector<std::uint32_t> d_class;
  std::size_t l_count = 0;
  std::size_t r_count = 0;
  std::size_t h_count = 0;
  std::size_t d_count = 0;
};

enum class GreenRelation { L, R, H, D };

// L by image, R by domain, H by both, D as the join of L and R.
// Throws NotInverseError if the monoid is not closed under inversion.
GreenDecomposition green_structural(EnumeratedMonoid const& m);

// The J-relation criterion in terms of distance sequences of the domains.
// kind must be ODI, MDI or OPDI; a and b are assumed to be members.
bool j_related(PartialPerm const& a, PartialPerm const& b, MonoidKind kind);

struct GreenCrossCheck {
  bool ok = true;
  std::size_t d_classes = 0;
  std::size_t pairs_checked = 0;
  // First disagreeing pair: (a, b, related by D, related by j_related).
  std::optional<std::pair<PartialPerm, PartialPerm>> counterexample;
  bool counterexample_in_d = false;
};

// Compares the structural D-partition with j_related over all pairs.
GreenCrossCheck cross_check_green(EnumeratedMonoid const& m, MonoidKind kind);

std::vector<PartialPerm> idempotents(EnumeratedMonoid const& m);

}  // namespace dimon

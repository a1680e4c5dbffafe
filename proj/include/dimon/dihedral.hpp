#pragma once

// The dihedral group D_2n = <g, h | g^n = h^2 = 1, hg = g^(n-1)h> acting on
// the vertices of C_n, and classification of partial permutations by the
// dihedral inverse monoid and its three submonoids.

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "dimon/kind.hpp"
#include "dimon/partial_perm.hpp"

namespace dimon {

// h^j g^k in normal form, j in {0,1}, k in 0..n-1. Elements act on the
// right like PartialPerm: i(st) = (is)t.
class DihedralElement {
 public:
  DihedralElement(int n, bool reflect, int rotation);

  static DihedralElement identity(int n) { return {n, false, 0}; }
  static DihedralElement g(int n) { return {n, false, 1}; }
  static DihedralElement h(int n) { return {n, true, 0}; }

  [[nodiscard]] int degree() const { return n_; }
  [[nodiscard]] bool reflects() const { return reflect_; }
  [[nodiscard]] int rotation() const { return k_; }

  [[nodiscard]] int apply(int i) const;
  // The set A·σ = {aσ | a in A}.
  [[nodiscard]] PointSet apply(PointSet A) const;

  friend bool operator==(DihedralElement const&,
                         DihedralElement const&) = default;
  // Canonical order: j ascending, then k.
  friend auto operator<=>(DihedralElement const&,
                          DihedralElement const&) = default;

 private:
  int n_;
  bool reflect_;
  int k_;
};

DihedralElement multiply(DihedralElement const& s, DihedralElement const& t);
inline DihedralElement operator*(DihedralElement const& s,
                                 DihedralElement const& t) {
  return multiply(s, t);
}
DihedralElement invert(DihedralElement const& s);
// m may be negative.
DihedralElement power(DihedralElement const& s, long long m);

// All 2n elements in canonical order.
std::vector<DihedralElement> dihedral_elements(int n);

// `g^k` or `h*g^k`.
std::string to_string(DihedralElement const& s);
DihedralElement parse_dihedral(int n, std::string_view text);

// σ restricted to A, as a partial permutation.
PartialPerm to_partial_perm(DihedralElement const& s, PointSet A);
PartialPerm to_permutation(DihedralElement const& s);

// Every σ in D_2n with σ|dom(a) = a, in canonical order. Empty iff a is not a
// partial isometry of C_n; all 2n elements for the empty map.
std::vector<DihedralElement> extensions(PartialPerm const& a);

// B_2: rank-2 maps whose two domain points are antipodal on C_n.
bool is_in_B2(PartialPerm const& a);
// |B_2| = n^2 / 2 for even n, 0 for odd n.
long long b2_count(int n);

struct MembershipReport {
  bool in_DI = false;
  bool in_ODI = false;
  bool in_MDI = false;
  bool in_OPDI = false;
  std::vector<DihedralElement> extensions;

  [[nodiscard]] bool in(MonoidKind kind) const;
};

MembershipReport classify(PartialPerm const& a);

// Membership without computing extensions: rank <= 1 maps are in; otherwise
// the map must be oriented and pass the consecutive/extreme distance test.
bool in_dihedral_monoid(PartialPerm const& a);

bool is_member(PartialPerm const& a, MonoidKind kind);

}  // namespace dimon

#pragma once

// Named generators (g, h, x, y, e_i, x_i, y_i), words over them, and the
// standard generating sets of ODI_n, MDI_n and OPDI_n.

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "dimon/kind.hpp"
#include "dimon/partial_perm.hpp"

namespace dimon {

enum class Symbol { g, h, x, y, e, xi, yi };

struct GenName {
  Symbol symbol = Symbol::g;
  int index = 0;  // used by e, xi, yi only

  friend bool operator==(GenName, GenName) = default;
  friend auto operator<=>(GenName, GenName) = default;
};

inline GenName gen_g() { return {Symbol::g, 0}; }
inline GenName gen_h() { return {Symbol::h, 0}; }
inline GenName gen_x() { return {Symbol::x, 0}; }
inline GenName gen_y() { return {Symbol::y, 0}; }
inline GenName gen_e(int i) { return {Symbol::e, i}; }
inline GenName gen_xi(int i) { return {Symbol::xi, i}; }
inline GenName gen_yi(int i) { return {Symbol::yi, i}; }

// "g", "h", "x", "y", "e3", "x1", "y2".
std::string to_string(GenName name);
GenName parse_gen_name(std::string_view token);

// The element a name denotes in degree n:
//   x: i -> i+1 on 1..n-1, y = x^-1, e_i = id off {i},
//   x_i = (1 -> 1, 1+i -> n-i+1), y_i = x_i^-1, g and h as in D_2n.
// Throws DomainError for an index outside its range (1..n for e_i,
// 1..floor((n-1)/2) for x_i and y_i).
PartialPerm generator_value(GenName name, int n);

using Word = std::vector<GenName>;

// Space-separated names; the empty word prints as "ε".
std::string to_string(Word const& w);
Word parse_word(std::string_view text);

// Left-to-right product; the empty word is the identity.
PartialPerm evaluate(Word const& w, int n);

struct NamedGenerator {
  GenName name;
  PartialPerm value;
};

struct GeneratorSet {
  MonoidKind kind;
  int n;
  std::vector<NamedGenerator> generators;

  [[nodiscard]] std::size_t size() const { return generators.size(); }
  [[nodiscard]] std::vector<PartialPerm> values() const;
  [[nodiscard]] bool contains(GenName name) const;
};

// ODI: x, y, e_2..e_(n-1), x_1..x_m, y_1..y_m
// MDI: h, x, e_2..e_floor((n+1)/2), x_1..x_m, y_1..y_m
// OPDI: g, e_n, x_1..x_m
// DI: g, h, e_n
// with m = floor((n-1)/2). n >= 3.
GeneratorSet standard_generators(MonoidKind kind, int n);

}  // namespace dimon

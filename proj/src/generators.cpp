#include "dimon/generators.hpp"

#include <algorithm>
#include <charconv>

#include "dimon/dihedral.hpp"
#include "dimon/error.hpp"

namespace dimon {

std::string to_string(GenName name) {
  switch (name.symbol) {
    case Symbol::g:
      return "g";
    case Symbol::h:
      return "h";
    case Symbol::x:
      return "x";
    case Symbol::y:
      return "y";
    case Symbol::e:
      return "e" + std::to_string(name.index);
    case Symbol::xi:
      return "x" + std::to_string(name.index);
    case Symbol::yi:
      return "y" + std::to_string(name.index);
  }
  return "?";
}

GenName parse_gen_name(std::string_view token) {
  if (token == "g") return gen_g();
  if (token == "h") return gen_h();
  if (token == "x") return gen_x();
  if (token == "y") return gen_y();
  if (token.size() >= 2 &&
      (token[0] == 'e' || token[0] == 'x' || token[0] == 'y')) {
    std::string_view digits = token.substr(1);
    int index = 0;
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() &&
        digits[0] >= '1' && digits[0] <= '9') {
      switch (token[0]) {
        case 'e':
          return gen_e(index);
        case 'x':
          return gen_xi(index);
        default:
          return gen_yi(index);
      }
    }
  }
  throw ParseError("unknown generator name '" + std::string(token) + "'");
}

PartialPerm generator_value(GenName name, int n) {
  if (n < 3 || n > kMaxDegree) {
    throw DomainError("generators need 3 <= n <= " + std::to_string(kMaxDegree));
  }
  int const m = (n - 1) / 2;
  auto check_rank2_index = [&](int i) {
    if (i < 1 || i > m) {
      throw DomainError(to_string(name) + ": index outside 1.." +
                        std::to_string(m) + " for n = " + std::to_string(n));
    }
  };
  switch (name.symbol) {
    case Symbol::g:
      return to_permutation(DihedralElement::g(n));
    case Symbol::h:
      return to_permutation(DihedralElement::h(n));
    case Symbol::x: {
      std::vector<std::pair<int, int>> pairs;
      for (int i = 1; i < n; ++i) pairs.emplace_back(i, i + 1);
      return PartialPerm(n, pairs);
    }
    case Symbol::y: {
      std::vector<std::pair<int, int>> pairs;
      for (int i = 2; i <= n; ++i) pairs.emplace_back(i, i - 1);
      return PartialPerm(n, pairs);
    }
    case Symbol::e:
      if (name.index < 1 || name.index > n) {
        throw DomainError(to_string(name) + ": index outside 1.." +
                          std::to_string(n));
      }
      return PartialPerm::partial_identity_complement(n, name.index);
    case Symbol::xi:
      check_rank2_index(name.index);
      return PartialPerm(n, {{1, 1}, {1 + name.index, n - name.index + 1}});
    case Symbol::yi:
      check_rank2_index(name.index);
      return PartialPerm(n, {{1, 1}, {n - name.index + 1, 1 + name.index}});
  }
  throw DomainError("unknown generator");
}

std::string to_string(Word const& w) {
  if (w.empty()) return "ε";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ' ';
    out += to_string(w[i]);
  }
  return out;
}

Word parse_word(std::string_view text) {
  if (text == "ε") return {};
  if (text.empty()) throw ParseError("empty word must be written as ε");
  Word w;
  std::size_t pos = 0;
  while (true) {
    std::size_t const space = text.find(' ', pos);
    std::string_view const token =
        text.substr(pos, space == std::string_view::npos ? space : space - pos);
    if (token.empty()) throw ParseError("words use single spaces between names");
    w.push_back(parse_gen_name(token));
    if (space == std::string_view::npos) break;
    pos = space + 1;
  }
  return w;
}

PartialPerm evaluate(Word const& w, int n) {
  PartialPerm out = PartialPerm::identity(n);
  for (GenName name : w) out = compose(out, generator_value(name, n));
  return out;
}

std::vector<PartialPerm> GeneratorSet::values() const {
  std::vector<PartialPerm> out;
  out.reserve(generators.size());
  for (auto const& g : generators) out.push_back(g.value);
  return out;
}

bool GeneratorSet::contains(GenName name) const {
  return std::any_of(generators.begin(), generators.end(),
                     [name](NamedGenerator const& g) { return g.name == name; });
}

GeneratorSet standard_generators(MonoidKind kind, int n) {
  if (n < 3) throw DomainError("standard generators need n >= 3");
  int const m = (n - 1) / 2;
  std::vector<GenName> names;
  auto add_rank2 = [&](bool with_y) {
    for (int i = 1; i <= m; ++i) names.push_back(gen_xi(i));
    if (with_y) {
      for (int i = 1; i <= m; ++i) names.push_back(gen_yi(i));
    }
  };
  switch (kind) {
    case MonoidKind::ODI:
      names = {gen_x(), gen_y()};
      for (int i = 2; i <= n - 1; ++i) names.push_back(gen_e(i));
      add_rank2(true);
      break;
    case MonoidKind::MDI:
      names = {gen_h(), gen_x()};
      for (int i = 2; i <= (n + 1) / 2; ++i) names.push_back(gen_e(i));
      add_rank2(true);
      break;
    case MonoidKind::OPDI:
      names = {gen_g(), gen_e(n)};
      add_rank2(false);
      break;
    case MonoidKind::DI:
      names = {gen_g(), gen_h(), gen_e(n)};
      break;
  }
  GeneratorSet set{kind, n, {}};
  for (GenName name : names) {
    set.generators.push_back({name, generator_value(name, n)});
  }
  return set;
}

}  // namespace dimon

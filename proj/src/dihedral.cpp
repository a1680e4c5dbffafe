#include "dimon/dihedral.hpp"

#include <charconv>

#include "dimon/cycle_geometry.hpp"
#include "dimon/error.hpp"

namespace dimon {

std::string to_string(MonoidKind kind) {
  switch (kind) {
    case MonoidKind::DI:
      return "di";
    case MonoidKind::ODI:
      return "odi";
    case MonoidKind::MDI:
      return "mdi";
    case MonoidKind::OPDI:
      return "opdi";
  }
  return "?";
}

MonoidKind parse_kind(std::string_view token) {
  if (token == "di") return MonoidKind::DI;
  if (token == "odi") return MonoidKind::ODI;
  if (token == "mdi") return MonoidKind::MDI;
  if (token == "opdi") return MonoidKind::OPDI;
  throw ParseError("unknown monoid kind '" + std::string(token) +
                   "' (expected di, odi, mdi or opdi)");
}

DihedralElement::DihedralElement(int n, bool reflect, int rotation)
    : n_(n), reflect_(reflect), k_(rotation) {
  if (n < 3 || n > kMaxDegree) {
    throw DomainError("dihedral group needs 3 <= n <= " +
                      std::to_string(kMaxDegree));
  }
  if (rotation < 0 || rotation >= n) {
    throw DomainError("rotation exponent outside 0..n-1");
  }
}

int DihedralElement::apply(int i) const {
  if (i < 1 || i > n_) {
    throw DomainError("apply: point outside 1.." + std::to_string(n_));
  }
  int const base = reflect_ ? n_ - i : i - 1;  // 0-based image under h^j
  return (base + k_) % n_ + 1;
}

PointSet DihedralElement::apply(PointSet A) const {
  PointSet out;
  for (int p : A.to_vector()) out.insert(apply(p));
  return out;
}

DihedralElement multiply(DihedralElement const& s, DihedralElement const& t) {
  if (s.degree() != t.degree()) {
    throw AmbientMismatchError("multiply: dihedral groups of different degree");
  }
  int const n = s.degree();
  // g^b h = h g^(-b), so (h^a g^b)(h^c g^d) = h^(a+c) g^((-1)^c b + d).
  int const b = t.reflects() ? n - s.rotation() : s.rotation();
  return {n, s.reflects() != t.reflects(), (b + t.rotation()) % n};
}

DihedralElement invert(DihedralElement const& s) {
  if (s.reflects()) return s;  // every h g^k is an involution
  int const n = s.degree();
  return {n, false, (n - s.rotation()) % n};
}

DihedralElement power(DihedralElement const& s, long long m) {
  int const n = s.degree();
  if (s.reflects()) {
    return (m % 2 == 0) ? DihedralElement::identity(n) : s;
  }
  long long k = (static_cast<long long>(s.rotation()) * (m % n)) % n;
  if (k < 0) k += n;
  return {n, false, static_cast<int>(k)};
}

std::vector<DihedralElement> dihedral_elements(int n) {
  std::vector<DihedralElement> out;
  out.reserve(static_cast<std::size_t>(2 * n));
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < n; ++k) out.emplace_back(n, j == 1, k);
  }
  return out;
}

std::string to_string(DihedralElement const& s) {
  return (s.reflects() ? "h*g^" : "g^") + std::to_string(s.rotation());
}

DihedralElement parse_dihedral(int n, std::string_view text) {
  std::string_view rest = text;
  bool reflect = false;
  if (rest.starts_with("h*")) {
    reflect = true;
    rest.remove_prefix(2);
  }
  if (!rest.starts_with("g^")) {
    throw ParseError("dihedral element must look like g^k or h*g^k");
  }
  rest.remove_prefix(2);
  if (rest.empty() || rest[0] < '0' || rest[0] > '9' ||
      (rest.size() > 1 && rest[0] == '0')) {
    throw ParseError("malformed rotation exponent in '" + std::string(text) +
                     "'");
  }
  int k = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), k);
  if (ec != std::errc{} || ptr != rest.data() + rest.size()) {
    throw ParseError("malformed rotation exponent in '" + std::string(text) +
                     "'");
  }
  if (k >= n) throw ParseError("rotation exponent must be below n");
  return {n, reflect, k};
}

PartialPerm to_partial_perm(DihedralElement const& s, PointSet A) {
  std::vector<std::pair<int, int>> pairs;
  for (int p : A.to_vector()) pairs.emplace_back(p, s.apply(p));
  return PartialPerm(s.degree(), pairs);
}

PartialPerm to_permutation(DihedralElement const& s) {
  return to_partial_perm(s, PointSet::range(1, s.degree()));
}

std::vector<DihedralElement> extensions(PartialPerm const& a) {
  std::vector<DihedralElement> out;
  for (auto const& s : dihedral_elements(a.degree())) {
    bool agrees = true;
    for (auto const& p : a.pairs()) {
      if (s.apply(p.from) != p.to) {
        agrees = false;
        break;
      }
    }
    if (agrees) out.push_back(s);
  }
  return out;
}

bool is_in_B2(PartialPerm const& a) {
  int const n = a.degree();
  if (a.rank() != 2 || n % 2 != 0 || n < 4) return false;
  auto const pairs = a.pairs();
  return distance(n, pairs[0].from, pairs[1].from) * 2 == n &&
         distance(n, pairs[0].to, pairs[1].to) * 2 == n;
}

long long b2_count(int n) {
  if (n % 2 != 0) return 0;
  return static_cast<long long>(n) * n / 2;
}

bool MembershipReport::in(MonoidKind kind) const {
  switch (kind) {
    case MonoidKind::DI:
      return in_DI;
    case MonoidKind::ODI:
      return in_ODI;
    case MonoidKind::MDI:
      return in_MDI;
    case MonoidKind::OPDI:
      return in_OPDI;
  }
  return false;
}

MembershipReport classify(PartialPerm const& a) {
  MembershipReport r;
  r.extensions = extensions(a);
  r.in_DI = !r.extensions.empty();
  if (r.in_DI) {
    OrderFlags const f = classify_order(a);
    r.in_ODI = f.order_preserving;
    r.in_MDI = f.monotone();
    r.in_OPDI = f.orientation_preserving;
  }
  return r;
}

bool in_dihedral_monoid(PartialPerm const& a) {
  if (a.rank() <= 1) return true;
  if (!classify_order(a).oriented()) return false;
  return is_partial_isometry_oriented_fast(a);
}

bool is_member(PartialPerm const& a, MonoidKind kind) {
  if (a.degree() < 3) return false;
  if (!in_dihedral_monoid(a)) return false;
  OrderFlags const f = classify_order(a);
  switch (kind) {
    case MonoidKind::DI:
      return true;
    case MonoidKind::ODI:
      return f.order_preserving;
    case MonoidKind::MDI:
      return f.monotone();
    case MonoidKind::OPDI:
      return f.orientation_preserving;
  }
  return false;
}

}  // namespace dimon

#include "dimon/partial_perm.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "dimon/error.hpp"

namespace dimon {

namespace {

void check_degree(int n) {
  if (n < 1 || n > kMaxDegree) {
    throw DomainError("degree " + std::to_string(n) + " outside 1.." +
                      std::to_string(kMaxDegree));
  }
}

void check_point(int n, int p) {
  if (p < 1 || p > n) {
    throw DomainError("point " + std::to_string(p) + " outside 1.." +
                      std::to_string(n));
  }
}

}  // namespace

PointSet::PointSet(std::initializer_list<int> points) {
  for (int p : points) insert(p);
}

PointSet PointSet::range(int lo, int hi) {
  PointSet s;
  for (int p = lo; p <= hi; ++p) s.insert(p);
  return s;
}

void PointSet::insert(int p) {
  if (p < 0 || p >= 64) throw DomainError("point out of PointSet range");
  mask_ |= std::uint64_t{1} << p;
}

void PointSet::erase(int p) {
  if (p < 0 || p >= 64) return;
  mask_ &= ~(std::uint64_t{1} << p);
}

std::vector<int> PointSet::to_vector() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(std::countr_zero(m));
  }
  return out;
}

std::string to_string(PointSet s) {
  std::string out = "{";
  bool first = true;
  for (int p : s.to_vector()) {
    if (!first) out += ",";
    out += std::to_string(p);
    first = false;
  }
  return out + "}";
}

PartialPerm::PartialPerm(int n, std::span<const std::pair<int, int>> pairs)
    : n_(0) {
  check_degree(n);
  n_ = static_cast<Point>(n);
  if (pairs.size() > static_cast<std::size_t>(n)) {
    throw DomainError("more pairs than points");
  }
  std::vector<std::pair<int, int>> sorted(pairs.begin(), pairs.end());
  std::sort(sorted.begin(), sorted.end());
  PointSet seen_images;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    auto [a, b] = sorted[i];
    check_point(n, a);
    check_point(n, b);
    if (i > 0 && sorted[i - 1].first == a) {
      throw DomainError("domain point " + std::to_string(a) + " repeated");
    }
    if (seen_images.contains(b)) {
      throw DomainError("image point " + std::to_string(b) +
                        " repeated (map is not injective)");
    }
    seen_images.insert(b);
    push_unchecked(a, b);
  }
}

PartialPerm::PartialPerm(int n, std::initializer_list<std::pair<int, int>> pairs)
    : PartialPerm(n, std::span<const std::pair<int, int>>(pairs.begin(),
                                                          pairs.size())) {}

PartialPerm PartialPerm::identity(int n) {
  return identity_on(n, PointSet::range(1, n));
}

PartialPerm PartialPerm::identity_on(int n, PointSet domain) {
  check_degree(n);
  if (!domain.is_subset_of(PointSet::range(1, n))) {
    throw DomainError("identity domain not contained in 1.." +
                      std::to_string(n));
  }
  PartialPerm out(Unchecked{}, n);
  for (int p : domain.to_vector()) out.push_unchecked(p, p);
  return out;
}

PartialPerm PartialPerm::empty(int n) {
  check_degree(n);
  return PartialPerm(Unchecked{}, n);
}

PartialPerm PartialPerm::partial_identity_complement(int n, int i) {
  check_degree(n);
  check_point(n, i);
  PointSet d = PointSet::range(1, n);
  d.erase(i);
  return identity_on(n, d);
}

PointSet PartialPerm::domain() const {
  PointSet s;
  for (auto const& p : pairs()) s.insert(p.from);
  return s;
}

PointSet PartialPerm::image() const {
  PointSet s;
  for (auto const& p : pairs()) s.insert(p.to);
  return s;
}

std::vector<int> PartialPerm::image_sequence() const {
  std::vector<int> out;
  out.reserve(size_);
  for (auto const& p : pairs()) out.push_back(p.to);
  return out;
}

int PartialPerm::image_of(int x) const {
  for (auto const& p : pairs()) {
    if (p.from == x) return p.to;
    if (p.from > x) break;
  }
  return 0;
}

bool PartialPerm::is_idempotent() const {
  return std::all_of(pairs().begin(), pairs().end(),
                     [](Pair p) { return p.from == p.to; });
}

std::size_t PartialPerm::hash() const noexcept {
  // FNV-1a over the canonical bytes.
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint8_t byte) {
    h ^= byte;
    h *= 1099511628211ULL;
  };
  mix(n_);
  for (auto const& p : pairs()) {
    mix(p.from);
    mix(p.to);
  }
  return static_cast<std::size_t>(h);
}

PartialPerm compose(PartialPerm const& a, PartialPerm const& b) {
  if (a.n_ != b.n_) {
    throw AmbientMismatchError("compose: degrees " + std::to_string(a.n_) +
                               " and " + std::to_string(b.n_));
  }
  std::array<Point, kMaxDegree + 1> image_of_b{};
  for (auto const& p : b.pairs()) image_of_b[p.from] = p.to;
  PartialPerm out(PartialPerm::Unchecked{}, a.n_);
  for (auto const& p : a.pairs()) {
    if (Point c = image_of_b[p.to]; c != 0) out.push_unchecked(p.from, c);
  }
  return out;
}

PartialPerm inverse(PartialPerm const& a) {
  std::array<Point, kMaxDegree + 1> preimage{};
  for (auto const& p : a.pairs()) preimage[p.to] = p.from;
  PartialPerm out(PartialPerm::Unchecked{}, a.n_);
  for (int y = 1; y <= a.n_; ++y) {
    if (preimage[y] != 0) out.push_unchecked(y, preimage[y]);
  }
  return out;
}

PartialPerm restrict(PartialPerm const& a, PointSet A) {
  PartialPerm out(PartialPerm::Unchecked{}, a.n_);
  for (auto const& p : a.pairs()) {
    if (A.contains(p.from)) out.push_unchecked(p.from, p.to);
  }
  return out;
}

OrderFlags classify_order(PartialPerm const& a) {
  auto const pairs = a.pairs();
  std::size_t const t = pairs.size();
  if (t <= 1) return {true, true, true, true};

  int ascents = 0;
  int descents = 0;
  for (std::size_t i = 0; i + 1 < t; ++i) {
    if (pairs[i].to < pairs[i + 1].to) {
      ++ascents;
    } else {
      ++descents;
    }
  }
  OrderFlags f;
  f.order_preserving = descents == 0;
  f.order_reversing = ascents == 0;
  // Cyclic sequences close up: the wrap-around step a_t -> a_1 also counts.
  bool const wrap_descent = pairs[t - 1].to > pairs[0].to;
  f.orientation_preserving = descents + (wrap_descent ? 1 : 0) <= 1;
  f.orientation_reversing = ascents + (wrap_descent ? 0 : 1) <= 1;
  return f;
}

std::string to_string(PartialPerm const& a) {
  std::string out = "n=" + std::to_string(a.degree()) + ";";
  bool first = true;
  for (auto const& p : a.pairs()) {
    if (!first) out += ',';
    out += std::to_string(p.from);
    out += '>';
    out += std::to_string(p.to);
    first = false;
  }
  return out;
}

namespace {

// Strict decimal: no sign, no leading zero, at least one digit.
int parse_decimal(std::string_view text, std::size_t& pos,
                  std::string_view what) {
  std::size_t const start = pos;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
  if (pos == start) {
    throw ParseError("expected " + std::string(what) + " at offset " +
                     std::to_string(start));
  }
  if (text[start] == '0') {
    throw ParseError(std::string(what) + " has a leading zero");
  }
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(text.data() + start, text.data() + pos, value);
  if (ec != std::errc{}) {
    throw ParseError(std::string(what) + " out of range");
  }
  return value;
}

void expect(std::string_view text, std::size_t& pos, char c) {
  if (pos >= text.size() || text[pos] != c) {
    throw ParseError(std::string("expected '") + c + "' at offset " +
                     std::to_string(pos));
  }
  ++pos;
}

}  // namespace

PartialPerm parse_partial_perm(std::string_view text) {
  std::size_t pos = 0;
  expect(text, pos, 'n');
  expect(text, pos, '=');
  int const n = parse_decimal(text, pos, "degree");
  expect(text, pos, ';');
  std::vector<std::pair<int, int>> pairs;
  while (pos < text.size()) {
    if (!pairs.empty()) expect(text, pos, ',');
    int const a = parse_decimal(text, pos, "domain point");
    expect(text, pos, '>');
    int const b = parse_decimal(text, pos, "image point");
    if (!pairs.empty() && a <= pairs.back().first) {
      throw ParseError("domain points must be strictly ascending");
    }
    pairs.emplace_back(a, b);
  }
  try {
    return PartialPerm(n, pairs);
  } catch (DomainError const& e) {
    throw ParseError(e.what());
  }
}

}  // namespace dimon

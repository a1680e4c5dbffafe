#include "dimon/formulas.hpp"

#include <string>

#include "dimon/error.hpp"

namespace dimon {

namespace {

void check_formula_degree(int n) {
  if (n < 3 || n > kMaxFormulaDegree) {
    throw DomainError("formulas need 3 <= n <= " +
                      std::to_string(kMaxFormulaDegree) + ", got " +
                      std::to_string(n));
  }
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::uint64_t card(MonoidKind kind, int n) {
  check_formula_degree(n);
  std::uint64_t const u = static_cast<std::uint64_t>(n);
  std::uint64_t const pow2 = std::uint64_t{1} << n;
  bool const even = n % 2 == 0;
  std::uint64_t const cubic = (u + 1) * u * (u - 1);  // divisible by 6
  switch (kind) {
    case MonoidKind::ODI:
      // 3*2^n + (n+1)n(n-1)/6 - (1+(-1)^n)/8 n^2 - 2n - 2
      return 3 * pow2 + cubic / 6 - (even ? u * u / 4 : 0) - 2 * u - 2;
    case MonoidKind::MDI:
      // 3*2^(n+1) + (n+1)n(n-1)/3 - (5+(-1)^n)/4 n^2 - 4n - 5
      return 6 * pow2 + cubic / 3 - (even ? 3 * u * u / 2 : u * u) - 4 * u - 5;
    case MonoidKind::OPDI:
      // n*2^n + n^2(n-1)/2 - (1+(-1)^n)/4 n^2 - n + 1
      return u * pow2 + u * u * (u - 1) / 2 - (even ? u * u / 2 : 0) - u + 1;
    case MonoidKind::DI:
      break;
  }
  throw DomainError("no cardinality formula for di");
}

std::uint64_t card_rank_le1(int n) {
  check_formula_degree(n);
  return static_cast<std::uint64_t>(n) * n + 1;
}

ProofCounts proof_counts(int n, int k) {
  check_formula_degree(n);
  if (k < 0 || k >= n) throw DomainError("proof_counts: k outside 0..n-1");
  std::uint64_t const a = static_cast<std::uint64_t>(k);
  std::uint64_t const b = static_cast<std::uint64_t>(n - k);
  ProofCounts c;
  c.op_restr_hgk = a * b;
  for (std::uint64_t i = 2; i <= b; ++i) c.op_restr_gk += binomial(b, i);
  for (std::uint64_t i = 2; i <= a; ++i) c.op_restr_gk += binomial(a, i);
  c.opdi_restr_hgk = a * b + binomial(a, 2) + binomial(b, 2);
  return c;
}

int rank_formula(MonoidKind kind, int n) {
  if (n < 3) throw DomainError("rank_formula needs n >= 3");
  if (kind == MonoidKind::DI) throw DomainError("no rank formula for di");
  if (n == 3) {
    return kind == MonoidKind::OPDI ? 2 : 3;
  }
  int const m = (n - 1) / 2;
  switch (kind) {
    case MonoidKind::ODI:
      return n + 2 * m;
    case MonoidKind::MDI:
      return 2 + 3 * m;
    case MonoidKind::OPDI:
      return 2 + m;
    case MonoidKind::DI:
      break;
  }
  return 0;
}

}  // namespace dimon

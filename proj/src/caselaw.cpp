#include "jconst/caselaw.hpp"

#include <algorithm>

namespace jconst {

std::uint64_t jbar_gl(unsigned d) {
  switch (d) {
  case 1: return 1;
  case 2: return 12;
  case 3: return 72;
  case 4: return 960;
  case 5: return 960;
  default:
    fail(Errc::TableMiss, "no weak constant on record for dimension " + std::to_string(d));
  }
}

namespace {

std::uint64_t factorial(unsigned n) {
  std::uint64_t r = 1;
  for (unsigned i = 2; i <= n; ++i)
    r = checked_mul(r, i);
  return r;
}

std::uint64_t pow_u64(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i)
    r = checked_mul(r, base);
  return r;
}

void enumerate_cases(unsigned remaining, unsigned next_dim, unsigned summands,
                     std::vector<std::pair<unsigned, unsigned>> &stack, unsigned min_summands,
                     std::vector<PartitionCase> &out) {
  if (remaining == 0) {
    if (summands < min_summands)
      return;
    PartitionCase pc;
    pc.parts = stack;
    pc.bound = 1;
    for (auto [m, d] : pc.parts) {
      pc.bound = checked_mul(pc.bound, factorial(m));
      pc.bound = checked_mul(pc.bound, pow_u64(jbar_gl(d), m));
    }
    out.push_back(std::move(pc));
    return;
  }
  for (unsigned d = next_dim; d <= remaining; ++d) {
    for (unsigned m = 1; m * d <= remaining; ++m) {
      // Only descend when the summand budget can still be met.
      stack.emplace_back(m, d);
      enumerate_cases(remaining - m * d, d + 1, summands + m, stack, min_summands, out);
      stack.pop_back();
    }
  }
}

} // namespace

IsotypicalResult isotypical_bound(unsigned n, unsigned min_summands) {
  if (n < 1 || min_summands < 1 || min_summands > n)
    fail(Errc::BadParams, "isotypical bound needs 1 <= min_summands <= N");
  IsotypicalResult result;
  std::vector<std::pair<unsigned, unsigned>> stack;
  enumerate_cases(n, 1, 0, stack, min_summands, result.cases);
  for (const PartitionCase &pc : result.cases)
    result.max_bound = std::max(result.max_bound, pc.bound);
  return result;
}

unsigned suzuki_a(unsigned alpha) {
  unsigned a = 1;
  while (static_cast<std::uint64_t>(a) * (a + 1) < 2ull * alpha)
    ++a;
  return a;
}

std::uint64_t guaranteed_abelian_order(std::uint64_t n) {
  std::uint64_t best = 1;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p)
      continue;
    unsigned alpha = 0;
    while (rest % p == 0) {
      rest /= p;
      ++alpha;
    }
    best = std::max(best, pow_u64(p, suzuki_a(alpha)));
  }
  if (rest > 1)
    best = std::max(best, rest); // leftover prime, alpha = 1
  return best;
}

std::uint64_t order_bound(std::uint64_t n) {
  if (n == 0)
    fail(Errc::BadParams, "order bound needs n >= 1");
  return n / guaranteed_abelian_order(n);
}

SweepResult max_order_bound_upto(std::uint64_t limit) {
  if (limit == 0)
    fail(Errc::BadParams, "sweep needs limit >= 1");
  // Smallest-prime-factor sieve; factoring by trial division per n would
  // also do at this size, the sieve keeps the sweep comfortably fast.
  std::vector<std::uint32_t> spf(limit + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf[i])
      continue;
    for (std::uint64_t j = i; j <= limit; j += i)
      if (!spf[j])
        spf[j] = static_cast<std::uint32_t>(i);
  }
  SweepResult result{1, 1};
  for (std::uint64_t n = 2; n <= limit; ++n) {
    std::uint64_t g = 1;
    std::uint64_t rest = n;
    while (rest > 1) {
      std::uint64_t p = spf[rest];
      unsigned alpha = 0;
      while (rest % p == 0) {
        rest /= p;
        ++alpha;
      }
      g = std::max(g, pow_u64(p, suzuki_a(alpha)));
    }
    std::uint64_t value = n / g;
    if (value > result.max_value) {
      result.max_value = value;
      result.argmax = n;
    }
  }
  return result;
}

std::uint64_t geom_bound(GeomKind kind, const std::map<std::string, std::uint64_t> &params) {
  auto get = [&](const std::string &key) {
    auto it = params.find(key);
    if (it == params.end())
      fail(Errc::BadParams, "geometry bound is missing parameter " + key);
    return it->second;
  };
  switch (kind) {
  case GeomKind::Hurwitz: {
    std::uint64_t g = get("g");
    if (g < 2)
      fail(Errc::BadParams, "automorphism bound 84(g-1) needs genus >= 2");
    return checked_mul(84, g - 1);
  }
  case GeomKind::Xiao: {
    std::uint64_t k2 = get("K2");
    if (k2 < 1)
      fail(Errc::BadParams, "surface bound 42^2*K^2 needs K^2 >= 1");
    return checked_mul(42 * 42, k2);
  }
  case GeomKind::Namikawa: {
    std::uint64_t rho = get("rho");
    std::uint64_t h12 = get("h12");
    if (rho < 1 || 20 + h12 < rho)
      fail(Errc::BadParams, "singular point bound 20 - rho + h12 out of range");
    return 20 - rho + h12;
  }
  case GeomKind::Minkowski4:
    return 5760;
  }
  fail(Errc::BadParams, "unknown geometry bound kind");
}

} // namespace jconst

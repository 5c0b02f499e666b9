#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "jconst/error.hpp"

namespace jconst {

// Weak constants for d x d matrix groups, d = 1..5. Data, not recomputed;
// the attaining witnesses are certified by the jordan module.
std::uint64_t jbar_gl(unsigned d);

struct PartitionCase {
  // (multiplicity, dimension) pairs with strictly increasing dimensions;
  // bound = prod m_i! * prod jbar_gl(d_i)^m_i.
  std::vector<std::pair<unsigned, unsigned>> parts;
  std::uint64_t bound = 0;
};

struct IsotypicalResult {
  std::uint64_t max_bound = 0;
  std::vector<PartitionCase> cases;
};

// All splittings m_1 d_1 + ... + m_t d_t = N with at least min_summands
// summands; every case's bound plus the maximum over cases.
IsotypicalResult isotypical_bound(unsigned n, unsigned min_summands);

// Least a with a(a+1) >= 2*alpha: a p-group of order p^alpha contains an
// abelian subgroup of order p^a.
unsigned suzuki_a(unsigned alpha);

// Largest guaranteed abelian subgroup order over all groups of order n:
// max over prime powers p^alpha exactly dividing n of p^suzuki_a(alpha).
std::uint64_t guaranteed_abelian_order(std::uint64_t n);

// n / guaranteed_abelian_order(n): an upper bound for the weak constant
// of every group of order n.
std::uint64_t order_bound(std::uint64_t n);

struct SweepResult {
  std::uint64_t max_value = 0;
  std::uint64_t argmax = 0; // smallest n attaining the maximum
};

SweepResult max_order_bound_upto(std::uint64_t limit);

enum class GeomKind {
  Hurwitz,    // 84(g-1), curves of genus g >= 2
  Xiao,       // 42^2 * K^2, minimal surfaces of general type
  Namikawa,   // 20 - rho + h12, singular-point count of a Gorenstein Fano
  Minkowski4, // 5760, finite subgroups of GL4(Z)
};

std::uint64_t geom_bound(GeomKind kind, const std::map<std::string, std::uint64_t> &params);

} // namespace jconst

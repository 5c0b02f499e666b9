#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jconst/perm_group.hpp"

namespace jconst {

struct JordanOptions {
  std::uint64_t enum_cap = kDefaultEnumCap;
  std::size_t lattice_cap = 10'000;
  std::size_t memo_cap = 1 << 22; // dedup entries; exceeding it only revisits
  std::chrono::milliseconds budget = std::chrono::minutes(15);
  unsigned threads = 1;
};

struct MaxAbelianResult {
  std::uint64_t order = 1;
  std::vector<Perm> witness; // generates an abelian subgroup of that order
  bool certified = true;     // false when the time budget cut the search short
  std::uint64_t nodes = 0;
};

// Order of the largest abelian subgroup of G, with witness generators.
// The witness subgroup is self-centralizing in G.
MaxAbelianResult max_abelian(const PermGroup &group, const JordanOptions &opts = {});

// [G : largest abelian subgroup]. For a finite ambient group this equals
// the minimal J such that every subgroup H <= G has an abelian subgroup
// of index at most J: if A is the largest abelian subgroup of G, then
// A n H is abelian with [H : A n H] <= [G : A]. The same argument makes
// the value monotone under subgroups, which the test suite exercises.
std::uint64_t weak_jordan(const PermGroup &group, const JordanOptions &opts = {});

// All normal subgroups, as the join closure of the normal closures of the
// cyclic subgroups generated by class representatives. Ascending order.
std::vector<PermGroup> normal_subgroups(const PermGroup &group, const JordanOptions &opts = {});

struct MaxNormalAbelianResult {
  std::uint64_t order = 1;
  std::vector<Perm> witness;
};

MaxNormalAbelianResult max_normal_abelian(const PermGroup &group, const JordanOptions &opts = {});

std::uint64_t jordan_constant(const PermGroup &group, const JordanOptions &opts = {});

struct PyberReport {
  std::uint64_t weak_jordan = 1;
  std::uint64_t jordan = 1;
  std::uint64_t weak_squared = 1;
  std::uint64_t slack = 0; // weak_squared - jordan when the inequality holds
  bool ok = false;         // jordan <= weak_jordan^2
};

PyberReport pyber_check(const PermGroup &group, const JordanOptions &opts = {});

struct JordanReport {
  std::string name;
  std::uint64_t order = 1;
  MaxAbelianResult max_abelian;
  std::uint64_t weak_jordan = 1;
  MaxNormalAbelianResult max_normal_abelian;
  std::uint64_t jordan = 1;
  bool certified = true;
  std::int64_t wall_time_ms = 0;
};

JordanReport jordan_report(const std::string &name, const PermGroup &group,
                           const JordanOptions &opts = {});

} // namespace jconst

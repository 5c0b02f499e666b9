#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "jconst/atlas.hpp"
#include "jconst/jordan.hpp"

namespace jconst {

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string actual;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_pass = true;

  void add(const std::string &name, bool pass, const std::string &expected,
           const std::string &actual);
};

struct Table1Row {
  unsigned n = 0;
  std::string pgl_group;
  std::uint64_t weak_pgl = 0;
  std::string gl_group;
  std::uint64_t weak_gl = 0;
  std::uint64_t strong_gl = 0;
};

// Recomputes the weak and strong constant columns from the attaining
// catalog groups.
std::vector<Table1Row> compute_table1(const Catalog &catalog, const JordanOptions &opts);

enum class VerifyTier { Fast, Full };

// The reproduction suite: every finite-group equality and arithmetic
// bound the workbench certifies, one named check per item. The fast tier
// finishes in seconds; the full tier adds the heavyweight groups.
VerifyReport run_verify(const Catalog &catalog, VerifyTier tier, const JordanOptions &opts,
                        std::uint64_t seed = 0);

// The frozen result of max_order_bound_upto(79380), fixed by the sweep
// itself; the stated bound 9922 is an over-estimate of this maximum.
constexpr std::uint64_t kSweepLimit = 79380;
constexpr std::uint64_t kSweepGoldenMax = 6720;
constexpr std::uint64_t kSweepGoldenArgmax = 60480;

} // namespace jconst

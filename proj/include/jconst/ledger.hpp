#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace jconst {

// One audited arithmetic identity: an expression tree over exact integer
// operations, with the value it must evaluate to.
struct LedgerEntry {
  std::string id;
  std::string description;
  nlohmann::json expr;
  std::uint64_t expected = 0;
  std::string citation;
};

struct LedgerCheck {
  std::string id;
  std::uint64_t expected = 0;
  std::uint64_t value = 0;
  bool pass = false;
  std::string note; // failure detail, empty on pass
};

struct LedgerReport {
  std::vector<LedgerCheck> checks;
  bool all_pass = true;
};

// Expression grammar (nested JSON arrays):
//   <int>                      literal
//   ["mul", e...]              product
//   ["div", a, b]              exact division; a remainder is an error
//   ["add", e...]              sum
//   ["sub", a, b]              difference, must stay nonnegative
//   ["max", e...] / ["min", e...]
//   ["pow", a, k]
//   ["fact", n]
//   ["jbar_gl", d]             weak-constant table lookup
//   ["param", name, value]     named geometric input, taken as given
std::uint64_t eval_ledger_expr(const nlohmann::json &expr);

std::vector<LedgerEntry> load_ledger(const nlohmann::json &doc);
const std::vector<LedgerEntry> &builtin_ledger();
std::vector<LedgerEntry> ledger_from_file(const std::string &path);

LedgerReport ledger_check(const std::vector<LedgerEntry> &entries);

} // namespace jconst

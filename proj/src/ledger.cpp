#include "jconst/ledger.hpp"

#include <fstream>

#include "jconst/caselaw.hpp"
#include "jconst/data/ledger_data.hpp"
#include "jconst/error.hpp"

namespace jconst {

using nlohmann::json;

std::uint64_t eval_ledger_expr(const json &expr) {
  if (expr.is_number_unsigned() || expr.is_number_integer()) {
    auto v = expr.get<std::int64_t>();
    if (v < 0)
      fail(Errc::BadParams, "ledger literals must be nonnegative");
    return static_cast<std::uint64_t>(v);
  }
  if (!expr.is_array() || expr.empty() || !expr[0].is_string())
    fail(Errc::ParseError, "ledger expression must be an integer or [op, ...]");
  std::string op = expr[0].get<std::string>();
  auto arg = [&](std::size_t i) { return eval_ledger_expr(expr.at(i)); };

  if (op == "mul") {
    std::uint64_t r = 1;
    for (std::size_t i = 1; i < expr.size(); ++i)
      r = checked_mul(r, arg(i));
    return r;
  }
  if (op == "add") {
    std::uint64_t r = 0;
    for (std::size_t i = 1; i < expr.size(); ++i)
      r += arg(i);
    return r;
  }
  if (op == "sub") {
    std::uint64_t a = arg(1), b = arg(2);
    if (b > a)
      fail(Errc::BadParams, "ledger subtraction went negative");
    return a - b;
  }
  if (op == "div") {
    std::uint64_t a = arg(1), b = arg(2);
    if (b == 0 || a % b != 0)
      fail(Errc::BadParams, "ledger division is not exact: " + std::to_string(a) + "/" +
                                std::to_string(b));
    return a / b;
  }
  if (op == "max" || op == "min") {
    std::uint64_t r = arg(1);
    for (std::size_t i = 2; i < expr.size(); ++i) {
      std::uint64_t v = arg(i);
      r = op == "max" ? std::max(r, v) : std::min(r, v);
    }
    return r;
  }
  if (op == "pow") {
    std::uint64_t base = arg(1), k = arg(2), r = 1;
    for (std::uint64_t i = 0; i < k; ++i)
      r = checked_mul(r, base);
    return r;
  }
  if (op == "fact") {
    std::uint64_t n = arg(1), r = 1;
    for (std::uint64_t i = 2; i <= n; ++i)
      r = checked_mul(r, i);
    return r;
  }
  if (op == "jbar_gl")
    return jbar_gl(static_cast<unsigned>(arg(1)));
  if (op == "param") {
    if (expr.size() != 3 || !expr[1].is_string())
      fail(Errc::ParseError, "param needs a name and a value");
    return eval_ledger_expr(expr[2]);
  }
  fail(Errc::ParseError, "unknown ledger operation " + op);
}

std::vector<LedgerEntry> load_ledger(const json &doc) {
  if (!doc.is_object() || doc.value("schema_version", 0) != 1)
    fail(Errc::ParseError, "unsupported ledger schema");
  std::vector<LedgerEntry> entries;
  for (const auto &e : doc.at("entries")) {
    LedgerEntry entry;
    entry.id = e.at("id").get<std::string>();
    entry.description = e.value("description", "");
    entry.expr = e.at("expr");
    entry.expected = e.at("expected").get<std::uint64_t>();
    entry.citation = e.value("citation", "");
    entries.push_back(std::move(entry));
  }
  return entries;
}

const std::vector<LedgerEntry> &builtin_ledger() {
  static const std::vector<LedgerEntry> entries = load_ledger(json::parse(data::kLedgerJson));
  return entries;
}

std::vector<LedgerEntry> ledger_from_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    fail(Errc::ParseError, "cannot open ledger file " + path);
  json doc;
  in >> doc;
  return load_ledger(doc);
}

LedgerReport ledger_check(const std::vector<LedgerEntry> &entries) {
  LedgerReport report;
  for (const LedgerEntry &entry : entries) {
    LedgerCheck check;
    check.id = entry.id;
    check.expected = entry.expected;
    try {
      check.value = eval_ledger_expr(entry.expr);
      check.pass = check.value == entry.expected;
      if (!check.pass)
        check.note = "evaluates to " + std::to_string(check.value);
    } catch (const Error &err) {
      check.pass = false;
      check.note = err.what();
    }
    report.checks.push_back(check);
    report.all_pass = report.all_pass && check.pass;
  }
  return report;
}

} // namespace jconst

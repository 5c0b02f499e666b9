#include <chrono>
#include <iostream>
#include <optional>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "jconst/atlas.hpp"
#include "jconst/caselaw.hpp"
#include "jconst/json_io.hpp"
#include "jconst/jordan.hpp"
#include "jconst/ledger.hpp"
#include "jconst/pencil.hpp"
#include "jconst/verify.hpp"

using nlohmann::json;
using namespace jconst;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct GlobalOptions {
  bool json_output = false;
  unsigned threads = std::thread::hardware_concurrency();
  std::uint64_t cap = kDefaultEnumCap;
  std::uint64_t timeout_seconds = 900;
  std::uint64_t seed = 0;
  std::string catalog_path;
  std::string ledger_path;

  JordanOptions jordan() const {
    JordanOptions opts;
    opts.enum_cap = cap;
    opts.budget = std::chrono::seconds(timeout_seconds);
    opts.threads = threads == 0 ? 1 : threads;
    return opts;
  }

  const Catalog &catalog() const {
    if (catalog_path.empty())
      return Catalog::builtin();
    static std::optional<Catalog> loaded;
    if (!loaded)
      loaded.emplace(Catalog::from_file(catalog_path));
    return *loaded;
  }

  std::vector<LedgerEntry> ledger_entries() const {
    return ledger_path.empty() ? builtin_ledger() : ledger_from_file(ledger_path);
  }
};

PermGroup resolve_group(const GlobalOptions &opts, const std::string &name_or_spec) {
  if (!name_or_spec.empty() && name_or_spec.front() == '{')
    return opts.catalog().realize_spec(json::parse(name_or_spec));
  return opts.catalog().realize(name_or_spec);
}

int cmd_group(const GlobalOptions &opts, const std::string &name, const std::string &action) {
  PermGroup group = resolve_group(opts, name);
  if (action == "info") {
    if (opts.json_output) {
      json doc = group_to_json(group);
      doc["name"] = name;
      doc["order"] = group.order();
      doc["abelian"] = group.is_abelian();
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << name << ": degree " << group.degree() << ", order " << group.order()
                << (group.is_abelian() ? ", abelian" : "") << "\n";
    }
    return kExitOk;
  }
  if (action == "maxab") {
    auto start = std::chrono::steady_clock::now();
    MaxAbelianResult res = max_abelian(group, opts.jordan());
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    if (opts.json_output) {
      json doc = witness_to_json(res.order, res.witness);
      doc["name"] = name;
      doc["order"] = group.order();
      doc["weak_jordan"] = group.order() / res.order;
      doc["certified"] = res.certified;
      doc["wall_time_ms"] = ms;
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << name << ": max abelian order " << res.order << ", weak constant "
                << group.order() / res.order << (res.certified ? "" : " (NOT certified)") << "\n";
      for (const Perm &w : res.witness)
        std::cout << "  witness " << w.to_string() << "\n";
    }
    return res.certified ? kExitOk : kExitResource;
  }
  if (action == "jordan") {
    JordanReport rep = jordan_report(name, group, opts.jordan());
    if (opts.json_output) {
      std::cout << report_to_json(rep).dump(2) << "\n";
    } else {
      std::cout << rep.name << ": order " << rep.order << "\n"
                << "  max abelian order " << rep.max_abelian.order << " -> weak constant "
                << rep.weak_jordan << "\n"
                << "  max normal abelian order " << rep.max_normal_abelian.order
                << " -> constant " << rep.jordan << "\n"
                << "  certified: " << (rep.certified ? "yes" : "no") << ", " << rep.wall_time_ms
                << " ms\n";
    }
    return rep.certified ? kExitOk : kExitResource;
  }
  std::cerr << "unknown group action: " << action << "\n";
  return kExitUsage;
}

int cmd_table1(const GlobalOptions &opts) {
  auto rows = compute_table1(opts.catalog(), opts.jordan());
  const std::uint64_t expect_pgl[] = {12, 40, 960, 960};
  const std::uint64_t expect_gl[] = {12, 72, 960, 960};
  const std::uint64_t expect_strong[] = {60, 360, 25920, 25920};
  bool ok = true;
  json doc = json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Table1Row &r = rows[i];
    ok = ok && r.weak_pgl == expect_pgl[i] && r.weak_gl == expect_gl[i] &&
         r.strong_gl == expect_strong[i];
    if (opts.json_output) {
      doc.push_back({{"n", r.n},
                     {"weak_projective", r.weak_pgl},
                     {"projective_group", r.pgl_group},
                     {"weak_linear", r.weak_gl},
                     {"linear_group", r.gl_group},
                     {"strong_linear", r.strong_gl}});
    } else {
      std::cout << "n=" << r.n << ": weak projective " << r.weak_pgl << " (" << r.pgl_group
                << "), weak linear " << r.weak_gl << " (" << r.gl_group << "), strong "
                << r.strong_gl << "\n";
    }
  }
  if (opts.json_output)
    std::cout << doc.dump(2) << "\n";
  return ok ? kExitOk : kExitCheckFailure;
}

int cmd_isotypical(const GlobalOptions &opts, unsigned n, unsigned m) {
  IsotypicalResult res = isotypical_bound(n, m);
  if (opts.json_output) {
    json cases = json::array();
    for (const PartitionCase &pc : res.cases) {
      json parts = json::array();
      for (auto [mult, dim] : pc.parts)
        parts.push_back({{"m", mult}, {"d", dim}});
      cases.push_back({{"parts", parts}, {"bound", pc.bound}});
    }
    std::cout << json{{"n", n}, {"min_summands", m}, {"max_bound", res.max_bound},
                      {"cases", cases}}
                     .dump(2)
              << "\n";
  } else {
    for (const PartitionCase &pc : res.cases) {
      for (auto [mult, dim] : pc.parts)
        std::cout << mult << "x" << dim << " ";
      std::cout << "-> " << pc.bound << "\n";
    }
    std::cout << "max bound: " << res.max_bound << "\n";
  }
  return kExitOk;
}

int cmd_orderbound(const GlobalOptions &opts, std::uint64_t n, std::uint64_t max_upto) {
  if (max_upto > 0) {
    SweepResult sweep = max_order_bound_upto(max_upto);
    if (opts.json_output)
      std::cout << json{{"limit", max_upto},
                        {"max_value", sweep.max_value},
                        {"argmax", sweep.argmax}}
                       .dump(2)
                << "\n";
    else
      std::cout << "max order bound up to " << max_upto << ": " << sweep.max_value << " at n = "
                << sweep.argmax << "\n";
    return kExitOk;
  }
  std::uint64_t bound = order_bound(n);
  if (opts.json_output)
    std::cout << json{{"n", n},
                      {"guaranteed_abelian", guaranteed_abelian_order(n)},
                      {"bound", bound}}
                     .dump(2)
              << "\n";
  else
    std::cout << "order " << n << ": guaranteed abelian subgroup of order "
              << guaranteed_abelian_order(n) << ", weak constant bound " << bound << "\n";
  return kExitOk;
}

int cmd_ledger(const GlobalOptions &opts) {
  LedgerReport report = ledger_check(opts.ledger_entries());
  if (opts.json_output) {
    json checks = json::array();
    for (const LedgerCheck &c : report.checks)
      checks.push_back({{"id", c.id},
                        {"expected", c.expected},
                        {"value", c.value},
                        {"pass", c.pass},
                        {"note", c.note}});
    std::cout << json{{"all_pass", report.all_pass}, {"checks", checks}}.dump(2) << "\n";
  } else {
    for (const LedgerCheck &c : report.checks)
      std::cout << (c.pass ? "pass " : "FAIL ") << c.id << ": " << c.value
                << (c.pass ? "" : " expected " + std::to_string(c.expected) + " " + c.note)
                << "\n";
    std::cout << (report.all_pass ? "all entries exact" : "LEDGER FAILURE") << " ("
              << report.checks.size() << " entries)\n";
  }
  return report.all_pass ? kExitOk : kExitCheckFailure;
}

int cmd_pencil(const GlobalOptions &opts, const std::string &field_arg,
               const std::string &lambdas_arg) {
  unsigned m = 1;
  if (field_arg == "Q") {
    m = 1;
  } else if (field_arg.rfind("Qzeta:", 0) == 0) {
    m = static_cast<unsigned>(std::stoul(field_arg.substr(6)));
  } else {
    std::cerr << "field must be Q or Qzeta:m\n";
    return kExitUsage;
  }
  auto field = CycField::get(m);
  PencilConfig config{field, {}};
  std::size_t start = 0;
  while (start <= lambdas_arg.size()) {
    std::size_t comma = lambdas_arg.find(',', start);
    std::string token = lambdas_arg.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!token.empty())
      config.lambdas.push_back(parse_cyc(field, token));
    if (comma == std::string::npos)
      break;
    start = comma + 1;
  }
  AutWResult result = aut_w(config);
  if (opts.json_output) {
    json maps = json::array();
    for (const Moebius &mob : result.maps)
      maps.push_back(mob.to_string());
    json doc = group_to_json(result.group);
    doc["order"] = result.group.order();
    doc["maps"] = maps;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "stabilizer order " << result.group.order() << " on " << config.lambdas.size()
              << " marked points (an upper container for the pencil symmetries)\n";
    for (const Perm &g : result.group.generators())
      std::cout << "  perm " << g.to_string() << "\n";
    for (const Moebius &mob : result.maps)
      std::cout << "  map " << mob.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_verify(const GlobalOptions &opts, const std::string &tier) {
  VerifyTier t = tier == "full" ? VerifyTier::Full : VerifyTier::Fast;
  VerifyReport report = run_verify(opts.catalog(), t, opts.jordan(), opts.seed);
  if (opts.json_output) {
    json checks = json::array();
    for (const VerifyCheck &c : report.checks)
      checks.push_back(
          {{"name", c.name}, {"pass", c.pass}, {"expected", c.expected}, {"actual", c.actual}});
    std::cout << json{{"tier", t == VerifyTier::Full ? "full" : "fast"},
                      {"all_pass", report.all_pass},
                      {"checks", checks}}
                     .dump(2)
              << "\n";
  } else {
    for (const VerifyCheck &c : report.checks)
      std::cout << (c.pass ? "pass " : "FAIL ") << c.name << " (expected " << c.expected
                << ", got " << c.actual << ")\n";
    std::cout << (report.all_pass ? "ALL CHECKS PASS" : "CHECK FAILURES") << " ("
              << report.checks.size() << " checks)\n";
  }
  return report.all_pass ? kExitOk : kExitCheckFailure;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"jconst: exact Jordan-constant workbench for finite groups"};
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_flag("--json", opts.json_output, "machine-readable output");
  app.add_option("--threads", opts.threads, "worker threads for element scans");
  app.add_option("--cap", opts.cap, "element enumeration cap");
  app.add_option("--timeout", opts.timeout_seconds, "per-group search budget in seconds");
  app.add_option("--seed", opts.seed, "seed for randomized property sampling");
  app.add_option("--catalog", opts.catalog_path, "catalog JSON override");
  app.add_option("--ledger", opts.ledger_path, "ledger JSON override");
  std::string global_tier;
  app.add_option("--tier", global_tier, "default tier for verify: fast | full")
      ->check(CLI::IsMember({"fast", "full"}));

  auto *group_cmd = app.add_subcommand("group", "inspect a named or inline group");
  std::string group_name, group_action = "info";
  group_cmd->add_option("name", group_name, "catalog name or inline JSON spec")->required();
  group_cmd->add_option("action", group_action, "info | maxab | jordan");

  auto *table1_cmd = app.add_subcommand("table1", "recompute the linear-group constant table");

  auto *iso_cmd = app.add_subcommand("isotypical", "partition bound for N-dimensional actions");
  unsigned iso_n = 0, iso_m = 0;
  iso_cmd->add_option("N", iso_n, "dimension")->required();
  iso_cmd->add_option("m", iso_m, "minimal summand count")->required();

  auto *ob_cmd = app.add_subcommand("orderbound", "guaranteed-abelian order bound");
  std::uint64_t ob_n = 0, ob_max = 0;
  ob_cmd->add_option("n", ob_n, "group order");
  ob_cmd->add_option("--max-upto", ob_max, "sweep 1..L and report the maximum");

  auto *ledger_cmd = app.add_subcommand("ledger", "audit the arithmetic ledger");

  auto *pencil_cmd = app.add_subcommand("pencil", "symmetries of a marked pencil line");
  std::string pencil_field = "Q", pencil_lambdas;
  pencil_cmd->add_option("--field", pencil_field, "Q or Qzeta:m");
  pencil_cmd->add_option("--lambdas", pencil_lambdas, "comma-separated exact values")->required();

  auto *verify_cmd = app.add_subcommand("verify", "run the reproduction suite");
  bool verify_all = false;
  std::string verify_tier = "fast";
  verify_cmd->add_flag("--all", verify_all, "run every check in the tier");
  verify_cmd->add_option("--tier", verify_tier, "fast | full")
      ->check(CLI::IsMember({"fast", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (group_cmd->parsed())
      return cmd_group(opts, group_name, group_action);
    if (table1_cmd->parsed())
      return cmd_table1(opts);
    if (iso_cmd->parsed())
      return cmd_isotypical(opts, iso_n, iso_m);
    if (ob_cmd->parsed()) {
      if (ob_n == 0 && ob_max == 0) {
        std::cerr << "orderbound needs n or --max-upto\n";
        return kExitUsage;
      }
      return cmd_orderbound(opts, ob_n, ob_max);
    }
    if (ledger_cmd->parsed())
      return cmd_ledger(opts);
    if (pencil_cmd->parsed())
      return cmd_pencil(opts, pencil_field, pencil_lambdas);
    if (verify_cmd->parsed())
      return cmd_verify(opts, verify_cmd->count("--tier") ? verify_tier
                              : global_tier.empty()      ? verify_tier
                                                         : global_tier);
  } catch (const Error &err) {
    std::cerr << "error (" << errc_name(err.code()) << "): " << err.what() << "\n";
    return err.is_resource() ? kExitResource : kExitCheckFailure;
  } catch (const std::exception &err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitUsage;
}

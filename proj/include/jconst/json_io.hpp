#pragma once

#include <json.hpp>

#include "jconst/jordan.hpp"
#include "jconst/perm_group.hpp"

namespace jconst {

// Permutations serialize as arrays of 0-based images; groups as
// {"degree": d, "generators": [[...], ...]}.

inline nlohmann::json perm_to_json(const Perm &p) {
  nlohmann::json arr = nlohmann::json::array();
  for (Point x : p.images())
    arr.push_back(x);
  return arr;
}

inline Perm perm_from_json(const nlohmann::json &arr) {
  std::vector<Point> images;
  for (const auto &v : arr)
    images.push_back(v.get<Point>());
  return Perm(std::move(images));
}

inline nlohmann::json group_to_json(const PermGroup &group) {
  nlohmann::json gens = nlohmann::json::array();
  for (const Perm &g : group.generators())
    gens.push_back(perm_to_json(g));
  return nlohmann::json{{"degree", group.degree()}, {"generators", gens}};
}

inline PermGroup group_from_json(const nlohmann::json &doc) {
  std::vector<Perm> gens;
  for (const auto &g : doc.at("generators"))
    gens.push_back(perm_from_json(g));
  return PermGroup(doc.at("degree").get<std::size_t>(), std::move(gens));
}

inline nlohmann::json witness_to_json(std::uint64_t order, const std::vector<Perm> &witness) {
  nlohmann::json gens = nlohmann::json::array();
  for (const Perm &g : witness)
    gens.push_back(perm_to_json(g));
  return nlohmann::json{{"order", order}, {"witness", gens}};
}

// {name, order, max_abelian:{order, witness}, weak_jordan,
//  max_normal_abelian:{order, witness}, jordan, certified, wall_time_ms}
inline nlohmann::json report_to_json(const JordanReport &report, bool with_wall_time = true) {
  nlohmann::json doc{
      {"name", report.name},
      {"order", report.order},
      {"max_abelian", witness_to_json(report.max_abelian.order, report.max_abelian.witness)},
      {"weak_jordan", report.weak_jordan},
      {"max_normal_abelian",
       witness_to_json(report.max_normal_abelian.order, report.max_normal_abelian.witness)},
      {"jordan", report.jordan},
      {"certified", report.certified},
  };
  if (with_wall_time)
    doc["wall_time_ms"] = report.wall_time_ms;
  return doc;
}

} // namespace jconst

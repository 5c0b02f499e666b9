#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "jconst/fq_matrix.hpp"
#include "jconst/perm_group.hpp"

namespace jconst {

PermGroup trivial_group(std::size_t degree = 1);
PermGroup cyclic_group(unsigned n);
PermGroup dihedral_group(unsigned n); // order 2n
PermGroup symmetric_group(unsigned n);
PermGroup alternating_group(unsigned n);
PermGroup direct_product(const PermGroup &left, const PermGroup &right);

// Imprimitive wreath product base^k : top on k * degree(base) points.
// Block i occupies the interval [i*d, (i+1)*d).
PermGroup wreath_product(const PermGroup &base, unsigned k, bool alternating_top);

struct CatalogEntry {
  std::string name;
  nlohmann::json spec;
  std::uint64_t expected_order = 0;
  bool experimental = false;
  std::string provenance;
  std::string citation;
};

// Named witness groups. Every realization is certified against its
// expected order; a mismatch rejects the catalog.
class Catalog {
public:
  static const Catalog &builtin();
  static Catalog from_file(const std::string &path);
  explicit Catalog(const nlohmann::json &doc);

  const std::vector<CatalogEntry> &entries() const { return entries_; }
  const CatalogEntry *find(const std::string &name) const;

  // Realizes a spec tree; named references resolve through this catalog.
  PermGroup realize_spec(const nlohmann::json &spec) const;

  // Realizes a named entry, certifying the expected order. Cached.
  PermGroup realize(const std::string &name) const;

  // Realizes and order-checks every entry. Experimental entries that
  // fail certification are reported back instead of raising.
  std::vector<std::string> validate_all() const;

private:
  struct Cache {
    std::mutex mutex;
    std::map<std::string, PermGroup> groups;
  };

  std::vector<CatalogEntry> entries_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

FqMatrix matrix_from_json(const std::string &field, unsigned dim, const nlohmann::json &rows);

} // namespace jconst

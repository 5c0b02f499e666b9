#include "jconst/atlas.hpp"

#include <algorithm>
#include <fstream>

#include "jconst/data/catalog_data.hpp"

namespace jconst {

using nlohmann::json;

PermGroup trivial_group(std::size_t degree) { return PermGroup::trivial(degree); }

PermGroup cyclic_group(unsigned n) {
  if (n == 0)
    fail(Errc::BadParams, "cyclic group needs n >= 1");
  if (n == 1)
    return trivial_group(1);
  std::vector<Point> cycle(n);
  for (unsigned i = 0; i < n; ++i)
    cycle[i] = static_cast<Point>((i + 1) % n);
  return PermGroup(n, {Perm(std::move(cycle))});
}

PermGroup dihedral_group(unsigned n) {
  if (n == 0)
    fail(Errc::BadParams, "dihedral group needs n >= 1");
  if (n == 1)
    return cyclic_group(2);
  if (n == 2) {
    // Klein group on 4 points
    return PermGroup(4, {Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{2, 3}})});
  }
  std::vector<Point> rot(n), refl(n);
  for (unsigned i = 0; i < n; ++i) {
    rot[i] = static_cast<Point>((i + 1) % n);
    refl[i] = static_cast<Point>((n - i) % n);
  }
  return PermGroup(n, {Perm(std::move(rot)), Perm(std::move(refl))});
}

PermGroup symmetric_group(unsigned n) {
  if (n == 0)
    fail(Errc::BadParams, "symmetric group needs n >= 1");
  if (n == 1)
    return trivial_group(1);
  std::vector<Point> cycle(n);
  for (unsigned i = 0; i < n; ++i)
    cycle[i] = static_cast<Point>((i + 1) % n);
  return PermGroup(n, {Perm::from_cycles(n, {{0, 1}}), Perm(std::move(cycle))});
}

PermGroup alternating_group(unsigned n) {
  if (n == 0)
    fail(Errc::BadParams, "alternating group needs n >= 1");
  if (n <= 2)
    return trivial_group(n);
  if (n == 3)
    return PermGroup(3, {Perm::from_cycles(3, {{0, 1, 2}})});
  Perm three = Perm::from_cycles(n, {{0, 1, 2}});
  std::vector<std::vector<Point>> big(1);
  if (n % 2 == 1) {
    for (unsigned i = 0; i < n; ++i)
      big[0].push_back(static_cast<Point>(i));
  } else {
    for (unsigned i = 1; i < n; ++i)
      big[0].push_back(static_cast<Point>(i));
  }
  return PermGroup(n, {three, Perm::from_cycles(n, big)});
}

PermGroup direct_product(const PermGroup &left, const PermGroup &right) {
  std::size_t d1 = left.degree(), d2 = right.degree();
  std::size_t degree = d1 + d2;
  if (degree > kMaxDegree)
    fail(Errc::TooLarge, "product degree exceeds 65536");
  std::vector<Perm> gens;
  for (const Perm &g : left.generators()) {
    std::vector<Point> img(degree);
    for (std::size_t i = 0; i < d1; ++i)
      img[i] = g[static_cast<Point>(i)];
    for (std::size_t i = 0; i < d2; ++i)
      img[d1 + i] = static_cast<Point>(d1 + i);
    gens.emplace_back(std::move(img));
  }
  for (const Perm &g : right.generators()) {
    std::vector<Point> img(degree);
    for (std::size_t i = 0; i < d1; ++i)
      img[i] = static_cast<Point>(i);
    for (std::size_t i = 0; i < d2; ++i)
      img[d1 + i] = static_cast<Point>(d1 + g[static_cast<Point>(i)]);
    gens.emplace_back(std::move(img));
  }
  return PermGroup(degree, std::move(gens));
}

PermGroup wreath_product(const PermGroup &base, unsigned k, bool alternating_top) {
  if (k == 0)
    fail(Errc::BadParams, "wreath product needs k >= 1");
  std::size_t d = base.degree();
  std::size_t degree = d * k;
  if (degree > kMaxDegree)
    fail(Errc::TooLarge, "wreath degree exceeds 65536");

  std::vector<Perm> gens;
  // Base copies on every block; correct regardless of top transitivity.
  for (unsigned block = 0; block < k; ++block) {
    for (const Perm &g : base.generators()) {
      std::vector<Point> img(degree);
      for (std::size_t i = 0; i < degree; ++i)
        img[i] = static_cast<Point>(i);
      for (std::size_t i = 0; i < d; ++i)
        img[block * d + i] = static_cast<Point>(block * d + g[static_cast<Point>(i)]);
      gens.emplace_back(std::move(img));
    }
  }
  PermGroup top = alternating_top ? alternating_group(k) : symmetric_group(k);
  if (top.degree() == k) {
    for (const Perm &t : top.generators()) {
      std::vector<Point> img(degree);
      for (unsigned block = 0; block < k; ++block)
        for (std::size_t i = 0; i < d; ++i)
          img[block * d + i] = static_cast<Point>(t[static_cast<Point>(block)] * d + i);
      gens.emplace_back(std::move(img));
    }
  }
  return PermGroup(degree, std::move(gens));
}

FqMatrix matrix_from_json(const std::string &field, unsigned dim, const json &rows) {
  const FqField &F = FqField::get(field);
  FqMatrix m;
  m.field = field;
  m.dim = dim;
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(dim) * dim)
    fail(Errc::ParseError, "matrix needs dim*dim row-major entries");
  for (const auto &cell : rows) {
    unsigned code;
    if (cell.is_array()) {
      // polynomial-coefficient pair [c0, c1] for extension fields
      if (cell.size() != 2)
        fail(Errc::ParseError, "matrix entry pair must have two coefficients");
      unsigned c0 = cell[0].get<unsigned>(), c1 = cell[1].get<unsigned>();
      if (c0 >= F.p() || c1 >= F.p())
        fail(Errc::ParseError, "matrix entry coefficient out of range");
      code = c0 + c1 * F.p();
    } else {
      code = cell.get<unsigned>();
    }
    if (code >= F.q())
      fail(Errc::ParseError, "matrix entry out of range for " + field);
    m.entries.push_back(static_cast<std::uint8_t>(code));
  }
  return m;
}

namespace {

std::vector<FqMatrix> matrices_from_json(const std::string &field, unsigned dim,
                                         const json &list) {
  std::vector<FqMatrix> out;
  for (const auto &rows : list)
    out.push_back(matrix_from_json(field, dim, rows));
  return out;
}

} // namespace

Catalog::Catalog(const json &doc) {
  if (!doc.is_object() || !doc.contains("entries"))
    fail(Errc::ParseError, "catalog document needs an entries array");
  if (doc.value("schema_version", 0) != 1)
    fail(Errc::ParseError, "unsupported catalog schema version");
  for (const auto &e : doc["entries"]) {
    CatalogEntry entry;
    entry.name = e.at("name").get<std::string>();
    entry.spec = e.at("spec");
    entry.expected_order = e.at("expected_order").get<std::uint64_t>();
    entry.experimental = e.value("experimental", false);
    entry.provenance = e.value("provenance", "");
    entry.citation = e.value("citation", "");
    if (find(entry.name))
      fail(Errc::ParseError, "duplicate catalog entry " + entry.name);
    entries_.push_back(std::move(entry));
  }
}

const Catalog &Catalog::builtin() {
  static const Catalog instance{json::parse(data::kCatalogJson)};
  return instance;
}

Catalog Catalog::from_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    fail(Errc::ParseError, "cannot open catalog file " + path);
  json doc;
  in >> doc;
  return Catalog(doc);
}

const CatalogEntry *Catalog::find(const std::string &name) const {
  for (const CatalogEntry &e : entries_)
    if (e.name == name)
      return &e;
  return nullptr;
}

PermGroup Catalog::realize_spec(const json &spec) const {
  if (!spec.is_object() || !spec.contains("kind"))
    fail(Errc::ParseError, "group spec needs a kind");
  std::string kind = spec["kind"].get<std::string>();
  if (kind == "trivial")
    return trivial_group(spec.value("degree", 1));
  if (kind == "cyclic")
    return cyclic_group(spec.at("n").get<unsigned>());
  if (kind == "dihedral")
    return dihedral_group(spec.at("n").get<unsigned>());
  if (kind == "sym")
    return symmetric_group(spec.at("n").get<unsigned>());
  if (kind == "alt")
    return alternating_group(spec.at("n").get<unsigned>());
  if (kind == "product")
    return direct_product(realize_spec(spec.at("left")), realize_spec(spec.at("right")));
  if (kind == "wreath") {
    std::string top = spec.value("top", "sym");
    if (top != "sym" && top != "alt")
      fail(Errc::ParseError, "wreath top must be sym or alt");
    return wreath_product(realize_spec(spec.at("base")), spec.at("k").get<unsigned>(),
                          top == "alt");
  }
  if (kind == "matrix") {
    std::string field = spec.at("field").get<std::string>();
    unsigned dim = spec.at("dim").get<unsigned>();
    return matrix_to_perm(field, dim, matrices_from_json(field, dim, spec.at("generators")),
                          matrix_action_from_string(spec.value("action", "affine")));
  }
  if (kind == "tensor_central") {
    const json &l = spec.at("left");
    const json &r = spec.at("right");
    std::string field = l.at("field").get<std::string>();
    if (field != r.at("field").get<std::string>())
      fail(Errc::ParseError, "tensor factors must share a field");
    if (l.at("dim").get<unsigned>() != 2 || r.at("dim").get<unsigned>() != 2)
      fail(Errc::ParseError, "tensor factors must be two-dimensional");
    auto lg = matrices_from_json(field, 2, l.at("generators"));
    auto rg = matrices_from_json(field, 2, r.at("generators"));
    FqMatrix id2 = FqMatrix::identity(field, 2);
    std::vector<FqMatrix> gens;
    for (const FqMatrix &a : lg)
      gens.push_back(FqMatrix::kronecker(a, id2));
    for (const FqMatrix &b : rg)
      gens.push_back(FqMatrix::kronecker(id2, b));
    // The affine action keeps the shared central involution; the tensor
    // kernel is exactly the identified center.
    return matrix_to_perm(field, 4, gens, MatrixAction::AffineNonzero);
  }
  if (kind == "perms") {
    std::size_t degree = spec.at("degree").get<std::size_t>();
    std::vector<Perm> gens;
    for (const auto &arr : spec.at("generators")) {
      std::vector<Point> img;
      for (const auto &v : arr)
        img.push_back(v.get<Point>());
      if (img.size() != degree)
        fail(Errc::ParseError, "permutation length differs from degree");
      gens.emplace_back(std::move(img));
    }
    return PermGroup(degree, std::move(gens));
  }
  if (kind == "named")
    return realize(spec.at("name").get<std::string>());
  fail(Errc::ParseError, "unknown group spec kind " + kind);
}

PermGroup Catalog::realize(const std::string &name) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->groups.find(name);
    if (it != cache_->groups.end())
      return it->second;
  }
  const CatalogEntry *entry = find(name);
  if (!entry)
    fail(Errc::ParseError, "unknown catalog group " + name);
  PermGroup group = realize_spec(entry->spec);
  if (group.order() != entry->expected_order)
    fail(Errc::CatalogMismatch, "catalog entry " + name + " has order " +
                                    std::to_string(group.order()) + ", expected " +
                                    std::to_string(entry->expected_order));
  std::lock_guard<std::mutex> lock(cache_->mutex);
  cache_->groups.emplace(name, group);
  return group;
}

std::vector<std::string> Catalog::validate_all() const {
  std::vector<std::string> uncertified;
  for (const CatalogEntry &entry : entries_) {
    try {
      realize(entry.name);
    } catch (const Error &) {
      if (!entry.experimental)
        throw;
      uncertified.push_back(entry.name);
    }
  }
  return uncertified;
}

} // namespace jconst

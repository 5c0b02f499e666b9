#include <doctest.h>

#include "jconst/atlas.hpp"

using namespace jconst;

TEST_CASE("family constructors") {
  CHECK(cyclic_group(12).order() == 12);
  CHECK(cyclic_group(1).order() == 1);
  CHECK(dihedral_group(1).order() == 2);
  CHECK(dihedral_group(2).order() == 4);
  CHECK(dihedral_group(6).order() == 12);
  CHECK(symmetric_group(6).order() == 720);
  CHECK(alternating_group(6).order() == 360);
  CHECK(alternating_group(2).order() == 1);
  CHECK(alternating_group(3).order() == 3);
}

TEST_CASE("direct products multiply orders") {
  PermGroup p = direct_product(cyclic_group(2), alternating_group(4));
  CHECK(p.order() == 24);
  CHECK(p.degree() == 6);
  CHECK_FALSE(p.is_abelian());
}

TEST_CASE("wreath products: degree, order and block structure") {
  PermGroup a5 = alternating_group(5);

  PermGroup w2 = wreath_product(a5, 2, false);
  CHECK(w2.degree() == 10);
  CHECK(w2.order() == 7200); // 60^2 * 2

  PermGroup w3 = wreath_product(a5, 3, false);
  CHECK(w3.degree() == 15);
  CHECK(w3.order() == 1'296'000); // 60^3 * 6

  PermGroup d4 = wreath_product(cyclic_group(2), 2, false);
  CHECK(d4.order() == 8);

  PermGroup s3 = wreath_product(trivial_group(1), 3, false);
  CHECK(s3.degree() == 3);
  CHECK(s3.order() == 6);

  // block i occupies [i*d, (i+1)*d)
  for (const Perm &g : w2.generators()) {
    for (Point x = 0; x < 10; ++x) {
      Point block_in = static_cast<Point>(x / 5);
      Point block_out = static_cast<Point>(g[x] / 5);
      // the image block depends only on the source block
      CHECK(block_out == g[static_cast<Point>(block_in * 5)] / 5);
    }
  }
}

TEST_CASE("wreath with alternating top") {
  PermGroup w = wreath_product(cyclic_group(2), 3, true);
  CHECK(w.order() == 24); // 2^3 * |A3|
}

TEST_CASE("every catalog entry certifies its expected order") {
  const Catalog &catalog = Catalog::builtin();
  CHECK(catalog.entries().size() >= 30);
  for (const CatalogEntry &entry : catalog.entries()) {
    CAPTURE(entry.name);
    PermGroup group = catalog.realize(entry.name);
    CHECK(group.order() == entry.expected_order);
  }
}

TEST_CASE("catalog lookups named in the contracts") {
  const Catalog &catalog = Catalog::builtin();
  CHECK(catalog.find("3.A6")->expected_order == 1080);
  CHECK(catalog.find("Hess648")->expected_order == 648);
  CHECK(catalog.find("2.S4")->expected_order == 48);
  CHECK(catalog.find("Sp4F3")->expected_order == 51840);
  CHECK(catalog.find("Heis125SL25")->expected_order == 15000);
  CHECK(catalog.find("no-such-group") == nullptr);
}

TEST_CASE("central quotient sanity: affine vs projective orders") {
  const Catalog &catalog = Catalog::builtin();
  // |projective image| * |scalar kernel| = |affine image|
  struct Case {
    const char *name;
    std::uint64_t scalar_kernel;
  };
  for (const Case &c : {Case{"2.A5", 2}, Case{"2.A6", 2}, Case{"Sp4F3", 2}}) {
    const CatalogEntry *entry = catalog.find(c.name);
    REQUIRE(entry != nullptr);
    nlohmann::json spec = entry->spec;
    REQUIRE(spec.at("kind") == "matrix");
    spec["action"] = "projective";
    PermGroup projective = catalog.realize_spec(spec);
    spec["action"] = "affine";
    PermGroup affine = catalog.realize_spec(spec);
    CAPTURE(c.name);
    CHECK(projective.order() * c.scalar_kernel == affine.order());
  }
}

TEST_CASE("triple-cover certificates beyond the order check") {
  const Catalog &catalog = Catalog::builtin();
  PermGroup g = catalog.realize("3.A6");
  // center of order 3: elements commuting with every generator
  std::vector<Perm> central;
  auto table = g.elements();
  for (std::size_t i = 0; i < table->size(); ++i) {
    Perm p = table->get(i);
    bool commutes_all = true;
    for (const Perm &gen : g.generators())
      commutes_all = commutes_all && p.commutes_with(gen);
    if (commutes_all)
      central.push_back(p);
  }
  CHECK(central.size() == 3);
  // nonabelian quotient of order 360: some commutator falls outside the center
  bool noncentral_commutator = false;
  const auto &gens = g.generators();
  for (std::size_t i = 0; i < gens.size() && !noncentral_commutator; ++i)
    for (std::size_t j = 0; j < gens.size() && !noncentral_commutator; ++j) {
      Perm comm = gens[i] * gens[j] * gens[i].inverse() * gens[j].inverse();
      if (std::find(central.begin(), central.end(), comm) == central.end())
        noncentral_commutator = !comm.is_identity();
    }
  CHECK(noncentral_commutator);
}

TEST_CASE("tensor central product identifies the shared involution") {
  PermGroup cp = Catalog::builtin().realize("CP_2S4_2S4");
  CHECK(cp.order() == 48 * 48 / 2);
  CHECK(cp.degree() == 2400);
}

TEST_CASE("extraspecial witnesses") {
  PermGroup h27 = Catalog::builtin().realize("Heis27");
  CHECK(h27.order() == 27);
  CHECK_FALSE(h27.is_abelian());

  PermGroup h125 = Catalog::builtin().realize("Heis125SL25");
  CHECK(h125.order() == 15000);
  CHECK(h125.degree() == 125);
}

TEST_CASE("named spec resolution and inline specs") {
  const Catalog &catalog = Catalog::builtin();
  PermGroup named = catalog.realize_spec({{"kind", "named"}, {"name", "A5"}});
  CHECK(named.order() == 60);
  PermGroup inline_spec = catalog.realize_spec(
      {{"kind", "wreath"}, {"base", {{"kind", "alt"}, {"n", 5}}}, {"k", 2}, {"top", "sym"}});
  CHECK(inline_spec.order() == 7200);
  CHECK_THROWS_AS(catalog.realize("definitely-missing"), Error);
}

TEST_CASE("a wrong expected order rejects the catalog entry") {
  nlohmann::json doc = {
      {"schema_version", 1},
      {"entries",
       {{{"name", "bad"}, {"spec", {{"kind", "cyclic"}, {"n", 6}}}, {"expected_order", 7}}}}};
  Catalog catalog(doc);
  CHECK_THROWS_AS(catalog.realize("bad"), Error);
}

#include "jconst/json_io.hpp"

TEST_CASE("group serialization round trip") {
  PermGroup s4 = symmetric_group(4);
  PermGroup back = group_from_json(group_to_json(s4));
  CHECK(back.degree() == s4.degree());
  CHECK(back.order() == s4.order());
  Perm p = Perm::from_cycles(5, {{0, 3}, {1, 4}});
  CHECK(perm_from_json(perm_to_json(p)) == p);
}

#include <doctest.h>

#include <random>

#include "jconst/atlas.hpp"
#include "jconst/caselaw.hpp"
#include "jconst/jordan.hpp"
#include "oracles.hpp"

using namespace jconst;

TEST_CASE("maximal abelian orders of the small witnesses") {
  const Catalog &catalog = Catalog::builtin();
  CHECK(max_abelian(catalog.realize("A5")).order == 5);
  CHECK(max_abelian(catalog.realize("C12")).order == 12);
  CHECK(max_abelian(catalog.realize("A5wrS2")).order == 25);
  CHECK(max_abelian(catalog.realize("mu2xA4")).order == 8);
}

TEST_CASE("weak constants of the named groups") {
  const Catalog &catalog = Catalog::builtin();
  CHECK(weak_jordan(catalog.realize("A5")) == 12);
  CHECK(weak_jordan(catalog.realize("A5wrS2")) == 288);
  CHECK(weak_jordan(catalog.realize("2.A4")) == 4);
  CHECK(weak_jordan(catalog.realize("mu2xA4")) == 3);
  CHECK(weak_jordan(catalog.realize("2.S4")) == 6);
  CHECK(weak_jordan(catalog.realize("Hess648")) == 24);
  CHECK(weak_jordan(catalog.realize("C6")) == 1);
}

TEST_CASE("witnesses are abelian, contained and self-centralizing") {
  const Catalog &catalog = Catalog::builtin();
  for (const char *name : {"A5", "S4", "2.S4", "Hess648", "A5wrS2"}) {
    CAPTURE(name);
    PermGroup group = catalog.realize(name);
    MaxAbelianResult res = max_abelian(group);
    CHECK(res.certified);
    PermGroup witness = group.subgroup(res.witness);
    CHECK(witness.is_abelian());
    CHECK(witness.order() == res.order);
    // self-centralizing: count the elements commuting with every witness
    // generator
    auto table = group.elements();
    std::uint64_t commuting = 0;
    for (std::size_t i = 0; i < table->size(); ++i) {
      Perm p = table->get(i);
      bool all = true;
      for (const Perm &w : res.witness)
        all = all && p.commutes_with(w);
      if (all)
        ++commuting;
    }
    CHECK(commuting == res.order);
  }
}

TEST_CASE("search agrees with the literal subgroup lattice up to order 200") {
  const Catalog &catalog = Catalog::builtin();
  for (const CatalogEntry &entry : catalog.entries()) {
    if (entry.expected_order > 200)
      continue;
    CAPTURE(entry.name);
    PermGroup group = catalog.realize(entry.name);
    CHECK(max_abelian(group).order == oracle::max_abelian_by_lattice(group));
  }
}

TEST_CASE("search agrees with exhaustive centralizer chains up to order 2000") {
  const Catalog &catalog = Catalog::builtin();
  for (const CatalogEntry &entry : catalog.entries()) {
    if (entry.expected_order > 2000 || entry.expected_order <= 200)
      continue;
    CAPTURE(entry.name);
    PermGroup group = catalog.realize(entry.name);
    CHECK(max_abelian(group).order == oracle::max_abelian_by_chains(group));
  }
}

TEST_CASE("normal subgroup lattices") {
  const Catalog &catalog = Catalog::builtin();

  auto s4_normals = normal_subgroups(catalog.realize("S4"));
  REQUIRE(s4_normals.size() == 4);
  CHECK(s4_normals[0].order() == 1);
  CHECK(s4_normals[1].order() == 4);
  CHECK(s4_normals[2].order() == 12);
  CHECK(s4_normals[3].order() == 24);

  auto a5_normals = normal_subgroups(catalog.realize("A5"));
  CHECK(a5_normals.size() == 2); // simple

  auto c6_normals = normal_subgroups(catalog.realize("C6"));
  CHECK(c6_normals.size() == 4); // one per divisor

  // every reported subgroup is invariant under all generators
  PermGroup s4 = catalog.realize("S4");
  for (const PermGroup &n : s4_normals)
    for (const Perm &h : n.generators())
      for (const Perm &g : s4.generators())
        CHECK(n.contains(h.conjugated_by(g)));
}

TEST_CASE("normal lattice agrees with the literal lattice on small groups") {
  const Catalog &catalog = Catalog::builtin();
  for (const char *name : {"S4", "A4", "D6", "Q8", "2.A4", "C12", "mu2xA4"}) {
    CAPTURE(name);
    PermGroup group = catalog.realize(name);
    auto lattice = oracle::all_subgroups(group);
    std::size_t normal_count = 0;
    for (const auto &sub : lattice) {
      bool invariant = true;
      for (const Perm &h : sub)
        for (const Perm &g : group.generators())
          invariant = invariant && std::binary_search(sub.begin(), sub.end(),
                                                      h.conjugated_by(g));
      if (invariant)
        ++normal_count;
    }
    CHECK(normal_subgroups(group).size() == normal_count);
  }
}

TEST_CASE("maximal normal abelian subgroups") {
  const Catalog &catalog = Catalog::builtin();
  CHECK(max_normal_abelian(catalog.realize("S4")).order == 4);
  CHECK(max_normal_abelian(catalog.realize("2.A5")).order == 2);
  CHECK(max_normal_abelian(catalog.realize("C12")).order == 12);
}

TEST_CASE("strong constants") {
  const Catalog &catalog = Catalog::builtin();
  CHECK(jordan_constant(catalog.realize("2.A5")) == 60);
  CHECK(jordan_constant(catalog.realize("3.A6")) == 360);
  CHECK(jordan_constant(catalog.realize("S4")) == 6);
}

TEST_CASE("normal abelian never beats abelian, and the square inequality holds") {
  const Catalog &catalog = Catalog::builtin();
  for (const char *name : {"A5", "S4", "Q8", "2.A4", "2.S4", "Hess648", "PSL2F7", "A5wrS2"}) {
    CAPTURE(name);
    PyberReport rep = pyber_check(catalog.realize(name));
    CHECK(rep.weak_jordan <= rep.jordan);
    CHECK(rep.ok);
    CHECK(rep.slack == rep.weak_squared - rep.jordan);
  }
}

TEST_CASE("weak constant is monotone under subgroups") {
  const Catalog &catalog = Catalog::builtin();
  std::mt19937_64 rng(2024);
  for (const char *name : {"S5", "A5", "2.S4", "S4"}) {
    PermGroup group = catalog.realize(name);
    std::uint64_t ambient = weak_jordan(group);
    for (int trial = 0; trial < 10; ++trial) {
      PermGroup sub = group.subgroup({group.random_element(rng), group.random_element(rng)});
      CAPTURE(name);
      CHECK(weak_jordan(sub) <= ambient);
    }
  }
}

TEST_CASE("product identity for the weak constant") {
  const Catalog &catalog = Catalog::builtin();
  PermGroup g1 = catalog.realize("S4");
  PermGroup g2 = catalog.realize("A5");
  CHECK(max_abelian(direct_product(g1, g2)).order ==
        max_abelian(g1).order * max_abelian(g2).order);
}

TEST_CASE("search results are independent of the thread count") {
  const Catalog &catalog = Catalog::builtin();
  JordanOptions one, many;
  one.threads = 1;
  many.threads = 8;
  for (const char *name : {"2.S4", "Hess648", "A5wrS2"}) {
    MaxAbelianResult a = max_abelian(catalog.realize(name), one);
    MaxAbelianResult b = max_abelian(catalog.realize(name), many);
    CHECK(a.order == b.order);
    CHECK(a.witness.size() == b.witness.size());
    for (std::size_t i = 0; i < a.witness.size(); ++i)
      CHECK(a.witness[i] == b.witness[i]);
  }
}

TEST_CASE("the enumeration cap is a clean error") {
  JordanOptions opts;
  opts.enum_cap = 100;
  CHECK_THROWS_AS(max_abelian(Catalog::builtin().realize("2.A5"), opts), Error);
}

TEST_CASE("an exhausted budget yields a non-certified partial result") {
  JordanOptions opts;
  opts.budget = std::chrono::milliseconds(0);
  MaxAbelianResult res = max_abelian(Catalog::builtin().realize("A5wrS2"), opts);
  CHECK_FALSE(res.certified);
  CHECK(res.order >= 1); // a lower bound is still reported
  CHECK_THROWS_AS(weak_jordan(Catalog::builtin().realize("A5wrS2"), opts), Error);
}

TEST_CASE("reports serialize with certified witnesses") {
  JordanReport rep = jordan_report("S4", Catalog::builtin().realize("S4"));
  CHECK(rep.order == 24);
  CHECK(rep.weak_jordan == 6);
  CHECK(rep.jordan == 6);
  CHECK(rep.certified);
  CHECK(rep.max_abelian.order * rep.weak_jordan == rep.order);
}

TEST_CASE("normal lattices certify the heavyweight constructions") {
  const Catalog &catalog = Catalog::builtin();
  // extension of shape 5^(1+2) : SL2(F5): center, extraspecial base, and
  // the base extended by the central involution of the top
  auto heis = normal_subgroups(catalog.realize("Heis125SL25"));
  std::vector<std::uint64_t> heis_orders;
  for (const PermGroup &n : heis)
    heis_orders.push_back(n.order());
  CHECK(heis_orders == std::vector<std::uint64_t>{1, 5, 125, 250, 15000});

  // wreath of three icosahedral factors: the base product and its
  // extension by the cyclic block rotation
  auto wreath = normal_subgroups(catalog.realize("A5wrS3"));
  std::vector<std::uint64_t> wreath_orders;
  for (const PermGroup &n : wreath)
    wreath_orders.push_back(n.order());
  CHECK(wreath_orders == std::vector<std::uint64_t>{1, 216000, 648000, 1296000});
}

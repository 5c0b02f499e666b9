#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "jconst/pencil.hpp"

using namespace jconst;

namespace {

std::shared_ptr<const CycField> Q() { return CycField::get(1); }

Cyc q(std::int64_t n, std::int64_t d = 1) { return Cyc::from_rational(Q(), Rational(n, d)); }

// Cross-ratio (a, b; c, z) of projective points, as a projective pair.
Cyc cross_ratio(const Cyc &a, const Cyc &b, const Cyc &c, const Cyc &z) {
  return ((z - a) * (c - b)) * ((z - b) * (c - a)).inverse();
}

} // namespace

TEST_CASE("three-point interpolation: identity and reflections") {
  Moebius id = moebius_through({q(0), q(1), q(2)}, {q(0), q(1), q(2)});
  CHECK(id == Moebius::identity(Q()));

  // 0 -> 1, 1 -> 0, 2 -> -1 is z -> 1 - z
  Moebius refl = moebius_through({q(0), q(1), q(2)}, {q(1), q(0), q(-1)});
  ProjPoint image = refl.apply(ProjPoint::finite(q(5)));
  CHECK(image.same_as(ProjPoint::finite(q(-4))));
}

TEST_CASE("interpolation rejects repeated points") {
  CHECK_THROWS_AS(moebius_through({q(0), q(0), q(2)}, {q(0), q(1), q(2)}), Error);
  CHECK_THROWS_AS(moebius_through({q(0), q(1), q(2)}, {q(3), q(3), q(2)}), Error);
}

TEST_CASE("fractional linear maps preserve the cross-ratio") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::int64_t> pick(-8, 8);
  for (int trial = 0; trial < 40; ++trial) {
    std::int64_t vals[4];
    bool distinct = true;
    for (int i = 0; i < 4; ++i) {
      vals[i] = pick(rng);
      for (int j = 0; j < i; ++j)
        distinct = distinct && vals[i] != vals[j];
    }
    std::int64_t targets[3];
    for (int i = 0; i < 3; ++i) {
      targets[i] = pick(rng);
      for (int j = 0; j < i; ++j)
        distinct = distinct && targets[i] != targets[j];
    }
    if (!distinct)
      continue;
    Moebius f = moebius_through({q(vals[0]), q(vals[1]), q(vals[2])},
                                {q(targets[0]), q(targets[1]), q(targets[2])});
    ProjPoint image = f.apply(ProjPoint::finite(q(vals[3])));
    if (image.is_infinity())
      continue;
    Cyc mapped = image.num * image.den.inverse();
    CHECK(cross_ratio(q(targets[0]), q(targets[1]), q(targets[2]), mapped) ==
          cross_ratio(q(vals[0]), q(vals[1]), q(vals[2]), q(vals[3])));
  }
}

TEST_CASE("composition, inversion and canonical equality") {
  Moebius f = moebius_through({q(0), q(1), q(2)}, {q(1), q(0), q(-1)});
  CHECK(f.compose(f.inverse()) == Moebius::identity(Q()));
  // scaling the matrix does not change the map
  Moebius doubled(f.a() + f.a(), f.b() + f.b(), f.c() + f.c(), f.d() + f.d());
  CHECK(doubled == f);
}

TEST_CASE("three marked points admit the full symmetric group") {
  PencilConfig config{Q(), {q(0), q(1), q(7)}};
  AutWResult result = aut_w(config);
  CHECK(result.group.order() == 6);
  CHECK(result.maps.size() == 6);
}

TEST_CASE("four generic points: exactly the double transpositions survive") {
  PencilConfig config{Q(), {q(0), q(1), q(2), q(5)}};
  AutWResult result = aut_w(config);
  CHECK(result.group.order() == 4);

  // Independent oracle: test every permutation of the four values for
  // realizability by a fractional linear map.
  const std::vector<Cyc> lam = config.lambdas;
  unsigned realizable = 0;
  std::vector<int> idx{0, 1, 2, 3};
  std::sort(idx.begin(), idx.end());
  do {
    Moebius cand = moebius_through({lam[0], lam[1], lam[2]},
                                   {lam[idx[0]], lam[idx[1]], lam[idx[2]]});
    ProjPoint image = cand.apply(ProjPoint::finite(lam[3]));
    if (image.same_as(ProjPoint::finite(lam[idx[3]])))
      ++realizable;
  } while (std::next_permutation(idx.begin(), idx.end()));
  CHECK(realizable == 4);
}

TEST_CASE("sixth roots of unity have dihedral symmetry of order 12") {
  auto field = CycField::get(6);
  PencilConfig config{field, {}};
  for (unsigned k = 0; k < 6; ++k)
    config.lambdas.push_back(Cyc::zeta_power(field, k));
  AutWResult result = aut_w(config);
  CHECK(result.group.order() == 12);
  CHECK(result.maps.size() == 12);
}

TEST_CASE("the returned maps form a group and match the permutations") {
  PencilConfig config{Q(), {q(0), q(1), q(2), q(5)}};
  AutWResult result = aut_w(config);
  for (const Moebius &f : result.maps) {
    CHECK(std::find(result.maps.begin(), result.maps.end(), f.inverse()) != result.maps.end());
    for (const Moebius &g : result.maps)
      CHECK(std::find(result.maps.begin(), result.maps.end(), f.compose(g)) !=
            result.maps.end());
  }
  // every map permutes the value set (re-verified by evaluation)
  for (const Moebius &f : result.maps)
    for (const Cyc &lambda : config.lambdas) {
      ProjPoint image = f.apply(ProjPoint::finite(lambda));
      bool hits = false;
      for (const Cyc &mu : config.lambdas)
        hits = hits || image.same_as(ProjPoint::finite(mu));
      CHECK(hits);
    }
}

TEST_CASE("stabilizer order divides the full symmetric order") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::int64_t> pick(-30, 30);
  auto factorial = [](std::uint64_t n) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 2; i <= n; ++i)
      r *= i;
    return r;
  };
  unsigned nontrivial = 0;
  for (int trial = 0; trial < 12; ++trial) {
    std::set<std::int64_t> values;
    while (values.size() < 5)
      values.insert(pick(rng));
    PencilConfig config{Q(), {}};
    for (std::int64_t v : values)
      config.lambdas.push_back(q(v));
    AutWResult result = aut_w(config);
    CHECK(factorial(config.lambdas.size()) % result.group.order() == 0);
    if (result.group.order() > 1)
      ++nontrivial; // generic smoke: logged through the count, not failed
  }
  CHECK(nontrivial <= 4);
}

TEST_CASE("degenerate pencils are rejected") {
  CHECK_THROWS_AS(aut_w(PencilConfig{Q(), {q(0), q(1), q(1)}}), Error);
  CHECK_THROWS_AS(aut_w(PencilConfig{Q(), {q(0), q(1)}}), Error);
}

TEST_CASE("two-torsion count") {
  CHECK(gamma_order(4) == 16);
  CHECK(gamma_order(5) == 32);
  CHECK(gamma_order(10) == 1024);
  CHECK_THROWS_AS(gamma_order(3), Error);
  CHECK_THROWS_AS(gamma_order(2), Error);
}

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "jconst/cyclotomic.hpp"
#include "jconst/perm_group.hpp"

namespace jconst {

// A point of the projective line over a cyclotomic field, as (num : den)
// up to scale; (1 : 0) is the point at infinity.
struct ProjPoint {
  Cyc num;
  Cyc den;

  static ProjPoint finite(const Cyc &value);
  static ProjPoint infinity(const std::shared_ptr<const CycField> &field);

  bool is_infinity() const { return den.is_zero(); }
  bool same_as(const ProjPoint &other) const; // cross-multiplied equality
};

// A fractional linear map z -> (a z + b) / (c z + d), stored up to scale
// with the first nonzero entry normalized to 1 so equality is decidable.
class Moebius {
public:
  Moebius(Cyc a, Cyc b, Cyc c, Cyc d);

  static Moebius identity(const std::shared_ptr<const CycField> &field);

  const Cyc &a() const { return a_; }
  const Cyc &b() const { return b_; }
  const Cyc &c() const { return c_; }
  const Cyc &d() const { return d_; }

  ProjPoint apply(const ProjPoint &p) const;

  Moebius compose(const Moebius &rhs) const; // this after rhs
  Moebius inverse() const;

  friend bool operator==(const Moebius &x, const Moebius &y);
  friend bool operator!=(const Moebius &x, const Moebius &y) { return !(x == y); }

  std::string to_string() const;

private:
  Cyc a_, b_, c_, d_;

  void normalize();
};

// The unique map sending p_i to q_i for three pairwise distinct sources
// and targets; verified by evaluation.
Moebius moebius_through(const std::array<Cyc, 3> &sources, const std::array<Cyc, 3> &targets);

struct PencilConfig {
  std::shared_ptr<const CycField> field;
  std::vector<Cyc> lambdas; // pairwise distinct, n+1 >= 3 of them

  // Validates distinctness and size; InvalidPencil otherwise.
  void validate() const;
};

struct AutWResult {
  PermGroup group; // induced permutations of the lambda indices
  std::vector<Moebius> maps;
};

// All fractional linear maps permuting the marked points of the pencil
// line, with the induced permutation group on their indices. This is the
// full stabilizer of the point set, an upper container for the pencil
// symmetries realized by automorphisms of the intersection itself.
AutWResult aut_w(const PencilConfig &config);

// Order of the group of quadric-preserving automorphisms of a smooth
// intersection of two quadrics in n-space: 2^n for n >= 4.
std::uint64_t gamma_order(unsigned n);

} // namespace jconst

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <vector>

#include "jconst/perm.hpp"

namespace jconst {

constexpr std::uint64_t kDefaultEnumCap = 2'097'152;

// Flat, lexicographically sorted list of all elements of a group.
// Row i is the image array of element i; rows are unique.
class ElementTable {
public:
  ElementTable(std::size_t degree, std::vector<Point> flat);

  std::size_t degree() const { return degree_; }
  std::size_t size() const { return count_; }

  const Point *row(std::size_t i) const { return flat_.data() + i * degree_; }

  Perm get(std::size_t i) const;

  // Index of p in the table, or npos.
  std::size_t find(const Perm &p) const;
  std::size_t find_row(const Point *images) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
  std::size_t degree_;
  std::size_t count_;
  std::vector<Point> flat_;
};

struct ConjClass {
  Perm rep; // lexicographically smallest member
  std::uint64_t size;
};

// A finite permutation group given by generators, with a lazily built
// base and strong generating set providing order, membership and
// enumeration. Immutable after construction; all queries are safe for
// concurrent readers.
class PermGroup {
public:
  PermGroup(std::size_t degree, std::vector<Perm> generators);

  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const;
  const std::vector<Perm> &generators() const;

  std::uint64_t order() const;
  bool contains(const Perm &p) const;
  bool is_trivial() const { return order() == 1; }
  bool is_abelian() const;

  // All elements, lexicographically sorted. Cached; throws TooLarge
  // above the cap.
  std::shared_ptr<const ElementTable> elements(std::uint64_t cap = kDefaultEnumCap) const;

  // Conjugacy classes, ordered by ascending representative. Cached.
  const std::vector<ConjClass> &conjugacy_classes(std::uint64_t cap = kDefaultEnumCap) const;

  // {x in G : xp = px}; requires p in G.
  PermGroup centralizer(const Perm &p, std::uint64_t cap = kDefaultEnumCap,
                        unsigned threads = 1) const;

  // Smallest normal subgroup of G containing S; requires S in G.
  PermGroup normal_closure(const std::vector<Perm> &seed) const;

  // <S> as a subgroup; requires S in G.
  PermGroup subgroup(const std::vector<Perm> &seed) const;

  // Deterministic element list of a small subgroup (plain closure, no
  // BSGS involved); used by callers that need exact element sets.
  static std::vector<Perm> closure(std::size_t degree, const std::vector<Perm> &gens,
                                   std::uint64_t cap);

  // Uniformly random element, drawn as a product of uniformly chosen
  // transversal representatives.
  Perm random_element(std::mt19937_64 &rng) const;

private:
  struct Impl;
  std::shared_ptr<Impl> impl_;

  explicit PermGroup(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
};

// Scans [0, n) in parallel chunks and returns indices accepted by pred,
// in ascending order regardless of thread count.
std::vector<std::uint32_t> parallel_filter_indices(std::size_t n, unsigned threads,
                                                   const std::function<bool(std::size_t)> &pred);

} // namespace jconst

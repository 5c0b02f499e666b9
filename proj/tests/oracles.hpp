#pragma once

// Independent oracles for cross-checking the library: plain BFS closure
// enumeration, literal subgroup-lattice enumeration, and an exhaustive
// centralizer-chain search. None of these touch the BSGS machinery or the
// pruned search they are checking.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "jconst/perm.hpp"
#include "jconst/perm_group.hpp"

namespace jconst::oracle {

inline std::vector<Perm> bfs_closure(std::size_t degree, const std::vector<Perm> &gens,
                                     std::size_t cap = 1 << 20) {
  std::set<Perm> seen;
  std::vector<Perm> queue{Perm(degree)};
  seen.insert(queue[0]);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const Perm &g : gens) {
      Perm next = g * queue[i];
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw std::runtime_error("oracle closure exceeded cap");
        queue.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

// Every subgroup of a small group, as sorted element lists, found by
// extending known subgroups one element at a time.
inline std::vector<std::vector<Perm>> all_subgroups(const PermGroup &group) {
  auto table = group.elements(4096);
  std::vector<Perm> elems;
  for (std::size_t i = 0; i < table->size(); ++i)
    elems.push_back(table->get(i));

  std::set<std::vector<Perm>> known;
  std::vector<std::vector<Perm>> queue;
  std::vector<Perm> trivial{Perm(group.degree())};
  known.insert(trivial);
  queue.push_back(trivial);

  for (std::size_t i = 0; i < queue.size(); ++i) {
    std::vector<Perm> current = queue[i];
    for (const Perm &g : elems) {
      if (std::binary_search(current.begin(), current.end(), g))
        continue;
      std::vector<Perm> gens = current;
      gens.push_back(g);
      std::vector<Perm> bigger = bfs_closure(group.degree(), gens, table->size());
      if (known.insert(bigger).second)
        queue.push_back(std::move(bigger));
    }
  }
  return queue;
}

inline bool set_is_abelian(const std::vector<Perm> &elems) {
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (!elems[i].commutes_with(elems[j]))
        return false;
  return true;
}

// Largest abelian subgroup order via the full subgroup lattice.
inline std::uint64_t max_abelian_by_lattice(const PermGroup &group) {
  std::uint64_t best = 1;
  for (const auto &sub : all_subgroups(group))
    if (set_is_abelian(sub))
      best = std::max<std::uint64_t>(best, sub.size());
  return best;
}

// Largest abelian subgroup order by exhaustive centralizer chains over a
// precomputed multiplication table: extend an abelian subgroup by every
// commuting element, no conjugacy reduction and no pruning, deduplicating
// visited subgroups. The maximum over everything visited is the answer.
inline std::uint64_t max_abelian_by_chains(const PermGroup &group,
                                           std::uint64_t cap = 100'000) {
  auto table = group.elements(cap);
  std::size_t n = table->size();
  std::size_t degree = group.degree();

  // Cayley table over element indices.
  std::vector<std::uint32_t> cayley(n * n);
  {
    std::vector<Point> scratch(degree);
    for (std::size_t i = 0; i < n; ++i) {
      const Point *a = table->row(i);
      for (std::size_t j = 0; j < n; ++j) {
        const Point *b = table->row(j);
        for (std::size_t x = 0; x < degree; ++x)
          scratch[x] = a[b[x]];
        std::size_t k = table->find_row(scratch.data());
        if (k == ElementTable::npos)
          throw std::runtime_error("oracle product escaped the table");
        cayley[i * n + j] = static_cast<std::uint32_t>(k);
      }
    }
  }
  auto product = [&](std::uint32_t i, std::uint32_t j) { return cayley[i * n + j]; };
  auto commutes = [&](std::uint32_t i, std::uint32_t j) {
    return product(i, j) == product(j, i);
  };

  using IndexList = std::vector<std::uint32_t>;
  std::uint32_t identity = static_cast<std::uint32_t>(table->find(Perm(degree)));

  struct Frame {
    IndexList subgroup;    // sorted, abelian
    IndexList centralizer; // commutes with everything in subgroup
  };

  IndexList everything(n);
  for (std::size_t i = 0; i < n; ++i)
    everything[i] = static_cast<std::uint32_t>(i);

  std::uint64_t best = 1;
  std::set<IndexList> visited;
  std::vector<Frame> stack;
  stack.push_back({{identity}, everything});

  while (!stack.empty()) {
    Frame frame = std::move(stack.back());
    stack.pop_back();
    best = std::max<std::uint64_t>(best, frame.subgroup.size());
    for (std::uint32_t h : frame.centralizer) {
      if (std::binary_search(frame.subgroup.begin(), frame.subgroup.end(), h))
        continue;
      // subgroup * <h> is a set product since everything commutes
      IndexList bigger = frame.subgroup;
      std::vector<std::uint32_t> powers;
      for (std::uint32_t p = h; p != identity; p = product(p, h))
        powers.push_back(p);
      for (std::uint32_t a : frame.subgroup)
        for (std::uint32_t p : powers)
          bigger.push_back(product(a, p));
      std::sort(bigger.begin(), bigger.end());
      bigger.erase(std::unique(bigger.begin(), bigger.end()), bigger.end());
      if (!visited.insert(bigger).second)
        continue;
      IndexList smaller;
      for (std::uint32_t c : frame.centralizer)
        if (commutes(c, h))
          smaller.push_back(c);
      stack.push_back({std::move(bigger), std::move(smaller)});
    }
  }
  return best;
}

} // namespace jconst::oracle

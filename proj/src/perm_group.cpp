#include "jconst/perm_group.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <thread>

namespace jconst {

// ---------------------------------------------------------------- ElementTable

ElementTable::ElementTable(std::size_t degree, std::vector<Point> flat)
    : degree_(degree), count_(flat.size() / degree), flat_(std::move(flat)) {
  assert(flat_.size() % degree_ == 0);
}

Perm ElementTable::get(std::size_t i) const {
  const Point *r = row(i);
  return Perm(std::vector<Point>(r, r + degree_));
}

std::size_t ElementTable::find(const Perm &p) const { return find_row(p.images().data()); }

std::size_t ElementTable::find_row(const Point *images) const {
  std::size_t lo = 0, hi = count_;
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    const Point *r = row(mid);
    int cmp = 0;
    for (std::size_t k = 0; k < degree_; ++k) {
      if (r[k] != images[k]) {
        cmp = r[k] < images[k] ? -1 : 1;
        break;
      }
    }
    if (cmp < 0)
      lo = mid + 1;
    else if (cmp > 0)
      hi = mid;
    else
      return mid;
  }
  return npos;
}

// ---------------------------------------------------------------- BSGS

namespace {

struct BsgsLevel {
  Point base_point = 0;
  std::vector<Point> orbit;              // insertion order, orbit[0] == base_point
  std::vector<std::int32_t> orbit_pos;   // point -> position in orbit, -1 if absent
  std::vector<Perm> transversal;         // transversal[k](base_point) == orbit[k]
  std::vector<Perm> gens;                // strong generators fixing earlier base points
};

struct Bsgs {
  std::size_t degree;
  std::vector<BsgsLevel> levels;
  std::uint64_t order = 1;

  // Sifts p through levels from `from`; returns the residue and the level
  // at which sifting stopped (== levels.size() on full sift).
  std::pair<Perm, std::size_t> strip(Perm p, std::size_t from = 0) const {
    for (std::size_t i = from; i < levels.size(); ++i) {
      const BsgsLevel &lvl = levels[i];
      Point x = p[lvl.base_point];
      std::int32_t pos = lvl.orbit_pos[x];
      if (pos < 0)
        return {std::move(p), i};
      p = lvl.transversal[static_cast<std::size_t>(pos)].inverse() * p;
    }
    return {std::move(p), levels.size()};
  }

  bool contains(const Perm &p) const {
    auto [res, lvl] = strip(p);
    return lvl == levels.size() && res.is_identity();
  }
};

void rebuild_orbit(BsgsLevel &lvl, std::size_t degree) {
  lvl.orbit.clear();
  lvl.orbit_pos.assign(degree, -1);
  lvl.transversal.clear();
  lvl.orbit.push_back(lvl.base_point);
  lvl.orbit_pos[lvl.base_point] = 0;
  lvl.transversal.emplace_back(degree);
  for (std::size_t k = 0; k < lvl.orbit.size(); ++k) {
    Point x = lvl.orbit[k];
    for (const Perm &g : lvl.gens) {
      Point y = g[x];
      if (lvl.orbit_pos[y] < 0) {
        lvl.orbit_pos[y] = static_cast<std::int32_t>(lvl.orbit.size());
        lvl.orbit.push_back(y);
        lvl.transversal.push_back(g * lvl.transversal[k]);
      }
    }
  }
}

class BsgsBuilder {
public:
  BsgsBuilder(std::size_t degree, const std::vector<Perm> &generators) : degree_(degree) {
    bsgs_.degree = degree;
    for (const Perm &g : generators)
      if (!g.is_identity())
        add_generator_at(g, 0);
    finish();
  }

  Bsgs take() { return std::move(bsgs_); }

private:
  std::size_t degree_;
  Bsgs bsgs_;

  void ensure_base_point_for(const Perm &g) {
    for (std::size_t i = 0; i < degree_; ++i) {
      if (g[static_cast<Point>(i)] != i) {
        BsgsLevel lvl;
        lvl.base_point = static_cast<Point>(i);
        bsgs_.levels.push_back(std::move(lvl));
        return;
      }
    }
    assert(false && "identity passed to ensure_base_point_for");
  }

  // Inserts g as a strong generator at every level it stabilizes down to
  // `from`, extending the base if g fixes all current base points.
  void add_generator_at(const Perm &g, std::size_t from) {
    std::size_t last = from;
    for (std::size_t i = from; i <= bsgs_.levels.size(); ++i) {
      if (i == bsgs_.levels.size()) {
        ensure_base_point_for(g);
        last = i;
        break;
      }
      last = i;
      if (g[bsgs_.levels[i].base_point] != bsgs_.levels[i].base_point)
        break;
    }
    for (std::size_t i = from; i <= last; ++i) {
      bsgs_.levels[i].gens.push_back(g);
      rebuild_orbit(bsgs_.levels[i], degree_);
    }
    dirty_from_ = std::min(dirty_from_, last);
  }

  std::size_t dirty_from_ = 0;

  // Deterministic Schreier-Sims: repeatedly close the deepest dirty level
  // under Schreier generators until every level is consistent.
  void finish() {
    if (bsgs_.levels.empty()) {
      bsgs_.order = 1;
      return;
    }
    bool changed = true;
    while (changed) {
      changed = false;
      // Walk levels bottom-up; a failed sift inserts a generator deeper
      // down and restarts the sweep. Inserting may reallocate the level
      // vector, so everything is re-read through indices.
      for (std::size_t i = bsgs_.levels.size(); i-- > 0 && !changed;) {
        for (std::size_t k = 0; k < bsgs_.levels[i].orbit.size() && !changed; ++k) {
          for (std::size_t gi = 0; gi < bsgs_.levels[i].gens.size(); ++gi) {
            const Perm g = bsgs_.levels[i].gens[gi];
            Point y = g[bsgs_.levels[i].orbit[k]];
            const Perm &u_x = bsgs_.levels[i].transversal[k];
            const Perm &u_y =
                bsgs_.levels[i].transversal[static_cast<std::size_t>(bsgs_.levels[i].orbit_pos[y])];
            Perm schreier = u_y.inverse() * (g * u_x);
            if (schreier.is_identity())
              continue;
            auto [residue, stop] = bsgs_.strip(std::move(schreier), i + 1);
            if (stop == bsgs_.levels.size() && residue.is_identity())
              continue;
            // The residue fixes base points i+1..stop-1, so it joins the
            // generator lists of every level down to its failure point.
            add_generator_at(residue, i + 1);
            changed = true;
            break;
          }
        }
      }
    }
    bsgs_.order = 1;
    for (const BsgsLevel &lvl : bsgs_.levels)
      bsgs_.order = checked_mul(bsgs_.order, lvl.orbit.size());
    verify();
  }

  // Orbit-stabilizer consistency plus sifting of the inserted strong
  // generators; cheap and run on every build.
  void verify() const {
    for (const BsgsLevel &lvl : bsgs_.levels) {
      for (std::size_t k = 0; k < lvl.orbit.size(); ++k)
        if (lvl.transversal[k][lvl.base_point] != lvl.orbit[k])
          fail(Errc::BadParams, "BSGS internal error: transversal mismatch");
      for (const Perm &g : lvl.gens)
        if (!bsgs_.contains(g))
          fail(Errc::BadParams, "BSGS internal error: strong generator fails sift");
    }
  }
};

} // namespace

// ---------------------------------------------------------------- PermGroup

struct PermGroup::Impl {
  std::size_t degree;
  std::vector<Perm> generators;

  mutable std::once_flag bsgs_once;
  mutable std::optional<Bsgs> bsgs;

  mutable std::mutex table_mutex;
  mutable std::shared_ptr<const ElementTable> table;

  mutable std::mutex classes_mutex;
  mutable std::optional<std::vector<ConjClass>> classes;

  const Bsgs &get_bsgs() const {
    std::call_once(bsgs_once, [this] { bsgs.emplace(BsgsBuilder(degree, generators).take()); });
    return *bsgs;
  }
};

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators)
    : impl_(std::make_shared<Impl>()) {
  if (degree < 1 || degree > kMaxDegree)
    fail(Errc::OutOfRange, "group degree must be in [1, 65536]");
  for (const Perm &g : generators)
    if (g.degree() != degree)
      fail(Errc::DegreeMismatch, "generator degree differs from group degree");
  impl_->degree = degree;
  // Drop identity and duplicate generators; order kept otherwise.
  std::vector<Perm> kept;
  for (Perm &g : generators) {
    if (g.is_identity())
      continue;
    if (std::find(kept.begin(), kept.end(), g) == kept.end())
      kept.push_back(std::move(g));
  }
  impl_->generators = std::move(kept);
}

PermGroup PermGroup::trivial(std::size_t degree) { return PermGroup(degree, {}); }

std::size_t PermGroup::degree() const { return impl_->degree; }

const std::vector<Perm> &PermGroup::generators() const { return impl_->generators; }

std::uint64_t PermGroup::order() const { return impl_->get_bsgs().order; }

bool PermGroup::contains(const Perm &p) const {
  if (p.degree() != impl_->degree)
    fail(Errc::DegreeMismatch, "membership test: degrees differ");
  return impl_->get_bsgs().contains(p);
}

bool PermGroup::is_abelian() const {
  const auto &gens = impl_->generators;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!gens[i].commutes_with(gens[j]))
        return false;
  return true;
}

std::shared_ptr<const ElementTable> PermGroup::elements(std::uint64_t cap) const {
  std::uint64_t n = order();
  if (n > cap)
    fail(Errc::TooLarge, "group order " + std::to_string(n) + " exceeds enumeration cap " +
                             std::to_string(cap));
  std::lock_guard<std::mutex> lock(impl_->table_mutex);
  if (impl_->table)
    return impl_->table;

  const Bsgs &bsgs = impl_->get_bsgs();
  std::size_t degree = impl_->degree;
  std::vector<Point> flat;
  flat.reserve(static_cast<std::size_t>(n) * degree);

  // DFS over the transversal chain: every element is a unique product
  // u_0 * u_1 * ... * u_{k-1}.
  std::vector<Perm> stack;
  stack.emplace_back(degree);
  std::vector<std::size_t> pos(bsgs.levels.size() + 1, 0);
  if (bsgs.levels.empty()) {
    const Perm &id = stack[0];
    flat.insert(flat.end(), id.images().begin(), id.images().end());
  } else {
    std::size_t depth = 0;
    while (true) {
      if (depth == bsgs.levels.size()) {
        const Perm &e = stack.back();
        flat.insert(flat.end(), e.images().begin(), e.images().end());
        --depth;
        stack.pop_back();
        continue;
      }
      if (pos[depth] == bsgs.levels[depth].transversal.size()) {
        pos[depth] = 0;
        if (depth == 0)
          break;
        --depth;
        stack.pop_back();
        continue;
      }
      stack.push_back(stack.back() * bsgs.levels[depth].transversal[pos[depth]]);
      ++pos[depth];
      ++depth;
    }
  }

  // Sort rows lexicographically so that indices are canonical.
  std::size_t count = flat.size() / degree;
  std::vector<std::uint32_t> idx(count);
  std::iota(idx.begin(), idx.end(), 0u);
  std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
    const Point *ra = flat.data() + static_cast<std::size_t>(a) * degree;
    const Point *rb = flat.data() + static_cast<std::size_t>(b) * degree;
    return std::lexicographical_compare(ra, ra + degree, rb, rb + degree);
  });
  std::vector<Point> sorted;
  sorted.reserve(flat.size());
  for (std::uint32_t i : idx) {
    const Point *r = flat.data() + static_cast<std::size_t>(i) * degree;
    sorted.insert(sorted.end(), r, r + degree);
  }
  for (std::size_t i = 0; i + 1 < count; ++i)
    if (std::equal(sorted.data() + i * degree, sorted.data() + (i + 1) * degree,
                   sorted.data() + (i + 1) * degree))
      fail(Errc::BadParams, "enumeration produced duplicate elements");
  impl_->table = std::make_shared<ElementTable>(degree, std::move(sorted));
  if (impl_->table->size() != n)
    fail(Errc::BadParams, "enumeration count differs from the group order");
  return impl_->table;
}

const std::vector<ConjClass> &PermGroup::conjugacy_classes(std::uint64_t cap) const {
  {
    std::lock_guard<std::mutex> lock(impl_->classes_mutex);
    if (impl_->classes)
      return *impl_->classes;
  }
  auto table = elements(cap);
  std::size_t n = table->size();
  std::size_t degree = impl_->degree;

  std::vector<ConjClass> classes;
  std::vector<bool> visited(n, false);
  std::vector<std::uint32_t> queue;
  std::vector<Point> scratch(degree);
  for (std::size_t i = 0; i < n; ++i) {
    if (visited[i])
      continue;
    // i is the smallest unvisited index, hence the lexicographically
    // smallest member of its class.
    queue.clear();
    queue.push_back(static_cast<std::uint32_t>(i));
    visited[i] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Point *p = table->row(queue[head]);
      for (const Perm &g : impl_->generators) {
        // scratch = g p g^-1
        for (std::size_t x = 0; x < degree; ++x)
          scratch[g[static_cast<Point>(x)]] = g[p[x]];
        std::size_t j = table->find_row(scratch.data());
        if (j == ElementTable::npos)
          fail(Errc::BadParams, "conjugate escaped the element table");
        if (!visited[j]) {
          visited[j] = true;
          queue.push_back(static_cast<std::uint32_t>(j));
        }
      }
    }
    classes.push_back(ConjClass{table->get(i), queue.size()});
  }

  std::uint64_t total = 0;
  for (const ConjClass &c : classes) {
    total += c.size;
    if (order() % c.size != 0)
      fail(Errc::BadParams, "class size does not divide group order");
  }
  if (total != order())
    fail(Errc::BadParams, "class sizes do not sum to group order");

  std::lock_guard<std::mutex> lock(impl_->classes_mutex);
  if (!impl_->classes)
    impl_->classes = std::move(classes);
  return *impl_->classes;
}

std::vector<std::uint32_t> parallel_filter_indices(std::size_t n, unsigned threads,
                                                   const std::function<bool(std::size_t)> &pred) {
  if (threads <= 1 || n < 4096) {
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < n; ++i)
      if (pred(i))
        out.push_back(static_cast<std::uint32_t>(i));
    return out;
  }
  std::size_t chunks = threads;
  std::vector<std::vector<std::uint32_t>> partial(chunks);
  std::vector<std::thread> pool;
  std::size_t chunk_size = (n + chunks - 1) / chunks;
  for (std::size_t c = 0; c < chunks; ++c) {
    pool.emplace_back([&, c] {
      std::size_t lo = c * chunk_size;
      std::size_t hi = std::min(n, lo + chunk_size);
      for (std::size_t i = lo; i < hi; ++i)
        if (pred(i))
          partial[c].push_back(static_cast<std::uint32_t>(i));
    });
  }
  for (auto &t : pool)
    t.join();
  std::vector<std::uint32_t> out;
  for (auto &part : partial)
    out.insert(out.end(), part.begin(), part.end());
  return out;
}

namespace {

// Ascending scan over an element list, keeping each element that enlarges
// the generated subgroup. Returns a small generating set.
std::vector<Perm> extract_generators(const ElementTable &table,
                                     const std::vector<std::uint32_t> &member_indices,
                                     std::size_t degree, std::uint64_t target_order) {
  std::vector<Perm> gens;
  if (target_order <= 1)
    return gens;
  std::optional<PermGroup> current;
  for (std::uint32_t i : member_indices) {
    Perm p = table.get(i);
    if (p.is_identity())
      continue;
    if (current && current->contains(p))
      continue;
    gens.push_back(std::move(p));
    current.emplace(degree, gens);
    if (current->order() == target_order)
      break;
  }
  return gens;
}

} // namespace

PermGroup PermGroup::centralizer(const Perm &p, std::uint64_t cap, unsigned threads) const {
  if (!contains(p))
    fail(Errc::NotMember, "centralizer: element is not in the group");
  auto table = elements(cap);
  std::size_t degree = impl_->degree;
  auto members = parallel_filter_indices(table->size(), threads, [&](std::size_t i) {
    const Point *r = table->row(i);
    for (std::size_t x = 0; x < degree; ++x)
      if (r[p[static_cast<Point>(x)]] != p[r[x]])
        return false;
    return true;
  });
  auto gens = extract_generators(*table, members, degree, members.size());
  PermGroup result(degree, std::move(gens));
  if (result.order() != members.size())
    fail(Errc::BadParams, "centralizer generator extraction failed");
  return result;
}

PermGroup PermGroup::normal_closure(const std::vector<Perm> &seed) const {
  for (const Perm &s : seed)
    if (!contains(s))
      fail(Errc::NotMember, "normal closure: seed element is not in the group");
  std::vector<Perm> gens;
  for (const Perm &s : seed)
    if (!s.is_identity())
      gens.push_back(s);
  PermGroup current(impl_->degree, gens);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (const Perm &g : impl_->generators) {
        Perm c = gens[i].conjugated_by(g);
        if (!current.contains(c)) {
          gens.push_back(std::move(c));
          current = PermGroup(impl_->degree, gens);
          grew = true;
        }
      }
    }
  }
  return current;
}

PermGroup PermGroup::subgroup(const std::vector<Perm> &seed) const {
  for (const Perm &s : seed)
    if (!contains(s))
      fail(Errc::NotMember, "subgroup: seed element is not in the group");
  return PermGroup(impl_->degree, seed);
}

Perm PermGroup::random_element(std::mt19937_64 &rng) const {
  const Bsgs &bsgs = impl_->get_bsgs();
  Perm result(impl_->degree);
  for (const BsgsLevel &lvl : bsgs.levels) {
    std::uniform_int_distribution<std::size_t> pick(0, lvl.transversal.size() - 1);
    result = result * lvl.transversal[pick(rng)];
  }
  return result;
}

std::vector<Perm> PermGroup::closure(std::size_t degree, const std::vector<Perm> &gens,
                                     std::uint64_t cap) {
  std::vector<Perm> elems{Perm(degree)};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const Perm &g : gens) {
      Perm next = g * elems[i];
      if (std::find(elems.begin(), elems.end(), next) == elems.end()) {
        if (elems.size() + 1 > cap)
          fail(Errc::TooLarge, "closure exceeds cap");
        elems.push_back(std::move(next));
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

} // namespace jconst

#include "jconst/jordan.hpp"

#include <algorithm>
#include <unordered_set>

namespace jconst {

namespace {

using Clock = std::chrono::steady_clock;
using IndexList = std::vector<std::uint32_t>;

struct IndexListHash {
  std::size_t operator()(const IndexList &v) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint32_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Search state for the (A, C) recursion: A is an abelian subgroup, C its
// centralizer in G. Subgroups are sorted index lists into the ambient
// element table.
class MaxAbelianSearch {
public:
  MaxAbelianSearch(const PermGroup &group, const JordanOptions &opts)
      : group_(group), opts_(opts), table_(group.elements(opts.enum_cap)),
        degree_(group.degree()), mark_(table_->size(), 0) {
    deadline_ = Clock::now() + opts.budget;
  }

  MaxAbelianResult run() {
    MaxAbelianResult result;
    if (group_.is_abelian()) {
      result.order = group_.order();
      result.witness = group_.generators();
      if (result.witness.empty())
        result.witness.push_back(Perm(degree_));
      return result;
    }

    const auto &classes = group_.conjugacy_classes(opts_.enum_cap);

    IndexList all(table_->size());
    for (std::size_t i = 0; i < all.size(); ++i)
      all[i] = static_cast<std::uint32_t>(i);
    IndexList trivial{find_index(Perm(degree_))};

    // Seed the bound with the largest cyclic subgroup, so that even a cut
    // search reports a witness-backed lower bound.
    const ConjClass *seed = nullptr;
    for (const ConjClass &c : classes)
      if (!c.rep.is_identity() && (!seed || c.rep.order() > seed->rep.order()))
        seed = &c;
    if (seed) {
      best_key_ = extend_abelian(trivial, seed->rep);
      best_order_ = best_key_.size();
      best_witness_ = {seed->rep};
    }

    for (const ConjClass &c : classes) {
      if (c.rep.is_identity())
        continue;
      branch(trivial, c.rep, all);
    }

    result.order = best_order_;
    result.witness = best_witness_;
    result.certified = !timed_out_;
    result.nodes = nodes_;
    if (result.witness.empty())
      result.witness.push_back(Perm(degree_));
    return result;
  }

private:
  const PermGroup &group_;
  JordanOptions opts_;
  std::shared_ptr<const ElementTable> table_;
  std::size_t degree_;

  std::uint64_t best_order_ = 1;
  IndexList best_key_;
  std::vector<Perm> best_witness_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
  Clock::time_point deadline_;

  std::unordered_set<IndexList, IndexListHash> visited_;

  // Epoch-marked membership scratch for class computations.
  std::vector<std::uint32_t> mark_;
  std::uint32_t epoch_ = 0;

  std::uint32_t find_index(const Perm &p) const {
    std::size_t i = table_->find(p);
    if (i == ElementTable::npos)
      fail(Errc::BadParams, "element escaped the ambient table");
    return static_cast<std::uint32_t>(i);
  }

  bool expired() {
    if (!timed_out_ && Clock::now() > deadline_)
      timed_out_ = true;
    return timed_out_;
  }

  // Extends A by h (a class representative of C), then recurses on the
  // centralizer of <A, h> computed within C.
  void branch(const IndexList &a, const Perm &h, const IndexList &c) {
    if (c.size() < best_order_) // the bound may have grown mid-loop
      return;
    std::uint32_t h_idx = find_index(h);
    if (std::binary_search(a.begin(), a.end(), h_idx))
      return;
    IndexList a2 = extend_abelian(a, h);
    if (visited_.count(a2))
      return;
    if (visited_.size() < opts_.memo_cap)
      visited_.insert(a2);
    IndexList c2;
    c2.reserve(c.size());
    for (std::uint32_t i : c) {
      const Point *r = table_->row(i);
      bool commutes = true;
      for (std::size_t x = 0; x < degree_; ++x) {
        if (r[h[static_cast<Point>(x)]] != h[r[x]]) {
          commutes = false;
          break;
        }
      }
      if (commutes)
        c2.push_back(i);
    }
    explore(a2, c2);
  }

  void explore(const IndexList &a, const IndexList &c) {
    ++nodes_;
    if (expired())
      return;
    // Any abelian subgroup containing A lies in C.
    if (c.size() < best_order_)
      return;
    std::vector<Perm> c_gens = subgroup_generators(c);
    if (is_abelian_set(c_gens)) {
      record_leaf(c, c_gens);
      return;
    }
    std::vector<std::uint32_t> reps = class_reps(c, c_gens);
    for (std::uint32_t rep_idx : reps) {
      if (std::binary_search(a.begin(), a.end(), rep_idx))
        continue;
      branch(a, table_->get(rep_idx), c);
      if (timed_out_)
        return;
    }
  }

  void record_leaf(const IndexList &leaf, const std::vector<Perm> &gens) {
    std::uint64_t order = leaf.size();
    if (order > best_order_ || (order == best_order_ && (best_key_.empty() || leaf < best_key_))) {
      best_order_ = order;
      best_key_ = leaf;
      best_witness_ = gens;
      if (best_witness_.empty())
        best_witness_.push_back(Perm(degree_));
    }
  }

  // A is a closed abelian subgroup and h centralizes it, so <A, h> is the
  // set product A * <h>; no fixpoint iteration is needed.
  IndexList extend_abelian(const IndexList &a, const Perm &h) const {
    std::vector<Perm> powers;
    Perm cur = h;
    while (!cur.is_identity()) {
      powers.push_back(cur);
      cur = cur * h;
    }
    IndexList out(a);
    std::vector<Point> scratch(degree_);
    for (std::uint32_t i : a) {
      const Point *r = table_->row(i);
      for (const Perm &p : powers) {
        for (std::size_t x = 0; x < degree_; ++x)
          scratch[x] = r[p[static_cast<Point>(x)]];
        std::size_t j = table_->find_row(scratch.data());
        if (j == ElementTable::npos)
          fail(Errc::BadParams, "abelian product escaped the ambient table");
        out.push_back(static_cast<std::uint32_t>(j));
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<Perm> subgroup_generators(const IndexList &members) {
    std::vector<Perm> gens;
    std::optional<PermGroup> current;
    for (std::uint32_t i : members) {
      Perm p = table_->get(i);
      if (p.is_identity())
        continue;
      if (current && current->contains(p))
        continue;
      gens.push_back(std::move(p));
      current.emplace(degree_, gens);
      if (current->order() == members.size())
        break;
    }
    return gens;
  }

  static bool is_abelian_set(const std::vector<Perm> &gens) {
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j)
        if (!gens[i].commutes_with(gens[j]))
          return false;
    return true;
  }

  // Conjugacy class representatives (lex-smallest members) of the subgroup
  // given by `members`, under conjugation by `gens`.
  std::vector<std::uint32_t> class_reps(const IndexList &members, const std::vector<Perm> &gens) {
    ++epoch_;
    std::vector<std::uint32_t> reps;
    std::vector<std::uint32_t> queue;
    std::vector<Point> scratch(degree_);
    for (std::uint32_t start : members) {
      if (mark_[start] == epoch_)
        continue;
      reps.push_back(start);
      queue.clear();
      queue.push_back(start);
      mark_[start] = epoch_;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const Point *p = table_->row(queue[head]);
        for (const Perm &g : gens) {
          for (std::size_t x = 0; x < degree_; ++x)
            scratch[g[static_cast<Point>(x)]] = g[p[x]];
          std::size_t j = table_->find_row(scratch.data());
          if (j == ElementTable::npos)
            fail(Errc::BadParams, "conjugate escaped the ambient table");
          if (mark_[j] != epoch_) {
            mark_[j] = epoch_;
            queue.push_back(static_cast<std::uint32_t>(j));
          }
        }
      }
    }
    return reps;
  }
};

} // namespace

MaxAbelianResult max_abelian(const PermGroup &group, const JordanOptions &opts) {
  MaxAbelianSearch search(group, opts);
  MaxAbelianResult result = search.run();

  // Certify the witness independently of the search path.
  PermGroup witness = group.subgroup(result.witness);
  if (!witness.is_abelian() || witness.order() != result.order)
    fail(Errc::BadParams, "max_abelian produced an invalid witness");
  if (result.certified) {
    auto table = group.elements(opts.enum_cap);
    std::size_t degree = group.degree();
    const auto &gens = result.witness;
    auto centralizing = parallel_filter_indices(table->size(), opts.threads, [&](std::size_t i) {
      const Point *r = table->row(i);
      for (const Perm &g : gens)
        for (std::size_t x = 0; x < degree; ++x)
          if (r[g[static_cast<Point>(x)]] != g[r[x]])
            return false;
      return true;
    });
    if (centralizing.size() != result.order)
      fail(Errc::BadParams, "max_abelian witness is not self-centralizing");
  }
  return result;
}

std::uint64_t weak_jordan(const PermGroup &group, const JordanOptions &opts) {
  MaxAbelianResult res = max_abelian(group, opts);
  if (!res.certified)
    fail(Errc::Timeout, "max_abelian search exceeded its budget");
  if (group.order() % res.order != 0)
    fail(Errc::BadParams, "abelian witness order does not divide group order");
  return group.order() / res.order;
}

std::vector<PermGroup> normal_subgroups(const PermGroup &group, const JordanOptions &opts) {
  const auto &classes = group.conjugacy_classes(opts.enum_cap);

  std::vector<PermGroup> normals;
  normals.push_back(PermGroup::trivial(group.degree()));

  auto contains_subgroup = [](const PermGroup &big, const PermGroup &small) {
    if (big.order() % small.order() != 0)
      return false;
    for (const Perm &g : small.generators())
      if (!big.contains(g))
        return false;
    return true;
  };
  auto known = [&](const PermGroup &candidate) {
    for (const PermGroup &n : normals)
      if (n.order() == candidate.order() && contains_subgroup(n, candidate))
        return true;
    return false;
  };
  auto add = [&](PermGroup candidate) {
    if (known(candidate))
      return false;
    if (normals.size() + 1 > opts.lattice_cap)
      fail(Errc::LatticeExplosion, "normal subgroup lattice exceeds cap");
    normals.push_back(std::move(candidate));
    return true;
  };

  for (const ConjClass &c : classes) {
    if (c.rep.is_identity())
      continue;
    add(group.normal_closure({c.rep}));
  }

  // Join closure: every normal subgroup is a join of class closures.
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < normals.size() && !grew; ++i) {
      for (std::size_t j = i + 1; j < normals.size() && !grew; ++j) {
        std::vector<Perm> joint = normals[i].generators();
        const auto &other = normals[j].generators();
        joint.insert(joint.end(), other.begin(), other.end());
        PermGroup join(group.degree(), std::move(joint));
        if (join.order() == normals[i].order() || join.order() == normals[j].order())
          continue;
        grew = add(std::move(join));
      }
    }
  }

  std::stable_sort(normals.begin(), normals.end(),
                   [](const PermGroup &a, const PermGroup &b) { return a.order() < b.order(); });
  return normals;
}

MaxNormalAbelianResult max_normal_abelian(const PermGroup &group, const JordanOptions &opts) {
  MaxNormalAbelianResult result;
  result.witness.push_back(Perm(group.degree()));
  for (const PermGroup &n : normal_subgroups(group, opts)) {
    if (n.is_abelian() && n.order() > result.order) {
      result.order = n.order();
      result.witness = n.generators();
      if (result.witness.empty())
        result.witness.push_back(Perm(group.degree()));
    }
  }
  return result;
}

std::uint64_t jordan_constant(const PermGroup &group, const JordanOptions &opts) {
  MaxNormalAbelianResult res = max_normal_abelian(group, opts);
  return group.order() / res.order;
}

PyberReport pyber_check(const PermGroup &group, const JordanOptions &opts) {
  PyberReport report;
  report.weak_jordan = weak_jordan(group, opts);
  report.jordan = jordan_constant(group, opts);
  report.weak_squared = checked_mul(report.weak_jordan, report.weak_jordan);
  report.ok = report.jordan <= report.weak_squared;
  report.slack = report.ok ? report.weak_squared - report.jordan : 0;
  return report;
}

JordanReport jordan_report(const std::string &name, const PermGroup &group,
                           const JordanOptions &opts) {
  auto start = std::chrono::steady_clock::now();
  JordanReport report;
  report.name = name;
  report.order = group.order();
  report.max_abelian = max_abelian(group, opts);
  report.weak_jordan = report.order / report.max_abelian.order;
  report.max_normal_abelian = max_normal_abelian(group, opts);
  report.jordan = report.order / report.max_normal_abelian.order;
  report.certified = report.max_abelian.certified;
  report.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  return report;
}

} // namespace jconst

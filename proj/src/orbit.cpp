#include "braidinv/orbit.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "braidinv/errors.hpp"
#include "braidinv/representation.hpp"

namespace braidinv {

namespace {

using Key = std::vector<std::uint32_t>;

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint32_t v : k) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Interns (label, element) pairs so orbit states become short id vectors.
class TupleCodec {
public:
  void encode(const LabeledTuple& t, Key& out) {
    out.clear();
    out.reserve(t.entries.size());
    for (const auto& e : t.entries) out.push_back(pair_id(e.label, elem_id(e.element)));
  }

  LabeledTuple decode(const std::uint32_t* key, int r) const {
    std::vector<LabeledTuple::Entry> entries;
    entries.reserve(r);
    for (int i = 0; i < r; ++i) {
      const auto& [label, eid] = pairs_[key[i]];
      entries.push_back({label, elems_[eid]});
    }
    return LabeledTuple(std::move(entries));
  }

private:
  std::uint32_t elem_id(const GroupElement& g) {
    auto [it, fresh] = elem_index_.emplace(g, static_cast<std::uint32_t>(elems_.size()));
    if (fresh) elems_.push_back(g);
    return it->second;
  }

  std::uint32_t label_id(Label label) {
    auto [it, fresh] = label_index_.emplace(label, static_cast<std::uint32_t>(labels_.size()));
    if (fresh) labels_.push_back(label);
    return it->second;
  }

  std::uint32_t pair_id(Label label, std::uint32_t eid) {
    const std::uint64_t packed = (static_cast<std::uint64_t>(label_id(label)) << 32) | eid;
    auto [it, fresh] = pair_index_.emplace(packed, static_cast<std::uint32_t>(pairs_.size()));
    if (fresh) pairs_.emplace_back(label, eid);
    return it->second;
  }

  std::vector<GroupElement> elems_;
  std::unordered_map<GroupElement, std::uint32_t, GroupElementHash> elem_index_;
  std::vector<Label> labels_;
  std::unordered_map<Label, std::uint32_t> label_index_;
  std::vector<std::pair<Label, std::uint32_t>> pairs_;
  std::unordered_map<std::uint64_t, std::uint32_t> pair_index_;
};

// Deduplicated store of fixed-length keys, contiguous, in insertion order.
class StateArena {
public:
  explicit StateArena(int r) : r_(r), index_(16, Hash{this}, Eq{this}) {}

  std::uint32_t size() const { return count_; }

  const std::uint32_t* at(std::uint32_t idx) const {
    return flat_.data() + static_cast<std::size_t>(idx) * r_;
  }

  // Returns {index, inserted}.
  std::pair<std::uint32_t, bool> insert(const Key& key) {
    flat_.insert(flat_.end(), key.begin(), key.end());
    const std::uint32_t candidate = count_;
    auto [it, fresh] = index_.insert(candidate);
    if (fresh) {
      ++count_;
    } else {
      flat_.resize(flat_.size() - r_);
    }
    return {*it, fresh};
  }

private:
  struct Hash {
    const StateArena* arena;
    std::size_t operator()(std::uint32_t idx) const {
      const std::uint32_t* p = arena->at(idx);
      std::size_t h = 1469598103934665603ull;
      for (int i = 0; i < arena->r_; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
      }
      return h;
    }
  };
  struct Eq {
    const StateArena* arena;
    bool operator()(std::uint32_t a, std::uint32_t b) const {
      return std::equal(arena->at(a), arena->at(a) + arena->r_, arena->at(b));
    }
  };

  int r_;
  std::uint32_t count_ = 0;
  std::vector<std::uint32_t> flat_;
  std::unordered_set<std::uint32_t, Hash, Eq> index_;
};

std::vector<GroupElement> conj_generators(const ElementSet* conjugators) {
  if (conjugators == nullptr) return {};
  std::vector<GroupElement> gens;
  for (const GroupElement& g : conjugators->generating_set())
    if (!g.is_identity()) gens.push_back(g);
  return gens;
}

// BFS closure under q1, q2 and conjugation by conj_gens. on_new is invoked
// for every state as it is admitted (t0 included); returning true stops the
// search. Throws ResourceCapError when the closed set would exceed cap.
struct OrbitRun {
  TupleCodec codec;
  StateArena arena;
  std::uint64_t expanded = 0;
  bool stopped = false;

  OrbitRun(int r) : arena(r) {}

  template <typename OnNew>
  void run(const LabeledTuple& t0, const std::vector<GroupElement>& conj_gens, std::uint64_t cap,
           OnNew on_new) {
    const int r = t0.size();
    Key key;
    codec.encode(t0, key);
    arena.insert(key);
    if (on_new(t0, 0u)) {
      stopped = true;
      return;
    }
    std::vector<LabeledTuple> succ;
    for (std::uint32_t cursor = 0; cursor < arena.size(); ++cursor) {
      const LabeledTuple t = codec.decode(arena.at(cursor), r);
      ++expanded;
      succ.clear();
      if (r >= 2) {
        succ.push_back(q1(t));
        succ.push_back(q2(t));
      }
      for (const GroupElement& u : conj_gens) succ.push_back(conjugate_tuple(t, u));
      for (const LabeledTuple& s : succ) {
        codec.encode(s, key);
        auto [idx, fresh] = arena.insert(key);
        if (!fresh) continue;
        if (arena.size() > cap)
          throw ResourceCapError("orbit exceeded cap of " + std::to_string(cap) + " states");
        if (on_new(s, idx)) {
          stopped = true;
          return;
        }
      }
    }
  }
};

} // namespace

std::vector<LabeledTuple> hurwitz_orbit(const LabeledTuple& t0, const ElementSet* conjugators,
                                        std::uint64_t cap) {
  std::vector<LabeledTuple> members;
  OrbitRun run(t0.size());
  run.run(t0, conj_generators(conjugators), cap, [&](const LabeledTuple& t, std::uint32_t) {
    members.push_back(t);
    return false;
  });
  return members;
}

std::uint64_t hurwitz_orbit_size(const LabeledTuple& t0, const ElementSet* conjugators,
                                 std::uint64_t cap) {
  OrbitRun run(t0.size());
  run.run(t0, conj_generators(conjugators), cap,
          [](const LabeledTuple&, std::uint32_t) { return false; });
  return run.arena.size();
}

namespace {

// Lexicographically minimal key over the conjugation class of t.
Key class_key(const LabeledTuple& t, const std::vector<GroupElement>& conj_gens,
              TupleCodec& codec) {
  std::unordered_set<Key, KeyHash> seen;
  std::vector<LabeledTuple> frontier{t};
  Key key;
  codec.encode(t, key);
  Key best = key;
  seen.insert(key);
  while (!frontier.empty()) {
    LabeledTuple cur = std::move(frontier.back());
    frontier.pop_back();
    for (const GroupElement& u : conj_gens) {
      LabeledTuple next = conjugate_tuple(cur, u);
      codec.encode(next, key);
      if (seen.insert(key).second) {
        if (key < best) best = key;
        frontier.push_back(std::move(next));
      }
    }
  }
  return best;
}

} // namespace

std::uint64_t hurwitz_orbit_class_count(const LabeledTuple& t0, const ElementSet& conjugators,
                                        std::uint64_t cap) {
  const int r = t0.size();
  const std::vector<GroupElement> gens = conj_generators(&conjugators);
  TupleCodec codec;
  StateArena arena(r);
  arena.insert(class_key(t0, gens, codec));
  for (std::uint32_t cursor = 0; cursor < arena.size(); ++cursor) {
    const LabeledTuple rep = codec.decode(arena.at(cursor), r);
    for (int mv = 0; mv < 2; ++mv) {
      const LabeledTuple next = mv == 0 ? q1(rep) : q2(rep);
      arena.insert(class_key(next, gens, codec));
      if (arena.size() > cap)
        throw ResourceCapError("class orbit exceeded cap of " + std::to_string(cap) + " states");
    }
  }
  return arena.size();
}

std::string to_string(OrbitReport::Verdict v) {
  switch (v) {
    case OrbitReport::Verdict::Equivalent: return "equivalent";
    case OrbitReport::Verdict::Inequivalent: return "inequivalent";
    case OrbitReport::Verdict::ResourceCap: return "resource-cap";
  }
  return "?";
}

OrbitReport compare_tuples(const LabeledTuple& t1, const LabeledTuple& t2,
                           const ElementSet& group, const CompareOptions& options) {
  if (t1.size() != t2.size()) throw Error("compare: tuples have different lengths");
  if (!t1.entries.front().element.same_ambient(t2.entries.front().element))
    throw Error("compare: tuples have different ambients");

  OrbitReport report{OrbitReport::Verdict::Inequivalent, 0, 0, std::nullopt, ""};

  // labels encode local singularity types; any equivalence preserves them
  std::multiset<Label> labels1, labels2;
  for (const auto& e : t1.entries) labels1.insert(e.label);
  for (const auto& e : t2.entries) labels2.insert(e.label);
  if (labels1 != labels2) {
    report.reason = "label multisets differ";
    return report;
  }

  try {
    const GroupElement c1 = pseudo_coxeter(t1);
    const GroupElement c2 = pseudo_coxeter(t2);

    const ElementSet& image_group = group;
    const std::optional<GroupElement> g = find_conjugator(image_group, c2, c1);
    if (!g) {
      report.reason = "pseudo-Coxeter elements are not conjugate in the image group";
      return report;
    }

    const ElementSet h1 = centralizer(image_group, c1);
    const ElementSet h2 = centralizer(image_group, c2);

    OrbitRun run(t1.size());
    const std::vector<GroupElement> conj_gens = conj_generators(&h1);

    // target set: all conjugates of t2 whose pseudo-Coxeter equals c(t1),
    // encoded with the BFS codec so membership is a key lookup
    std::unordered_set<Key, KeyHash> target_keys;
    {
      Key key;
      for (const GroupElement& x : h2.elements()) {
        run.codec.encode(conjugate_tuple(t2, x * *g), key);
        target_keys.insert(key);
      }
    }

    Key scratch;
    std::optional<LabeledTuple> witness;
    bool capped = false;
    try {
      run.run(t1, conj_gens, options.cap, [&](const LabeledTuple& t, std::uint32_t) {
        run.codec.encode(t, scratch);
        if (target_keys.count(scratch)) {
          if (!witness) witness = t;
          if (options.early_exit) return true;
        }
        return false;
      });
    } catch (const ResourceCapError&) {
      capped = true;
    }

    report.orbit_size = run.arena.size();
    report.states_visited = run.expanded;
    if (witness) {
      report.verdict = OrbitReport::Verdict::Equivalent;
      report.witness = witness;
    } else if (capped) {
      report.verdict = OrbitReport::Verdict::ResourceCap;
      report.reason = "orbit enumeration exceeded the state cap";
    } else {
      report.verdict = OrbitReport::Verdict::Inequivalent;
      report.reason = "orbit exhausted without meeting the target set";
    }
    return report;
  } catch (const ResourceCapError& e) {
    report.verdict = OrbitReport::Verdict::ResourceCap;
    report.reason = e.what();
    return report;
  }
}

OrbitReport compare_monodromies(const MonodromyFactorization& m1,
                                const MonodromyFactorization& m2, const Representation& rep,
                                const CompareOptions& options) {
  if (m1.size() != m2.size()) throw Error("compare: factorizations have different lengths");
  if (m1.strands != m2.strands)
    throw Error("compare: factorizations have different strand counts");
  try {
    const ElementSet image_group = closure(rep.images(), options.cap);
    return compare_tuples(apply_rep_tuple(rep, m1), apply_rep_tuple(rep, m2), image_group,
                          options);
  } catch (const ResourceCapError& e) {
    OrbitReport report{OrbitReport::Verdict::ResourceCap, 0, 0, std::nullopt, e.what()};
    return report;
  }
}

HurwitzRepInfo hurwitz_rep(const std::vector<GroupElement>& tuple, std::uint64_t cap) {
  const LabeledTuple t0 = LabeledTuple::unlabeled(tuple);
  OrbitRun run(t0.size());
  run.run(t0, {}, cap, [](const LabeledTuple&, std::uint32_t) { return false; });

  // canonical indexing of the orbit, then the permutation each move induces
  const int r = t0.size();
  const std::uint32_t n = run.arena.size();
  std::vector<std::uint32_t> order(n);
  for (std::uint32_t i = 0; i < n; ++i) order[i] = i;
  auto key_less = [&](std::uint32_t a, std::uint32_t b) {
    return std::lexicographical_compare(run.arena.at(a), run.arena.at(a) + r, run.arena.at(b),
                                        run.arena.at(b) + r);
  };
  std::sort(order.begin(), order.end(), key_less);
  std::vector<std::uint32_t> rank(n);
  for (std::uint32_t pos = 0; pos < n; ++pos) rank[order[pos]] = pos;

  std::vector<GroupElement> move_perms;
  Key key;
  for (int i = 1; i <= r - 1; ++i) {
    std::vector<std::int32_t> images(n);
    for (std::uint32_t pos = 0; pos < n; ++pos) {
      const LabeledTuple t = run.codec.decode(run.arena.at(order[pos]), r);
      run.codec.encode(hurwitz_move(t, i), key);
      auto [idx, fresh] = run.arena.insert(key);
      if (fresh) throw Error("hurwitz_rep: orbit closure audit failed");
      images[pos] = static_cast<std::int32_t>(rank[idx]) + 1;
    }
    move_perms.push_back(Permutation(std::move(images)));
  }
  const std::uint64_t group_order = move_perms.empty() ? 1 : closure(move_perms, cap).size();
  return {n, group_order};
}

HurwitzRepInfo hurwitz_rep_classes(const std::vector<GroupElement>& tuple,
                                   const ElementSet& conj_group, std::uint64_t cap) {
  const LabeledTuple t0 = LabeledTuple::unlabeled(tuple);
  const int r = t0.size();
  const std::vector<GroupElement> gens = conj_generators(&conj_group);
  TupleCodec codec;
  StateArena arena(r);
  arena.insert(class_key(t0, gens, codec));
  for (std::uint32_t cursor = 0; cursor < arena.size(); ++cursor) {
    const LabeledTuple rep = codec.decode(arena.at(cursor), r);
    for (int mv = 0; mv < 2; ++mv) {
      arena.insert(class_key(mv == 0 ? q1(rep) : q2(rep), gens, codec));
      if (arena.size() > cap)
        throw ResourceCapError("class orbit exceeded cap of " + std::to_string(cap) + " states");
    }
  }

  const std::uint32_t n = arena.size();
  std::vector<std::uint32_t> order(n);
  for (std::uint32_t i = 0; i < n; ++i) order[i] = i;
  auto key_less = [&](std::uint32_t a, std::uint32_t b) {
    return std::lexicographical_compare(arena.at(a), arena.at(a) + r, arena.at(b),
                                        arena.at(b) + r);
  };
  std::sort(order.begin(), order.end(), key_less);
  std::vector<std::uint32_t> rank(n);
  for (std::uint32_t pos = 0; pos < n; ++pos) rank[order[pos]] = pos;

  std::vector<GroupElement> move_perms;
  for (int i = 1; i <= r - 1; ++i) {
    std::vector<std::int32_t> images(n);
    for (std::uint32_t pos = 0; pos < n; ++pos) {
      const LabeledTuple t = codec.decode(arena.at(order[pos]), r);
      auto [idx, fresh] = arena.insert(class_key(hurwitz_move(t, i), gens, codec));
      if (fresh) throw Error("hurwitz_rep_classes: class orbit closure audit failed");
      images[pos] = static_cast<std::int32_t>(rank[idx]) + 1;
    }
    move_perms.push_back(Permutation(std::move(images)));
  }
  const std::uint64_t group_order = move_perms.empty() ? 1 : closure(move_perms, cap).size();
  return {n, group_order};
}

} // namespace braidinv

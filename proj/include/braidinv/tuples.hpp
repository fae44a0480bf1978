#pragma once

#include <cstdint>
#include <vector>

#include "braidinv/group.hpp"
#include "braidinv/representation.hpp"
#include "braidinv/words.hpp"

namespace braidinv {

using Label = std::int64_t;

// r-tuple of (label, element) pairs over one ambient group: a monodromy
// representative. Labels are opaque tags that travel with their element
// under every move; equality is componentwise on the pairs.
struct LabeledTuple {
  struct Entry {
    Label label;
    GroupElement element;
    bool operator==(const Entry&) const = default;
  };

  std::vector<Entry> entries;

  LabeledTuple() = default;
  explicit LabeledTuple(std::vector<Entry> e);
  static LabeledTuple unlabeled(const std::vector<GroupElement>& elements);

  int size() const { return static_cast<int>(entries.size()); }
  bool operator==(const LabeledTuple&) const = default;
};

// Braid-level monodromy factorization: r labeled braid words on d strands.
struct MonodromyFactorization {
  struct Entry {
    Label label;
    BraidWord word;
  };

  int strands;
  std::vector<Entry> entries;

  int size() const { return static_cast<int>(entries.size()); }
};

// Hurwitz move at position i (1-based, 1 <= i <= r-1):
// (..., g_i, g_{i+1}, ...) -> (..., g_{i+1}, g_{i+1} g_i g_{i+1}^-1, ...),
// labels swapping along with their elements.
LabeledTuple hurwitz_move(const LabeledTuple& t, int i);

// Exact inverse: hurwitz_unmove(hurwitz_move(t, i), i) == t.
LabeledTuple hurwitz_unmove(const LabeledTuple& t, int i);

// q1 = hurwitz_move(., 1).
LabeledTuple q1(const LabeledTuple& t);

// Composite move sending (g_1,...,g_r) to (g_r, g_r g_1 g_r^-1, ...,
// g_r g_{r-1} g_r^-1), labels rotated accordingly; equals the moves
// r-1, r-2, ..., 1 applied in that order. {q1, q2} generate the full
// Hurwitz action on any finite orbit.
LabeledTuple q2(const LabeledTuple& t);

// Pseudo-Coxeter element c(t) = g_r * ... * g_1. Invariant under every
// Hurwitz move; c(t^u) = u^-1 c(t) u.
GroupElement pseudo_coxeter(const LabeledTuple& t);

// Componentwise u^-1 g u, labels preserved.
LabeledTuple conjugate_tuple(const LabeledTuple& t, const GroupElement& u);

// Entrywise apply_rep, labels preserved: the image of a braid-level
// factorization in the target group.
LabeledTuple apply_rep_tuple(const Representation& rep, const MonodromyFactorization& m);

} // namespace braidinv

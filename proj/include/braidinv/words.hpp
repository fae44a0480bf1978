#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "braidinv/perm.hpp"

namespace braidinv {

using Letter = std::int32_t;
using Letters = std::vector<Letter>;

// Word in the free group F_n on x_1..x_n. Letter k > 0 means x_k, -k means
// x_k^-1. Words are stored as given; free_reduce() computes the normal form.
class FreeWord {
public:
  FreeWord(int rank, Letters letters);
  explicit FreeWord(int rank) : FreeWord(rank, {}) {}

  int rank() const { return rank_; }
  const Letters& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  bool operator==(const FreeWord& other) const = default;

private:
  int rank_;
  Letters letters_;
};

// Word in the braid group B_d on sigma_1..sigma_{d-1}. Letter i > 0 means
// sigma_i, -i means sigma_i^-1. The empty word is the identity braid.
//
// Composition convention, used throughout: words act left to right, i.e. the
// leftmost letter acts first, matching the right action w^(b1 b2) = (w^b1)^b2.
class BraidWord {
public:
  BraidWord(int strands, Letters letters);
  explicit BraidWord(int strands) : BraidWord(strands, {}) {}

  int strands() const { return strands_; }
  const Letters& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  bool operator==(const BraidWord& other) const = default;

private:
  int strands_;
  Letters letters_;
};

// Unique reduced word equal to w in F_n (no adjacent l, -l pairs). Idempotent.
FreeWord free_reduce(const FreeWord& w);

// Inverse word (letters reversed and negated).
FreeWord free_inverse(const FreeWord& w);

// Concatenation u.v (not reduced).
FreeWord free_concat(const FreeWord& u, const FreeWord& v);

// Cyclic reduction: free-reduce, then strip matching inverse letters from
// both ends until none remain.
FreeWord cyclic_reduce(const FreeWord& w);

// Right Artin action of the braid word b on the free word w, with the
// substitution x_i -> x_{i+1}, x_{i+1} -> x_{i+1} x_i x_{i+1}^-1 for
// sigma_i and the inverse substitution for sigma_i^-1. Returns the reduced
// image; w^(b1 b2) = (w^b1)^b2. Requires b.strands() == w.rank().
FreeWord artin_act(const BraidWord& b, const FreeWord& w);

// Decides equality in B_d via the faithful action on free generators:
// true iff artin_act(b1, x_i) == artin_act(b2, x_i) for all i.
bool braid_eq(const BraidWord& b1, const BraidWord& b2);

// Underlying permutation of a braid: sigma(i) is the index such that
// artin_act(b, x_i) cyclically reduces to x_{sigma(i)}. Homomorphic under
// the left-to-right convention: perm(b1.b2) = perm(b1) * perm(b2).
Permutation braid_permutation(const BraidWord& b);

// Certificate check for the two testable conditions of the braid
// characterization: images must fix x_n...x_1 after reduction and each image
// must cyclically reduce to a single positive generator, the assignment being
// a permutation. Returns that permutation on success, nothing otherwise.
// This certifies necessary conditions only; no braid word is synthesized.
std::optional<Permutation> check_braid_candidate(const std::vector<FreeWord>& images);

// Concatenation b1.b2.
BraidWord braid_compose(const BraidWord& b1, const BraidWord& b2);

// Letterwise sign-flip reversal.
BraidWord braid_inverse(const BraidWord& b);

// u * v := u.v.u^-1.
BraidWord braid_conjugate(const BraidWord& u, const BraidWord& v);

} // namespace braidinv

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "braidinv/group.hpp"
#include "braidinv/tuples.hpp"

namespace braidinv {

// Smallest set containing t0 and closed under q1, q2 and conjugation by
// every element of `conjugators` (a subgroup set; pass nullptr for none).
// Closure under q1/q2 alone implies closure under their inverses on finite
// sets, since each move acts injectively, hence bijectively, on a finite
// closed set. Conjugation is applied through a generating subset of the
// subgroup, which yields the identical closure. Members are returned in
// discovery order. Throws ResourceCapError past `cap` states.
std::vector<LabeledTuple> hurwitz_orbit(const LabeledTuple& t0, const ElementSet* conjugators,
                                        std::uint64_t cap = kDefaultCap);

// Size of the closure above without materializing tuples.
std::uint64_t hurwitz_orbit_size(const LabeledTuple& t0, const ElementSet* conjugators,
                                 std::uint64_t cap = kDefaultCap);

// Number of `conjugators`-conjugation classes in the closure: the orbit
// size counted in G \ G^r instead of G^r.
std::uint64_t hurwitz_orbit_class_count(const LabeledTuple& t0, const ElementSet& conjugators,
                                        std::uint64_t cap = kDefaultCap);

struct OrbitReport {
  enum class Verdict { Equivalent, Inequivalent, ResourceCap };

  Verdict verdict;
  std::uint64_t orbit_size = 0;      // states in the closed set at termination
  std::uint64_t states_visited = 0;  // states whose successors were generated
  std::optional<LabeledTuple> witness; // orbit member matching the target set
  std::string reason;                // set when no orbit enumeration decided it

  bool equivalent() const { return verdict == Verdict::Equivalent; }
};

std::string to_string(OrbitReport::Verdict v);

struct CompareOptions {
  std::uint64_t cap = kDefaultCap;
  bool early_exit = true; // stop at the first orbit/target hit
};

// Tuple-level comparison inside a fixed finite group (see
// compare_monodromies for the algorithm). `group` must contain the entries
// of both tuples; conjugacy search and centralizers run inside it.
OrbitReport compare_tuples(const LabeledTuple& t1, const LabeledTuple& t2,
                           const ElementSet& group, const CompareOptions& options = {});

// Decides equivalence of two (G, Phi)-monodromies:
//   (i)   apply the representation to both factorizations;
//   (ii)  find g with c(t2)^g = c(t1) (inequivalent when the pseudo-Coxeter
//         elements are not conjugate); let H be the centralizer of c(t1)
//         and build the target set {t2^(x g) : x in centralizer of c(t2)},
//         i.e. all conjugates of t2 whose pseudo-Coxeter equals c(t1);
//   (iii) enumerate the orbit of t1 under q1, q2 and conjugation by H,
//         testing each new state against the target set;
//   (iv)  inequivalent iff no hit after exhaustion.
// Hurwitz moves preserve the pseudo-Coxeter element exactly and conjugation
// transforms it equivariantly, which makes the centralizer reduction sound.
// Label multisets are compared first; a mismatch is immediately
// inequivalent. Requires equal r and equal strand counts.
OrbitReport compare_monodromies(const MonodromyFactorization& m1,
                                const MonodromyFactorization& m2, const Representation& rep,
                                const CompareOptions& options = {});

} // namespace braidinv

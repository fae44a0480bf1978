#pragma once

#include <cstdint>
#include <vector>

#include "braidinv/group.hpp"
#include "braidinv/words.hpp"

namespace braidinv {

// Representation of B_d into a finite group, given by the images of
// sigma_1..sigma_{d-1}. Both braid relation families are verified at
// construction; unverifiable data is rejected.
class Representation {
public:
  Representation(int strands, std::vector<GroupElement> images);

  int strands() const { return strands_; }
  const std::vector<GroupElement>& images() const { return images_; }
  Ambient ambient() const { return images_.front().ambient(); }
  GroupElement identity() const { return images_.front().identity_like(); }

private:
  int strands_;
  std::vector<GroupElement> images_;
};

// B_3 -> SL(2, Z/mZ): sigma_1 -> [[1,0],[m-1,1]], sigma_2 -> [[1,1],[0,1]].
Representation sl2_mod_rep(std::uint32_t m);

// B_d -> Sym(d): sigma_i -> (i, i+1).
Representation sym_rep(int d);

// Image of a braid word: product of generator images in word order,
// inverses via group inversion. Constant on braid_eq classes.
GroupElement apply_rep(const Representation& rep, const BraidWord& b);

struct HurwitzRepInfo {
  std::uint64_t orbit_size;
  std::uint64_t group_order;
};

// Hurwitz-action representation of B_r attached to a tuple g in G^r:
// enumerates the orbit Omega_g of the tuple under the r-1 Hurwitz moves,
// then the order of the permutation group of Omega_g that the moves
// generate. Both enumerations respect `cap`.
HurwitzRepInfo hurwitz_rep(const std::vector<GroupElement>& tuple,
                           std::uint64_t cap = kDefaultCap);

// Quotient variant on G \ G^r: states are conjugation classes of tuples
// under the subgroup `conj_group`; moves are well-defined on classes since
// Hurwitz action and conjugation commute.
HurwitzRepInfo hurwitz_rep_classes(const std::vector<GroupElement>& tuple,
                                   const ElementSet& conj_group,
                                   std::uint64_t cap = kDefaultCap);

} // namespace braidinv

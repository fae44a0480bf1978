#pragma once

#include <cstdint>
#include <vector>

namespace braidinv {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// Smith normal form D = U A V with U, V unimodular and the nonzero diagonal
// in divisibility order. The certificate (product identity, |det| = 1,
// divisibility chain) is re-verified before returning; exact integer
// arithmetic throughout, overflow checked.
struct SmithResult {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  std::vector<std::int64_t> invariant_factors; // nonzero diagonal entries of d
};

SmithResult smith_normal_form(const IntMatrix& a);

} // namespace braidinv

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braidinv/smith.hpp"
#include "braidinv/tuples.hpp"
#include "braidinv/words.hpp"

namespace braidinv {

// Finitely presented group: generator names plus relators over them.
// A relation u = v is stored as the reduced word u.v^-1; trivial relators
// are dropped and duplicates are removed up to cyclic rotation and
// inversion.
struct Presentation {
  std::vector<std::string> generator_names;
  std::vector<FreeWord> relators;

  int rank() const { return static_cast<int>(generator_names.size()); }
};

// Fundamental group of the affine complement: generators g_1..g_d, relators
// g_j^{tau_i} g_j^-1 for every entry tau_i of the factorization and every j.
Presentation presentation_affine(const MonodromyFactorization& m);

// Fibered variant: generators g_1..g_d, a_1..a_r, relators
// g_j^{tau_i} (a_i^-1 g_j a_i)^-1, exactly r*d of them.
Presentation presentation_fibered(const MonodromyFactorization& m);

// Meridian of the line at infinity for the degree-3 projection: with
// e := (g_3 g_2 g_1)^-1 the reduced word
// ((e^-1 g_3 e) g_3 (e g_3 e^-1) g_3 g_2 g_1)^-1. Only d = 3 is supported.
FreeWord meridian_infinity_relator(int d = 3);

// Projective complement: affine relators plus the meridian-at-infinity
// relator (d = 3 only).
Presentation presentation_projective(const MonodromyFactorization& m);

// Invariant factors of the relator exponent-sum matrix via Smith normal
// form: free rank and torsion coefficients (> 1, divisibility order) of the
// abelianized group.
struct AbelianizationResult {
  std::int64_t free_rank = 0;
  std::vector<std::int64_t> torsion;

  bool operator==(const AbelianizationResult&) const = default;
};

AbelianizationResult abelianization(const Presentation& p);

// Exponent-sum matrix (one row per relator, one column per generator).
IntMatrix exponent_matrix(const Presentation& p);

enum class PresentationFormat { Plain, Gap };

PresentationFormat parse_presentation_format(const std::string& name);

// Text export. Plain: a "generators: ..." header plus one relator per line
// in letter notation ("a b a^-1 b^-1"). Gap: a free-group-quotient
// definition; the exact templates are documented in the README.
std::string export_presentation(const Presentation& p, PresentationFormat format);

} // namespace braidinv

#include "braidinv/presentation.hpp"

#include <algorithm>
#include <set>

#include "braidinv/errors.hpp"

namespace braidinv {

namespace {

// Canonical key of a relator up to cyclic rotation and inversion: the
// lexicographically least rotation of the cyclic reduction and of its
// inverse.
Letters relator_key(const FreeWord& w) {
  const Letters base = cyclic_reduce(w).letters();
  if (base.empty()) return {};
  Letters best;
  for (int invert = 0; invert < 2; ++invert) {
    Letters cur = base;
    if (invert) {
      std::reverse(cur.begin(), cur.end());
      for (Letter& l : cur) l = -l;
    }
    for (std::size_t shift = 0; shift < cur.size(); ++shift) {
      std::rotate(cur.begin(), cur.begin() + 1, cur.end());
      if (best.empty() || cur < best) best = cur;
    }
  }
  return best;
}

void add_relator(Presentation& p, std::set<Letters>& seen, const FreeWord& raw) {
  FreeWord reduced = free_reduce(raw);
  if (reduced.empty()) return;
  if (seen.insert(relator_key(reduced)).second) p.relators.push_back(std::move(reduced));
}

std::vector<std::string> generator_names(const char* stem, int count, int offset = 0) {
  std::vector<std::string> names;
  names.reserve(count);
  for (int i = 1; i <= count; ++i) names.push_back(stem + std::to_string(i + offset));
  return names;
}

} // namespace

Presentation presentation_affine(const MonodromyFactorization& m) {
  const int d = m.strands;
  Presentation p;
  p.generator_names = generator_names("g", d);
  std::set<Letters> seen;
  for (const auto& entry : m.entries)
    for (int j = 1; j <= d; ++j) {
      FreeWord image = artin_act(entry.word, FreeWord(d, {j}));
      add_relator(p, seen, free_concat(image, FreeWord(d, {-j})));
    }
  return p;
}

Presentation presentation_fibered(const MonodromyFactorization& m) {
  const int d = m.strands;
  const int r = m.size();
  const int rank = d + r;
  Presentation p;
  p.generator_names = generator_names("g", d);
  for (const std::string& name : generator_names("a", r)) p.generator_names.push_back(name);

  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= d; ++j) {
      // g_j^{tau_i} . (a_i^-1 g_j a_i)^-1, over the combined alphabet
      FreeWord image = artin_act(m.entries[i - 1].word, FreeWord(d, {j}));
      Letters letters = image.letters();
      const Letter alpha = static_cast<Letter>(d + i);
      letters.push_back(-alpha);
      letters.push_back(-j);
      letters.push_back(alpha);
      p.relators.push_back(free_reduce(FreeWord(rank, std::move(letters))));
    }
  return p;
}

FreeWord meridian_infinity_relator(int d) {
  if (d != 3)
    throw Error("meridian_infinity_relator supports only 3 strands (multiplicity-3 center)");
  const FreeWord g3g2g1(3, {3, 2, 1});
  const FreeWord e = free_inverse(g3g2g1);     // (g3 g2 g1)^-1
  const FreeWord e_inv = g3g2g1;
  const FreeWord g3(3, {3});
  FreeWord word = free_concat(e_inv, g3);      // e^-1 g3
  word = free_concat(word, e);                 // e^-1 g3 e
  word = free_concat(word, g3);
  word = free_concat(word, free_concat(free_concat(e, g3), e_inv)); // e g3 e^-1
  word = free_concat(word, g3g2g1);            // g3 g2 g1
  return free_reduce(free_inverse(word));
}

Presentation presentation_projective(const MonodromyFactorization& m) {
  if (m.strands != 3)
    throw Error("projective presentation supports only 3-strand factorizations");
  Presentation p = presentation_affine(m);
  std::set<Letters> seen;
  for (const FreeWord& rel : p.relators) seen.insert(relator_key(rel));
  add_relator(p, seen, meridian_infinity_relator(3));
  return p;
}

IntMatrix exponent_matrix(const Presentation& p) {
  IntMatrix a;
  a.reserve(p.relators.size());
  for (const FreeWord& rel : p.relators) {
    std::vector<std::int64_t> row(p.rank(), 0);
    for (Letter l : rel.letters()) row[std::abs(l) - 1] += l > 0 ? 1 : -1;
    a.push_back(std::move(row));
  }
  return a;
}

AbelianizationResult abelianization(const Presentation& p) {
  const SmithResult snf = smith_normal_form(exponent_matrix(p));
  AbelianizationResult out;
  out.free_rank = p.rank() - static_cast<std::int64_t>(snf.invariant_factors.size());
  for (std::int64_t f : snf.invariant_factors)
    if (f > 1) out.torsion.push_back(f);
  return out;
}

PresentationFormat parse_presentation_format(const std::string& name) {
  if (name == "plain") return PresentationFormat::Plain;
  if (name == "gap") return PresentationFormat::Gap;
  throw Error("unknown presentation format '" + name + "' (expected plain or gap)");
}

namespace {

std::string plain_text(const Presentation& p) {
  std::string out = "generators:";
  for (const std::string& name : p.generator_names) out += " " + name;
  out += "\n";
  for (const FreeWord& rel : p.relators) {
    bool first = true;
    for (Letter l : rel.letters()) {
      if (!first) out += " ";
      out += p.generator_names[std::abs(l) - 1];
      if (l < 0) out += "^-1";
      first = false;
    }
    out += "\n";
  }
  return out;
}

std::string gap_text(const Presentation& p) {
  std::string out = "F := FreeGroup(";
  for (int i = 0; i < p.rank(); ++i) {
    out += i ? ", " : " ";
    out += "\"" + p.generator_names[i] + "\"";
  }
  out += " );;\nrels := [";
  for (std::size_t k = 0; k < p.relators.size(); ++k) {
    out += k ? ",\n  " : "\n  ";
    const Letters& letters = p.relators[k].letters();
    std::size_t i = 0;
    bool first = true;
    while (i < letters.size()) {
      std::size_t j = i;
      while (j < letters.size() && letters[j] == letters[i]) ++j;
      const int exponent = static_cast<int>(j - i) * (letters[i] > 0 ? 1 : -1);
      if (!first) out += "*";
      out += "F." + std::to_string(std::abs(letters[i]));
      if (exponent != 1) out += "^" + std::to_string(exponent);
      first = false;
      i = j;
    }
  }
  out += p.relators.empty() ? " ];;\n" : "\n];;\n";
  out += "G := F / rels;;\n";
  return out;
}

} // namespace

std::string export_presentation(const Presentation& p, PresentationFormat format) {
  switch (format) {
    case PresentationFormat::Plain: return plain_text(p);
    case PresentationFormat::Gap: return gap_text(p);
  }
  throw Error("unknown presentation format");
}

} // namespace braidinv

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "braidinv/mat2.hpp"
#include "braidinv/perm.hpp"

namespace braidinv {

// Target group family of an element or representation: the symmetric group
// on `n` points or SL(2, Z/nZ).
struct Ambient {
  enum class Kind { Sym, Mat2 };
  Kind kind;
  std::uint32_t n; // degree or modulus

  bool operator==(const Ambient&) const = default;
  std::string to_string() const;
};

// Element of a finite group: a permutation or a 2x2 matrix over Z/mZ.
class GroupElement {
public:
  /*implicit*/ GroupElement(Permutation p) : value_(std::move(p)) {}
  /*implicit*/ GroupElement(Mat2Mod m) : value_(std::move(m)) {}

  GroupElement operator*(const GroupElement& other) const;
  GroupElement inverse() const;
  GroupElement identity_like() const;
  bool is_identity() const;

  Ambient ambient() const;
  bool same_ambient(const GroupElement& other) const { return ambient() == other.ambient(); }

  const Permutation* as_permutation() const { return std::get_if<Permutation>(&value_); }
  const Mat2Mod* as_matrix() const { return std::get_if<Mat2Mod>(&value_); }

  bool operator==(const GroupElement& other) const = default;
  bool operator<(const GroupElement& other) const;

  std::string to_string() const;
  std::size_t hash() const;

private:
  std::variant<Permutation, Mat2Mod> value_;
};

// u^-1 * g * u (the paper's g^u).
GroupElement conjugated(const GroupElement& g, const GroupElement& u);

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const { return g.hash(); }
};

// Finite set of group elements with O(1) membership, kept in insertion
// order. When produced by closure() it is a subgroup (identity first).
// The finished set is immutable; all queries are const and thread-safe.
class ElementSet {
public:
  ElementSet() = default;

  bool insert(const GroupElement& g); // false if already present
  bool contains(const GroupElement& g) const { return index_.count(g) > 0; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  void set_generators(std::vector<GroupElement> gens) { generators_ = std::move(gens); }

  // Deterministic small generating subset (greedy over insertion order).
  // Returns the recorded generator list when one was attached.
  std::vector<GroupElement> generating_set() const;

private:
  std::vector<GroupElement> elements_;
  std::unordered_map<GroupElement, std::uint32_t, GroupElementHash> index_;
  std::vector<GroupElement> generators_;
};

inline constexpr std::uint64_t kDefaultCap = 10'000'000;

// All products of the generators (the subgroup they generate, identity
// included). Throws ResourceCapError past `cap` elements.
ElementSet closure(const std::vector<GroupElement>& generators, std::uint64_t cap = kDefaultCap);

// Some g in G with g^-1 x g = y, or nothing when x and y are not conjugate
// in G. Scans in insertion order, so x == y yields the identity for sets
// built by closure(). Requires x, y in G.
std::optional<GroupElement> find_conjugator(const ElementSet& G, const GroupElement& x,
                                            const GroupElement& y);

// Subgroup {x in G : x h = h x}. Requires h in G.
ElementSet centralizer(const ElementSet& G, const GroupElement& h);

} // namespace braidinv

#include "braidinv/group.hpp"

#include "braidinv/errors.hpp"

namespace braidinv {

std::string Ambient::to_string() const {
  switch (kind) {
    case Kind::Sym: return "Sym(" + std::to_string(n) + ")";
    case Kind::Mat2: return "SL(2, Z/" + std::to_string(n) + "Z)";
  }
  return "?";
}

GroupElement GroupElement::operator*(const GroupElement& other) const {
  if (!same_ambient(other))
    throw Error("group element ambient mismatch: " + ambient().to_string() + " vs " +
                other.ambient().to_string());
  if (const Permutation* p = as_permutation()) return *p * *other.as_permutation();
  return *as_matrix() * *other.as_matrix();
}

GroupElement GroupElement::inverse() const {
  if (const Permutation* p = as_permutation()) return p->inverse();
  return as_matrix()->inverse();
}

GroupElement GroupElement::identity_like() const {
  if (const Permutation* p = as_permutation()) return Permutation::identity(p->degree());
  return Mat2Mod::identity(as_matrix()->modulus());
}

bool GroupElement::is_identity() const {
  if (const Permutation* p = as_permutation()) return p->is_identity();
  return as_matrix()->is_identity();
}

Ambient GroupElement::ambient() const {
  if (const Permutation* p = as_permutation())
    return {Ambient::Kind::Sym, static_cast<std::uint32_t>(p->degree())};
  return {Ambient::Kind::Mat2, as_matrix()->modulus()};
}

bool GroupElement::operator<(const GroupElement& other) const {
  if (value_.index() != other.value_.index()) return value_.index() < other.value_.index();
  if (const Permutation* p = as_permutation()) return *p < *other.as_permutation();
  return *as_matrix() < *other.as_matrix();
}

std::string GroupElement::to_string() const {
  if (const Permutation* p = as_permutation()) return p->to_string();
  return as_matrix()->to_string();
}

std::size_t GroupElement::hash() const {
  const std::size_t h = as_permutation() ? as_permutation()->hash() : as_matrix()->hash();
  return h ^ (value_.index() << 1);
}

GroupElement conjugated(const GroupElement& g, const GroupElement& u) {
  return u.inverse() * g * u;
}

bool ElementSet::insert(const GroupElement& g) {
  auto [it, fresh] = index_.emplace(g, static_cast<std::uint32_t>(elements_.size()));
  if (fresh) elements_.push_back(g);
  return fresh;
}

std::vector<GroupElement> ElementSet::generating_set() const {
  if (!generators_.empty()) return generators_;
  if (elements_.empty()) return {};
  std::vector<GroupElement> gens;
  ElementSet have;
  have.insert(elements_.front().identity_like());
  for (const GroupElement& g : elements_) {
    if (have.contains(g)) continue;
    gens.push_back(g);
    // re-close over the enlarged generator list
    have = ElementSet();
    have.insert(elements_.front().identity_like());
    for (std::size_t cursor = 0; cursor < have.elements().size(); ++cursor) {
      GroupElement x = have.elements()[cursor]; // copy: insert may reallocate
      for (const GroupElement& h : gens) have.insert(x * h);
    }
    if (have.size() == elements_.size()) break;
  }
  return gens;
}

ElementSet closure(const std::vector<GroupElement>& generators, std::uint64_t cap) {
  if (generators.empty()) throw Error("closure: generator list is empty");
  for (const GroupElement& g : generators)
    if (!g.same_ambient(generators.front()))
      throw Error("closure: generators have mixed ambients");

  ElementSet set;
  set.insert(generators.front().identity_like());
  for (std::size_t cursor = 0; cursor < set.elements().size(); ++cursor) {
    GroupElement x = set.elements()[cursor];
    for (const GroupElement& g : generators) {
      set.insert(x * g);
      if (set.size() > cap)
        throw ResourceCapError("closure exceeded cap of " + std::to_string(cap) + " elements");
    }
  }
  ElementSet out = std::move(set);
  out.set_generators(generators);
  return out;
}

std::optional<GroupElement> find_conjugator(const ElementSet& G, const GroupElement& x,
                                            const GroupElement& y) {
  if (!G.contains(x) || !G.contains(y)) throw Error("find_conjugator: element not in G");
  for (const GroupElement& g : G.elements())
    if (conjugated(x, g) == y) return g;
  return std::nullopt;
}

ElementSet centralizer(const ElementSet& G, const GroupElement& h) {
  if (!G.contains(h)) throw Error("centralizer: element not in G");
  ElementSet out;
  for (const GroupElement& x : G.elements())
    if (x * h == h * x) out.insert(x);
  return out;
}

} // namespace braidinv

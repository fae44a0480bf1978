#include "braidinv/tuples.hpp"

#include "braidinv/errors.hpp"

namespace braidinv {

LabeledTuple::LabeledTuple(std::vector<Entry> e) : entries(std::move(e)) {
  if (entries.empty()) throw Error("labeled tuple must be nonempty");
  for (const Entry& entry : entries)
    if (!entry.element.same_ambient(entries.front().element))
      throw Error("labeled tuple entries have mixed ambients");
}

LabeledTuple LabeledTuple::unlabeled(const std::vector<GroupElement>& elements) {
  std::vector<Entry> e;
  e.reserve(elements.size());
  for (const GroupElement& g : elements) e.push_back({0, g});
  return LabeledTuple(std::move(e));
}

LabeledTuple hurwitz_move(const LabeledTuple& t, int i) {
  if (i < 1 || i >= t.size()) throw Error("hurwitz_move: index out of range");
  LabeledTuple out = t;
  const GroupElement& gi = t.entries[i - 1].element;
  const GroupElement& gj = t.entries[i].element;
  out.entries[i - 1] = t.entries[i];
  out.entries[i] = {t.entries[i - 1].label, gj * gi * gj.inverse()};
  return out;
}

LabeledTuple hurwitz_unmove(const LabeledTuple& t, int i) {
  if (i < 1 || i >= t.size()) throw Error("hurwitz_unmove: index out of range");
  LabeledTuple out = t;
  const GroupElement& x = t.entries[i - 1].element;
  const GroupElement& y = t.entries[i].element;
  out.entries[i] = t.entries[i - 1];
  out.entries[i - 1] = {t.entries[i].label, x.inverse() * y * x};
  return out;
}

LabeledTuple q1(const LabeledTuple& t) { return hurwitz_move(t, 1); }

LabeledTuple q2(const LabeledTuple& t) {
  const int r = t.size();
  if (r < 2) throw Error("q2: tuple length must be >= 2");
  LabeledTuple out = t;
  const GroupElement& last = t.entries[r - 1].element;
  const GroupElement last_inv = last.inverse();
  out.entries[0] = t.entries[r - 1];
  for (int k = 1; k < r; ++k)
    out.entries[k] = {t.entries[k - 1].label, last * t.entries[k - 1].element * last_inv};
  return out;
}

GroupElement pseudo_coxeter(const LabeledTuple& t) {
  GroupElement c = t.entries.front().element.identity_like();
  for (auto it = t.entries.rbegin(); it != t.entries.rend(); ++it) c = c * it->element;
  return c;
}

LabeledTuple conjugate_tuple(const LabeledTuple& t, const GroupElement& u) {
  const GroupElement ui = u.inverse();
  LabeledTuple out = t;
  for (auto& entry : out.entries) entry.element = ui * entry.element * u;
  return out;
}

LabeledTuple apply_rep_tuple(const Representation& rep, const MonodromyFactorization& m) {
  if (m.strands != rep.strands())
    throw Error("apply_rep_tuple: factorization strands " + std::to_string(m.strands) +
                " != representation strands " + std::to_string(rep.strands()));
  std::vector<LabeledTuple::Entry> entries;
  entries.reserve(m.entries.size());
  for (const auto& e : m.entries) entries.push_back({e.label, apply_rep(rep, e.word)});
  return LabeledTuple(std::move(entries));
}

} // namespace braidinv

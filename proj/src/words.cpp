#include "braidinv/words.hpp"

#include <cstdlib>

#include "braidinv/errors.hpp"

namespace braidinv {

namespace {

void check_letters(const Letters& letters, int max_abs, const char* what) {
  for (Letter l : letters) {
    if (l == 0 || std::abs(l) > max_abs)
      throw Error(std::string(what) + " letter " + std::to_string(l) + " out of range 1.." +
                  std::to_string(max_abs));
  }
}

// Push a letter onto a reduced stack, cancelling with the top if inverse.
inline void push_reduced(Letters& stack, Letter l) {
  if (!stack.empty() && stack.back() == -l)
    stack.pop_back();
  else
    stack.push_back(l);
}

Letters reduce_letters(const Letters& in) {
  Letters out;
  out.reserve(in.size());
  for (Letter l : in) push_reduced(out, l);
  return out;
}

} // namespace

FreeWord::FreeWord(int rank, Letters letters) : rank_(rank), letters_(std::move(letters)) {
  if (rank_ < 1) throw Error("free word rank must be >= 1");
  check_letters(letters_, rank_, "free word");
}

BraidWord::BraidWord(int strands, Letters letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw Error("braid word strand count must be >= 1");
  check_letters(letters_, strands_ - 1, "braid word");
}

FreeWord free_reduce(const FreeWord& w) { return FreeWord(w.rank(), reduce_letters(w.letters())); }

FreeWord free_inverse(const FreeWord& w) {
  Letters out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(-*it);
  return FreeWord(w.rank(), std::move(out));
}

FreeWord free_concat(const FreeWord& u, const FreeWord& v) {
  if (u.rank() != v.rank()) throw Error("free word rank mismatch");
  Letters out = u.letters();
  out.insert(out.end(), v.letters().begin(), v.letters().end());
  return FreeWord(u.rank(), std::move(out));
}

FreeWord cyclic_reduce(const FreeWord& w) {
  Letters l = reduce_letters(w.letters());
  std::size_t lo = 0, hi = l.size();
  while (hi - lo >= 2 && l[lo] == -l[hi - 1]) {
    ++lo;
    --hi;
  }
  return FreeWord(w.rank(), Letters(l.begin() + lo, l.begin() + hi));
}

namespace {

// Image of the single free letter l under sigma_i (sign=+1) or its inverse
// (sign=-1), appended reduced onto out.
void act_on_letter(Letters& out, Letter l, int i, int sign) {
  const int j = std::abs(l);
  const bool pos = l > 0;
  Letter img[3];
  int len = 0;
  if (sign > 0) {
    if (j == i) {
      img[len++] = i + 1;
    } else if (j == i + 1) {
      img[len++] = i + 1;
      img[len++] = i;
      img[len++] = -(i + 1);
    } else {
      img[len++] = j;
    }
  } else {
    if (j == i) {
      img[len++] = -i;
      img[len++] = i + 1;
      img[len++] = i;
    } else if (j == i + 1) {
      img[len++] = i;
    } else {
      img[len++] = j;
    }
  }
  if (pos) {
    for (int k = 0; k < len; ++k) push_reduced(out, img[k]);
  } else {
    for (int k = len - 1; k >= 0; --k) push_reduced(out, -img[k]);
  }
}

} // namespace

FreeWord artin_act(const BraidWord& b, const FreeWord& w) {
  if (b.strands() != w.rank())
    throw Error("artin_act: braid strands " + std::to_string(b.strands()) +
                " != word rank " + std::to_string(w.rank()));
  Letters cur = reduce_letters(w.letters());
  for (Letter bl : b.letters()) {
    const int i = std::abs(bl);
    const int sign = bl > 0 ? +1 : -1;
    Letters next;
    next.reserve(cur.size() + cur.size() / 2 + 4);
    for (Letter l : cur) act_on_letter(next, l, i, sign);
    cur = std::move(next);
  }
  return FreeWord(w.rank(), std::move(cur));
}

bool braid_eq(const BraidWord& b1, const BraidWord& b2) {
  if (b1.strands() != b2.strands()) throw Error("braid_eq: strand count mismatch");
  const int n = b1.strands();
  for (int i = 1; i <= n; ++i) {
    FreeWord gen(n, {i});
    if (artin_act(b1, gen) != artin_act(b2, gen)) return false;
  }
  return true;
}

Permutation braid_permutation(const BraidWord& b) {
  const int n = b.strands();
  std::vector<std::int32_t> images(n);
  for (int i = 1; i <= n; ++i) {
    FreeWord img = cyclic_reduce(artin_act(b, FreeWord(n, {i})));
    // for a braid the image of a generator is a conjugate of a generator
    if (img.size() != 1 || img.letters()[0] < 0)
      throw Error("braid_permutation: image of generator is not conjugate to a generator");
    images[i - 1] = img.letters()[0];
  }
  return Permutation(std::move(images));
}

std::optional<Permutation> check_braid_candidate(const std::vector<FreeWord>& images) {
  if (images.empty()) throw Error("check_braid_candidate: empty image list");
  const int n = static_cast<int>(images.size());
  for (const FreeWord& w : images)
    if (w.rank() != n)
      throw Error("check_braid_candidate: expected " + std::to_string(n) +
                  " words of rank " + std::to_string(n));

  // condition 1: x_n ... x_1 is fixed
  Letters prod;
  for (int i = n; i >= 1; --i)
    for (Letter l : images[i - 1].letters()) {
      if (!prod.empty() && prod.back() == -l)
        prod.pop_back();
      else
        prod.push_back(l);
    }
  Letters gamma;
  for (int i = n; i >= 1; --i) gamma.push_back(i);
  if (prod != gamma) return std::nullopt;

  // condition 2: each image cyclically reduces to a single positive
  // generator and the assignment is a permutation
  std::vector<std::int32_t> sigma(n);
  std::vector<bool> used(n, false);
  for (int i = 1; i <= n; ++i) {
    FreeWord c = cyclic_reduce(images[i - 1]);
    if (c.size() != 1 || c.letters()[0] < 0) return std::nullopt;
    const int target = c.letters()[0];
    if (used[target - 1]) return std::nullopt;
    used[target - 1] = true;
    sigma[i - 1] = target;
  }
  return Permutation(std::move(sigma));
}

BraidWord braid_compose(const BraidWord& b1, const BraidWord& b2) {
  if (b1.strands() != b2.strands()) throw Error("braid_compose: strand count mismatch");
  Letters out = b1.letters();
  out.insert(out.end(), b2.letters().begin(), b2.letters().end());
  return BraidWord(b1.strands(), std::move(out));
}

BraidWord braid_inverse(const BraidWord& b) {
  Letters out;
  out.reserve(b.size());
  for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it) out.push_back(-*it);
  return BraidWord(b.strands(), std::move(out));
}

BraidWord braid_conjugate(const BraidWord& u, const BraidWord& v) {
  return braid_compose(braid_compose(u, v), braid_inverse(u));
}

} // namespace braidinv

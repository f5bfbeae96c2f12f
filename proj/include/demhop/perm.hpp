#pragma once

#include <algorithm>
#include <numeric>

#include "demhop/core.hpp"

namespace demhop {

/// A permutation of {1..n} in one-line notation w(1)..w(n).
class Perm {
 public:
  explicit Perm(Window win) : w_(std::move(win)) {
    std::vector<char> seen(w_.size() + 1, 0);
    for (int v : w_) {
      ensure(v >= 1 && v <= static_cast<int>(w_.size()), "window entry out of 1..n");
      ensure(!seen[v], "window entry repeated");
      seen[v] = 1;
    }
  }

  static Perm identity(int n) {
    ensure(n >= 1, "rank must be positive");
    Window w(n);
    std::iota(w.begin(), w.end(), 1);
    return Perm(unchecked_tag{}, std::move(w));
  }

  static Perm unchecked(Window w) { return Perm(unchecked_tag{}, std::move(w)); }

  int rank() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return w_[i - 1]; }
  const Window& window() const { return w_; }

  bool operator==(const Perm&) const = default;

 private:
  struct unchecked_tag {};
  Perm(unchecked_tag, Window w) : w_(std::move(w)) {}
  Window w_;
};

/// (uv)(i) = u(v(i)).
inline Perm compose(const Perm& u, const Perm& v) {
  ensure(u.rank() == v.rank(), "rank mismatch in composition");
  Window r(u.rank());
  for (int i = 1; i <= u.rank(); ++i) r[i - 1] = u(v(i));
  return Perm::unchecked(std::move(r));
}

inline Perm inverse(const Perm& w) {
  Window r(w.rank());
  for (int i = 1; i <= w.rank(); ++i) r[w(i) - 1] = i;
  return Perm::unchecked(std::move(r));
}

/// Coxeter length of a type A element, computed as the inversion count.
/// Contract-bound to agree with the Cayley-graph BFS distance.
inline int inversion_count(const Perm& w) {
  int inv = 0;
  for (int i = 1; i < w.rank(); ++i)
    for (int j = i + 1; j <= w.rank(); ++j)
      if (w(i) > w(j)) ++inv;
  return inv;
}

/// s_i acting on w. Left: exchanges the values i and i+1; right: exchanges
/// the entries at positions i and i+1.
inline Perm gen_action_a(const Perm& w, int i, Side side) {
  ensure(i >= 1 && i < w.rank(), "generator index out of 1..n-1");
  Window r = w.window();
  if (side == Side::Right) {
    std::swap(r[i - 1], r[i]);
  } else {
    for (int& v : r) {
      if (v == i) v = i + 1;
      else if (v == i + 1) v = i;
    }
  }
  return Perm::unchecked(std::move(r));
}

/// Evaluates the group element spelled by a type A word.
inline Perm eval_word_a(int n, const Word& word) {
  Perm w = Perm::identity(n);
  for (int letter : word) w = gen_action_a(w, letter, Side::Right);
  return w;
}

}  // namespace demhop

#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "demhop/core.hpp"
#include "demhop/perm.hpp"

namespace demhop {

/// A signed permutation window [w(1)..w(n)]: the absolute values form a
/// permutation of {1..n} and each entry carries a sign. As a permutation of
/// +-{1..n} it satisfies w(-i) = -w(i).
class SignedWindow {
 public:
  explicit SignedWindow(Window win) : w_(std::move(win)) {
    std::vector<char> seen(w_.size() + 1, 0);
    for (int v : w_) {
      int a = std::abs(v);
      ensure(v != 0, "signed window entry must be nonzero");
      ensure(a >= 1 && a <= static_cast<int>(w_.size()), "signed window entry out of +-1..n");
      ensure(!seen[a], "absolute value repeated in signed window");
      seen[a] = 1;
    }
  }

  static SignedWindow identity(int n) {
    ensure(n >= 1, "rank must be positive");
    Window w(n);
    std::iota(w.begin(), w.end(), 1);
    return unchecked(std::move(w));
  }

  static SignedWindow unchecked(Window w) { return SignedWindow(unchecked_tag{}, std::move(w)); }

  int rank() const { return static_cast<int>(w_.size()); }

  /// Value at i, defined for i in +-{1..n} via w(-i) = -w(i).
  int operator()(int i) const { return i > 0 ? w_[i - 1] : -w_[-i - 1]; }

  const Window& window() const { return w_; }

  int negative_entries() const {
    int c = 0;
    for (int v : w_) c += v < 0;
    return c;
  }
  bool is_even() const { return negative_entries() % 2 == 0; }

  bool operator==(const SignedWindow&) const = default;

 private:
  struct unchecked_tag {};
  SignedWindow(unchecked_tag, Window w) : w_(std::move(w)) {}
  Window w_;
};

/// A type D element: a signed window with an even number of negative
/// entries. Construction rejects odd parity; intermediate odd states live
/// in SignedWindow.
class EvenSignedWindow {
 public:
  explicit EvenSignedWindow(SignedWindow s) : s_(std::move(s)) {
    ensure(s_.is_even(), "window has an odd number of negative entries");
  }
  explicit EvenSignedWindow(Window w) : EvenSignedWindow(SignedWindow(std::move(w))) {}

  static EvenSignedWindow identity(int n) { return EvenSignedWindow(SignedWindow::identity(n)); }

  int rank() const { return s_.rank(); }
  int operator()(int i) const { return s_(i); }
  const Window& window() const { return s_.window(); }
  const SignedWindow& as_signed() const { return s_; }

  bool operator==(const EvenSignedWindow&) const = default;

 private:
  SignedWindow s_;
};

/// (uv)(i) = u(v(i)) with u(-a) = -u(a).
inline SignedWindow compose(const SignedWindow& u, const SignedWindow& v) {
  ensure(u.rank() == v.rank(), "rank mismatch in composition");
  Window r(u.rank());
  for (int i = 1; i <= u.rank(); ++i) r[i - 1] = u(v(i));
  return SignedWindow::unchecked(std::move(r));
}

inline EvenSignedWindow compose(const EvenSignedWindow& u, const EvenSignedWindow& v) {
  return EvenSignedWindow(compose(u.as_signed(), v.as_signed()));
}

inline SignedWindow inverse(const SignedWindow& w) {
  Window r(w.rank());
  for (int i = 1; i <= w.rank(); ++i) {
    int v = w(i);
    if (v > 0) r[v - 1] = i;
    else r[-v - 1] = -i;
  }
  return SignedWindow::unchecked(std::move(r));
}

inline EvenSignedWindow inverse(const EvenSignedWindow& w) {
  return EvenSignedWindow(inverse(w.as_signed()));
}

/// Entrywise application w(L), with w(-a) = -w(a).
inline HopList apply_to_list(const SignedWindow& w, const HopList& values) {
  HopList r;
  r.reserve(values.size());
  for (int v : values) r.push_back(w(v));
  return r;
}

namespace detail {

// Shared i < n window rule for types B and D.
inline Window gen_lt_n(const Window& win, int i, Side side) {
  Window r = win;
  if (side == Side::Right) {
    std::swap(r[i - 1], r[i]);
  } else {
    for (int& v : r) {
      if (v == i) v = i + 1;
      else if (v == i + 1) v = i;
      else if (v == -i) v = -(i + 1);
      else if (v == -(i + 1)) v = -i;
    }
  }
  return r;
}

}  // namespace detail

/// Type B generator action. s_n negates the carrier of value n (left) or
/// the entry at position n (right); this is the window shadow of the
/// transposition at the centre of the unfolding.
inline SignedWindow gen_action_b(const SignedWindow& w, int i, Side side) {
  const int n = w.rank();
  ensure(i >= 1 && i <= n, "generator index out of 1..n");
  if (i < n) return SignedWindow::unchecked(detail::gen_lt_n(w.window(), i, side));
  Window r = w.window();
  if (side == Side::Right) {
    r[n - 1] = -r[n - 1];
  } else {
    for (int& v : r)
      if (v == n || v == -n) v = -v;
  }
  return SignedWindow::unchecked(std::move(r));
}

/// Type D generator action on a plain signed window. s_n swaps the entries
/// n-1 and n and flips both signs (left), or swaps positions n-1 and n and
/// flips the signs there (right).
inline SignedWindow gen_action_d(const SignedWindow& w, int i, Side side) {
  const int n = w.rank();
  ensure(i >= 1 && i <= n, "generator index out of 1..n");
  ensure(n >= 2, "type D needs rank >= 2");
  if (i < n) return SignedWindow::unchecked(detail::gen_lt_n(w.window(), i, side));
  Window r = w.window();
  if (side == Side::Right) {
    std::swap(r[n - 2], r[n - 1]);
    r[n - 2] = -r[n - 2];
    r[n - 1] = -r[n - 1];
  } else {
    for (int& v : r) {
      if (v == n - 1) v = -n;
      else if (v == n) v = -(n - 1);
      else if (v == -(n - 1)) v = n;
      else if (v == -n) v = n - 1;
    }
  }
  return SignedWindow::unchecked(std::move(r));
}

inline EvenSignedWindow gen_action_d(const EvenSignedWindow& w, int i, Side side) {
  return EvenSignedWindow(gen_action_d(w.as_signed(), i, side));
}

inline SignedWindow eval_word_b(int n, const Word& word) {
  SignedWindow w = SignedWindow::identity(n);
  for (int letter : word) w = gen_action_b(w, letter, Side::Right);
  return w;
}

inline EvenSignedWindow eval_word_d(int n, const Word& word) {
  SignedWindow w = SignedWindow::identity(n);
  for (int letter : word) w = gen_action_d(w, letter, Side::Right);
  return EvenSignedWindow(std::move(w));
}

/// The length-2n window over +-{1..n} obtained by appending the
/// positionally reversed, sign-flipped copy. Positions are labeled
/// 1,..,n,-n,..,-1 left to right.
class Unfolding {
 public:
  explicit Unfolding(Window entries) : e_(std::move(entries)) {
    ensure(e_.size() % 2 == 0, "unfolding must have even length");
    const int n = rank();
    std::vector<char> seen(n + 1, 0);
    for (int v : e_) {
      ensure(v != 0 && std::abs(v) <= n, "unfolding entry out of +-1..n");
    }
    for (int k = 0; k < n; ++k) {
      ensure(e_[k] == -e_[2 * n - 1 - k], "malformed unfolding: mirror entries must have opposite signs");
      ensure(!seen[std::abs(e_[k])], "malformed unfolding: absolute value repeated");
      seen[std::abs(e_[k])] = 1;
    }
  }

  static Unfolding unchecked(Window e) { return Unfolding(unchecked_tag{}, std::move(e)); }

  int rank() const { return static_cast<int>(e_.size()) / 2; }
  const Window& entries() const { return e_; }

  /// Entry at position label p in +-{1..n}.
  int at_pos(int p) const { return p > 0 ? e_[p - 1] : e_[p + 2 * rank()]; }

  bool operator==(const Unfolding&) const = default;

 private:
  struct unchecked_tag {};
  Unfolding(unchecked_tag, Window e) : e_(std::move(e)) {}
  Window e_;
};

inline Unfolding unfold(const SignedWindow& w) {
  const int n = w.rank();
  Window e(2 * n);
  for (int k = 0; k < n; ++k) {
    e[k] = w.window()[k];
    e[2 * n - 1 - k] = -w.window()[k];
  }
  return Unfolding::unchecked(std::move(e));
}

inline Unfolding unfold(const EvenSignedWindow& w) { return unfold(w.as_signed()); }

/// First n entries of a valid unfolding; inverse of unfold.
inline SignedWindow fold(const Unfolding& p) {
  Window w(p.entries().begin(), p.entries().begin() + p.rank());
  return SignedWindow::unchecked(std::move(w));
}

/// Order-isomorphic relabeling of +-{1..n} to {1..2n}.
inline Perm normalize(const Unfolding& p) {
  const int n = p.rank();
  Window w(2 * n);
  for (int k = 0; k < 2 * n; ++k) w[k] = pm_key(p.entries()[k], n);
  return Perm::unchecked(std::move(w));
}

inline Unfolding denormalize(const Perm& q) {
  ensure(q.rank() % 2 == 0, "denormalize needs even rank");
  const int n = q.rank() / 2;
  Window e(2 * n);
  for (int k = 0; k < 2 * n; ++k) e[k] = pm_unkey(q.window()[k], n);
  return Unfolding(std::move(e));  // validated: catches anti-symmetry violations
}

/// Composition of unfoldings as permutations of +-{1..n}.
inline Unfolding compose(const Unfolding& u, const Unfolding& v) {
  ensure(u.rank() == v.rank(), "rank mismatch in composition");
  const int n = u.rank();
  Window e(2 * n);
  for (int k = 0; k < 2 * n; ++k) {
    int p = k < n ? k + 1 : k - 2 * n;
    e[k] = u.at_pos(v.at_pos(p));
  }
  return Unfolding::unchecked(std::move(e));
}

}  // namespace demhop

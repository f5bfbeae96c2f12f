#pragma once

#include "demhop/core.hpp"
#include "demhop/perm.hpp"
#include "demhop/signed_window.hpp"

namespace demhop {

inline int num_generators(Family f, int n) { return f == Family::A ? n - 1 : n; }

inline Window identity_window(int n) {
  Window w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  return w;
}

inline void validate_window(Family f, const Window& w) {
  switch (f) {
    case Family::A: (void)Perm(w); break;
    case Family::B: (void)SignedWindow(w); break;
    case Family::D: (void)EvenSignedWindow(w); break;
  }
}

inline Window gen_action(Family f, const Window& w, int i, Side side) {
  switch (f) {
    case Family::A: return gen_action_a(Perm::unchecked(w), i, side).window();
    case Family::B: return gen_action_b(SignedWindow::unchecked(w), i, side).window();
    default: return gen_action_d(SignedWindow::unchecked(w), i, side).window();
  }
}

inline Window compose_windows(Family f, const Window& u, const Window& v) {
  if (f == Family::A) return compose(Perm::unchecked(u), Perm::unchecked(v)).window();
  return compose(SignedWindow::unchecked(u), SignedWindow::unchecked(v)).window();
}

inline Window inverse_window(Family f, const Window& w) {
  if (f == Family::A) return inverse(Perm::unchecked(w)).window();
  return inverse(SignedWindow::unchecked(w)).window();
}

/// The group element spelled by a word, as a window of the given family.
inline Window eval_word(Family f, int n, const Word& word) {
  for (int letter : word)
    ensure(letter >= 1 && letter <= num_generators(f, n), "invalid letter for family/rank");
  Window w = identity_window(n);
  for (int letter : word) w = gen_action(f, w, letter, Side::Right);
  return w;
}

}  // namespace demhop

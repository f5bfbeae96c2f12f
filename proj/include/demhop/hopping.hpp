#pragma once

#include <cstdlib>

#include "demhop/cayley.hpp"
#include "demhop/signed_window.hpp"

namespace demhop {

/// One swap performed by a hopping operator: where t stood (1-based array
/// position, strictly increasing along a run), the partner it swapped with,
/// and the window (or unfolding) after the swap.
struct HopStep {
  int t_pos = 0;
  int partner = 0;
  Window after;
};

struct HopTrace {
  std::vector<HopStep> steps;
};

inline void validate_hoplist_a(const HopList& list, int n) {
  std::vector<char> seen(n + 1, 0);
  for (int v : list) {
    ensure(v >= 1 && v <= n, "hop list entry out of 1..n");
    ensure(!seen[v], "hop list entry repeated");
    seen[v] = 1;
  }
}

inline void validate_hoplist_pm(const HopList& list, int n) {
  std::vector<char> seen(2 * n + 1, 0);
  for (int v : list) {
    ensure(v != 0 && std::abs(v) <= n, "hop list entry out of +-1..n");
    ensure(!seen[v + n], "hop list entry repeated");
    seen[v + n] = 1;
  }
}

/// h_{t,L} on a permutation: repeatedly look right of t for values that lie
/// in L and exceed t, swap t with the one latest in L's order, and stop when
/// no such value remains.
inline Perm hop_a(const Perm& w, int t, const HopList& list, HopTrace* trace = nullptr) {
  const int n = w.rank();
  ensure(t >= 1 && t <= n, "hop value out of 1..n");
  validate_hoplist_a(list, n);

  std::vector<int> lrank(n + 1, -1);
  for (std::size_t k = 0; k < list.size(); ++k) lrank[list[k]] = static_cast<int>(k);

  Window win = w.window();
  int it = 0;
  while (win[it] != t) ++it;

  for (;;) {
    int best = -1, best_rank = -1;
    for (int k = it + 1; k < n; ++k) {
      int v = win[k];
      if (v > t && lrank[v] > best_rank) {
        best_rank = lrank[v];
        best = k;
      }
    }
    if (best < 0) break;
    const int q = win[best];
    std::swap(win[it], win[best]);
    it = best;
    if (trace) trace->steps.push_back({it + 1, q, win});
  }
  return Perm::unchecked(std::move(win));
}

/// Signed hopping operator: acts on the unfolding, comparing values in the
/// +-{1..n} order; each swap of t and q is mirrored by a swap of -t and -q
/// (a single central swap when q = -t). Parity of the window may change.
inline SignedWindow hop_signed(const SignedWindow& w, int t, const HopList& list,
                               HopTrace* trace = nullptr) {
  const int n = w.rank();
  ensure(t != 0 && std::abs(t) <= n, "hop value out of +-1..n");
  validate_hoplist_pm(list, n);

  std::vector<int> lrank(2 * n + 1, -1);
  for (std::size_t k = 0; k < list.size(); ++k) lrank[list[k] + n] = static_cast<int>(k);

  Window e = unfold(w).entries();
  const int m = 2 * n;
  int it = 0;
  while (e[it] != t) ++it;

  for (;;) {
    int best = -1, best_rank = -1;
    for (int k = it + 1; k < m; ++k) {
      int v = e[k];
      if (lrank[v + n] > best_rank && pm_less(t, v)) {
        best_rank = lrank[v + n];
        best = k;
      }
    }
    if (best < 0) break;
    const int q = e[best];
    std::swap(e[it], e[best]);
    if (q != -t) std::swap(e[m - 1 - it], e[m - 1 - best]);
    it = best;
    if (trace) trace->steps.push_back({it + 1, q, e});
  }
  return SignedWindow::unchecked(Window(e.begin(), e.begin() + n));
}

/// w up-arrow a in type A: entries strictly left of a, in window order,
/// each exceeding a.
inline HopList lift_a(const Perm& w, int a) {
  ensure(a >= 1 && a <= w.rank(), "lift value out of 1..n");
  HopList r;
  for (int v : w.window()) {
    if (v == a) break;
    if (v > a) r.push_back(v);
  }
  return r;
}

/// Type B lifting: entries of the unfolding strictly left of i lying in the
/// half-open interval (i,-i] of the +-{1..n} order.
inline HopList lift_b(const SignedWindow& w, int i) {
  ensure(i >= 1 && i <= w.rank(), "lift value out of 1..n");
  HopList r;
  const Unfolding u = unfold(w);
  for (int v : u.entries()) {
    if (v == i) break;
    if (pm_less(i, v) && !pm_less(-i, v)) r.push_back(v);
  }
  return r;
}

/// Type D lifting: as in type B but over the open interval (i,-i).
inline HopList lift_d(const EvenSignedWindow& w, int i) {
  ensure(i >= 1 && i <= w.rank(), "lift value out of 1..n");
  HopList r;
  const Unfolding u = unfold(w);
  for (int v : u.entries()) {
    if (v == i) break;
    if (pm_less(i, v) && pm_less(v, -i)) r.push_back(v);
  }
  return r;
}

/// L ~_i L' : the two lists hop identically on every element of D_n.
/// Exhaustive over the group, so the rank is capped.
inline bool hoplists_equivalent(int i, const HopList& a, const HopList& b, int n,
                                int max_rank = 5) {
  ensure(n <= max_rank, "rank too large for the exhaustive ~_i check");
  const GroupTable& t = cached_table(Family::D, n);
  for (const Window& win : t.elements) {
    SignedWindow w = SignedWindow::unchecked(win);
    if (!(hop_signed(w, i, a) == hop_signed(w, i, b))) return false;
  }
  return true;
}

}  // namespace demhop

#pragma once

#include "demhop/hopping.hpp"
#include "demhop/signed_window.hpp"

namespace demhop {

/// One factor Q_i of the type D decomposition w = Q_{n-1}...Q_1: a form tag
/// and indices. The four forms at level i <= n-2 are id, s_i..s_j,
/// s_i..s_{n-2} s_n s_{n-1}..s_j and s_i..s_{n-2} s_n; at level n-1 they
/// are id, s_{n-1}, s_n s_{n-1} and s_n.
struct QFactor {
  int n = 0;      // ambient rank
  int level = 0;  // i, 1 <= i <= n-1
  int form = 0;   // 0..3
  int j = 0;      // secondary index for forms 1 and 2; n-1 at level n-1

  friend bool operator==(const QFactor&, const QFactor&) = default;
};

inline void validate_qfactor(const QFactor& q) {
  ensure(q.n >= 2, "rank must be at least 2");
  ensure(q.level >= 1 && q.level <= q.n - 1, "level out of 1..n-1");
  ensure(q.form >= 0 && q.form <= 3, "form out of 0..3");
  if (q.form == 1 || q.form == 2) {
    if (q.level == q.n - 1)
      ensure(q.j == q.n - 1, "level n-1 factors carry no secondary index");
    else
      ensure(q.j >= q.level && q.j <= q.n - 1, "secondary index out of i..n-1");
  }
}

inline Word q_word(const QFactor& q) {
  validate_qfactor(q);
  const int n = q.n, i = q.level;
  Word w;
  switch (q.form) {
    case 0: break;
    case 1:
      for (int k = i; k <= q.j; ++k) w.push_back(k);
      break;
    case 2:
      for (int k = i; k <= n - 2; ++k) w.push_back(k);
      w.push_back(n);
      for (int k = n - 1; k >= q.j; --k) w.push_back(k);
      break;
    case 3:
      for (int k = i; k <= n - 2; ++k) w.push_back(k);
      w.push_back(n);
      break;
  }
  return w;
}

/// Right action of a factor on a window: a left cyclic shift of a position
/// range, followed by sign flips at two positions for forms 2 and 3.
inline SignedWindow apply_right(const SignedWindow& w, const QFactor& q) {
  validate_qfactor(q);
  ensure(w.rank() == q.n, "rank mismatch");
  const int n = q.n, i = q.level;
  Window r = w.window();
  auto rotate_left = [&r](int lo, int hi) {  // 1-based inclusive positions
    if (lo >= hi) return;
    int first = r[lo - 1];
    for (int p = lo; p < hi; ++p) r[p - 1] = r[p];
    r[hi - 1] = first;
  };
  switch (q.form) {
    case 0: break;
    case 1:
      rotate_left(i, q.j + 1);
      break;
    case 2:
      rotate_left(i, q.j);
      r[q.j - 1] = -r[q.j - 1];
      r[n - 1] = -r[n - 1];
      break;
    case 3:
      rotate_left(i, n);
      r[n - 2] = -r[n - 2];
      r[n - 1] = -r[n - 1];
      break;
  }
  return SignedWindow::unchecked(std::move(r));
}

/// The factor as a group element.
inline EvenSignedWindow realize_q(const QFactor& q) {
  validate_qfactor(q);
  return EvenSignedWindow(apply_right(SignedWindow::identity(q.n), q));
}

/// All candidate coset representatives at a level: 2(n-i)+2 of them for
/// i <= n-2, the four W_{{s_{n-1},s_n}} elements at level n-1.
inline std::vector<QFactor> q_candidates(int level, int n) {
  std::vector<QFactor> cs;
  cs.push_back({n, level, 0, 0});
  if (level == n - 1) {
    cs.push_back({n, level, 1, n - 1});
    cs.push_back({n, level, 2, n - 1});
    cs.push_back({n, level, 3, 0});
    return cs;
  }
  for (int j = level; j <= n - 1; ++j) cs.push_back({n, level, 1, j});
  for (int j = level; j <= n - 1; ++j) cs.push_back({n, level, 2, j});
  cs.push_back({n, level, 3, 0});
  return cs;
}

/// Factors Q_{n-1},...,Q_1, highest level first.
struct Decomposition {
  std::vector<QFactor> factors;

  const QFactor& at_level(int i) const {
    for (const QFactor& q : factors)
      if (q.level == i) return q;
    throw std::invalid_argument("no factor at this level");
  }
};

/// Peels minimal coset representatives off the right: at each level i the
/// unique candidate whose removal leaves a residual fixing value i with
/// positive sign. The level n-1 residual is matched against the four
/// elements of W_{{s_{n-1},s_n}}.
inline Decomposition decompose_d(const EvenSignedWindow& w) {
  const int n = w.rank();
  std::vector<QFactor> factors(n - 1, QFactor{});
  SignedWindow residual = w.as_signed();
  for (int i = 1; i <= n - 2; ++i) {
    bool found = false;
    for (const QFactor& q : q_candidates(i, n)) {
      SignedWindow stripped = compose(residual, inverse(realize_q(q).as_signed()));
      if (stripped(i) == i) {
        ensure(!found, "coset representative at this level is not unique");
        factors[i - 1] = q;
        residual = stripped;
        found = true;
      }
    }
    ensure(found, "no coset representative matched");
  }
  // Residual lies in W_{{s_{n-1},s_n}}; classify by its last two entries.
  const int a = residual(n - 1), b = residual(n);
  QFactor top{n, n - 1, 0, 0};
  if (a == n - 1 && b == n) top = {n, n - 1, 0, 0};
  else if (a == n && b == n - 1) top = {n, n - 1, 1, n - 1};
  else if (a == -(n - 1) && b == -n) top = {n, n - 1, 2, n - 1};
  else if (a == -n && b == -(n - 1)) top = {n, n - 1, 3, 0};
  else throw std::invalid_argument("residual is not in the rank-2 parabolic subgroup");
  factors[n - 2] = top;

  Decomposition d;
  d.factors.assign(factors.rbegin(), factors.rend());
  return d;
}

/// The hop list L_i attached to a factor. Form 0 gets the empty list, which
/// makes the matching hopping operator the identity.
inline HopList l_list(const QFactor& q) {
  validate_qfactor(q);
  const int n = q.n, i = q.level;
  HopList r;
  switch (q.form) {
    case 0: break;
    case 1:
      for (int k = i + 1; k <= q.j + 1; ++k) r.push_back(k);
      break;
    case 2:
      if (i == n - 1) {
        r = {n, -n};
      } else {
        for (int k = i + 1; k <= n; ++k) r.push_back(k);
        for (int k = n; k >= q.j + 1; --k) r.push_back(-k);
      }
      break;
    case 3:
      if (i == n - 1) {
        r = {-n};
      } else {
        for (int k = i + 1; k <= n - 1; ++k) r.push_back(k);
        r.push_back(-n);
      }
      break;
  }
  return r;
}

/// The transported list T_i with (Q_{n-1}..Q_{i+1})(L_i) = (Q_{n-1}..Q_i)(T_i):
/// entries of L_i pushed through the right action of Q_i.
inline HopList t_list(const QFactor& q) {
  validate_qfactor(q);
  ensure(q.form != 0, "form 0 has no transported list");
  ensure(q.level <= q.n - 2, "transported lists are defined below level n-1");
  const int n = q.n, i = q.level;
  HopList r;
  switch (q.form) {
    case 1:
      for (int k = i; k <= q.j; ++k) r.push_back(k);
      break;
    case 2:
      for (int k = i; k <= q.j - 1; ++k) r.push_back(k);
      for (int k = q.j + 1; k <= n - 1; ++k) r.push_back(k);
      r.push_back(-n);
      r.push_back(n);
      for (int k = n - 1; k >= q.j + 1; --k) r.push_back(-k);
      break;
    case 3:
      for (int k = i; k <= n - 1; ++k) r.push_back(k);
      break;
  }
  return r;
}

/// Q_i * w computed as h_{i,L_i}(Q_i w); agrees with the Demazure product.
inline EvenSignedWindow q_star(const QFactor& q, const EvenSignedWindow& w) {
  validate_qfactor(q);
  ensure(q.n == w.rank(), "rank mismatch");
  SignedWindow qw = compose(realize_q(q).as_signed(), w.as_signed());
  return EvenSignedWindow(hop_signed(qw, q.level, l_list(q)));
}

}  // namespace demhop

#pragma once

#include <unordered_set>

#include "demhop/cayley.hpp"
#include "demhop/hopping.hpp"
#include "demhop/perm.hpp"
#include "demhop/signed_window.hpp"

namespace demhop {

/// Uniform handle on an element of any of the three families.
struct Element {
  Family family;
  Window w;

  Element(Family f, Window win) : family(f), w(std::move(win)) { validate_window(family, this->w); }

  int rank() const { return static_cast<int>(w.size()); }
  friend bool operator==(const Element&, const Element&) = default;
};

/// Demazure product by table indices: fold a reduced word of u over v,
/// taking each step only when it increases the length.
inline int star_index(const GroupTable& t, int u, int v) {
  Word word = reduced_word_of(t, u);  // u = s_{word[0]} ... s_{word[k-1]}
  int cur = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int next = t.left_mul[*it - 1][cur];
    if (t.length[next] > t.length[cur]) cur = next;
  }
  return cur;
}

inline Window oracle_star_window(const GroupTable& t, const Window& u, const Window& v) {
  return t.elements[star_index(t, t.index_of(u), t.index_of(v))];
}

/// Ground-truth Demazure product from the Cayley-graph tables.
inline Element demazure_oracle(const Element& u, const Element& v) {
  ensure(u.family == v.family && u.rank() == v.rank(), "family/rank mismatch");
  const GroupTable& t = cached_table(u.family, u.rank());
  return Element(u.family, oracle_star_window(t, u.w, v.w));
}

inline Perm oracle_star(const Perm& u, const Perm& v) {
  const GroupTable& t = cached_table(Family::A, u.rank());
  return Perm::unchecked(oracle_star_window(t, u.window(), v.window()));
}

inline SignedWindow oracle_star_b(const SignedWindow& u, const SignedWindow& v) {
  const GroupTable& t = cached_table(Family::B, u.rank());
  return SignedWindow::unchecked(oracle_star_window(t, u.window(), v.window()));
}

inline EvenSignedWindow oracle_star_d(const EvenSignedWindow& u, const EvenSignedWindow& v) {
  const GroupTable& t = cached_table(Family::D, u.rank());
  return EvenSignedWindow(SignedWindow::unchecked(oracle_star_window(t, u.window(), v.window())));
}

/// One stage of a hopping-operator chain.
struct HopStage {
  int t = 0;
  HopList list;
  Window before;
  Window after;
  HopTrace swaps;
};

struct ProductChain {
  Window start;
  std::vector<HopStage> stages;
};

inline std::vector<HopList> hop_lists_a(const Perm& w) {
  std::vector<HopList> ls;
  for (int i = 1; i <= w.rank() - 1; ++i) ls.push_back(lift_a(w, i));
  return ls;
}

namespace detail_b {

// Minimal coset representatives of the type B maximal parabolic quotient at
// level i form a chain: id, the ascending words s_i..s_j, the peak
// s_i..s_n, and the descending words s_i..s_n s_{n-1}..s_j.
struct BFactor {
  int n = 0, level = 0;
  int kind = 0;  // 0 id, 1 ascending, 2 peak, 3 descending
  int j = 0;     // secondary index for kinds 1 and 3
};

inline Word b_factor_word(const BFactor& q) {
  Word w;
  switch (q.kind) {
    case 0: break;
    case 1:
      for (int k = q.level; k <= q.j; ++k) w.push_back(k);
      break;
    case 2:
      for (int k = q.level; k <= q.n; ++k) w.push_back(k);
      break;
    case 3:
      for (int k = q.level; k <= q.n; ++k) w.push_back(k);
      for (int k = q.n - 1; k >= q.j; --k) w.push_back(k);
      break;
  }
  return w;
}

/// Hop list satisfying Q * w = h_{i,L}(Q w) for the factor: positives
/// i+1..(top), then -i for the forms that cross s_n, then -n..-(j+1).
inline HopList b_factor_list(const BFactor& q) {
  HopList r;
  switch (q.kind) {
    case 0: break;
    case 1:
      for (int k = q.level + 1; k <= q.j + 1; ++k) r.push_back(k);
      break;
    case 2:
      for (int k = q.level + 1; k <= q.n; ++k) r.push_back(k);
      r.push_back(-q.level);
      break;
    case 3:
      for (int k = q.level + 1; k <= q.n; ++k) r.push_back(k);
      r.push_back(-q.level);
      for (int k = q.n; k >= q.j + 1; --k) r.push_back(-k);
      break;
  }
  return r;
}

inline std::vector<BFactor> b_candidates(int level, int n) {
  std::vector<BFactor> cs;
  cs.push_back({n, level, 0, 0});
  for (int j = level; j <= n - 1; ++j) cs.push_back({n, level, 1, j});
  cs.push_back({n, level, 2, 0});
  for (int j = n - 1; j >= level; --j) cs.push_back({n, level, 3, j});
  return cs;
}

}  // namespace detail_b

/// Stage lists for the type B product chain, derived from the maximal
/// parabolic decomposition w = T Q_{n-1}..Q_1 (T in {id, s_n}): the list of
/// Q_i transported by T Q_{n-1}..Q_{i+1}, plus [-n] for T = s_n. Equal as
/// sets to the (i,-i] liftings, with -i canonically placed.
inline std::vector<HopList> hop_lists_b(const SignedWindow& w) {
  const int n = w.rank();
  std::vector<detail_b::BFactor> factors(n);  // [0]=Q_1 .. [n-2]=Q_{n-1}, [n-1]=T
  SignedWindow residual = w;
  for (int i = 1; i <= n - 1; ++i) {
    bool found = false;
    for (const detail_b::BFactor& q : detail_b::b_candidates(i, n)) {
      SignedWindow qe = eval_word_b(n, detail_b::b_factor_word(q));
      SignedWindow stripped = compose(residual, inverse(qe));
      if (stripped(i) == i) {
        ensure(!found, "type B coset representative is not unique");
        factors[i - 1] = q;
        residual = stripped;
        found = true;
      }
    }
    ensure(found, "no type B coset representative matched");
  }
  const bool tail_sn = residual(n) == -n;
  ensure(tail_sn || residual(n) == n, "type B residual is not in the rank-1 tail");

  std::vector<HopList> lists(n);
  lists[n - 1] = tail_sn ? HopList{-n} : HopList{};
  SignedWindow transport = tail_sn ? eval_word_b(n, {n}) : SignedWindow::identity(n);
  for (int i = n - 1; i >= 1; --i) {
    lists[i - 1] = apply_to_list(transport, detail_b::b_factor_list(factors[i - 1]));
    if (i > 1)
      transport = compose(transport, eval_word_b(n, detail_b::b_factor_word(factors[i - 1])));
  }
  return lists;
}

inline std::vector<HopList> hop_lists_d(const EvenSignedWindow& w) {
  std::vector<HopList> ls;
  for (int i = 1; i <= w.rank() - 1; ++i) ls.push_back(lift_d(w, i));
  return ls;
}

/// w * v = h_{n-1,w^..n-1} ... h_{1,w^..1}(wv) for permutations.
inline Perm demazure_hop_a(const Perm& w, const Perm& v, ProductChain* chain = nullptr) {
  Perm cur = compose(w, v);
  if (chain) chain->start = cur.window();
  int i = 1;
  for (const HopList& list : hop_lists_a(w)) {
    HopStage stage;
    stage.t = i;
    stage.list = list;
    stage.before = cur.window();
    cur = hop_a(cur, i, list, chain ? &stage.swaps : nullptr);
    if (chain) {
      stage.after = cur.window();
      chain->stages.push_back(std::move(stage));
    }
    ++i;
  }
  return cur;
}

/// Type B product via hopping; the operators run for i = 1..n.
inline SignedWindow demazure_hop_b(const SignedWindow& w, const SignedWindow& v,
                                   ProductChain* chain = nullptr) {
  SignedWindow cur = compose(w, v);
  if (chain) chain->start = cur.window();
  int i = 1;
  for (const HopList& list : hop_lists_b(w)) {
    HopStage stage;
    stage.t = i;
    stage.list = list;
    stage.before = cur.window();
    cur = hop_signed(cur, i, list, chain ? &stage.swaps : nullptr);
    if (chain) {
      stage.after = cur.window();
      chain->stages.push_back(std::move(stage));
    }
    ++i;
  }
  return cur;
}

/// Type D product via hopping: lists are lifted from the left factor w and
/// applied to wv for i = 1..n-1. Intermediate windows may have odd parity;
/// the result is always even.
inline EvenSignedWindow demazure_hop_d(const EvenSignedWindow& w, const EvenSignedWindow& v,
                                       ProductChain* chain = nullptr) {
  SignedWindow cur = compose(w.as_signed(), v.as_signed());
  if (chain) chain->start = cur.window();
  int i = 1;
  for (const HopList& list : hop_lists_d(w)) {
    HopStage stage;
    stage.t = i;
    stage.list = list;
    stage.before = cur.window();
    cur = hop_signed(cur, i, list, chain ? &stage.swaps : nullptr);
    if (chain) {
      stage.after = cur.window();
      chain->stages.push_back(std::move(stage));
    }
    ++i;
  }
  return EvenSignedWindow(std::move(cur));
}

/// Type B product through the unfolding: star the normalized unfoldings in
/// S_2n, then denormalize and fold back.
inline SignedWindow demazure_unfolded_b(const SignedWindow& w, const SignedWindow& v) {
  ensure(w.rank() == v.rank(), "rank mismatch");
  Perm uw = normalize(unfold(w));
  Perm uv = normalize(unfold(v));
  Perm star = demazure_hop_a(uw, uv);
  return fold(denormalize(star));
}

/// The fold-unfold route applied to a type D pair; for even signed windows
/// this may leave the group, which is the point of the negative control.
struct UnfoldRouteReport {
  Perm s2n_star;            // normalized S_2n Demazure product of the unfoldings
  SignedWindow folded;      // its folding
  bool folded_even = false;
  EvenSignedWindow true_product;
  bool routes_agree = false;
};

inline UnfoldRouteReport unfold_star_fold_d(const EvenSignedWindow& w, const EvenSignedWindow& v) {
  Perm star = demazure_hop_a(normalize(unfold(w)), normalize(unfold(v)));
  SignedWindow folded = fold(denormalize(star));
  EvenSignedWindow truth = demazure_hop_d(w, v);
  return {star, folded, folded.is_even(), truth, folded == truth.as_signed()};
}

using WindowSet = std::unordered_set<Window, WindowHash>;

/// Bruhat lower interval [id, u] as the set of elements spelled by all
/// subsequences of one reduced word of u.
inline WindowSet lower_interval(const GroupTable& t, const Window& u, int max_len = 14) {
  const int len = length_of(t, u);
  ensure(len <= max_len, "element too long for subsequence enumeration");
  Word word = reduced_word_of(t, u);
  WindowSet set;
  set.reserve(std::size_t{1} << len);
  // Walk subsets with indices; evaluate via the left-multiplication table.
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << len); ++mask) {
    int cur = 0;  // identity
    for (int k = len - 1; k >= 0; --k)
      if (mask >> k & 1) cur = t.left_mul[word[k] - 1][cur];
    set.insert(t.elements[cur]);
  }
  return set;
}

/// [id, w*v] = {ab : a in [id,w], b in [id,v]}.
inline bool interval_product_check(const GroupTable& t, const Window& w, const Window& v,
                                   int max_len = 14) {
  Window star = oracle_star_window(t, w, v);
  WindowSet left = lower_interval(t, star, max_len);
  WindowSet right;
  right.reserve(left.size());
  for (const Window& a : lower_interval(t, w, max_len))
    for (const Window& b : lower_interval(t, v, max_len))
      right.insert(compose_windows(t.family, a, b));
  return left == right;
}

}  // namespace demhop

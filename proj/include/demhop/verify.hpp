#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <sstream>

#include "demhop/io.hpp"

namespace demhop {

struct SuiteResult {
  std::string name;
  std::string domain;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::string counterexample;  // first failure, fully expanded
  bool ok() const { return failed == 0; }

  std::string summary() const {
    std::ostringstream os;
    os << name << " (" << domain << "): " << (checked - failed) << "/" << checked << " pairs OK";
    return os.str();
  }
};

struct SuiteOptions {
  Family family = Family::D;
  int rank = 4;
  int samples = 50;
  std::uint64_t seed = 12345;
};

namespace detail {

inline void record_failure(SuiteResult& r, const std::string& text) {
  ++r.failed;
  if (r.counterexample.empty()) r.counterexample = text;
}

inline int star_from_word(const GroupTable& t, const Word& word, int v) {
  int cur = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int next = t.left_mul[*it - 1][cur];
    if (t.length[next] > t.length[cur]) cur = next;
  }
  return cur;
}

inline HopList random_hoplist(std::mt19937_64& rng, int n, const std::vector<int>& excluded) {
  std::vector<int> pool;
  for (int v = 1; v <= n; ++v) {
    if (std::find(excluded.begin(), excluded.end(), v) == excluded.end()) pool.push_back(v);
    if (std::find(excluded.begin(), excluded.end(), -v) == excluded.end()) pool.push_back(-v);
  }
  std::shuffle(pool.begin(), pool.end(), rng);
  std::size_t len = rng() % (pool.size() + 1);
  pool.resize(len);
  return pool;
}

inline SignedWindow gen_elem_d(int n, int i) { return eval_word_d(n, {i}).as_signed(); }

}  // namespace detail

/// Theorem sweep: the family's hopping formula against the Cayley oracle on
/// every ordered pair. For type D also checks that every stage stays even.
inline SuiteResult verify_main_theorem(const SuiteOptions& opt) {
  SuiteResult r;
  r.name = "main-theorem";
  r.domain = std::string(family_name(opt.family)) + ", n=" + std::to_string(opt.rank);
  const GroupTable& t = cached_table(opt.family, opt.rank);
  const int order = t.order();

  for (int ui = 0; ui < order; ++ui) {
    const Window& uw = t.elements[ui];
    Word uword = reduced_word_of(t, ui);
    std::vector<HopList> lists;
    switch (opt.family) {
      case Family::A: lists = hop_lists_a(Perm::unchecked(uw)); break;
      case Family::B: lists = hop_lists_b(SignedWindow::unchecked(uw)); break;
      case Family::D: lists = hop_lists_d(EvenSignedWindow(SignedWindow::unchecked(uw))); break;
    }
    for (int vi = 0; vi < order; ++vi) {
      ++r.checked;
      const Window& vw = t.elements[vi];
      Window expect = t.elements[detail::star_from_word(t, uword, vi)];
      Window got;
      bool parity_ok = true;
      if (opt.family == Family::A) {
        Perm cur = compose(Perm::unchecked(uw), Perm::unchecked(vw));
        int i = 1;
        for (const HopList& list : lists) cur = hop_a(cur, i++, list);
        got = cur.window();
      } else {
        SignedWindow cur = compose(SignedWindow::unchecked(uw), SignedWindow::unchecked(vw));
        int i = 1;
        for (const HopList& list : lists) {
          cur = hop_signed(cur, i++, list);
          if (opt.family == Family::D && !cur.is_even()) parity_ok = false;
        }
        got = cur.window();
      }
      if (got != expect || !parity_ok) {
        std::ostringstream os;
        os << "w=" << format_window(uw) << " v=" << format_window(vw)
           << " hopping=" << format_window(got) << " oracle=" << format_window(expect);
        if (!parity_ok) os << " (odd-parity stage)";
        detail::record_failure(r, os.str());
      }
    }
  }
  return r;
}

/// h_{i,[L,j,-j,L']} = h_{i,[L,-j,j,L']} over all of D_n, all i < j <= n,
/// randomized list contexts.
inline SuiteResult verify_hopneg(const SuiteOptions& opt) {
  SuiteResult r;
  r.name = "hopneg";
  const int n = opt.rank;
  r.domain = "d, n=" + std::to_string(n);
  const GroupTable& t = cached_table(Family::D, n);
  std::mt19937_64 rng(opt.seed);

  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int trial = 0; trial < opt.samples; ++trial) {
        HopList ctx = detail::random_hoplist(rng, n, {j, -j});
        std::size_t cut = ctx.empty() ? 0 : rng() % (ctx.size() + 1);
        HopList a(ctx.begin(), ctx.begin() + cut), b(ctx.begin() + cut, ctx.end());
        HopList l1 = a, l2 = a;
        l1.push_back(j);
        l1.push_back(-j);
        l2.push_back(-j);
        l2.push_back(j);
        l1.insert(l1.end(), b.begin(), b.end());
        l2.insert(l2.end(), b.begin(), b.end());
        for (const Window& win : t.elements) {
          ++r.checked;
          SignedWindow w = SignedWindow::unchecked(win);
          SignedWindow x = hop_signed(w, i, l1), y = hop_signed(w, i, l2);
          if (!(x == y)) {
            detail::record_failure(r, "w=" + format_window(win) + " i=" + std::to_string(i) +
                                          " L1=" + format_window(l1) + " -> " + format_window(x.window()) +
                                          " L2=" + format_window(l2) + " -> " + format_window(y.window()));
          }
        }
      }
    }
  }
  return r;
}

/// s_j h_{i,L}(s_j w) = h_{i,s_j(L)}(w) for i <= n-2, j > i.
inline SuiteResult verify_hopirrele(const SuiteOptions& opt) {
  SuiteResult r;
  r.name = "hopirrele";
  const int n = opt.rank;
  r.domain = "d, n=" + std::to_string(n);
  const GroupTable& t = cached_table(Family::D, n);
  std::mt19937_64 rng(opt.seed);

  for (int i = 1; i <= n - 2; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      SignedWindow sj = detail::gen_elem_d(n, j);
      for (int trial = 0; trial < opt.samples; ++trial) {
        HopList list = detail::random_hoplist(rng, n, {});
        HopList mapped = apply_to_list(sj, list);
        for (const Window& win : t.elements) {
          ++r.checked;
          SignedWindow w = SignedWindow::unchecked(win);
          SignedWindow lhs = compose(sj, hop_signed(compose(sj, w), i, list));
          SignedWindow rhs = hop_signed(w, i, mapped);
          if (!(lhs == rhs)) {
            detail::record_failure(r, "w=" + format_window(win) + " i=" + std::to_string(i) +
                                          " j=" + std::to_string(j) + " L=" + format_window(list) +
                                          " lhs=" + format_window(lhs.window()) +
                                          " rhs=" + format_window(rhs.window()));
          }
        }
      }
    }
  }
  return r;
}

/// Both transfer claims: s_i h_{i,L}(s_i w) = h_{i+1,s_i(L)}(w) for lists
/// avoiding i and i+1, and s_n h_{-(n-1),L}(s_n w) = h_{n,L}(w) for lists
/// avoiding +-(n-1) and +-n.
inline SuiteResult verify_hoptrans(const SuiteOptions& opt) {
  SuiteResult r;
  r.name = "hoptrans";
  const int n = opt.rank;
  r.domain = "d, n=" + std::to_string(n);
  const GroupTable& t = cached_table(Family::D, n);
  std::mt19937_64 rng(opt.seed);

  for (int i = 1; i <= n - 1; ++i) {
    SignedWindow si = detail::gen_elem_d(n, i);
    for (int trial = 0; trial < opt.samples; ++trial) {
      HopList list = detail::random_hoplist(rng, n, {i, i + 1});
      HopList mapped = apply_to_list(si, list);
      for (const Window& win : t.elements) {
        ++r.checked;
        SignedWindow w = SignedWindow::unchecked(win);
        SignedWindow lhs = compose(si, hop_signed(compose(si, w), i, list));
        SignedWindow rhs = hop_signed(w, i + 1, mapped);
        if (!(lhs == rhs)) {
          detail::record_failure(r, "claim1 w=" + format_window(win) + " i=" + std::to_string(i) +
                                        " L=" + format_window(list) + " lhs=" + format_window(lhs.window()) +
                                        " rhs=" + format_window(rhs.window()));
        }
      }
    }
  }

  SignedWindow sn = detail::gen_elem_d(n, n);
  for (int trial = 0; trial < opt.samples; ++trial) {
    HopList list = detail::random_hoplist(rng, n, {n - 1, -(n - 1), n, -n});
    for (const Window& win : t.elements) {
      ++r.checked;
      SignedWindow w = SignedWindow::unchecked(win);
      SignedWindow lhs = compose(sn, hop_signed(compose(sn, w), -(n - 1), list));
      SignedWindow rhs = hop_signed(w, n, list);
      if (!(lhs == rhs)) {
        detail::record_failure(r, "claim2 w=" + format_window(win) + " L=" + format_window(list) +
                                      " lhs=" + format_window(lhs.window()) +
                                      " rhs=" + format_window(rhs.window()));
      }
    }
  }
  return r;
}

/// s_i * w = h_{i,[i+1]}(s_i w) and s_n * w = h_{n-1,[-n]}(s_n w), with the
/// eight relative orders of +-(n-1),+-n all represented.
inline SuiteResult verify_singletrans(const SuiteOptions& opt) {
  SuiteResult r;
  r.name = "singletrans";
  const int n = opt.rank;
  r.domain = "d, n=" + std::to_string(n);
  const GroupTable& t = cached_table(Family::D, n);

  std::map<std::array<int, 4>, std::array<int, 4>> pattern_map;
  auto pattern_of = [&](const SignedWindow& w) {
    std::array<int, 4> pat{};
    int k = 0;
    const Unfolding u = unfold(w);
    for (int v : u.entries())
      if (std::abs(v) >= n - 1) pat[k++] = v;
    return pat;
  };

  for (const Window& win : t.elements) {
    SignedWindow w = SignedWindow::unchecked(win);
    for (int i = 1; i <= n - 1; ++i) {
      ++r.checked;
      Window expect = t.elements[star_index(t, t.index_of(detail::gen_elem_d(n, i).window()),
                                            t.index_of(win))];
      SignedWindow got = hop_signed(compose(detail::gen_elem_d(n, i), w), i, {i + 1});
      if (got.window() != expect) {
        detail::record_failure(r, "eq1 w=" + format_window(win) + " i=" + std::to_string(i) +
                                      " hop=" + format_window(got.window()) +
                                      " star=" + format_window(expect));
      }
    }
    {
      ++r.checked;
      Window expect = t.elements[star_index(t, t.index_of(detail::gen_elem_d(n, n).window()),
                                            t.index_of(win))];
      SignedWindow got = hop_signed(compose(detail::gen_elem_d(n, n), w), n - 1, {-n});
      if (got.window() != expect) {
        detail::record_failure(r, "eq2 w=" + format_window(win) + " hop=" + format_window(got.window()) +
                                      " star=" + format_window(expect));
      } else {
        auto in_pat = pattern_of(w);
        auto out_pat = pattern_of(SignedWindow::unchecked(expect));
        auto [it, inserted] = pattern_map.emplace(in_pat, out_pat);
        if (!inserted && it->second != out_pat)
          detail::record_failure(r, "eq2 pattern not a function of the +-(n-1),+-n order for w=" +
                                        format_window(win));
      }
    }
  }
  if (pattern_map.size() != 8) {
    detail::record_failure(r, "expected 8 relative-order patterns, saw " +
                                  std::to_string(pattern_map.size()));
  }
  return r;
}

/// (s_i..s_j) * h_{j+1,L}(w) = h_{i,[i+1..j+1,(s_i..s_j)(L)]}((s_i..s_j)w),
/// plus the s_{n-1} s_n s_{n-2}..s_j chain identity.
inline SuiteResult verify_multtrans(const SuiteOptions& opt) {
  SuiteResult r;
  r.name = "multtrans";
  const int n = opt.rank;
  r.domain = "d, n=" + std::to_string(n);
  const GroupTable& t = cached_table(Family::D, n);
  std::mt19937_64 rng(opt.seed);

  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i; j <= n - 1; ++j) {
      Word eword;
      for (int k = i; k <= j; ++k) eword.push_back(k);
      SignedWindow e = eval_word_d(n, eword).as_signed();
      const int e_idx = t.index_of(e.window());
      for (int trial = 0; trial < opt.samples; ++trial) {
        // -(j+1) is kept out of L so the inner hop stays inside D_n.
        std::vector<int> excluded{-(j + 1)};
        for (int k = i; k <= j + 1; ++k) excluded.push_back(k);
        HopList list = detail::random_hoplist(rng, n, excluded);
        HopList full;
        for (int k = i + 1; k <= j + 1; ++k) full.push_back(k);
        HopList mapped = apply_to_list(e, list);
        full.insert(full.end(), mapped.begin(), mapped.end());
        for (const Window& win : t.elements) {
          ++r.checked;
          SignedWindow w = SignedWindow::unchecked(win);
          SignedWindow inner = hop_signed(w, j + 1, list);
          Window lhs = t.elements[star_index(t, e_idx, t.index_of(inner.window()))];
          SignedWindow rhs = hop_signed(compose(e, w), i, full);
          if (rhs.window() != lhs) {
            detail::record_failure(r, "w=" + format_window(win) + " i=" + std::to_string(i) +
                                          " j=" + std::to_string(j) + " L=" + format_window(list) +
                                          " star=" + format_window(lhs) +
                                          " hop=" + format_window(rhs.window()));
          }
        }
      }
    }
  }

  // s_{n-1} s_n s_{n-2} ... s_j * w = h_{n-1,[n,-n,-(n-2),..,-j]}(...w).
  for (int j = 1; j <= n - 2; ++j) {
    Word gword{n - 1, n};
    for (int k = n - 2; k >= j; --k) gword.push_back(k);
    SignedWindow g = eval_word_d(n, gword).as_signed();
    const int g_idx = t.index_of(g.window());
    HopList list{n, -n};
    for (int k = n - 2; k >= j; --k) list.push_back(-k);
    for (const Window& win : t.elements) {
      ++r.checked;
      SignedWindow w = SignedWindow::unchecked(win);
      Window expect = t.elements[star_index(t, g_idx, t.index_of(win))];
      SignedWindow got = hop_signed(compose(g, w), n - 1, list);
      if (got.window() != expect) {
        detail::record_failure(r, "chain j=" + std::to_string(j) + " w=" + format_window(win) +
                                      " hop=" + format_window(got.window()) +
                                      " star=" + format_window(expect));
      }
    }
  }
  return r;
}

/// Q_i * w = h_{i,L_i}(Q_i w) for every candidate factor at every level.
inline SuiteResult verify_hoppingtransfer(const SuiteOptions& opt) {
  SuiteResult r;
  r.name = "hoppingtransfer";
  const int n = opt.rank;
  r.domain = "d, n=" + std::to_string(n);
  const GroupTable& t = cached_table(Family::D, n);

  for (int level = 1; level <= n - 1; ++level) {
    for (const QFactor& q : q_candidates(level, n)) {
      const int q_idx = t.index_of(realize_q(q).window());
      for (const Window& win : t.elements) {
        ++r.checked;
        Window expect = t.elements[star_index(t, q_idx, t.index_of(win))];
        EvenSignedWindow got = q_star(q, EvenSignedWindow(SignedWindow::unchecked(win)));
        if (got.window() != expect) {
          detail::record_failure(r, "level=" + std::to_string(level) + " form=" + std::to_string(q.form) +
                                        " j=" + std::to_string(q.j) + " w=" + format_window(win) +
                                        " hop=" + format_window(got.window()) +
                                        " star=" + format_window(expect));
        }
      }
    }
  }
  return r;
}

/// (Q_{n-1}..Q_{k+1}) lift_i  ~_i  (Q_{n-1}..Q_k) lift_i for k < i <= n-1.
inline SuiteResult verify_addDk(const SuiteOptions& opt) {
  SuiteResult r;
  r.name = "addDk";
  const int n = opt.rank;
  r.domain = "d, n=" + std::to_string(n);
  const GroupTable& t = cached_table(Family::D, n);

  for (const Window& win : t.elements) {
    EvenSignedWindow w(SignedWindow::unchecked(win));
    Decomposition d = decompose_d(w);
    // Partial products Q_{n-1}..Q_k, built from the top level down.
    std::vector<EvenSignedWindow> partial(n, EvenSignedWindow::identity(n));
    for (int k = n - 1; k >= 1; --k)
      partial[k - 1] = compose(partial[k], realize_q(d.at_level(k)));
    for (int k = 1; k <= n - 2; ++k) {
      for (int i = k + 1; i <= n - 1; ++i) {
        ++r.checked;
        HopList a = lift_d(partial[k], i);      // Q_{n-1}..Q_{k+1}
        HopList b = lift_d(partial[k - 1], i);  // Q_{n-1}..Q_k
        if (!hoplists_equivalent(i, a, b, n)) {
          detail::record_failure(r, "w=" + format_window(win) + " k=" + std::to_string(k) +
                                        " i=" + std::to_string(i) + " lists " + format_window(a) +
                                        " vs " + format_window(b));
        }
      }
    }
  }
  return r;
}

/// (Q_{n-1}..Q_{i+1}) L_i ~_i w lift_i for i <= n-2, and
/// L_{n-1} ~_{n-1} w lift_{n-1}.
inline SuiteResult verify_allformhop(const SuiteOptions& opt) {
  SuiteResult r;
  r.name = "allformhop";
  const int n = opt.rank;
  r.domain = "d, n=" + std::to_string(n);
  const GroupTable& t = cached_table(Family::D, n);

  for (const Window& win : t.elements) {
    EvenSignedWindow w(SignedWindow::unchecked(win));
    Decomposition d = decompose_d(w);
    std::vector<EvenSignedWindow> partial(n, EvenSignedWindow::identity(n));
    for (int k = n - 1; k >= 1; --k)
      partial[k - 1] = compose(partial[k], realize_q(d.at_level(k)));
    for (int i = 1; i <= n - 1; ++i) {
      ++r.checked;
      HopList lhs = i <= n - 2 ? apply_to_list(partial[i].as_signed(), l_list(d.at_level(i)))
                               : l_list(d.at_level(n - 1));
      HopList rhs = lift_d(w, i);
      if (!hoplists_equivalent(i, lhs, rhs, n)) {
        detail::record_failure(r, "w=" + format_window(win) + " i=" + std::to_string(i) + " " +
                                      format_window(lhs) + " vs lift " + format_window(rhs));
      }
    }
  }
  return r;
}

/// Interval product [id,w*v] = [id,w][id,v]; exhaustive when samples == 0.
inline SuiteResult verify_interval(const SuiteOptions& opt) {
  SuiteResult r;
  r.name = "interval";
  r.domain = std::string(family_name(opt.family)) + ", n=" + std::to_string(opt.rank) +
             (opt.samples ? ", sampled" : ", exhaustive");
  const GroupTable& t = cached_table(opt.family, opt.rank);
  const int order = t.order();

  auto check_pair = [&](int ui, int vi) {
    ++r.checked;
    if (!interval_product_check(t, t.elements[ui], t.elements[vi])) {
      detail::record_failure(r, "w=" + format_window(t.elements[ui]) +
                                    " v=" + format_window(t.elements[vi]));
    }
  };

  if (opt.samples == 0) {
    for (int ui = 0; ui < order; ++ui)
      for (int vi = 0; vi < order; ++vi) check_pair(ui, vi);
  } else {
    std::mt19937_64 rng(opt.seed);
    for (int trial = 0; trial < opt.samples; ++trial)
      check_pair(static_cast<int>(rng() % order), static_cast<int>(rng() % order));
  }
  return r;
}

/// Type B fold-unfold route against the oracle on every pair.
inline SuiteResult verify_fold_unfold_b(const SuiteOptions& opt) {
  SuiteResult r;
  r.name = "fold-unfold-B";
  const int n = opt.rank;
  r.domain = "b, n=" + std::to_string(n);
  const GroupTable& t = cached_table(Family::B, n);
  const int order = t.order();

  for (int ui = 0; ui < order; ++ui) {
    SignedWindow u = SignedWindow::unchecked(t.elements[ui]);
    Word uword = reduced_word_of(t, ui);
    for (int vi = 0; vi < order; ++vi) {
      ++r.checked;
      SignedWindow v = SignedWindow::unchecked(t.elements[vi]);
      Window expect = t.elements[detail::star_from_word(t, uword, vi)];
      SignedWindow got = demazure_unfolded_b(u, v);
      if (got.window() != expect) {
        detail::record_failure(r, "w=" + format_window(u.window()) + " v=" + format_window(v.window()) +
                                      " unfolded=" + format_window(got.window()) +
                                      " oracle=" + format_window(expect));
      }
    }
  }
  return r;
}

/// Negative control: the fold-unfold route must disagree with the true
/// type D product on the pinned pair, leaving an odd-parity window.
inline SuiteResult verify_typeDbad(const SuiteOptions&) {
  SuiteResult r;
  r.name = "typeDbad";
  r.domain = "d, n=4";
  EvenSignedWindow u(Window{1, 4, -2, -3}), v(Window{4, -1, 2, -3});
  UnfoldRouteReport rep = unfold_star_fold_d(u, v);
  ++r.checked;
  const Window expect_star{7, 8, 4, 6, 3, 5, 1, 2};
  const Window expect_fold{-2, -1, 4, -3};
  const Window expect_true{-2, -1, 4, 3};
  if (rep.s2n_star.window() != expect_star || rep.folded.window() != expect_fold ||
      rep.folded_even || rep.true_product.window() != expect_true || rep.routes_agree) {
    detail::record_failure(r, "s8 star=" + format_window(rep.s2n_star.window()) +
                                  " folded=" + format_window(rep.folded.window()) +
                                  " true=" + format_window(rep.true_product.window()));
  }
  return r;
}

inline std::vector<std::string> suite_names() {
  return {"main-theorem", "hopneg",     "addDk",        "allformhop",
          "hoptrans",     "hopirrele",  "singletrans",  "multtrans",
          "interval",     "fold-unfold-B", "typeDbad",  "hoppingtransfer"};
}

inline SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "main-theorem") return verify_main_theorem(opt);
  if (name == "hopneg") return verify_hopneg(opt);
  if (name == "addDk") return verify_addDk(opt);
  if (name == "allformhop") return verify_allformhop(opt);
  if (name == "hoptrans") return verify_hoptrans(opt);
  if (name == "hopirrele") return verify_hopirrele(opt);
  if (name == "singletrans") return verify_singletrans(opt);
  if (name == "multtrans") return verify_multtrans(opt);
  if (name == "interval") return verify_interval(opt);
  if (name == "fold-unfold-B") return verify_fold_unfold_b(opt);
  if (name == "typeDbad") return verify_typeDbad(opt);
  if (name == "hoppingtransfer") return verify_hoppingtransfer(opt);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace demhop

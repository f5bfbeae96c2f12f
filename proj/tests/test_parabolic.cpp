#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "demhop/demazure.hpp"
#include "demhop/parabolic.hpp"

using namespace demhop;

TEST_CASE("right actions of the three nontrivial forms") {
  SignedWindow w(Window{2, -4, -1, 5, 3});
  CHECK(apply_right(w, {5, 2, 1, 4}).window() == Window{2, -1, 5, 3, -4});   // s2 s3 s4
  CHECK(apply_right(w, {5, 2, 2, 4}).window() == Window{2, -1, 5, 4, -3});   // s2 s3 s5 s4
  CHECK(apply_right(w, {5, 2, 3, 0}).window() == Window{2, -1, 5, -3, 4});   // s2 s3 s5
  CHECK(apply_right(w, {5, 2, 0, 0}) == w);
}

TEST_CASE("factor windows agree with their words, all candidates") {
  for (int n : {3, 4, 5}) {
    for (int level = 1; level <= n - 1; ++level) {
      for (const QFactor& q : q_candidates(level, n)) {
        EvenSignedWindow direct = realize_q(q);
        CHECK(direct == eval_word_d(n, q_word(q)));
        // right action on an arbitrary window is composition with the factor
        const GroupTable& t = cached_table(Family::D, n);
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 10; ++trial) {
          SignedWindow w = SignedWindow::unchecked(t.elements[rng() % t.order()]);
          CHECK(apply_right(w, q) == compose(w, direct.as_signed()));
        }
      }
    }
  }
}

TEST_CASE("candidate counts per level") {
  CHECK(q_candidates(1, 5).size() == 10);  // 2(n-i)+2
  CHECK(q_candidates(3, 5).size() == 6);
  CHECK(q_candidates(4, 5).size() == 4);
}

TEST_CASE("factor validation") {
  CHECK_THROWS_AS(validate_qfactor({5, 5, 1, 4}), std::invalid_argument);   // level out of range
  CHECK_THROWS_AS(validate_qfactor({5, 2, 4, 2}), std::invalid_argument);   // bad form
  CHECK_THROWS_AS(validate_qfactor({5, 2, 1, 1}), std::invalid_argument);   // j below level
  CHECK_THROWS_AS(validate_qfactor({5, 4, 1, 3}), std::invalid_argument);   // level n-1 carries no j
  CHECK_NOTHROW(validate_qfactor({5, 4, 1, 4}));
}

TEST_CASE("decomposition of a worked window") {
  EvenSignedWindow w(Window{2, -4, -1, 5, 3});
  Decomposition d = decompose_d(w);
  REQUIRE(d.factors.size() == 4);

  const QFactor& q4 = d.at_level(4);
  CHECK(q4.form == 2);
  CHECK(q_word(q4) == Word{5, 4});
  CHECK(realize_q(q4).window() == Window{1, 2, 3, -4, -5});

  const QFactor& q3 = d.at_level(3);
  CHECK(q3.form == 3);
  CHECK(q_word(q3) == Word{3, 5});

  CHECK(d.at_level(2).form == 0);

  const QFactor& q1 = d.at_level(1);
  CHECK(q1.form == 2);
  CHECK(q1.j == 3);
  CHECK(q_word(q1) == Word{1, 2, 3, 5, 4, 3});
  // the normalized spelling equals the alternate one using s4 s5 = s5 s4
  CHECK(eval_word_d(5, {1, 2, 3, 5, 4, 3}) == eval_word_d(5, {1, 2, 3, 4, 5, 3}));

  // identity decomposes into all form-0 factors
  for (const QFactor& q : decompose_d(EvenSignedWindow::identity(5)).factors)
    CHECK(q.form == 0);
}

TEST_CASE("every D_4 element recomposes from its factors") {
  const GroupTable& t = cached_table(Family::D, 4);
  for (const Window& win : t.elements) {
    EvenSignedWindow w(SignedWindow::unchecked(win));
    Decomposition d = decompose_d(w);
    SignedWindow prod = SignedWindow::identity(4);
    Word all;
    for (const QFactor& q : d.factors) {  // Q_{n-1} ... Q_1
      prod = compose(prod, realize_q(q).as_signed());
      Word qw = q_word(q);
      all.insert(all.end(), qw.begin(), qw.end());
    }
    CHECK(prod.window() == win);
    CHECK(eval_word_d(4, all).window() == win);
    // at each level exactly one candidate has the residual-fixing property
    SignedWindow residual = w.as_signed();
    for (int i = 1; i <= 2; ++i) {
      int matches = 0;
      for (const QFactor& q : q_candidates(i, 4))
        if (compose(residual, inverse(realize_q(q).as_signed()))(i) == i) ++matches;
      CHECK(matches == 1);
      residual = compose(residual, inverse(realize_q(d.at_level(i)).as_signed()));
    }
  }
}

TEST_CASE("hop lists attached to factors") {
  CHECK(l_list({5, 1, 2, 3}) == HopList{2, 3, 4, 5, -5, -4});
  CHECK(l_list({5, 4, 2, 4}) == HopList{5, -5});
  CHECK(l_list({5, 4, 3, 0}) == HopList{-5});
  CHECK(l_list({5, 4, 0, 0}).empty());
  CHECK(l_list({5, 2, 1, 3}) == HopList{3, 4});
  CHECK(l_list({5, 2, 2, 4}) == HopList{3, 4, 5, -5});
  CHECK(l_list({5, 2, 3, 0}) == HopList{3, 4, -5});

  // level n-1 liftings of the four rank-2 subgroup elements vs their lists
  const int n = 5;
  CHECK(lift_d(realize_q({n, 4, 1, 4}), 4) == HopList{5});
  CHECK(l_list({n, 4, 1, 4}) == HopList{5});
  CHECK(lift_d(realize_q({n, 4, 2, 4}), 4) == HopList{-5, 5});
  CHECK(l_list({n, 4, 2, 4}) == HopList{5, -5});
  CHECK(hoplists_equivalent(4, {-5, 5}, {5, -5}, 5));
  CHECK(lift_d(realize_q({n, 4, 3, 0}), 4) == HopList{-5});
}

TEST_CASE("transported lists push through the factor action") {
  CHECK(t_list({5, 1, 1, 3}) == HopList{1, 2, 3});
  CHECK(t_list({5, 1, 2, 3}) == HopList{1, 2, 4, -5, 5, -4});
  CHECK(t_list({5, 3, 3, 0}) == HopList{3, 4});
  CHECK_THROWS_AS(t_list({5, 4, 2, 4}), std::invalid_argument);
  CHECK_THROWS_AS(t_list({5, 2, 0, 0}), std::invalid_argument);

  // (Q_{n-1}..Q_{i+1}) L_i = (Q_{n-1}..Q_i) T_i for every element and level
  const GroupTable& t = cached_table(Family::D, 4);
  for (const Window& win : t.elements) {
    EvenSignedWindow w(SignedWindow::unchecked(win));
    Decomposition d = decompose_d(w);
    std::vector<EvenSignedWindow> partial(4, EvenSignedWindow::identity(4));
    for (int k = 3; k >= 1; --k)
      partial[k - 1] = compose(partial[k], realize_q(d.at_level(k)));
    CHECK(partial[0] == w);
    for (int i = 1; i <= 2; ++i) {
      const QFactor& q = d.at_level(i);
      if (q.form == 0) continue;
      CHECK(apply_to_list(partial[i].as_signed(), l_list(q)) ==
            apply_to_list(partial[i - 1].as_signed(), t_list(q)));
    }
  }
}

TEST_CASE("worked transported-list values") {
  // w = [2,-4,-1,5,3]: (Q4 Q3 Q2) L_1 vs the lifting of w at 1
  EvenSignedWindow w(Window{2, -4, -1, 5, 3});
  Decomposition d = decompose_d(w);
  SignedWindow q43 = compose(realize_q(d.at_level(4)), realize_q(d.at_level(3))).as_signed();
  CHECK(q43.window() == Window{1, 2, -4, 5, -3});
  HopList transported = apply_to_list(q43, l_list(d.at_level(1)));
  CHECK(transported == HopList{2, -4, 5, -3, 3, -5});
  HopList lifted = lift_d(w, 1);
  CHECK(lifted == HopList{2, -4, 5, 3, -3, -5});
  CHECK(hoplists_equivalent(1, transported, lifted, 5));

  // both act identically on the worked companion window
  SignedWindow v(Window{-4, 3, -5, -1, -2});
  CHECK(hop_signed(v, 1, transported).window() == Window{-4, -1, -5, 3, -2});
  CHECK(hop_signed(v, 1, lifted).window() == Window{-4, -1, -5, 3, -2});
}

TEST_CASE("partial-product liftings are hop-equivalent across one more factor") {
  // Q_4 lift 4 = [-5,5] vs Q_4 Q_3 lift 4 = [5,-5] on v = [4,3,-5,-1,2]
  EvenSignedWindow w(Window{2, -4, -1, 5, 3});
  Decomposition d = decompose_d(w);
  EvenSignedWindow q4 = realize_q(d.at_level(4));
  EvenSignedWindow q43 = compose(q4, realize_q(d.at_level(3)));
  CHECK(lift_d(q4, 4) == HopList{-5, 5});
  CHECK(lift_d(q43, 4) == HopList{5, -5});
  SignedWindow v(Window{4, 3, -5, -1, 2});
  CHECK(hop_signed(v, 4, {-5, 5}).window() == Window{-4, 3, 5, -1, 2});
  CHECK(hop_signed(v, 4, {5, -5}).window() == Window{-4, 3, 5, -1, 2});
}

TEST_CASE("q_star computes the factor product by hopping") {
  // s1 s2 s3 s5 acting on w = [2,-4,-1,5,3]
  QFactor q{5, 1, 3, 0};
  CHECK(q_word(q) == Word{1, 2, 3, 5});
  CHECK(l_list(q) == HopList{2, 3, 4, -5});
  EvenSignedWindow w(Window{2, -4, -1, 5, 3});
  CHECK(compose(realize_q(q).as_signed(), w.as_signed()).window() ==
        Window{3, 5, -2, -1, 4});
  CHECK(q_star(q, w).window() == Window{3, -1, -2, 5, 4});

  CHECK(q_star({5, 2, 0, 0}, w) == w);

  // against the oracle on all of D_3
  const GroupTable& t = cached_table(Family::D, 3);
  for (int level = 1; level <= 2; ++level)
    for (const QFactor& qc : q_candidates(level, 3)) {
      int qi = t.index_of(realize_q(qc).window());
      for (int wi = 0; wi < t.order(); ++wi) {
        EvenSignedWindow x(SignedWindow::unchecked(t.elements[wi]));
        CHECK(q_star(qc, x).window() == t.elements[star_index(t, qi, wi)]);
      }
    }
}

TEST_CASE("conjugating a hop by a higher generator relabels its list") {
  // s_2 h_{2,[1,4,-5]}(s_2 w) = h_{3,[1,4,-5]}(w) on a worked window
  SignedWindow w(Window{2, -4, -1, 5, 3});
  SignedWindow s2 = eval_word_d(5, {2}).as_signed();
  SignedWindow lhs = compose(s2, hop_signed(compose(s2, w), 2, {1, 4, -5}));
  CHECK(lhs.window() == Window{2, -3, -1, -4, -5});
  CHECK(hop_signed(w, 3, {1, 4, -5}) == lhs);
}

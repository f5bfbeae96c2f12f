#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "demhop/cayley.hpp"
#include "demhop/perm.hpp"

using namespace demhop;

TEST_CASE("composition follows (uv)(i) = u(v(i))") {
  Perm u(Window{6, 5, 4, 1, 7, 2, 3}), v(Window{5, 4, 3, 6, 2, 1, 7});
  CHECK(compose(u, v).window() == Window{7, 1, 4, 2, 5, 6, 3});

  Perm w(Window{3, 1, 4, 2});
  CHECK(compose(Perm::identity(4), w) == w);
  CHECK(compose(w, Perm::identity(4)) == w);

  CHECK(compose(Perm(Window{2, 1, 3}), Perm(Window{3, 1, 2})).window() == Window{3, 2, 1});
}

TEST_CASE("composition rejects rank mismatch") {
  CHECK_THROWS_AS(compose(Perm::identity(3), Perm::identity(4)), std::invalid_argument);
}

TEST_CASE("window validation") {
  CHECK_THROWS_AS(Perm(Window{1, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Perm(Window{0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Perm(Window{1, 2, 4}), std::invalid_argument);
}

TEST_CASE("inverse") {
  CHECK(inverse(Perm(Window{2, 3, 1})).window() == Window{3, 1, 2});
  CHECK(inverse(Perm::identity(5)) == Perm::identity(5));
  Perm w(Window{7, 1, 4, 2, 5, 6, 3});
  CHECK(compose(w, inverse(w)) == Perm::identity(7));
}

TEST_CASE("inversion count matches BFS distance") {
  CHECK(inversion_count(Perm::identity(4)) == 0);
  CHECK(inversion_count(Perm(Window{2, 1})) == 1);

  const GroupTable& t = cached_table(Family::A, 7);
  Perm w(Window{7, 6, 5, 4, 2, 1, 3});
  CHECK(inversion_count(w) == length_of(t, w.window()));
}

TEST_CASE("generator actions") {
  CHECK(gen_action_a(Perm::identity(3), 1, Side::Right).window() == Window{2, 1, 3});
  CHECK(gen_action_a(Perm(Window{3, 2, 1}), 2, Side::Left).window() == Window{2, 3, 1});
  CHECK_THROWS_AS(gen_action_a(Perm::identity(3), 3, Side::Left), std::invalid_argument);

  // folding right actions over the letters is exactly word evaluation
  Word word{1, 3, 2, 1, 3};
  Perm acc = Perm::identity(4);
  for (int letter : word) acc = gen_action_a(acc, letter, Side::Right);
  CHECK(acc == eval_word_a(4, word));
}

TEST_CASE("empty word evaluates to the identity") {
  CHECK(eval_word_a(5, {}) == Perm::identity(5));
  CHECK_THROWS_AS(eval_word_a(3, {3}), std::invalid_argument);
}

TEST_CASE("composition is associative") {
  const GroupTable& t = cached_table(Family::A, 3);
  for (const Window& a : t.elements)
    for (const Window& b : t.elements)
      for (const Window& c : t.elements) {
        Perm pa = Perm::unchecked(a), pb = Perm::unchecked(b), pc = Perm::unchecked(c);
        CHECK(compose(compose(pa, pb), pc) == compose(pa, compose(pb, pc)));
      }

  std::mt19937_64 rng(7);
  const GroupTable& t6 = cached_table(Family::A, 6);
  for (int trial = 0; trial < 200; ++trial) {
    Perm a = Perm::unchecked(t6.elements[rng() % t6.order()]);
    Perm b = Perm::unchecked(t6.elements[rng() % t6.order()]);
    Perm c = Perm::unchecked(t6.elements[rng() % t6.order()]);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("right multiplication changes length by one, up iff ascent") {
  const GroupTable& t = cached_table(Family::A, 4);
  for (const Window& win : t.elements) {
    Perm w = Perm::unchecked(win);
    for (int i = 1; i <= 3; ++i) {
      Perm ws = gen_action_a(w, i, Side::Right);
      int expected = inversion_count(w) + (w(i) < w(i + 1) ? 1 : -1);
      CHECK(inversion_count(ws) == expected);
      CHECK(length_of(t, ws.window()) == expected);
    }
  }
}

TEST_CASE("length is invariant under inversion") {
  const GroupTable& t = cached_table(Family::A, 5);
  for (const Window& win : t.elements) {
    Perm w = Perm::unchecked(win);
    CHECK(inversion_count(w) == inversion_count(inverse(w)));
  }
}

TEST_CASE("BFS reduced words evaluate back to their elements") {
  const GroupTable& t = cached_table(Family::A, 5);
  for (int i = 0; i < t.order(); ++i) {
    Word word = reduced_word_of(t, i);
    CHECK(eval_word_a(5, word).window() == t.elements[i]);
    CHECK(static_cast<int>(word.size()) == t.length[i]);
  }
}

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "demhop/hopping.hpp"

using namespace demhop;

namespace {

HopList random_pm_list(std::mt19937_64& rng, int n) {
  std::vector<int> pool;
  for (int v = 1; v <= n; ++v) {
    pool.push_back(v);
    pool.push_back(-v);
  }
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(rng() % (pool.size() + 1));
  return pool;
}

}  // namespace

TEST_CASE("hopping in the symmetric group") {
  Perm w(Window{8, 9, 1, 7, 2, 6, 4, 3, 5});
  HopTrace trace;
  Perm r = hop_a(w, 1, {2, 3, 4, 5, 6, 7, 8}, &trace);
  CHECK(r.window() == Window{8, 9, 7, 6, 2, 5, 4, 3, 1});
  REQUIRE(trace.steps.size() == 3);
  CHECK(trace.steps[0].after == Window{8, 9, 7, 1, 2, 6, 4, 3, 5});
  CHECK(trace.steps[1].after == Window{8, 9, 7, 6, 2, 1, 4, 3, 5});
  CHECK(trace.steps[2].after == Window{8, 9, 7, 6, 2, 5, 4, 3, 1});

  CHECK(hop_a(Perm(Window{7, 1, 4, 2, 5, 6, 3}), 1, {6, 5, 4}).window() ==
        Window{7, 4, 5, 2, 6, 1, 3});
  Perm u(Window{3, 1, 2});
  CHECK(hop_a(u, 1, {}) == u);
  CHECK_THROWS_AS(hop_a(u, 4, {}), std::invalid_argument);
  CHECK_THROWS_AS(hop_a(u, 1, {2, 2}), std::invalid_argument);
}

TEST_CASE("signed hopping works on the unfolding with mirrored swaps") {
  SignedWindow w(Window{-4, 5, 3, -1, -2, -6});
  HopTrace trace;
  SignedWindow r = hop_signed(w, 1, {-3, 4, -5, 6}, &trace);
  CHECK(r.window() == Window{-1, -4, 3, 5, -2, -6});
  REQUIRE(trace.steps.size() == 2);
  CHECK(trace.steps[0].partner == -5);
  CHECK(trace.steps[0].after == Window{-4, -1, 3, 5, -2, -6, 6, 2, -5, -3, 1, 4});
  CHECK(trace.steps[1].partner == 4);
  CHECK(trace.steps[1].after == Window{-1, -4, 3, 5, -2, -6, 6, 2, -5, -3, 4, 1});

  // parity is not preserved in general
  SignedWindow odd = hop_signed(SignedWindow(Window{1, 5, -3, -4, 2}), 1, {3, -1, 2});
  CHECK(odd.window() == Window{2, 5, -1, -4, -3});
  CHECK_FALSE(odd.is_even());
}

TEST_CASE("swapping a non-adjacent sign pair in the list changes the result") {
  SignedWindow id5 = SignedWindow::identity(5);
  SignedWindow a = hop_signed(id5, 2, {4, -1, -4});
  SignedWindow b = hop_signed(id5, 2, {-4, -1, 4});
  CHECK(a.window() == Window{-2, -4, 3, 1, 5});
  CHECK(b.window() == Window{-2, 4, 3, -1, 5});
  CHECK_FALSE(a == b);
  // the two outputs form the same pair either way the lists are attributed
  std::set<Window> got{a.window(), b.window()};
  std::set<Window> expect{{-2, 4, 3, -1, 5}, {-2, -4, 3, 1, 5}};
  CHECK(got == expect);
}

TEST_CASE("adjacent sign pairs in the list can be swapped freely") {
  SignedWindow w(Window{2, -4, -1, 5, 3});
  SignedWindow a = hop_signed(w, 1, {3, 2, -2, 4});
  SignedWindow b = hop_signed(w, 1, {3, -2, 2, 4});
  CHECK(a == b);
  CHECK(a.window() == Window{-1, 2, -4, 5, 3});

  std::mt19937_64 rng(31);
  const GroupTable& t = cached_table(Family::D, 4);
  for (int trial = 0; trial < 30; ++trial) {
    int j = 2 + static_cast<int>(rng() % 3);
    int i = 1 + static_cast<int>(rng() % (j - 1));
    std::vector<int> pool;
    for (int v = 1; v <= 4; ++v)
      if (v != j) {
        pool.push_back(v);
        pool.push_back(-v);
      }
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(rng() % (pool.size() + 1));
    std::size_t cut = pool.empty() ? 0 : rng() % (pool.size() + 1);
    HopList l1(pool.begin(), pool.begin() + cut);
    l1.push_back(j);
    l1.push_back(-j);
    HopList l2(pool.begin(), pool.begin() + cut);
    l2.push_back(-j);
    l2.push_back(j);
    l1.insert(l1.end(), pool.begin() + cut, pool.end());
    l2.insert(l2.end(), pool.begin() + cut, pool.end());
    for (const Window& win : t.elements) {
      SignedWindow x = SignedWindow::unchecked(win);
      CHECK(hop_signed(x, i, l1) == hop_signed(x, i, l2));
    }
  }
}

TEST_CASE("hop position of t strictly increases, at most 2n swaps") {
  std::mt19937_64 rng(17);
  const GroupTable& t = cached_table(Family::D, 4);
  for (int trial = 0; trial < 200; ++trial) {
    SignedWindow w = SignedWindow::unchecked(t.elements[rng() % t.order()]);
    HopList list = random_pm_list(rng, 4);
    int tv = 1 + static_cast<int>(rng() % 4);
    if (rng() % 2) tv = -tv;
    HopTrace trace;
    SignedWindow r = hop_signed(w, tv, list, &trace);
    CHECK(trace.steps.size() <= 8);
    int prev = 0;
    for (const HopStep& s : trace.steps) {
      CHECK(s.t_pos > prev);
      prev = s.t_pos;
    }
    // result is a valid signed window with an anti-symmetric unfolding
    CHECK_NOTHROW(SignedWindow(r.window()));
    CHECK_NOTHROW(Unfolding(unfold(r).entries()));
  }
}

TEST_CASE("mirror identity h_{j,[j+1]} = h_{-(j+1),[-j]}") {
  const GroupTable& t = cached_table(Family::D, 4);
  for (int j = 1; j <= 3; ++j)
    for (const Window& win : t.elements) {
      SignedWindow w = SignedWindow::unchecked(win);
      CHECK(hop_signed(w, j, {j + 1}) == hop_signed(w, -(j + 1), {-j}));
    }
}

TEST_CASE("lifting in the symmetric group") {
  Perm w(Window{6, 5, 4, 1, 7, 2, 3});
  CHECK(lift_a(w, 2) == HopList{6, 5, 4, 7});
  CHECK(lift_a(w, 5) == HopList{6});
  CHECK(lift_a(w, 7).empty());
  CHECK_THROWS_AS(lift_a(w, 8), std::invalid_argument);
}

TEST_CASE("type B lifting keeps the half-open interval (i,-i]") {
  SignedWindow w(Window{-5, 3, 1, -2, 4});
  CHECK(lift_b(w, 2) == HopList{-5, 3, -2, 4, -4});
  CHECK(lift_b(w, 5) == HopList{-5});
  CHECK(lift_b(w, 1) == HopList{-5, 3});
  CHECK(lift_b(SignedWindow::identity(4), 1).empty());
}

TEST_CASE("type D lifting keeps the open interval (i,-i)") {
  EvenSignedWindow w(Window{2, -4, -1, 5, 3});
  CHECK(lift_d(w, 4) == HopList{5, -5});
  CHECK(lift_d(w, 3) == HopList{-4, 5});
  CHECK(lift_d(w, 1) == HopList{2, -4, 5, 3, -3, -5});
  CHECK(lift_d(w, 2).empty());

  const GroupTable& t = cached_table(Family::D, 4);
  for (const Window& win : t.elements) {
    EvenSignedWindow x(SignedWindow::unchecked(win));
    for (int i = 1; i <= 4; ++i) {
      HopList list = lift_d(x, i);
      validate_hoplist_pm(list, 4);
      for (int v : list) {
        CHECK(pm_less(i, v));
        CHECK(pm_less(v, -i));
      }
    }
  }
}

TEST_CASE("hop list equivalence over a whole group") {
  CHECK(hoplists_equivalent(4, {5, -5}, {-5, 5}, 5));
  CHECK(hoplists_equivalent(2, {4, -1}, {4, -1}, 4));
  CHECK_FALSE(hoplists_equivalent(2, {4, -1, -4}, {-4, -1, 4}, 5));
  CHECK_THROWS_AS(hoplists_equivalent(1, {2}, {2}, 6), std::invalid_argument);
}

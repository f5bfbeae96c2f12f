#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <unordered_map>

#include "demhop/families.hpp"

namespace demhop {

inline std::uint64_t group_order(Family f, int n) {
  std::uint64_t fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  switch (f) {
    case Family::A: return fact;
    case Family::B: return fact << n;
    default: return n >= 1 ? fact << (n - 1) : fact;
  }
}

/// BFS-built table of a whole small-rank group. Distances from the identity
/// are the Coxeter lengths; parent links spell reduced words.
struct GroupTable {
  Family family;
  int rank = 0;
  std::vector<Window> elements;           // BFS order, index 0 = identity
  std::vector<int> length;                // BFS depth
  std::vector<int> parent;                // -1 for the identity
  std::vector<int> parent_gen;            // 0 for the identity
  std::vector<std::vector<int>> left_mul; // left_mul[g-1][i] = index of s_g * elements[i]
  std::unordered_map<Window, int, WindowHash> index;

  int order() const { return static_cast<int>(elements.size()); }
  int num_gens() const { return num_generators(family, rank); }

  int index_of(const Window& w) const {
    auto it = index.find(w);
    ensure(it != index.end(), "window is not an element of this group");
    return it->second;
  }
};

constexpr int kDefaultTableBudget = 400000;

inline GroupTable build_table(Family f, int n, int max_elements = kDefaultTableBudget) {
  ensure(n >= 1, "rank must be positive");
  if (f == Family::D) ensure(n >= 2, "type D needs rank >= 2");
  const std::uint64_t order = group_order(f, n);
  ensure(order <= static_cast<std::uint64_t>(max_elements),
         "group order " + std::to_string(order) + " exceeds the table budget");

  GroupTable t;
  t.family = f;
  t.rank = n;
  const int gens = t.num_gens();
  t.elements.reserve(order);
  t.left_mul.assign(gens, {});

  t.elements.push_back(identity_window(n));
  t.length.push_back(0);
  t.parent.push_back(-1);
  t.parent_gen.push_back(0);
  t.index.emplace(t.elements[0], 0);

  for (std::size_t head = 0; head < t.elements.size(); ++head) {
    const Window cur = t.elements[head];  // copy: elements may reallocate
    for (int g = 1; g <= gens; ++g) {
      Window next = gen_action(f, cur, g, Side::Left);
      auto [it, inserted] = t.index.try_emplace(std::move(next), static_cast<int>(t.elements.size()));
      if (inserted) {
        t.elements.push_back(it->first);
        t.length.push_back(t.length[head] + 1);
        t.parent.push_back(static_cast<int>(head));
        t.parent_gen.push_back(g);
      }
    }
  }

  for (int g = 1; g <= gens; ++g) t.left_mul[g - 1].assign(t.order(), -1);
  for (int i = 0; i < t.order(); ++i)
    for (int g = 1; g <= gens; ++g)
      t.left_mul[g - 1][i] = t.index_of(gen_action(f, t.elements[i], g, Side::Left));

  ensure(static_cast<std::uint64_t>(t.order()) == order, "BFS element count disagrees with the group order");
  return t;
}

/// Process-lifetime cache. Completed tables are immutable and safe to share.
inline const GroupTable& cached_table(Family f, int n) {
  static std::map<std::pair<char, int>, std::unique_ptr<GroupTable>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<char>(f), n);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<GroupTable>(build_table(f, n))).first;
  return *it->second;
}

inline int length_of(const GroupTable& t, const Window& w) { return t.length[t.index_of(w)]; }

/// Letters of the BFS reduced word for element index i; the word evaluates
/// to the element and has exactly length[i] letters.
inline Word reduced_word_of(const GroupTable& t, int i) {
  Word word;
  word.reserve(t.length[i]);
  for (int cur = i; t.parent[cur] >= 0; cur = t.parent[cur]) word.push_back(t.parent_gen[cur]);
  return word;  // element = s_{word[0]} s_{word[1]} ... applied to id
}

inline Word reduced_word_of(const GroupTable& t, const Window& w) {
  return reduced_word_of(t, t.index_of(w));
}

inline bool is_left_descent(const GroupTable& t, int s, const Window& w) {
  const int i = t.index_of(w);
  return t.length[t.left_mul[s - 1][i]] < t.length[i];
}

/// One element per line: window, length, reduced word.
inline void dump_table(const GroupTable& t, std::ostream& os) {
  for (int i = 0; i < t.order(); ++i) {
    os << '[';
    for (std::size_t k = 0; k < t.elements[i].size(); ++k) {
      if (k) os << ',';
      os << t.elements[i][k];
    }
    os << "]\t" << t.length[i] << '\t';
    Word word = reduced_word_of(t, i);
    for (std::size_t k = 0; k < word.size(); ++k) {
      if (k) os << ' ';
      os << word[k];
    }
    os << '\n';
  }
}

}  // namespace demhop

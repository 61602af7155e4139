#pragma once

// Shared fixtures and independent oracles for the test suites. Everything
// here is deliberately brute force so it cannot share a bug with the
// implementation paths it checks.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "quivoa/algebra.hpp"
#include "quivoa/graph.hpp"
#include "quivoa/word.hpp"

namespace quivoa::testing {

// Three vertices; two loops t1, t2 at v1 and t3 from v1 to v2; v3 isolated.
inline DirectedMultigraph example4_graph() {
  return DirectedMultigraph::make(
      {"v1", "v2", "v3"},
      {{"t1", "v1", "v1"}, {"t2", "v1", "v1"}, {"t3", "v1", "v2"}});
}

// Two vertices joined by a single edge t with s(t) = v0, r(t) = v1.
inline DirectedMultigraph single_edge_graph() {
  return DirectedMultigraph::make({"v0", "v1"}, {{"t", "v0", "v1"}});
}

// The non-isomorphic pair with identical shadows: two parallel edges
// versus one edge in each direction.
inline std::pair<DirectedMultigraph, DirectedMultigraph> counterexample_pair() {
  auto a = DirectedMultigraph::make({"v1", "v2"},
                                    {{"a1", "v1", "v2"}, {"a2", "v1", "v2"}});
  auto b = DirectedMultigraph::make({"w1", "w2"},
                                    {{"b1", "w1", "w2"}, {"b2", "w2", "w1"}});
  return {std::move(a), std::move(b)};
}

inline DirectedMultigraph edgeless_graph(int n) {
  std::vector<std::string> vs;
  for (int i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
  return DirectedMultigraph::make(std::move(vs), {});
}

inline DirectedMultigraph random_graph(std::mt19937_64& rng, int max_v = 6,
                                       int max_e = 10) {
  const int nv = 1 + static_cast<int>(rng() % max_v);
  const int ne = static_cast<int>(rng() % (max_e + 1));
  std::vector<std::string> vs;
  for (int i = 0; i < nv; ++i) vs.push_back("v" + std::to_string(i));
  std::vector<std::tuple<std::string, std::string, std::string>> es;
  for (int i = 0; i < ne; ++i) {
    es.emplace_back("e" + std::to_string(i), vs[rng() % nv], vs[rng() % nv]);
  }
  return DirectedMultigraph::make(std::move(vs), std::move(es));
}

inline Word random_word(std::mt19937_64& rng, const DirectedMultigraph& g, int max_len) {
  const int alphabet = g.vertex_count() + g.edge_count();
  const int len = 1 + static_cast<int>(rng() % max_len);
  Word w;
  for (int i = 0; i < len; ++i) w.push_back(static_cast<std::int32_t>(rng() % alphabet));
  return w;
}

inline GaussianRational random_coeff(std::mt19937_64& rng) {
  auto part = [&]() {
    const long num = static_cast<long>(rng() % 7) - 3;
    const long den = 1 + static_cast<long>(rng() % 3);
    return Rational(num, den);
  };
  return GaussianRational(part(), part());
}

inline AlgebraElement random_element(std::mt19937_64& rng, const DirectedMultigraph& g,
                                     int max_terms = 4, int max_len = 4) {
  AlgebraElement x(g);
  const int terms = 1 + static_cast<int>(rng() % max_terms);
  for (int i = 0; i < terms; ++i) x.add_term(random_word(rng, g, max_len), random_coeff(rng));
  return x;
}

inline AlgebraElement random_element(std::mt19937_64& rng, const DoubledGraph& d,
                                     int max_terms = 4, int max_len = 4) {
  AlgebraElement x(d);
  const int terms = 1 + static_cast<int>(rng() % max_terms);
  for (int i = 0; i < terms; ++i)
    x.add_term(random_word(rng, d.graph, max_len), random_coeff(rng));
  return x;
}

// Exhaustive rewriting oracle: every normal form reachable by any maximal
// rewrite sequence. Confluence means the returned set is a singleton.
inline std::set<Word> all_normal_forms(const DirectedMultigraph& g, const Word& w,
                                       std::map<Word, std::set<Word>>& memo) {
  auto it = memo.find(w);
  if (it != memo.end()) return it->second;
  std::set<Word> result;
  bool any = false;
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    const std::int32_t x = w[i], y = w[i + 1];
    if (is_vertex_letter(g, x) && x == letter_range(g, y)) {
      Word next = w;
      next.erase(next.begin() + static_cast<long>(i));
      const auto sub = all_normal_forms(g, next, memo);
      result.insert(sub.begin(), sub.end());
      any = true;
    }
    if (is_vertex_letter(g, y) && y == letter_source(g, x)) {
      Word next = w;
      next.erase(next.begin() + static_cast<long>(i) + 1);
      const auto sub = all_normal_forms(g, next, memo);
      result.insert(sub.begin(), sub.end());
      any = true;
    }
  }
  if (!any) result.insert(w);
  memo[w] = result;
  return result;
}

// Permutation oracle for directed isomorphism, |V| <= 5.
inline bool brute_force_digraph_iso(const DirectedMultigraph& q1,
                                    const DirectedMultigraph& q2) {
  const int n = q1.vertex_count();
  if (n != q2.vertex_count() || q1.edge_count() != q2.edge_count()) return false;
  std::vector<std::vector<int>> m1(n, std::vector<int>(n, 0)), m2 = m1;
  for (const auto& e : q1.edges()) ++m1[e.src][e.rng];
  for (const auto& e : q2.edges()) ++m2[e.src][e.rng];
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) ok = m1[a][b] == m2[perm[a]][perm[b]];
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline bool brute_force_udgraph_iso(const UndirectedMultigraph& s1,
                                    const UndirectedMultigraph& s2) {
  const int n = s1.vertex_count();
  if (n != s2.vertex_count()) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = a; b < n && ok; ++b)
        ok = s1.multiplicity_of(a, b) == s2.multiplicity_of(perm[a], perm[b]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Relabel vertices and edges by a seeded permutation, preserving structure.
inline DirectedMultigraph relabel(const DirectedMultigraph& q, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = q.vertex_count();
  std::vector<int> vperm(n);
  std::iota(vperm.begin(), vperm.end(), 0);
  std::shuffle(vperm.begin(), vperm.end(), rng);
  std::vector<std::string> vs(n);
  for (int i = 0; i < n; ++i) vs[vperm[i]] = "r" + std::to_string(vperm[i]);

  std::vector<int> eorder(q.edge_count());
  std::iota(eorder.begin(), eorder.end(), 0);
  std::shuffle(eorder.begin(), eorder.end(), rng);
  std::vector<std::tuple<std::string, std::string, std::string>> es;
  for (const int e : eorder) {
    const auto& edge = q.edge(e);
    es.emplace_back("f" + std::to_string(e), vs[vperm[edge.src]], vs[vperm[edge.rng]]);
  }
  return DirectedMultigraph::make(std::move(vs), std::move(es));
}

}  // namespace quivoa::testing

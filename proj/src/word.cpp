#include "quivoa/word.hpp"

#include <algorithm>

#include "quivoa/error.hpp"

namespace quivoa {

int letter_range(const DirectedMultigraph& q, std::int32_t code) {
  if (code < q.vertex_count()) return code;
  return q.edge(code - q.vertex_count()).rng;
}

int letter_source(const DirectedMultigraph& q, std::int32_t code) {
  if (code < q.vertex_count()) return code;
  return q.edge(code - q.vertex_count()).src;
}

std::int32_t vertex_letter(const DirectedMultigraph& q, const std::string& id) {
  const int i = q.vertex_index(id);
  if (i < 0) throw DomainError("unknown vertex: " + id);
  return i;
}

std::int32_t edge_letter(const DirectedMultigraph& q, const std::string& id) {
  const int i = q.edge_index(id);
  if (i < 0) throw DomainError("unknown edge: " + id);
  return q.vertex_count() + i;
}

std::string letter_id(const DirectedMultigraph& q, std::int32_t code) {
  if (code < q.vertex_count()) return q.vertex_id(code);
  return q.edge(code - q.vertex_count()).id;
}

bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string word_str(const DirectedMultigraph& q, const Word& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += '.';
    s += letter_id(q, w[i]);
  }
  return s;
}

bool pair_reducible(const DirectedMultigraph& q, std::int32_t x, std::int32_t y) {
  if (is_vertex_letter(q, x) && x == letter_range(q, y)) return true;
  if (is_vertex_letter(q, y) && y == letter_source(q, x)) return true;
  return false;
}

bool is_reduced(const DirectedMultigraph& q, const Word& w) {
  if (w.empty()) throw DomainError("words must be nonempty");
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (pair_reducible(q, w[i], w[i + 1])) return false;
  return true;
}

Word reduce(const DirectedMultigraph& q, const Word& w) {
  if (w.empty()) throw DomainError("words must be nonempty");
  Word stack;
  stack.reserve(w.size());
  for (const std::int32_t y : w) {
    while (!stack.empty() && is_vertex_letter(q, stack.back()) &&
           stack.back() == letter_range(q, y)) {
      stack.pop_back();
    }
    if (is_vertex_letter(q, y) && !stack.empty() && y == letter_source(q, stack.back()))
      continue;  // e s(e) = e
    stack.push_back(y);
  }
  // The two rules only delete vertex letters, and words start nonempty with
  // at least one surviving letter: a lone letter never reduces.
  return stack;
}

Word multiply(const DirectedMultigraph& q, const Word& a, const Word& b) {
  Word cat = a;
  cat.insert(cat.end(), b.begin(), b.end());
  return reduce(q, cat);
}

std::vector<Word> enumerate_reduced(const DirectedMultigraph& q, int max_len) {
  if (max_len < 1) throw DomainError("enumerate_reduced: max_len must be >= 1");
  if (max_len > kMaxEnumerateLength)
    throw CapacityError("enumerate_reduced: max_len exceeds capacity guard");
  const int alphabet = q.vertex_count() + q.edge_count();
  std::vector<Word> result;
  std::vector<Word> frontier;
  for (std::int32_t c = 0; c < alphabet; ++c) frontier.push_back({c});
  for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      result.push_back(w);
      if (len == max_len) continue;
      for (std::int32_t c = 0; c < alphabet; ++c) {
        if (pair_reducible(q, w.back(), c)) continue;
        Word ext = w;
        ext.push_back(c);
        next.push_back(std::move(ext));
      }
    }
    frontier = std::move(next);
  }
  return result;
}

std::optional<Word> semigroup_identity(const DirectedMultigraph& q) {
  if (q.vertex_count() == 1) return Word{0};
  return std::nullopt;
}

}  // namespace quivoa

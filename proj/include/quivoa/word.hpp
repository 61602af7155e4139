#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quivoa/graph.hpp"

namespace quivoa {

// A letter is an interned code over V ∪ E: vertices are 0..|V|-1, edge k is
// |V|+k. Words are nonempty code sequences; comparisons are length-first,
// then lexicographic by code.
using Word = std::vector<std::int32_t>;

inline constexpr int kMaxEnumerateLength = 12;

inline bool is_vertex_letter(const DirectedMultigraph& q, std::int32_t code) {
  return code < q.vertex_count();
}

// r and s extended to V ∪ E with r(v) = s(v) = v. Returns a vertex index.
int letter_range(const DirectedMultigraph& q, std::int32_t code);
int letter_source(const DirectedMultigraph& q, std::int32_t code);

std::int32_t vertex_letter(const DirectedMultigraph& q, const std::string& id);
std::int32_t edge_letter(const DirectedMultigraph& q, const std::string& id);
std::string letter_id(const DirectedMultigraph& q, std::int32_t code);

bool word_less(const Word& a, const Word& b);
std::string word_str(const DirectedMultigraph& q, const Word& w);

// Whether the deletion rule applies to the adjacent pair (x, y):
// drop x when x = r(y), drop y when y = s(x). Both only ever delete
// vertex letters.
bool pair_reducible(const DirectedMultigraph& q, std::int32_t x, std::int32_t y);

bool is_reduced(const DirectedMultigraph& q, const Word& w);

// Unique normal form via a single left-to-right stack pass.
Word reduce(const DirectedMultigraph& q, const Word& w);

// Concatenate then reduce.
Word multiply(const DirectedMultigraph& q, const Word& a, const Word& b);

// All reduced words of length <= max_len, ordered by length then
// lexicographically by letter code.
std::vector<Word> enumerate_reduced(const DirectedMultigraph& q, int max_len);

// [v] when V(Q) = {v}, empty otherwise.
std::optional<Word> semigroup_identity(const DirectedMultigraph& q);

}  // namespace quivoa

#pragma once

#include <map>
#include <string>

#include "quivoa/graph.hpp"
#include "quivoa/rational.hpp"
#include "quivoa/word.hpp"

namespace quivoa {

struct WordOrder {
  bool operator()(const Word& a, const Word& b) const { return word_less(a, b); }
};

// Element of Cw(Q): a finite exact-coefficient combination of reduced words.
// Terms are kept in canonical order (length, then lexicographic) with no
// stored zeros. Graph identity is structural; elements over a doubled graph
// carry the pairing so the adjoint is available.
class AlgebraElement {
public:
  using Terms = std::map<Word, GaussianRational, WordOrder>;

  explicit AlgebraElement(const DirectedMultigraph& graph) : graph_(&graph) {}
  explicit AlgebraElement(const DoubledGraph& doubled)
      : graph_(&doubled.graph), doubled_(&doubled) {}

  static AlgebraElement word(const DirectedMultigraph& graph, const Word& w,
                             GaussianRational coeff = gr_one());
  static AlgebraElement word(const DoubledGraph& doubled, const Word& w,
                             GaussianRational coeff = gr_one());

  const DirectedMultigraph& graph() const { return *graph_; }
  const DoubledGraph* doubled() const { return doubled_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Word& w, const GaussianRational& coeff);  // reduces w

  friend AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y);
  friend AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y);
  friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y);
  friend AlgebraElement operator*(const GaussianRational& c, const AlgebraElement& x);
  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y);
  friend bool operator!=(const AlgebraElement& x, const AlgebraElement& y) {
    return !(x == y);
  }

  std::string str() const;

private:
  const DirectedMultigraph* graph_;
  const DoubledGraph* doubled_ = nullptr;
  Terms terms_;
};

// Word reversal with each edge swapped by the involution and coefficients
// conjugated. Requires an element over a doubled graph.
AlgebraElement adjoint(const AlgebraElement& x);

// Multiplies each term by s^(edge letters in the word). The reduction rules
// delete only vertex letters, so edge-letter count is a word invariant and
// this is an algebra homomorphism. s must lie in [0,1]; a double input is a
// dyadic rational, so arithmetic stays exact.
AlgebraElement scale_edges(const AlgebraElement& x, const Rational& s);
AlgebraElement scale_edges(const AlgebraElement& x, double s);

// Sum of coefficient moduli: an upper bound for the universal norm since
// every generator is a contraction.
double ell1(const AlgebraElement& x);

int edge_letter_count(const DirectedMultigraph& q, const Word& w);

}  // namespace quivoa

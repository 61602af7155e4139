#include "quivoa/algebra.hpp"

#include <algorithm>

#include "quivoa/error.hpp"

namespace quivoa {

namespace {

void require_same_graph(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.graph() != y.graph())
    throw DomainError("algebra elements are over different graphs");
}

}  // namespace

AlgebraElement AlgebraElement::word(const DirectedMultigraph& graph, const Word& w,
                                    GaussianRational coeff) {
  AlgebraElement x(graph);
  x.add_term(w, coeff);
  return x;
}

AlgebraElement AlgebraElement::word(const DoubledGraph& doubled, const Word& w,
                                    GaussianRational coeff) {
  AlgebraElement x(doubled);
  x.add_term(w, coeff);
  return x;
}

void AlgebraElement::add_term(const Word& w, const GaussianRational& coeff) {
  if (coeff.is_zero()) return;
  const Word normal = reduce(*graph_, w);
  auto [it, inserted] = terms_.emplace(normal, coeff);
  if (!inserted) {
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_graph(x, y);
  AlgebraElement z = x;
  for (const auto& [w, c] : y.terms_) z.add_term(w, c);
  return z;
}

AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_graph(x, y);
  AlgebraElement z = x;
  for (const auto& [w, c] : y.terms_) z.add_term(w, -c);
  return z;
}

AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_graph(x, y);
  AlgebraElement z = x.doubled_ ? AlgebraElement(*x.doubled_) : AlgebraElement(*x.graph_);
  for (const auto& [u, cu] : x.terms_)
    for (const auto& [v, cv] : y.terms_)
      z.add_term(multiply(*x.graph_, u, v), cu * cv);
  return z;
}

AlgebraElement operator*(const GaussianRational& c, const AlgebraElement& x) {
  AlgebraElement z = x.doubled_ ? AlgebraElement(*x.doubled_) : AlgebraElement(*x.graph_);
  for (const auto& [w, cw] : x.terms_) z.add_term(w, c * cw);
  return z;
}

bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
  return x.graph() == y.graph() && x.terms_ == y.terms_;
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")*" + word_str(*graph_, w);
  }
  return s;
}

AlgebraElement adjoint(const AlgebraElement& x) {
  const DoubledGraph* d = x.doubled();
  if (!d) throw DomainError("adjoint requires an element over a doubled graph");
  const int nv = d->graph.vertex_count();
  AlgebraElement z(*d);
  for (const auto& [w, c] : x.terms()) {
    Word rev(w.rbegin(), w.rend());
    for (auto& code : rev)
      if (code >= nv) code = nv + d->partner[code - nv];
    z.add_term(rev, c.conj());
  }
  return z;
}

int edge_letter_count(const DirectedMultigraph& q, const Word& w) {
  return static_cast<int>(
      std::count_if(w.begin(), w.end(),
                    [&](std::int32_t c) { return !is_vertex_letter(q, c); }));
}

AlgebraElement scale_edges(const AlgebraElement& x, const Rational& s) {
  if (s < 0 || s > 1) throw DomainError("scale_edges: s must lie in [0,1]");
  AlgebraElement z = x.doubled() ? AlgebraElement(*x.doubled()) : AlgebraElement(x.graph());
  for (const auto& [w, c] : x.terms()) {
    const int k = edge_letter_count(x.graph(), w);
    Rational factor = 1;
    for (int i = 0; i < k; ++i) factor *= s;
    if (factor == 0) continue;
    z.add_term(w, GaussianRational(factor) * c);
  }
  return z;
}

AlgebraElement scale_edges(const AlgebraElement& x, double s) {
  return scale_edges(x, Rational(s));
}

double ell1(const AlgebraElement& x) {
  double total = 0.0;
  for (const auto& [w, c] : x.terms()) total += abs_upper(c);
  return total;
}

}  // namespace quivoa

#pragma once

#include <complex>
#include <string>

#include <nlohmann/json.hpp>

#include "quivoa/algebra.hpp"
#include "quivoa/graph.hpp"

namespace quivoa {

using Json = nlohmann::ordered_json;

// Parsed graph file plus its source text. Grammar, line oriented:
//   vertex <id>
//   edge <id> <source-id> <range-id>
//   # comment
// Identifiers are [A-Za-z0-9_]+. Parse failures throw ParseError with the
// offending position.
struct GraphDocument {
  std::string source;
  DirectedMultigraph graph;
};

GraphDocument parse_graph(const std::string& text);

// Noncommutative polynomial expressions:
//   expr     := term (('+'|'-') term)*
//   term     := scalar '*' word | word | scalar
//   word     := letter ('.' letter)*
//   letter   := id ['~']           (adjoint marker, doubled graphs only)
//   scalar   := rational ['i'] | '(' rational [('+'|'-') rational ['i']] ')' ['i']
//   rational := ['-'] int ['/' int]
// A lone scalar term needs a semigroup identity, i.e. a single-vertex graph.
AlgebraElement parse_expr(const std::string& text, const DirectedMultigraph& graph);
AlgebraElement parse_expr(const std::string& text, const DoubledGraph& doubled);

// Canonical text form that parse_expr round-trips.
std::string format_expr(const AlgebraElement& x);

// "0.5", "i", "-1/2i", "0.3+0.4i" and friends.
std::complex<double> parse_complex_literal(const std::string& text);

// Rounds to 12 significant digits so serialized reports are byte-stable.
double round_for_report(double v);

}  // namespace quivoa

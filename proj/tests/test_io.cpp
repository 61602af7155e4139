#include <doctest.h>

#include "quivoa/error.hpp"
#include "quivoa/io.hpp"
#include "support.hpp"

using namespace quivoa;
using namespace quivoa::testing;

TEST_CASE("graph parsing") {
  const auto doc = parse_graph("vertex v1\nvertex v2\nedge t v1 v2\n");
  CHECK(doc.graph.vertex_count() == 2);
  REQUIRE(doc.graph.edge_count() == 1);
  CHECK(doc.graph.edge(0).src == doc.graph.vertex_index("v1"));
  CHECK(doc.graph.edge(0).rng == doc.graph.vertex_index("v2"));
}

TEST_CASE("graph parsing with comments and blank lines") {
  const auto doc = parse_graph(
      "# the three-vertex example\n"
      "vertex v1\nvertex v2\nvertex v3\n"
      "\n"
      "edge t1 v1 v1\nedge t2 v1 v1\nedge t3 v1 v2\n");
  CHECK(doc.graph == example4_graph());
}

TEST_CASE("graph parse errors carry positions") {
  try {
    parse_graph("vertex v1\nedge t v1 v9\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
  CHECK_THROWS_AS(parse_graph("edge t v1 v2\n"), ParseError);  // unknown endpoints
  CHECK_THROWS_AS(parse_graph("vertex v1\nvertex v1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("frobnicate x\n"), ParseError);
  CHECK_THROWS_AS(parse_graph(""), ParseError);  // empty graph rejected
  CHECK_THROWS_AS(parse_graph("vertex !bad\n"), ParseError);
}

TEST_CASE("expression parsing basics") {
  const auto q = example4_graph();
  const auto v1 = parse_expr("v1", q);
  REQUIRE(v1.terms().size() == 1);
  CHECK(v1.terms().begin()->second == gr_one());

  const auto x = parse_expr("1/2 * t1.t3 + (0-1i) * v3", q);
  REQUIRE(x.terms().size() == 2);
  const Word w_v3 = {vertex_letter(q, "v3")};
  const Word w_t1t3 = {edge_letter(q, "t1"), edge_letter(q, "t3")};
  CHECK(x.terms().at(w_v3) == GaussianRational(Rational(0), Rational(-1)));
  CHECK(x.terms().at(w_t1t3) == GaussianRational(Rational(1, 2)));
}

TEST_CASE("imaginary scalars") {
  const auto q = example4_graph();
  const auto x = parse_expr("i * v1 - 2/3i * v2", q);
  CHECK(x.terms().at({vertex_letter(q, "v1")}) == gr_i());
  CHECK(x.terms().at({vertex_letter(q, "v2")}) ==
        GaussianRational(Rational(0), Rational(-2, 3)));
}

TEST_CASE("adjoint marker needs a doubled graph") {
  const auto base = single_edge_graph();
  const auto d = double_graph(base);
  const auto x = parse_expr("t~", d);
  REQUIRE(x.terms().size() == 1);
  CHECK(x.terms().begin()->first == Word{edge_letter(d.graph, "t~")});
  CHECK_THROWS_AS(parse_expr("t~", base), ParseError);
}

TEST_CASE("lone scalars need a semigroup identity") {
  const auto one = DirectedMultigraph::make({"v"}, {});
  const auto x = parse_expr("3/2", one);
  REQUIRE(x.terms().size() == 1);
  CHECK(x.terms().begin()->first == Word{0});
  CHECK(x.terms().begin()->second == GaussianRational(Rational(3, 2)));
  CHECK_THROWS_AS(parse_expr("3/2", single_edge_graph()), ParseError);
  // literal zero is always fine
  CHECK(parse_expr("0", single_edge_graph()).is_zero());
}

TEST_CASE("unknown letters are rejected with positions") {
  const auto q = single_edge_graph();
  CHECK_THROWS_AS(parse_expr("nope", q), ParseError);
  CHECK_THROWS_AS(parse_expr("v0 + ", q), ParseError);
  CHECK_THROWS_AS(parse_expr("", q), ParseError);
  CHECK_THROWS_AS(parse_expr("1/0 * t", q), ParseError);
}

TEST_CASE("format round trip on random elements") {
  std::mt19937_64 rng(1616);
  for (int trial = 0; trial < 100; ++trial) {
    const auto q = random_graph(rng, 4, 5);
    const auto x = random_element(rng, q);
    CHECK(parse_expr(format_expr(x), q) == x);
  }
  for (int trial = 0; trial < 50; ++trial) {
    const auto base = random_graph(rng, 3, 4);
    const auto d = double_graph(base);
    const auto x = random_element(rng, d);
    CHECK(parse_expr(format_expr(x), d) == x);
  }
}

TEST_CASE("parser fuzzing never crashes") {
  std::mt19937_64 rng(1717);
  const auto q = example4_graph();
  const std::string chars = "v123t~+-*/.()i ";
  for (int trial = 0; trial < 2000; ++trial) {
    std::string s;
    const int len = static_cast<int>(rng() % 20);
    for (int i = 0; i < len; ++i) s += chars[rng() % chars.size()];
    try {
      (void)parse_expr(s, q);
    } catch (const ParseError&) {
      // fine: rejection with a position
    }
    try {
      (void)parse_graph(s);
    } catch (const ParseError&) {
    }
  }
}

TEST_CASE("complex literals") {
  CHECK(parse_complex_literal("0.5") == std::complex<double>(0.5, 0));
  CHECK(parse_complex_literal("i") == std::complex<double>(0, 1));
  CHECK(parse_complex_literal("-i") == std::complex<double>(0, -1));
  CHECK(parse_complex_literal("0.3+0.4i") == std::complex<double>(0.3, 0.4));
  CHECK(parse_complex_literal("1/2") == std::complex<double>(0.5, 0));
  CHECK(parse_complex_literal("-1/2i") == std::complex<double>(0, -0.5));
  CHECK_THROWS_AS(parse_complex_literal("zebra"), DomainError);
}

TEST_CASE("report rounding is stable at 12 significant digits") {
  CHECK(round_for_report(0.0) == 0.0);
  CHECK(round_for_report(1.0) == 1.0);
  const double v = 0.1234567890123456789;
  CHECK(round_for_report(v) == round_for_report(round_for_report(v)));
}

#include "quivoa/io.hpp"

#include <cctype>
#include <cstdio>
#include <functional>
#include <sstream>
#include <vector>

#include "quivoa/error.hpp"

namespace quivoa {

namespace {

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct Token {
  enum Kind { Ident, Int, Sym, End } kind;
  std::string text;
  int line;
  int col;
};

std::vector<Token> tokenize_expr(const std::string& text,
                                 const std::function<bool(const std::string&)>& known_id) {
  std::vector<Token> toks;
  int line = 1, col = 1;
  size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++i;
      continue;
    }
    const int start_col = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        num += text[i++];
        ++col;
      }
      // an identifier may start with a digit; keep consuming if letters follow
      if (i < text.size() && ident_char(text[i]) && !std::isdigit(static_cast<unsigned char>(text[i]))) {
        const int digits_col = col;
        std::string full = num;
        while (i < text.size() && ident_char(text[i])) {
          full += text[i++];
          ++col;
        }
        // "3i" is the scalar 3 times the imaginary unit unless the graph
        // declares a letter by that exact name
        if (!known_id(full) && full.substr(num.size()) == "i") {
          toks.push_back({Token::Int, num, line, start_col});
          toks.push_back({Token::Ident, "i", line, digits_col});
        } else {
          toks.push_back({Token::Ident, full, line, start_col});
        }
      } else {
        toks.push_back({Token::Int, num, line, start_col});
      }
      continue;
    }
    if (ident_char(c)) {
      std::string id;
      while (i < text.size() && ident_char(text[i])) {
        id += text[i++];
        ++col;
      }
      toks.push_back({Token::Ident, id, line, start_col});
      continue;
    }
    if (std::string("+-*/.()~").find(c) != std::string::npos) {
      toks.push_back({Token::Sym, std::string(1, c), line, start_col});
      ++i;
      ++col;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line, col);
  }
  toks.push_back({Token::End, "", line, col});
  return toks;
}

class ExprParser {
public:
  ExprParser(const std::string& text, const DirectedMultigraph& graph,
             const DoubledGraph* doubled)
      : toks_(tokenize_expr(text,
                            [&graph](const std::string& id) {
                              return graph.vertex_index(id) >= 0 || graph.edge_index(id) >= 0;
                            })),
        graph_(graph), doubled_(doubled) {}

  AlgebraElement parse() {
    AlgebraElement result = make_zero();
    bool negate = false;
    if (accept_sym("-")) negate = true;
    result = result + term(negate);
    while (true) {
      if (accept_sym("+")) {
        result = result + term(false);
      } else if (accept_sym("-")) {
        result = result + term(true);
      } else {
        break;
      }
    }
    expect_end();
    return result;
  }

private:
  AlgebraElement make_zero() const {
    return doubled_ ? AlgebraElement(*doubled_) : AlgebraElement(graph_);
  }

  const Token& peek() const { return toks_[pos_]; }
  const Token& advance() { return toks_[pos_++]; }

  bool accept_sym(const std::string& s) {
    if (peek().kind == Token::Sym && peek().text == s) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_sym(const std::string& s) {
    if (!accept_sym(s))
      throw ParseError("expected '" + s + "'", peek().line, peek().col);
  }

  void expect_end() {
    if (peek().kind != Token::End)
      throw ParseError("trailing input '" + peek().text + "'", peek().line, peek().col);
  }

  bool letter_exists(const std::string& id) const {
    return graph_.vertex_index(id) >= 0 || graph_.edge_index(id) >= 0;
  }

  bool at_scalar() const {
    const Token& t = peek();
    if (t.kind == Token::Int) return true;
    if (t.kind == Token::Sym && (t.text == "(" || t.text == "-")) return true;
    // bare 'i' is the imaginary unit unless the graph declares that letter
    if (t.kind == Token::Ident && t.text == "i" && !letter_exists("i")) return true;
    return false;
  }

  Rational rational() {
    bool neg = accept_sym("-");
    const Token& t = peek();
    if (t.kind != Token::Int)
      throw ParseError("expected integer", t.line, t.col);
    Rational value(BigInt(advance().text));
    if (accept_sym("/")) {
      const Token& d = peek();
      if (d.kind != Token::Int)
        throw ParseError("expected denominator", d.line, d.col);
      const BigInt den(advance().text);
      if (den == 0) throw ParseError("zero denominator", d.line, d.col);
      value /= den;
    }
    return neg ? -value : value;
  }

  bool accept_i() {
    if (peek().kind == Token::Ident && peek().text == "i" && !letter_exists("i")) {
      ++pos_;
      return true;
    }
    return false;
  }

  GaussianRational scalar() {
    if (accept_sym("(")) {
      const Rational first = rational();
      GaussianRational value(first);
      if (accept_i()) {
        value = GaussianRational(Rational(0), first);
      }
      if (peek().kind == Token::Sym && (peek().text == "+" || peek().text == "-")) {
        const bool minus = advance().text == "-";
        Rational second = rational();
        if (minus) second = -second;
        if (accept_i())
          value = value + GaussianRational(Rational(0), second);
        else
          value = value + GaussianRational(second);
      }
      expect_sym(")");
      if (accept_i()) value = value * gr_i();
      return value;
    }
    if (accept_i()) return gr_i();
    const Rational r = rational();
    if (accept_i()) return GaussianRational(Rational(0), r);
    return GaussianRational(r);
  }

  std::int32_t letter() {
    const Token& t = peek();
    if (t.kind != Token::Ident)
      throw ParseError("expected letter identifier", t.line, t.col);
    const std::string id = advance().text;
    const bool adj = accept_sym("~");
    if (adj && !doubled_)
      throw ParseError("adjoint marker requires a doubled graph", t.line, t.col);

    const int v = graph_.vertex_index(id);
    if (v >= 0) {
      if (adj) return v;  // vertices are fixed by the involution
      return v;
    }
    int e = graph_.edge_index(id);
    if (e < 0) throw ParseError("unknown letter: " + id, t.line, t.col);
    if (adj) e = doubled_->partner[e];
    return graph_.vertex_count() + e;
  }

  Word word() {
    Word w{letter()};
    while (accept_sym(".")) w.push_back(letter());
    return w;
  }

  AlgebraElement term(bool negate) {
    GaussianRational coeff = gr_one();
    bool have_word = true;
    if (at_scalar()) {
      coeff = scalar();
      if (accept_sym("*")) {
        have_word = true;
      } else {
        have_word = false;
      }
    }
    if (negate) coeff = -coeff;

    AlgebraElement result = make_zero();
    if (have_word) {
      result.add_term(word(), coeff);
      return result;
    }
    if (coeff.is_zero()) return result;  // a lone 0 is the zero element
    const auto identity = semigroup_identity(graph_);
    if (!identity)
      throw ParseError("scalar term without a word needs a single-vertex graph",
                       peek().line, peek().col);
    result.add_term(*identity, coeff);
    return result;
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  const DirectedMultigraph& graph_;
  const DoubledGraph* doubled_;
};

}  // namespace

GraphDocument parse_graph(const std::string& text) {
  std::vector<std::string> vertices;
  std::vector<std::tuple<std::string, std::string, std::string>> edges;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const size_t hash = raw.find('#');
    std::string body = hash == std::string::npos ? raw : raw.substr(0, hash);

    std::vector<std::pair<std::string, int>> words;  // (token, column)
    size_t i = 0;
    while (i < body.size()) {
      if (std::isspace(static_cast<unsigned char>(body[i]))) {
        ++i;
        continue;
      }
      const size_t start = i;
      while (i < body.size() && !std::isspace(static_cast<unsigned char>(body[i]))) ++i;
      words.emplace_back(body.substr(start, i - start), static_cast<int>(start + 1));
    }
    if (words.empty()) continue;

    for (size_t wi = 1; wi < words.size(); ++wi)
      for (const char c : words[wi].first)
        if (!ident_char(c))
          throw ParseError("bad identifier character in '" + words[wi].first + "'",
                           lineno, words[wi].second);

    const auto& [keyword, kcol] = words[0];
    if (keyword == "vertex") {
      if (words.size() != 2)
        throw ParseError("vertex line needs exactly one identifier", lineno, kcol);
      vertices.push_back(words[1].first);
    } else if (keyword == "edge") {
      if (words.size() != 4)
        throw ParseError("edge line needs: edge <id> <source> <range>", lineno, kcol);
      edges.emplace_back(words[1].first, words[2].first, words[3].first);
    } else {
      throw ParseError("unknown directive '" + keyword + "'", lineno, kcol);
    }
  }
  if (vertices.empty()) throw ParseError("graph has no vertices", lineno ? lineno : 1, 1);

  try {
    DirectedMultigraph g = DirectedMultigraph::make(std::move(vertices), std::move(edges));
    return GraphDocument{text, std::move(g)};
  } catch (const DomainError& e) {
    throw ParseError(e.what(), lineno ? lineno : 1, 1);
  }
}

AlgebraElement parse_expr(const std::string& text, const DirectedMultigraph& graph) {
  return ExprParser(text, graph, nullptr).parse();
}

AlgebraElement parse_expr(const std::string& text, const DoubledGraph& doubled) {
  return ExprParser(text, doubled.graph, &doubled).parse();
}

std::string format_expr(const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : x.terms()) {
    if (!out.empty()) out += " + ";
    std::string coeff;
    if (c.im == 0) {
      coeff = c.re.str();
    } else if (c.re == 0) {
      coeff = c.im.str() + "i";
    } else {
      coeff = "(" + c.re.str() + (c.im < 0 ? "-" : "+") +
              Rational(c.im < 0 ? -c.im : c.im).str() + "i)";
    }
    out += coeff + " * " + word_str(x.graph(), w);
  }
  return out;
}

std::complex<double> parse_complex_literal(const std::string& text) {
  // forms: a, ai, i, -i, a+bi, a-bi (a, b decimal or rational)
  auto parse_real = [](const std::string& s, size_t& i) -> double {
    const size_t start = i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.')) ++i;
    if (i < s.size() && s[i] == '/') {
      ++i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    }
    const std::string num = s.substr(start, i - start);
    if (num.empty() || num == "+" || num == "-")
      return num == "-" ? -1.0 : 1.0;  // bare sign before 'i'
    const size_t slash = num.find('/');
    if (slash != std::string::npos)
      return std::stod(num.substr(0, slash)) / std::stod(num.substr(slash + 1));
    return std::stod(num);
  };

  std::string s;
  for (const char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw DomainError("empty complex literal");

  size_t i = 0;
  double re = 0.0, im = 0.0;
  const double first = parse_real(s, i);
  if (i < s.size() && s[i] == 'i') {
    ++i;
    im = first;
  } else {
    re = first;
    if (i < s.size()) {
      const double second = parse_real(s, i);
      if (i >= s.size() || s[i] != 'i')
        throw DomainError("bad complex literal: " + text);
      ++i;
      im = second;
    }
  }
  if (i != s.size()) throw DomainError("bad complex literal: " + text);
  return {re, im};
}

double round_for_report(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr);
}

}  // namespace quivoa

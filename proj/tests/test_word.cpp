#include <doctest.h>

#include <set>

#include "quivoa/error.hpp"
#include "quivoa/word.hpp"
#include "support.hpp"

using namespace quivoa;
using namespace quivoa::testing;

namespace {

Word wd(const DirectedMultigraph& q, const std::vector<std::string>& ids) {
  Word w;
  for (const auto& id : ids)
    w.push_back(q.vertex_index(id) >= 0 ? vertex_letter(q, id) : edge_letter(q, id));
  return w;
}

}  // namespace

TEST_CASE("letter bookkeeping") {
  const auto q = single_edge_graph();
  const auto v0 = vertex_letter(q, "v0"), v1 = vertex_letter(q, "v1"),
             t = edge_letter(q, "t");
  CHECK(is_vertex_letter(q, v0));
  CHECK(!is_vertex_letter(q, t));
  CHECK(letter_source(q, t) == q.vertex_index("v0"));
  CHECK(letter_range(q, t) == q.vertex_index("v1"));
  CHECK(letter_source(q, v1) == q.vertex_index("v1"));
  CHECK(letter_range(q, v1) == q.vertex_index("v1"));
  CHECK(letter_id(q, t) == "t");
  CHECK_THROWS_AS(edge_letter(q, "nope"), DomainError);
}

TEST_CASE("basic reductions") {
  const auto q = single_edge_graph();
  CHECK(reduce(q, wd(q, {"v0", "v0"})) == wd(q, {"v0"}));
  CHECK(reduce(q, wd(q, {"v1", "t"})) == wd(q, {"t"}));  // r(t) = v1
  CHECK(reduce(q, wd(q, {"t", "v0"})) == wd(q, {"t"}));  // s(t) = v0
  CHECK(reduce(q, wd(q, {"v0", "t"})) == wd(q, {"v0", "t"}));  // already reduced
  CHECK(reduce(q, wd(q, {"v0", "v1", "t", "v0", "v0"})) == wd(q, {"v0", "t"}));
}

TEST_CASE("is_reduced matches the pair rules") {
  const auto q = single_edge_graph();
  CHECK(!is_reduced(q, wd(q, {"v0", "v0"})));
  CHECK(!is_reduced(q, wd(q, {"v1", "t"})));
  CHECK(!is_reduced(q, wd(q, {"t", "v0"})));
  // neither deletion rule applies to (v0,t) or (t,v1)
  CHECK(is_reduced(q, wd(q, {"v0", "t", "v1"})));
  CHECK(is_reduced(q, wd(q, {"t"})));
  CHECK(pair_reducible(q, vertex_letter(q, "v1"), edge_letter(q, "t")));
  CHECK(!pair_reducible(q, vertex_letter(q, "v0"), edge_letter(q, "t")));
}

TEST_CASE("multiply") {
  const auto q = single_edge_graph();
  CHECK(multiply(q, wd(q, {"t"}), wd(q, {"v0"})) == wd(q, {"t"}));
  CHECK(multiply(q, wd(q, {"v0"}), wd(q, {"v0"})) == wd(q, {"v0"}));
  CHECK(multiply(q, wd(q, {"t"}), wd(q, {"v1"})) == wd(q, {"t", "v1"}));
}

TEST_CASE("enumeration on the single-edge graph") {
  const auto q = single_edge_graph();
  const auto len1 = enumerate_reduced(q, 1);
  CHECK(len1 == std::vector<Word>{wd(q, {"v0"}), wd(q, {"v1"}), wd(q, {"t"})});
  const auto len2 = enumerate_reduced(q, 2);
  const std::set<Word> got(len2.begin(), len2.end());
  const std::set<Word> expect = {
      wd(q, {"v0"}), wd(q, {"v1"}), wd(q, {"t"}),
      wd(q, {"v0", "t"}), wd(q, {"t", "v1"}), wd(q, {"v0", "v1"}),
      wd(q, {"v1", "v0"}), wd(q, {"t", "t"})};
  CHECK(got == expect);
  CHECK(len2.size() == 8);  // no duplicates
  CHECK_THROWS_AS(enumerate_reduced(q, kMaxEnumerateLength + 1), CapacityError);
}

TEST_CASE("single vertex graph enumerates only [v]") {
  const auto q = edgeless_graph(1);
  CHECK(enumerate_reduced(q, 5) == std::vector<Word>{{0}});
}

TEST_CASE("semigroup identity iff single vertex") {
  const auto one = DirectedMultigraph::make({"v"}, {{"e", "v", "v"}});
  auto id = semigroup_identity(one);
  REQUIRE(id.has_value());
  CHECK(*id == Word{0});
  CHECK(!semigroup_identity(single_edge_graph()).has_value());
  CHECK(semigroup_identity(edgeless_graph(1)).has_value());
}

TEST_CASE("word order is length first") {
  CHECK(word_less({5}, {0, 1}));
  CHECK(word_less({0, 1}, {0, 2}));
  CHECK(!word_less({0, 2}, {0, 1}));
  CHECK(!word_less({3}, {3}));
}

TEST_CASE("reduce agrees with the exhaustive rewriting oracle") {
  std::mt19937_64 rng(2002);
  std::map<Word, std::set<Word>> memo;
  for (int trial = 0; trial < 40; ++trial) {
    const auto q = random_graph(rng, 3, 3);
    memo.clear();
    for (int i = 0; i < 30; ++i) {
      const Word w = random_word(rng, q, 6);
      const auto nfs = all_normal_forms(q, w, memo);
      REQUIRE(nfs.size() == 1);  // local confluence at desk scale
      CHECK(*nfs.begin() == reduce(q, w));
    }
  }
}

TEST_CASE("reduce idempotence, homomorphism, associativity") {
  std::mt19937_64 rng(3003);
  for (int trial = 0; trial < 200; ++trial) {
    const auto q = random_graph(rng);
    const Word u = random_word(rng, q, 5), v = random_word(rng, q, 5),
               w = random_word(rng, q, 5);
    const Word ru = reduce(q, u);
    CHECK(reduce(q, ru) == ru);
    CHECK(is_reduced(q, ru));
    CHECK(ru.size() <= u.size());
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    CHECK(reduce(q, uv) == multiply(q, reduce(q, u), reduce(q, v)));
    CHECK(multiply(q, multiply(q, ru, reduce(q, v)), reduce(q, w)) ==
          multiply(q, ru, multiply(q, reduce(q, v), reduce(q, w))));
  }
}

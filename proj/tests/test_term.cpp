#include <vector>

#include "doctest.h"
#include "lgca/term.hpp"
#include "support/fixtures.hpp"

using namespace lgca;
using testing::thrown_code;
using testing::vs;
using testing::wd;

namespace {

// Builds the canonical term s[left] p{mid} s*[right]; the inputs must not
// normalize to zero.
CanonicalTerm term(const LabeledSpace& s, const std::string& left,
                   std::initializer_list<const char*> mid, const std::string& right) {
  auto t = canonicalize(s, wd(s.graph(), left), vs(s.graph(), mid), wd(s.graph(), right));
  REQUIRE(t.has_value());
  return *t;
}

AlgebraElement elem(const LabeledSpace& s, const std::string& left,
                    std::initializer_list<const char*> mid, const std::string& right) {
  return AlgebraElement::term(term(s, left, mid, right));
}

}  // namespace

TEST_SUITE_BEGIN("term");

TEST_CASE("prefix relation of word pairs") {
  LabeledGraph g = testing::fork_chain_graph();
  Word a = wd(g, "a"), b = wd(g, "b"), ab = wd(g, "ab");

  CHECK(word_case(a, a).tag == WordCase::equal);
  CHECK(word_case(Word{}, Word{}).tag == WordCase::equal);

  WordRelation r = word_case(a, ab);
  CHECK(r.tag == WordCase::right_extends);
  CHECK(r.tail == b);
  CHECK(word_case(Word{}, a).tag == WordCase::right_extends);

  WordRelation l = word_case(ab, a);
  CHECK(l.tag == WordCase::left_extends);
  CHECK(l.tail == b);
  CHECK(word_case(a, Word{}).tag == WordCase::left_extends);

  CHECK(word_case(a, b).tag == WordCase::orthogonal);
  CHECK(word_case(ab, wd(g, "b")).tag == WordCase::orthogonal);
}

TEST_CASE("canonicalization intersects the middle set with both word ranges") {
  LabeledSpace s = testing::fork_chain_space();
  const LabeledGraph& g = s.graph();

  auto t = canonicalize(s, Word{}, vs(g, {"v", "w", "x"}), wd(g, "a"));
  REQUIRE(t.has_value());
  CHECK(t->mid == vs(g, {"v", "w"}));
  CHECK(t->left.empty());
  CHECK(t->right == wd(g, "a"));

  // Disjoint from the word range: the zero element.
  CHECK_FALSE(canonicalize(s, wd(g, "a"), vs(g, {"x"}), Word{}).has_value());

  // Plain projection: untouched.
  auto p = canonicalize(s, Word{}, vs(g, {"v", "w"}), Word{});
  REQUIRE(p.has_value());
  CHECK(p->mid == vs(g, {"v", "w"}));

  // {u,v} survives normalization with empty words but is not a member.
  CHECK(thrown_code([&] {
          canonicalize(s, Word{}, vs(g, {"u", "v"}), Word{});
        }) == Errc::family_membership);
}

TEST_CASE("products resolve through the prefix case of the inner words") {
  LabeledSpace s = testing::fork_chain_space();

  CanonicalTerm mask = term(s, "a", {"v", "w"}, "a");
  CanonicalTerm unit_x = term(s, "ab", {"x"}, "ab");

  SUBCASE("equal inner words intersect the middles") {
    CHECK(star_product(s, mask, term(s, "a", {"v"}, "")) == elem(s, "a", {"v"}, ""));
    CHECK(star_product(s, term(s, "ab", {"x"}, "b"), term(s, "b", {"x"}, "")) ==
          elem(s, "ab", {"x"}, ""));
  }
  SUBCASE("the second term extends the first") {
    CHECK(star_product(s, mask, unit_x) == AlgebraElement::term(unit_x));
  }
  SUBCASE("the first term extends the second") {
    CHECK(star_product(s, unit_x, mask) == AlgebraElement::term(unit_x));
  }
  SUBCASE("unrelated inner words annihilate") {
    CHECK(star_product(s, term(s, "", {"v", "w"}, "a"), term(s, "b", {"x"}, "")).is_zero());
  }
}

TEST_CASE("loop-graph product laws, spot checks") {
  LabeledSpace s = testing::loop_exit_all_subsets();

  AlgebraElement pu = elem(s, "", {"u"}, "");
  AlgebraElement pv = elem(s, "", {"v"}, "");
  AlgebraElement apv = elem(s, "a", {"v"}, "");

  CHECK(mul(s, elem(s, "aa", {"u"}, "a"), elem(s, "a", {"u"}, "")) == elem(s, "aa", {"u"}, ""));
  CHECK(mul(s, pu, pv).is_zero());
  CHECK(mul(s, elem(s, "a", {"u"}, "a"), elem(s, "a", {"v"}, "a")).is_zero());

  // The range of {u} under a covers v, so p{u} does not annihilate s[a] p{v}.
  CHECK(mul(s, pu, apv) == apv);
  CHECK(mul(s, apv, pu).is_zero());
  CHECK(mul(s, adjoint(apv), pu) == adjoint(apv));

  // Longer inner word on the left: the tail range starts at the sink.
  CHECK(mul(s, elem(s, "a", {"u"}, "aa"), apv).is_zero());
}

TEST_CASE("products need a weakly left-resolving space") {
  LabeledSpace s = testing::vee_patched();
  CanonicalTerm t = term(s, "", {"v"}, "");
  CHECK(thrown_code([&] { star_product(s, t, t); }) == Errc::not_weakly_left_resolving);
}

TEST_CASE("multiplication is bilinear") {
  LabeledSpace s = testing::fork_chain_space();
  AlgebraElement x = elem(s, "a", {"v", "w"}, "a");
  AlgebraElement y = elem(s, "", {"v", "w", "x"}, "");
  AlgebraElement z = elem(s, "ab", {"x"}, "b") + elem(s, "", {"v"}, "");

  AlgebraElement lhs = mul(s, Rational(2) * x + Rational(1, 2) * y, z);
  AlgebraElement rhs = Rational(2) * mul(s, x, z) + Rational(1, 2) * mul(s, y, z);
  CHECK(lhs == rhs);
}

TEST_CASE("products associate on sampled terms") {
  for (const LabeledSpace& s : {testing::fork_chain_space(), testing::loop_exit_all_subsets()}) {
    std::vector<CanonicalTerm> ts = sample_canonical_terms(s, 6, 2024);
    for (const CanonicalTerm& a : ts)
      for (const CanonicalTerm& b : ts)
        for (const CanonicalTerm& c : ts) {
          AlgebraElement ea = AlgebraElement::term(a);
          AlgebraElement eb = AlgebraElement::term(b);
          AlgebraElement ec = AlgebraElement::term(c);
          CHECK(mul(s, mul(s, ea, eb), ec) == mul(s, ea, mul(s, eb, ec)));
        }
  }
}

TEST_CASE("adjoint is an involutive anti-homomorphism") {
  LabeledSpace s = testing::fork_chain_space();

  CHECK(adjoint(elem(s, "ab", {"x"}, "b")) == elem(s, "b", {"x"}, "ab"));
  CHECK(adjoint(elem(s, "", {"v", "w"}, "")) == elem(s, "", {"v", "w"}, ""));
  CHECK(adjoint(AlgebraElement{}).is_zero());

  std::vector<CanonicalTerm> ts = sample_canonical_terms(s, 8, 99);
  for (const CanonicalTerm& a : ts)
    for (const CanonicalTerm& b : ts) {
      AlgebraElement x = AlgebraElement::term(a), y = AlgebraElement::term(b);
      CHECK(adjoint(adjoint(x)) == x);
      CHECK(adjoint(mul(s, x, y)) == mul(s, adjoint(y), adjoint(x)));
    }
}

TEST_CASE("projection sums") {
  LabeledSpace s = testing::loop_exit_all_subsets();
  const LabeledGraph& g = s.graph();

  AlgebraElement sum = projection_sum(s, vs(g, {"u"}), vs(g, {"v"}));
  CHECK(sum == elem(s, "", {"u"}, "") + elem(s, "", {"v"}, ""));  // p{∅} is zero

  CHECK(projection_sum(s, vs(g, {"u"}), vs(g, {"u"})) == elem(s, "", {"u"}, ""));
  CHECK(projection_sum(s, vs(g, {"u"}), vs(g, {"u", "v"})).terms().size() == 1);

  LabeledSpace fork = testing::fork_chain_space();
  CHECK(thrown_code([&] {
          projection_sum(fork, vs(fork.graph(), {"u"}), vs(fork.graph(), {"v"}));
        }) == Errc::family_membership);
}

TEST_CASE("one-step expansion of sink-free sets") {
  LabeledSpace loop = testing::loop_exit_all_subsets();
  CHECK(expand_sink_free(loop, vs(loop.graph(), {"u"})) == elem(loop, "a", {"u", "v"}, "a"));

  LabeledSpace fork = testing::fork_chain_space();
  CHECK(expand_sink_free(fork, vs(fork.graph(), {"w"})) == elem(fork, "b", {"x"}, "b"));

  CHECK(thrown_code([&] {
          expand_sink_free(fork, vs(fork.graph(), {"u"}));  // not a member
        }) == Errc::family_membership);
  LabeledSpace span = testing::loop_exit_span();
  CHECK(thrown_code([&] {
          expand_sink_free(span, vs(span.graph(), {"u", "v"}));  // v is a sink
        }) == Errc::precondition);
}

TEST_CASE("sink-basis expansion of the full fork projection") {
  LabeledSpace s = testing::fork_chain_space();

  AlgebraElement out = expand_to_sink_basis(s, elem(s, "", {"v", "w", "x"}, ""));
  AlgebraElement expect =
      elem(s, "", {"v"}, "") + elem(s, "", {"x"}, "") + elem(s, "b", {"x"}, "b");
  CHECK(out == expect);

  // Terms whose middle is already minimal pass through unchanged.
  CHECK(expand_to_sink_basis(s, elem(s, "", {"v"}, "")) == elem(s, "", {"v"}, ""));

  // Words wrap around the expansion of the middle set.
  CHECK(expand_to_sink_basis(s, elem(s, "a", {"v", "w"}, "a")) ==
        elem(s, "a", {"v"}, "a") + elem(s, "ab", {"x"}, "ab"));
}

TEST_CASE("sink-basis expansion preconditions") {
  LabeledSpace loop = testing::loop_exit_all_subsets();
  CHECK(thrown_code([&] {
          expand_to_sink_basis(loop, AlgebraElement::term(term(loop, "", {"u"}, "")));
        }) == Errc::cyclic_graph);

  LabeledSpace vee = testing::vee_listed();
  CHECK(thrown_code([&] {
          expand_to_sink_basis(vee, AlgebraElement::term(term(vee, "", {"x"}, "")));
        }) == Errc::not_normal);
}

TEST_CASE("raw and relation-modulo equality") {
  LabeledSpace s = testing::fork_chain_space();

  AlgebraElement whole = elem(s, "", {"v", "w", "x"}, "");
  AlgebraElement split = elem(s, "", {"v", "w"}, "") + elem(s, "", {"x"}, "");
  CHECK_FALSE(equals(s, whole, split, EqualityMode::raw));
  CHECK(equals(s, whole, split, EqualityMode::modulo_relations));

  AlgebraElement vw = elem(s, "", {"v", "w"}, "");
  AlgebraElement vpw = elem(s, "", {"v"}, "") + elem(s, "", {"w"}, "");
  CHECK_FALSE(equals(s, vw, vpw, EqualityMode::raw));
  CHECK(equals(s, vw, vpw, EqualityMode::modulo_relations));

  // The one-step expansion is an equality, not just a bound.
  CHECK(equals(s, elem(s, "", {"w"}, ""), expand_sink_free(s, vs(s.graph(), {"w"})),
               EqualityMode::modulo_relations));

  LabeledSpace loop = testing::loop_exit_all_subsets();
  AlgebraElement pu = elem(loop, "", {"u"}, "");
  CHECK(equals(loop, pu, pu, EqualityMode::raw));
  CHECK(thrown_code([&] {
          equals(loop, pu, pu, EqualityMode::modulo_relations);
        }) == Errc::cyclic_graph);
}

TEST_CASE("term sampling is deterministic and canonical") {
  LabeledSpace s = testing::fork_chain_space();
  std::vector<CanonicalTerm> a = sample_canonical_terms(s, 12, 7);
  std::vector<CanonicalTerm> b = sample_canonical_terms(s, 12, 7);
  CHECK(a == b);
  CHECK(a.size() == 12);
  for (const CanonicalTerm& t : a) {
    CHECK_FALSE(t.mid.empty());
    CHECK(s.family().contains(t.mid));
    auto again = canonicalize(s, t.left, t.mid, t.right);
    REQUIRE(again.has_value());
    CHECK(*again == t);  // already normalized
  }
  CHECK(sample_canonical_terms(s, 12, 8) != a);
}

TEST_SUITE_END();

#include "lgca/term.hpp"

#include <random>

#include "lgca/hereditary.hpp"

namespace lgca {

WordRelation word_case(const Word& mu, const Word& nu) {
  const Word& shorter = mu.size() <= nu.size() ? mu : nu;
  const Word& longer = mu.size() <= nu.size() ? nu : mu;
  for (std::size_t i = 0; i < shorter.size(); ++i)
    if (shorter[i] != longer[i]) return {WordCase::orthogonal, {}};
  if (mu.size() == nu.size()) return {WordCase::equal, {}};
  Word tail(std::vector<int>(longer.symbols().begin() + shorter.size(),
                             longer.symbols().end()));
  return {nu.size() > mu.size() ? WordCase::right_extends : WordCase::left_extends,
          std::move(tail)};
}

std::optional<CanonicalTerm> canonicalize(const LabeledSpace& s, const Word& mu, VertexSet a,
                                          const Word& nu) {
  const LabeledGraph& g = s.graph();
  VertexSet mid = a;
  if (!mu.empty()) mid = mid & range_of_word(g, mu);
  if (!nu.empty()) mid = mid & range_of_word(g, nu);
  if (mid.empty()) return std::nullopt;
  if (!s.family().contains(mid))
    fail(Errc::family_membership,
         "normalized middle set " + render(g, mid) + " is not a family member");
  return CanonicalTerm{mu, mid, nu};
}

namespace {

void require_wlr(const LabeledSpace& s) {
  const auto& w = s.report().weakly_left_resolving;
  if (!w.ok)
    fail(Errc::not_weakly_left_resolving,
         "space is not weakly left-resolving: " + w.detail);
}

}  // namespace

AlgebraElement star_product(const LabeledSpace& s, const CanonicalTerm& t1,
                            const CanonicalTerm& t2) {
  require_wlr(s);
  const LabeledGraph& g = s.graph();
  WordRelation rel = word_case(t1.right, t2.left);
  std::optional<CanonicalTerm> t;
  switch (rel.tag) {
    case WordCase::equal:
      t = canonicalize(s, t1.left, t1.mid & t2.mid, t2.right);
      break;
    case WordCase::right_extends:  // t2.left = t1.right · γ
      t = canonicalize(s, t1.left.concat(rel.tail),
                       relative_range(g, t1.mid, rel.tail) & t2.mid, t2.right);
      break;
    case WordCase::left_extends:  // t1.right = t2.left · γ
      t = canonicalize(s, t1.left, t1.mid & relative_range(g, t2.mid, rel.tail),
                       t2.right.concat(rel.tail));
      break;
    case WordCase::orthogonal:
      break;
  }
  return t ? AlgebraElement::term(*t) : AlgebraElement{};
}

AlgebraElement mul(const LabeledSpace& s, const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out;
  for (const auto& [t1, c1] : a.terms())
    for (const auto& [t2, c2] : b.terms()) {
      AlgebraElement p = star_product(s, t1, t2);
      p *= c1 * c2;
      out += p;
    }
  return out;
}

AlgebraElement adjoint(const AlgebraElement& e) {
  AlgebraElement out;
  for (const auto& [t, c] : e.terms()) out.add({t.right, t.mid, t.left}, c);
  return out;
}

AlgebraElement projection_sum(const LabeledSpace& s, VertexSet a, VertexSet b) {
  const SetFamily& fam = s.family();
  for (VertexSet x : {a, b, a & b, a | b})
    if (!fam.contains(x))
      fail(Errc::family_membership,
           "projection_sum needs " + render(s.graph(), x) + " in the family");
  AlgebraElement out;
  if (auto t = canonicalize(s, {}, a, {})) out += AlgebraElement::term(*t);
  if (auto t = canonicalize(s, {}, b, {})) out += AlgebraElement::term(*t);
  if (auto t = canonicalize(s, {}, a & b, {})) out -= AlgebraElement::term(*t);
  return out;
}

AlgebraElement expand_sink_free(const LabeledSpace& s, VertexSet a) {
  const LabeledGraph& g = s.graph();
  if (!s.family().contains(a))
    fail(Errc::family_membership, render(g, a) + " is not a family member");
  if (a.intersects(sinks(g)))
    fail(Errc::precondition,
         "one-step expansion needs a sink-free set, " + render(g, a) + " has sinks");
  AlgebraElement out;
  for (int l : out_labels(g, a)) {
    Word w({l});
    VertexSet r = relative_range(g, a, w);
    if (!s.family().contains(r))
      fail(Errc::family_membership,
           "r(" + render(g, a) + ", " + g.label_name(l) + ") is not a family member");
    out.add({w, r, w}, 1);
  }
  return out;
}

namespace {

struct SinkExpander {
  const LabeledSpace& space;
  VertexSet sink_set;
  std::vector<VertexSet> minimal;  // pairwise disjoint, covers every member's sink part

  void expand(const Word& left, VertexSet mid, const Word& right, const Rational& coeff,
              AlgebraElement& out) const {
    const LabeledGraph& g = space.graph();
    VertexSet sink_part = mid & sink_set;
    if (!sink_part.empty()) {
      VertexSet covered;
      for (VertexSet v : minimal)
        if (v.subset_of(sink_part)) {
          out.add({left, v, right}, coeff);
          covered = covered | v;
        }
      if (covered != sink_part)
        fail(Errc::precondition, "sink part " + render(g, sink_part) +
                                     " is not a union of minimal sink sets");
    }
    VertexSet rest = mid - sink_set;
    if (rest.empty()) return;
    for (int l : out_labels(g, rest)) {
      Word w({l});
      VertexSet r = relative_range(g, rest, w);
      // r stays inside both words' extended ranges because mid was
      // normalized, so the recursive terms are canonical as built.
      expand(left.concat(w), r, right.concat(w), coeff, out);
    }
  }
};

}  // namespace

AlgebraElement expand_to_sink_basis(const LabeledSpace& s, const AlgebraElement& e) {
  if (!s.report().acyclic)
    fail(Errc::cyclic_graph, "sink-basis expansion needs an acyclic graph");
  if (!s.report().normal)
    fail(Errc::not_normal, "sink-basis expansion needs a normal space");
  SinkExpander ex{s, sinks(s.graph()), minimal_sink_sets(s)};
  AlgebraElement out;
  for (const auto& [t, c] : e.terms()) ex.expand(t.left, t.mid, t.right, c, out);
  return out;
}

bool equals(const LabeledSpace& s, const AlgebraElement& a, const AlgebraElement& b,
            EqualityMode mode) {
  if (mode == EqualityMode::raw) return a == b;
  if (!s.report().acyclic)
    fail(Errc::cyclic_graph,
         "symbolic equality undecided: cyclic graph, no sink basis to compare in");
  return expand_to_sink_basis(s, a) == expand_to_sink_basis(s, b);
}

std::vector<CanonicalTerm> sample_canonical_terms(const LabeledSpace& s, int count,
                                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Word> words = enumerate_words(s.graph(), 4);
  words.push_back({});  // the empty word is a valid side
  const auto& members = s.family().members();

  std::vector<CanonicalTerm> out;
  int attempts = 0;
  while (static_cast<int>(out.size()) < count && attempts < count * 200) {
    ++attempts;
    const Word& mu = words[rng() % words.size()];
    const Word& nu = words[rng() % words.size()];
    VertexSet a = members[rng() % members.size()];
    if (auto t = canonicalize(s, mu, a, nu)) out.push_back(*t);
  }
  return out;
}

}  // namespace lgca

#include "lgca/decompose.hpp"

#include "lgca/hereditary.hpp"

namespace lgca {

std::vector<Word> block_words(const LabeledSpace& s, VertexSet v) {
  const LabeledGraph& g = s.graph();
  if (!is_acyclic(g)) fail(Errc::cyclic_graph, "block basis needs an acyclic graph");
  if (!is_minimal_sinks_set(s, v))
    fail(Errc::precondition, render(g, v) + " is not a minimal sink set");
  std::vector<Word> out{Word{}};
  for (const Word& w : enumerate_words(g))
    if (v.subset_of(range_of_word(g, w))) out.push_back(w);
  return out;
}

Decomposition decompose(const LabeledSpace& s) {
  const SpaceReport& rep = s.report();
  if (!rep.acyclic) fail(Errc::cyclic_graph, "graph is cyclic");
  if (!s.family().contains(sinks(s.graph()))) fail(Errc::sinks_not_in_family, "E^0_sink ∉ B");
  if (!rep.normal) {
    std::string why = !rep.accommodating.ok ? rep.accommodating.detail
                                            : rep.non_degenerate.detail;
    fail(Errc::not_normal, "space is not normal: " + why);
  }
  if (!rep.weakly_left_resolving.ok)
    fail(Errc::not_weakly_left_resolving,
         "space is not weakly left-resolving: " + rep.weakly_left_resolving.detail);

  Decomposition out;
  for (VertexSet v : minimal_sink_sets(s)) out.blocks.push_back({v, block_words(s, v)});
  return out;
}

}  // namespace lgca

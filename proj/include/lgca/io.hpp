#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lgca/decompose.hpp"
#include "lgca/rep.hpp"
#include "lgca/term.hpp"

namespace lgca {

// Graph description files, one directive per line, '#' starts a comment:
//
//   vertices: u v w x
//   edge: u a v
//   family: normal-closure | accommodating-closure | explicit
//   set: v x
//
// 'vertices:' must appear exactly once, before any edge. 'family:' is
// required. 'set:' lines are explicit members or closure seeds depending on
// the directive; a bare 'set:' denotes the empty set. Parse failures carry
// the 1-based line number.
enum class FamilyMode { explicit_sets, accommodating_closure, normal_closure };

struct GraphFile {
  LabeledGraph graph;
  FamilyMode mode;
  std::vector<VertexSet> sets;
};

GraphFile parse_graph_file(const std::string& text);

// Builds the labeled space a file describes, optionally overriding the
// family directive (the CLI's closure subcommand does).
LabeledSpace make_space(const GraphFile& f, ClosureOptions opts = {},
                        std::optional<FamilyMode> override_mode = std::nullopt);

// Splits concatenated label names into a word, preferring longer labels at
// each position and backtracking when needed. Empty input is the empty word.
std::optional<Word> segment_word(const LabeledGraph& g, const std::string& text);

// "{v,w}" or "v,w" or "{}" — vertex names against the graph.
VertexSet parse_vertex_set(const LabeledGraph& g, const std::string& text);

// Term expressions:
//
//   element    := ['-'] signedterm (('+'|'-') signedterm)* | '0'
//   signedterm := [rational '*'] atom
//   rational   := ['-'] int ['/' int]
//   atom       := ['s[' word ']'] 'p{' idlist '}' ['s*[' word ']']
//
// Words are label names run together; idlist is comma-separated vertex
// names (empty for ∅). Atoms normalize on the spot, so the result is a
// canonical element of the given space.
AlgebraElement parse_term(const LabeledSpace& s, const std::string& text);

// Renderers. Elements print terms in canonical order, joined with ' + ' /
// ' - '; empty word brackets are dropped (a bare projection prints as
// 'p{v}'); the zero element prints as '0'. Rendered text re-parses to the
// same value.
std::string render(const LabeledGraph& g, const CanonicalTerm& t);
std::string render(const LabeledGraph& g, const AlgebraElement& e);
std::string render_family(const LabeledGraph& g, const SetFamily& fam);  // one set per line
std::string render_decomposition(const LabeledGraph& g, const Decomposition& d);

// One matrix per generator: a '# gen <name> dim N' header, then N rows of
// space-separated integers.
void dump_matrices(std::ostream& os, const LabeledGraph& g, const Rep& r);

}  // namespace lgca

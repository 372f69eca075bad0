#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgca/decompose.hpp"
#include "lgca/family.hpp"
#include "lgca/graph.hpp"
#include "lgca/rational.hpp"

namespace lgca::testing {

// Vertex set from names, e.g. vs(g, {"v", "w"}).
VertexSet vs(const LabeledGraph& g, std::initializer_list<const char*> names);

// Word from concatenated label names, e.g. wd(g, "ab"). Throws
// std::runtime_error when the text does not segment.
Word wd(const LabeledGraph& g, const std::string& text);

// Runs fn, which must throw lgca::Error, and returns its code.
Errc thrown_code(const std::function<void()>& fn);

// u --a--> u (loop), u --a--> v. Two standard families.
LabeledGraph loop_exit_graph();
LabeledSpace loop_exit_all_subsets();  // {∅,{u},{v},{u,v}}
LabeledSpace loop_exit_span();         // {∅,{u,v}}

// u --a--> v, u --a--> w, w --b--> x. Family: normal closure of {{v,x}},
// the full 8-subset lattice of {v,w,x}.
LabeledGraph fork_chain_graph();
LabeledSpace fork_chain_space();
LabeledSpace fork_chain_coarse();  // {∅,{x},{v,w},{v,w,x}}

// u --a--> w, v --b--> x, w --b--> x. Listed family {∅,{v,w},{w},{x}} and
// the {v}-augmented variant.
LabeledGraph vee_graph();
LabeledSpace vee_listed();
LabeledSpace vee_patched();

// Path census from the raw edge list alone: every realized label word
// mapped to the set of path endpoints. Independent of relative_range and
// enumerate_words on purpose; requires an acyclic graph.
std::map<std::vector<int>, VertexSet> word_census(const LabeledGraph& g);

// 1 (for the empty word) + number of census words whose endpoint set
// contains v.
int oracle_block_size(const LabeledGraph& g, VertexSet v);

// Rank of the row span, by Gaussian elimination over exact rationals.
int rational_rank(std::vector<std::vector<Rational>> rows);

// Absolute path of a file under tests/fixtures.
std::string fixture_path(const std::string& name);

std::string read_file(const std::string& path);

struct CorpusOptions {
  int count = 100;
  std::uint64_t master_seed = 987654321;
  int max_rep_dim = 48;
};

// Random small acyclic labeled spaces: 2..6 vertices, 1..8 forward edges,
// 1..3 labels, normal closure of {E^0_sink} plus sometimes one extra seed.
// Only spaces accepted by decompose (normal, weakly left-resolving, sink
// set present, rep dimension within bounds) are kept; generation retries
// until `count` spaces pass.
std::vector<LabeledSpace> random_corpus(const CorpusOptions& opts = {});

}  // namespace lgca::testing

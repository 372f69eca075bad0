#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "lgca/decompose.hpp"
#include "lgca/hereditary.hpp"
#include "support/fixtures.hpp"

using namespace lgca;
using testing::thrown_code;
using testing::vs;
using testing::wd;

TEST_SUITE_BEGIN("decompose");

TEST_CASE("fork-chain block structure") {
  LabeledSpace s = testing::fork_chain_space();
  const LabeledGraph& g = s.graph();

  Decomposition d = decompose(s);
  REQUIRE(d.blocks.size() == 2);

  CHECK(d.blocks[0].sink_set == vs(g, {"v"}));
  CHECK(d.blocks[0].basis == std::vector<Word>{Word{}, wd(g, "a")});
  CHECK(d.blocks[0].size() == 2);

  CHECK(d.blocks[1].sink_set == vs(g, {"x"}));
  CHECK(d.blocks[1].basis == std::vector<Word>{Word{}, wd(g, "b"), wd(g, "ab")});
  CHECK(d.blocks[1].size() == 3);

  CHECK(d.total_dim() == 5);
  CHECK(d.total_matrix_dim() == 13);
}

TEST_CASE("precondition failures carry distinct codes, checked in order") {
  CHECK(thrown_code([] { decompose(testing::loop_exit_all_subsets()); }) == Errc::cyclic_graph);

  try {
    decompose(testing::fork_chain_coarse());
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::sinks_not_in_family);
    CHECK(std::string(e.what()) == "E^0_sink ∉ B");
  }

  CHECK(thrown_code([] { decompose(testing::vee_listed()); }) == Errc::not_normal);

  // Normal closure of {{x},{v}} over the vee graph is normal and has its
  // sink set, but fails weak left-resolution at the pair {v}, {w}.
  LabeledGraph g = testing::vee_graph();
  SetFamily fam = normal_closure(g, SetFamily({vs(g, {"x"}), vs(g, {"v"})}));
  LabeledSpace s(g, fam);
  REQUIRE(s.report().normal);
  CHECK(thrown_code([&] { decompose(s); }) == Errc::not_weakly_left_resolving);
}

TEST_CASE("block word enumeration and its preconditions") {
  LabeledSpace s = testing::fork_chain_space();
  const LabeledGraph& g = s.graph();

  CHECK(block_words(s, vs(g, {"x"})) ==
        std::vector<Word>{Word{}, wd(g, "b"), wd(g, "ab")});

  CHECK(thrown_code([&] { block_words(s, vs(g, {"v", "x"})); }) == Errc::precondition);
  CHECK(thrown_code([&] { block_words(s, vs(g, {"w"})); }) == Errc::precondition);

  LabeledSpace loop = testing::loop_exit_span();
  CHECK(thrown_code([&] {
          block_words(loop, vs(loop.graph(), {"v"}));
        }) == Errc::cyclic_graph);
}

TEST_CASE("graph of isolated sinks yields one trivial block") {
  LabeledGraph g({"u", "v"}, {});
  LabeledSpace s(g, SetFamily({VertexSet{}, VertexSet::all(2)}));

  Decomposition d = decompose(s);
  REQUIRE(d.blocks.size() == 1);
  CHECK(d.blocks[0].sink_set == VertexSet::all(2));
  CHECK(d.blocks[0].basis == std::vector<Word>{Word{}});
  CHECK(d.total_matrix_dim() == 1);
}

TEST_CASE("block sizes agree with a raw path census") {
  testing::CorpusOptions opts;
  opts.count = 15;
  opts.master_seed = 1234567;

  std::vector<LabeledSpace> corpus = testing::random_corpus(opts);
  corpus.push_back(testing::fork_chain_space());

  for (const LabeledSpace& s : corpus) {
    Decomposition d = decompose(s);
    VertexSet seen;
    for (const Block& b : d.blocks) {
      CHECK(b.size() == testing::oracle_block_size(s.graph(), b.sink_set));
      // Minimal sink sets partition the sinks.
      CHECK_FALSE(seen.intersects(b.sink_set));
      seen = seen | b.sink_set;
    }
    CHECK(seen == sinks(s.graph()));
  }
}

TEST_SUITE_END();

#include "support/fixtures.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "lgca/io.hpp"

namespace lgca::testing {

VertexSet vs(const LabeledGraph& g, std::initializer_list<const char*> names) {
  VertexSet s;
  for (const char* n : names) {
    auto v = g.vertex_index(n);
    if (!v) throw std::runtime_error(std::string("no such vertex: ") + n);
    s.insert(*v);
  }
  return s;
}

Word wd(const LabeledGraph& g, const std::string& text) {
  auto w = segment_word(g, text);
  if (!w) throw std::runtime_error("unsegmentable word: " + text);
  return *w;
}

Errc thrown_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  throw std::runtime_error("expected an lgca::Error, none was thrown");
}

LabeledGraph loop_exit_graph() {
  return LabeledGraph({"u", "v"}, {{"u", "a", "u"}, {"u", "a", "v"}});
}

LabeledSpace loop_exit_all_subsets() {
  LabeledGraph g = loop_exit_graph();
  return LabeledSpace(g, SetFamily({VertexSet{}, vs(g, {"u"}), vs(g, {"v"}), vs(g, {"u", "v"})}));
}

LabeledSpace loop_exit_span() {
  LabeledGraph g = loop_exit_graph();
  return LabeledSpace(g, SetFamily({VertexSet{}, vs(g, {"u", "v"})}));
}

LabeledGraph fork_chain_graph() {
  return LabeledGraph({"u", "v", "w", "x"},
                      {{"u", "a", "v"}, {"u", "a", "w"}, {"w", "b", "x"}});
}

LabeledSpace fork_chain_space() {
  LabeledGraph g = fork_chain_graph();
  return LabeledSpace(g, normal_closure(g, SetFamily({vs(g, {"v", "x"})})));
}

LabeledSpace fork_chain_coarse() {
  LabeledGraph g = fork_chain_graph();
  return LabeledSpace(
      g, SetFamily({VertexSet{}, vs(g, {"x"}), vs(g, {"v", "w"}), vs(g, {"v", "w", "x"})}));
}

LabeledGraph vee_graph() {
  return LabeledGraph({"u", "v", "w", "x"},
                      {{"u", "a", "w"}, {"v", "b", "x"}, {"w", "b", "x"}});
}

LabeledSpace vee_listed() {
  LabeledGraph g = vee_graph();
  return LabeledSpace(
      g, SetFamily({VertexSet{}, vs(g, {"v", "w"}), vs(g, {"w"}), vs(g, {"x"})}));
}

LabeledSpace vee_patched() {
  LabeledGraph g = vee_graph();
  return LabeledSpace(g, SetFamily({VertexSet{}, vs(g, {"v", "w"}), vs(g, {"w"}), vs(g, {"x"}),
                                    vs(g, {"v"})}));
}

namespace {

void census_walk(const LabeledGraph& g, int v, std::vector<int>& word,
                 std::map<std::vector<int>, VertexSet>& out) {
  for (const Edge& e : g.edges()) {
    if (e.src != v) continue;
    word.push_back(e.label);
    out[word].insert(e.dst);
    census_walk(g, e.dst, word, out);
    word.pop_back();
  }
}

}  // namespace

std::map<std::vector<int>, VertexSet> word_census(const LabeledGraph& g) {
  if (!is_acyclic(g)) throw std::runtime_error("word_census needs an acyclic graph");
  std::map<std::vector<int>, VertexSet> out;
  std::vector<int> word;
  for (int v = 0; v < g.vertex_count(); ++v) census_walk(g, v, word, out);
  return out;
}

int oracle_block_size(const LabeledGraph& g, VertexSet v) {
  int n = 1;
  for (const auto& [word, range] : word_census(g))
    if (v.subset_of(range)) ++n;
  return n;
}

int rational_rank(std::vector<std::vector<Rational>> rows) {
  int rank = 0;
  std::size_t col = 0, width = rows.empty() ? 0 : rows[0].size();
  for (; col < width && rank < static_cast<int>(rows.size()); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
    const std::vector<Rational>& p = rows[static_cast<std::size_t>(rank)];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == static_cast<std::size_t>(rank) || rows[i][col].is_zero()) continue;
      Rational f = rows[i][col] / p[col];
      for (std::size_t j = col; j < width; ++j) rows[i][j] -= f * p[j];
    }
    ++rank;
  }
  return rank;
}

std::string fixture_path(const std::string& name) {
  return std::string(FIXTURE_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<LabeledSpace> random_corpus(const CorpusOptions& opts) {
  std::vector<LabeledSpace> out;
  const int max_attempts = opts.count * 200;
  for (int attempt = 0; attempt < max_attempts && static_cast<int>(out.size()) < opts.count;
       ++attempt) {
    std::mt19937_64 rng(opts.master_seed + static_cast<std::uint64_t>(attempt));
    auto draw = [&rng](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };

    int nv = 2 + draw(5);
    int nl = 1 + draw(3);
    int ne = 1 + draw(8);
    bool force_left_resolving = draw(2) == 0;

    std::vector<std::string> vnames;
    for (int i = 0; i < nv; ++i) vnames.push_back(std::string(1, static_cast<char>('p' + i)));
    std::vector<std::string> lnames;
    for (int i = 0; i < nl; ++i) lnames.push_back(std::string(1, static_cast<char>('a' + i)));

    // Edges only run from lower to higher index, so the graph is acyclic and
    // the last vertex is always a sink.
    std::vector<std::array<std::string, 3>> edges;
    std::vector<std::pair<int, int>> used;  // (label, dst), for the resolving guard
    for (int i = 0; i < ne; ++i) {
      int src = draw(nv - 1);
      int dst = src + 1 + draw(nv - 1 - src);
      int label = draw(nl);
      if (force_left_resolving) {
        bool taken = false;
        for (auto [l, d] : used)
          if (l == label && d == dst) taken = true;
        if (taken) continue;
        used.emplace_back(label, dst);
      }
      edges.push_back({vnames[static_cast<std::size_t>(src)],
                       lnames[static_cast<std::size_t>(label)],
                       vnames[static_cast<std::size_t>(dst)]});
    }
    if (edges.empty()) continue;

    try {
      LabeledGraph g(vnames, edges);
      std::vector<VertexSet> seeds = {sinks(g)};
      if (draw(2) == 0) {
        VertexSet extra{1 + (rng() % ((std::uint64_t{1} << nv) - 1))};
        seeds.push_back(extra);
      }
      LabeledSpace s(g, normal_closure(g, SetFamily(seeds)));
      const SpaceReport& rep = s.report();
      if (!rep.normal || !rep.weakly_left_resolving.ok || !rep.sinks_in_family) continue;
      Decomposition d = decompose(s);
      if (d.total_dim() > opts.max_rep_dim) continue;
      out.push_back(std::move(s));
    } catch (const Error&) {
      continue;
    }
  }
  if (static_cast<int>(out.size()) < opts.count)
    throw std::runtime_error("random corpus generation exhausted its attempt budget");
  return out;
}

}  // namespace lgca::testing

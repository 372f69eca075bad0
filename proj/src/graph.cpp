#include "lgca/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lgca {

LabeledGraph::LabeledGraph(std::vector<std::string> vertices,
                           const std::vector<std::array<std::string, 3>>& edges)
    : vertices_(std::move(vertices)) {
  if (vertices_.empty()) fail(Errc::parse, "graph needs at least one vertex");
  if (vertices_.size() > kMaxVertices)
    fail(Errc::too_many_vertices,
         "graph has " + std::to_string(vertices_.size()) + " vertices, limit is " +
             std::to_string(kMaxVertices));

  std::map<std::string, int> vidx;
  for (int i = 0; i < vertex_count(); ++i) {
    if (!vidx.emplace(vertices_[i], i).second)
      fail(Errc::parse, "duplicate vertex '" + vertices_[i] + "'");
  }

  std::set<std::string> labels;
  for (const auto& e : edges) labels.insert(e[1]);
  alphabet_.assign(labels.begin(), labels.end());  // std::set is already sorted
  std::map<std::string, int> lidx;
  for (int i = 0; i < label_count(); ++i) lidx.emplace(alphabet_[i], i);

  step_.assign(static_cast<std::size_t>(vertex_count()) * std::max(label_count(), 1), {});
  label_src_.assign(std::max(label_count(), 1), {});

  std::set<std::tuple<int, int, int>> seen;
  for (const auto& e : edges) {
    auto s = vidx.find(e[0]);
    auto d = vidx.find(e[2]);
    if (s == vidx.end()) fail(Errc::unknown_vertex, "undeclared vertex '" + e[0] + "'");
    if (d == vidx.end()) fail(Errc::unknown_vertex, "undeclared vertex '" + e[2] + "'");
    int l = lidx.at(e[1]);
    if (!seen.emplace(s->second, l, d->second).second) continue;  // parallel duplicate
    edges_.push_back({s->second, l, d->second});
    step_[s->second * label_count() + l].insert(d->second);
    label_src_[l].insert(s->second);
  }
}

std::optional<int> LabeledGraph::vertex_index(const std::string& name) const {
  for (int i = 0; i < vertex_count(); ++i)
    if (vertices_[i] == name) return i;
  return std::nullopt;
}

std::optional<int> LabeledGraph::label_index(const std::string& name) const {
  auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), name);
  if (it != alphabet_.end() && *it == name)
    return static_cast<int>(it - alphabet_.begin());
  return std::nullopt;
}

Word LabeledGraph::word_from_symbols(const std::vector<std::string>& symbols) const {
  Word w;
  for (const auto& s : symbols) {
    auto l = label_index(s);
    if (!l) fail(Errc::unknown_label, "unknown label '" + s + "'");
    w.push_back(*l);
  }
  return w;
}

VertexSet sinks(const LabeledGraph& g) {
  VertexSet out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    bool emits = false;
    for (int l = 0; l < g.label_count() && !emits; ++l)
      emits = !g.step(v, l).empty();
    if (!emits) out.insert(v);
  }
  return out;
}

LeftResolvingCheck is_left_resolving(const LabeledGraph& g) {
  // Count incoming edges per (target, label); a second arrival is a witness.
  std::map<std::pair<int, int>, int> incoming;
  for (const auto& e : g.edges()) {
    if (++incoming[{e.dst, e.label}] > 1) return {false, e.dst, e.label};
  }
  return {};
}

VertexSet relative_range(const LabeledGraph& g, VertexSet a, const Word& w) {
  VertexSet cur = a;
  for (std::size_t i = 0; i < w.size(); ++i) {
    VertexSet next;
    cur.for_each([&](int v) { next = next | g.step(v, w[i]); });
    cur = next;
    if (cur.empty()) break;
  }
  return cur;
}

VertexSet range_of_word(const LabeledGraph& g, const Word& w) {
  if (w.empty()) fail(Errc::empty_word, "range is defined for nonempty words only");
  return relative_range(g, g.all_vertices(), w);
}

VertexSet source_of_word(const LabeledGraph& g, const Word& w) {
  if (w.empty()) fail(Errc::empty_word, "source is defined for nonempty words only");
  // Walk backwards: vertices from which the suffix w[i..] is realizable.
  VertexSet cur = g.all_vertices();
  for (std::size_t i = w.size(); i-- > 0;) {
    VertexSet prev;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (g.step(v, w[i]).intersects(cur)) prev.insert(v);
    cur = prev;
    if (cur.empty()) break;
  }
  return cur;
}

std::vector<int> out_labels(const LabeledGraph& g, VertexSet a) {
  std::vector<int> out;
  for (int l = 0; l < g.label_count(); ++l)
    if (g.label_sources(l).intersects(a)) out.push_back(l);
  return out;
}

bool is_acyclic(const LabeledGraph& g) {
  // Iterative three-color DFS over the unlabeled edge relation.
  enum { White, Gray, Black };
  std::vector<int> color(g.vertex_count(), White);
  std::vector<VertexSet> succ(g.vertex_count());
  for (const auto& e : g.edges()) succ[e.src].insert(e.dst);

  for (int root = 0; root < g.vertex_count(); ++root) {
    if (color[root] != White) continue;
    std::vector<std::pair<int, std::uint64_t>> stack{{root, succ[root].bits}};
    color[root] = Gray;
    while (!stack.empty()) {
      auto& [v, rest] = stack.back();
      if (rest == 0) {
        color[v] = Black;
        stack.pop_back();
        continue;
      }
      int next = std::countr_zero(rest);
      rest &= rest - 1;
      if (color[next] == Gray) return false;
      if (color[next] == White) {
        color[next] = Gray;
        stack.emplace_back(next, succ[next].bits);
      }
    }
  }
  return true;
}

std::vector<Word> enumerate_words(const LabeledGraph& g, std::optional<int> max_len) {
  if (!max_len && !is_acyclic(g))
    fail(Errc::infinite_language, "cyclic graph has infinitely many words; pass a length bound");

  std::vector<Word> out;
  // Frontier of (word, endpoint set); at each level extend by every label.
  // Words come out in shortlex order because levels go by length and the
  // frontier stays sorted by symbol sequence.
  std::vector<std::pair<Word, VertexSet>> frontier;
  for (int l = 0; l < g.label_count(); ++l) {
    VertexSet r = relative_range(g, g.all_vertices(), Word({l}));
    if (!r.empty()) frontier.emplace_back(Word({l}), r);
  }
  int len = 1;
  while (!frontier.empty() && (!max_len || len <= *max_len)) {
    std::vector<std::pair<Word, VertexSet>> next;
    for (const auto& [w, r] : frontier) {
      out.push_back(w);
      for (int l = 0; l < g.label_count(); ++l) {
        VertexSet r2 = relative_range(g, r, Word({l}));
        if (!r2.empty()) {
          Word w2 = w;
          w2.push_back(l);
          next.emplace_back(std::move(w2), r2);
        }
      }
    }
    frontier = std::move(next);
    ++len;
  }
  return out;
}

std::string render(const LabeledGraph& g, VertexSet s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int v) {
    if (!first) out += ",";
    out += g.vertex_name(v);
    first = false;
  });
  return out + "}";
}

std::string render(const LabeledGraph& g, const Word& w) {
  if (w.empty()) return "ε";
  std::string out;
  for (int s : w.symbols()) out += g.label_name(s);
  return out;
}

}  // namespace lgca

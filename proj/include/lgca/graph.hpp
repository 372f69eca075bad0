#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lgca/error.hpp"

namespace lgca {

// Subset of a graph's vertices, stored as a bit mask over vertex indices.
// Graphs are capped at 64 vertices so that set algebra is single-word.
// Ordering is by cardinality first, then by mask value; this is the canonical
// order used everywhere sets are enumerated or printed.
struct VertexSet {
  std::uint64_t bits = 0;

  static VertexSet single(int v) { return {std::uint64_t{1} << v}; }
  static VertexSet all(int n) {
    return {n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }

  bool empty() const { return bits == 0; }
  int count() const { return std::popcount(bits); }
  bool contains(int v) const { return (bits >> v) & 1; }
  void insert(int v) { bits |= std::uint64_t{1} << v; }
  bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }
  bool intersects(VertexSet o) const { return (bits & o.bits) != 0; }

  friend VertexSet operator&(VertexSet a, VertexSet b) { return {a.bits & b.bits}; }
  friend VertexSet operator|(VertexSet a, VertexSet b) { return {a.bits | b.bits}; }
  // Relative complement a \ b.
  friend VertexSet operator-(VertexSet a, VertexSet b) { return {a.bits & ~b.bits}; }
  friend bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }
  friend bool operator!=(VertexSet a, VertexSet b) { return a.bits != b.bits; }
  friend bool operator<(VertexSet a, VertexSet b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a.bits < b.bits;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t m = bits; m != 0; m &= m - 1)
      fn(std::countr_zero(m));
  }
};

// Word over the label alphabet, as a sequence of label indices. Compared in
// shortlex order (length first, then symbol indices); label indices follow
// the lexicographic order of the label names, so shortlex on indices matches
// shortlex on the printed symbols.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<int> syms) : syms_(std::move(syms)) {}

  bool empty() const { return syms_.empty(); }
  std::size_t size() const { return syms_.size(); }
  int operator[](std::size_t i) const { return syms_[i]; }
  const std::vector<int>& symbols() const { return syms_; }

  void push_back(int s) { syms_.push_back(s); }

  Word concat(const Word& o) const {
    Word w = *this;
    w.syms_.insert(w.syms_.end(), o.syms_.begin(), o.syms_.end());
    return w;
  }

  friend bool operator==(const Word& a, const Word& b) { return a.syms_ == b.syms_; }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
  friend bool operator<(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.syms_ < b.syms_;
  }

private:
  std::vector<int> syms_;
};

struct Edge {
  int src;
  int label;
  int dst;
};

// Finite directed graph with edge labels. Vertices keep their declaration
// order; the alphabet is the set of labels actually used, sorted by name.
// Parallel edges with identical (source, label, target) collapse to one,
// since every operation here depends only on label-path existence.
class LabeledGraph {
public:
  static constexpr int kMaxVertices = 64;

  LabeledGraph(std::vector<std::string> vertices,
               const std::vector<std::array<std::string, 3>>& edges);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const std::string& vertex_name(int v) const { return vertices_[v]; }
  std::optional<int> vertex_index(const std::string& name) const;
  VertexSet all_vertices() const { return VertexSet::all(vertex_count()); }

  int label_count() const { return static_cast<int>(alphabet_.size()); }
  const std::string& label_name(int l) const { return alphabet_[l]; }
  std::optional<int> label_index(const std::string& name) const;
  const std::vector<std::string>& alphabet() const { return alphabet_; }

  const std::vector<Edge>& edges() const { return edges_; }

  // Endpoints of label-l edges leaving v.
  VertexSet step(int v, int l) const { return step_[v * label_count() + l]; }
  // Sources of label-l edges.
  VertexSet label_sources(int l) const { return label_src_[l]; }

  Word word_from_symbols(const std::vector<std::string>& symbols) const;

private:
  std::vector<std::string> vertices_;
  std::vector<std::string> alphabet_;
  std::vector<Edge> edges_;
  std::vector<VertexSet> step_;       // vertex * label_count + label
  std::vector<VertexSet> label_src_;  // per label
};

// Vertices with no outgoing edges.
VertexSet sinks(const LabeledGraph& g);

struct LeftResolvingCheck {
  bool ok = true;
  int vertex = -1;  // witness: two same-labeled edges arrive here
  int label = -1;
};

// A graph is left-resolving when no vertex receives two distinct edges
// carrying the same label.
LeftResolvingCheck is_left_resolving(const LabeledGraph& g);

// r(a, w): endpoints of paths labeled w that start inside a. The empty word
// acts as the identity, r(a, ε) = a.
VertexSet relative_range(const LabeledGraph& g, VertexSet a, const Word& w);

// r(w) over all start vertices. Defined for nonempty words only.
VertexSet range_of_word(const LabeledGraph& g, const Word& w);

// s(w): start vertices of paths labeled w. Defined for nonempty words only.
VertexSet source_of_word(const LabeledGraph& g, const Word& w);

// Labels carried by edges leaving a, sorted by label index.
std::vector<int> out_labels(const LabeledGraph& g, VertexSet a);

bool is_acyclic(const LabeledGraph& g);

// All distinct nonempty label words realized by some path, in shortlex
// order. With no bound this terminates only on acyclic graphs; a cyclic
// graph raises Errc::infinite_language.
std::vector<Word> enumerate_words(const LabeledGraph& g,
                                  std::optional<int> max_len = std::nullopt);

// "{v,w}" with vertices in index order; "{}" for the empty set.
std::string render(const LabeledGraph& g, VertexSet s);

// Concatenated label names; "ε" for the empty word.
std::string render(const LabeledGraph& g, const Word& w);

}  // namespace lgca

#pragma once

#include <vector>

#include "lgca/family.hpp"

namespace lgca {

// One matrix block: a minimal sink set together with the words indexing its
// rows/columns — the empty word plus every word whose range contains the
// sink set, in shortlex order. Block size is that word count.
struct Block {
  VertexSet sink_set;
  std::vector<Word> basis;

  int size() const { return static_cast<int>(basis.size()); }
};

struct Decomposition {
  std::vector<Block> blocks;

  // Σ of block sizes: the dimension of the space the blocks act on.
  int total_dim() const {
    int d = 0;
    for (const auto& b : blocks) d += b.size();
    return d;
  }
  // Σ of squared block sizes: the dimension of the block-diagonal algebra.
  int total_matrix_dim() const {
    int d = 0;
    for (const auto& b : blocks) d += b.size() * b.size();
    return d;
  }
};

// Basis words of the block at sink set v: the empty word first, then every
// realized word whose range contains v. v must be a minimal sink set and
// the graph acyclic.
std::vector<Word> block_words(const LabeledSpace& s, VertexSet v);

// Full block decomposition. Preconditions are checked in a fixed order with
// distinct error codes: acyclic graph (Errc::cyclic_graph), sink set in the
// family (Errc::sinks_not_in_family, message "E^0_sink ∉ B"), normal space
// (Errc::not_normal), weak left-resolution (Errc::not_weakly_left_resolving).
// Blocks come out ordered by smallest vertex index of their sink sets.
Decomposition decompose(const LabeledSpace& s);

}  // namespace lgca

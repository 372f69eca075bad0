#pragma once

#include <string>
#include <vector>

#include "lgca/family.hpp"

namespace lgca {

// Subfamily closed under the three hereditary clauses (see is_hereditary).
// The closure reports, rather than silently drops, unions that escape the
// ambient family — that can only happen when the ambient family is not
// union-closed to begin with.
struct HereditaryFamily {
  SetFamily sets;
  std::vector<std::string> warnings;
};

// Least subfamily of the space's family that contains the seeds and is
// closed under (1) nonempty single-letter relative ranges, (2) binary unions
// that stay inside the ambient family, (3) nonempty ambient members lying
// inside a member. Seeds must be nonempty ambient members.
HereditaryFamily hereditary_closure(const LabeledSpace& s, const SetFamily& seeds);

struct HereditaryCheck {
  bool ok = true;
  int clause = 0;  // 1 ranges, 2 unions, 3 downward
  VertexSet a, b;
  std::string detail;
};

// The empty set is never a member of a hereditary subfamily; clause (1)
// only constrains nonempty ranges.
HereditaryCheck is_hereditary(const LabeledSpace& s, const SetFamily& h);

struct IdealHypothesisCheck {
  bool ok = true;
  int label = -1;
  std::string detail;
};

// For every label l: either the sources of l-edges form a member of h, or
// they miss every member of h. h is assumed hereditary; this is a pure scan.
IdealHypothesisCheck check_ideal_hypothesis(const LabeledSpace& s, const SetFamily& h);

// For each sink x, the intersection of all family members containing x,
// deduplicated, ordered by smallest vertex index. Errors: no sinks at all,
// sink set not a family member, or some intersection failing the
// minimality property (every member must contain it or miss it).
std::vector<VertexSet> minimal_sink_sets(const LabeledSpace& s);

// True when a is a nonempty set of sinks and every family member either
// contains a or misses it.
bool is_minimal_sinks_set(const LabeledSpace& s, VertexSet a);

}  // namespace lgca

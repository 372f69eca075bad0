#pragma once

#include <string>
#include <vector>

#include "lgca/graph.hpp"

namespace lgca {

// Finite family of vertex sets, kept sorted (cardinality, then mask) and
// deduplicated. The one structural restriction: the family consisting of
// the empty set alone is rejected, since nothing can be built over it.
class SetFamily {
public:
  SetFamily() = default;
  explicit SetFamily(std::vector<VertexSet> members);

  const std::vector<VertexSet>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(VertexSet s) const;
  bool contains_empty_set() const { return !members_.empty() && members_.front().empty(); }

  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.members_ == b.members_;
  }

private:
  std::vector<VertexSet> members_;
};

struct ClosureOptions {
  int cap = 4096;  // abort with Errc::closure_cap past this many sets
};

// Least family containing the seeds and every single-letter range r(l),
// closed under single-letter relative ranges, binary intersections and
// unions. Single letters suffice for range closure because
// r(a, wl) = r(r(a, w), l). The empty set appears iff some range,
// intersection (or complement, below) produces it.
SetFamily accommodating_closure(const LabeledGraph& g, const SetFamily& seeds,
                                ClosureOptions opts = {});

// accommodating_closure, additionally closed under relative complements.
SetFamily normal_closure(const LabeledGraph& g, const SetFamily& seeds,
                         ClosureOptions opts = {});

struct AccommodatingCheck {
  bool ok = true;
  std::string detail;  // first violation, rendered
};

struct NonDegenerateCheck {
  bool ok = true;
  VertexSet minuend, subtrahend;  // witness: minuend \ subtrahend missing
  std::string detail;
};

struct WeaklyLeftResolvingCheck {
  bool ok = true;
  bool precondition_ok = true;  // family closed under relative ranges
  VertexSet left, right;        // witness pair
  int label = -1;
  std::string detail;
};

struct SpaceReport {
  AccommodatingCheck accommodating;
  WeaklyLeftResolvingCheck weakly_left_resolving;
  NonDegenerateCheck non_degenerate;
  bool normal = false;
  bool sinks_in_family = false;
  LeftResolvingCheck left_resolving;
  bool acyclic = false;
};

// A graph together with a set family, plus the cached axiom report.
// Everything downstream (terms, decomposition, the matrix model) works on
// one of these.
class LabeledSpace {
public:
  LabeledSpace(LabeledGraph graph, SetFamily family);

  const LabeledGraph& graph() const { return graph_; }
  const SetFamily& family() const { return family_; }
  const SpaceReport& report() const { return report_; }

private:
  LabeledGraph graph_;
  SetFamily family_;
  SpaceReport report_;
};

AccommodatingCheck is_accommodating(const LabeledSpace& s);
NonDegenerateCheck is_non_degenerate(const LabeledSpace& s);
bool is_normal(const LabeledSpace& s);

// Checks r(a∩b, l) = r(a, l) ∩ r(b, l) over all member pairs and labels.
// Single letters suffice once the family is closed under relative ranges;
// that precondition is verified first and its failure raises
// Errc::precondition (the scan would be meaningless without it).
WeaklyLeftResolvingCheck is_weakly_left_resolving(const LabeledSpace& s);

// The full report; never throws. When the range-closure precondition for
// the weak left-resolution scan fails, that entry carries
// precondition_ok = false and ok = false.
SpaceReport validate_space(const LabeledSpace& s);

}  // namespace lgca

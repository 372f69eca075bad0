#include "lgca/family.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace lgca {

SetFamily::SetFamily(std::vector<VertexSet> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.size() == 1 && members_.front().empty())
    fail(Errc::bad_family, "family {∅} alone is not allowed");
}

bool SetFamily::contains(VertexSet s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

namespace {

// Shared worklist closure. Every new set is combined with everything already
// present; single-letter relative ranges are enough to secure range closure
// for arbitrary words.
SetFamily close(const LabeledGraph& g, const SetFamily& seeds, bool with_complements,
                ClosureOptions opts) {
  std::set<VertexSet> family;
  std::deque<VertexSet> work;

  auto add = [&](VertexSet s) {
    if (!family.insert(s).second) return;
    if (static_cast<int>(family.size()) > opts.cap)
      fail(Errc::closure_cap,
           "closure exceeded the cap of " + std::to_string(opts.cap) + " sets");
    work.push_back(s);
  };

  for (VertexSet s : seeds.members()) add(s);
  for (int l = 0; l < g.label_count(); ++l)
    add(relative_range(g, g.all_vertices(), Word({l})));

  while (!work.empty()) {
    VertexSet a = work.front();
    work.pop_front();
    for (int l = 0; l < g.label_count(); ++l)
      add(relative_range(g, a, Word({l})));
    // Snapshot: 'add' only appends to the worklist, and the new sets get
    // their own pairing pass when popped.
    std::vector<VertexSet> others(family.begin(), family.end());
    for (VertexSet b : others) {
      add(a & b);
      add(a | b);
      if (with_complements) {
        add(a - b);
        add(b - a);
      }
    }
  }
  return SetFamily(std::vector<VertexSet>(family.begin(), family.end()));
}

}  // namespace

SetFamily accommodating_closure(const LabeledGraph& g, const SetFamily& seeds,
                                ClosureOptions opts) {
  return close(g, seeds, false, opts);
}

SetFamily normal_closure(const LabeledGraph& g, const SetFamily& seeds, ClosureOptions opts) {
  return close(g, seeds, true, opts);
}

AccommodatingCheck is_accommodating(const LabeledSpace& s) {
  const LabeledGraph& g = s.graph();
  const SetFamily& b = s.family();
  for (int l = 0; l < g.label_count(); ++l) {
    VertexSet r = relative_range(g, g.all_vertices(), Word({l}));
    if (!b.contains(r))
      return {false, "r(" + g.label_name(l) + ") = " + render(g, r) + " not in the family"};
  }
  for (VertexSet a : b.members()) {
    for (int l = 0; l < g.label_count(); ++l) {
      VertexSet r = relative_range(g, a, Word({l}));
      if (!b.contains(r))
        return {false, "r(" + render(g, a) + ", " + g.label_name(l) + ") = " + render(g, r) +
                           " not in the family"};
    }
  }
  for (VertexSet a : b.members()) {
    for (VertexSet c : b.members()) {
      if (!b.contains(a & c))
        return {false, render(g, a) + " ∩ " + render(g, c) + " = " + render(g, a & c) +
                           " not in the family"};
      if (!b.contains(a | c))
        return {false, render(g, a) + " ∪ " + render(g, c) + " = " + render(g, a | c) +
                           " not in the family"};
    }
  }
  return {};
}

NonDegenerateCheck is_non_degenerate(const LabeledSpace& s) {
  const LabeledGraph& g = s.graph();
  const SetFamily& b = s.family();
  for (VertexSet a : b.members()) {
    for (VertexSet c : b.members()) {
      if (!b.contains(a - c)) {
        NonDegenerateCheck out;
        out.ok = false;
        out.minuend = a;
        out.subtrahend = c;
        out.detail = render(g, a) + " \\ " + render(g, c) + " = " + render(g, a - c) +
                     " not in the family";
        return out;
      }
    }
  }
  return {};
}

bool is_normal(const LabeledSpace& s) {
  return s.report().accommodating.ok && s.report().non_degenerate.ok;
}

namespace {

WeaklyLeftResolvingCheck wlr_scan(const LabeledSpace& s) {
  const LabeledGraph& g = s.graph();
  const SetFamily& b = s.family();
  WeaklyLeftResolvingCheck out;

  for (VertexSet a : b.members()) {
    for (int l = 0; l < g.label_count(); ++l) {
      if (!b.contains(relative_range(g, a, Word({l})))) {
        out.ok = false;
        out.precondition_ok = false;
        out.detail = "not applicable: family is not closed under relative ranges (r(" +
                     render(g, a) + ", " + g.label_name(l) + ") missing)";
        return out;
      }
    }
  }

  const auto& m = b.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      for (int l = 0; l < g.label_count(); ++l) {
        Word w({l});
        VertexSet lhs = relative_range(g, m[i] & m[j], w);
        VertexSet rhs = relative_range(g, m[i], w) & relative_range(g, m[j], w);
        if (lhs != rhs) {
          out.ok = false;
          out.left = m[i];
          out.right = m[j];
          out.label = l;
          out.detail = "r(" + render(g, m[i]) + " ∩ " + render(g, m[j]) + ", " +
                       g.label_name(l) + ") = " + render(g, lhs) + " but the intersection of " +
                       "ranges is " + render(g, rhs);
          return out;
        }
      }
    }
  }
  return out;
}

}  // namespace

WeaklyLeftResolvingCheck is_weakly_left_resolving(const LabeledSpace& s) {
  WeaklyLeftResolvingCheck out = s.report().weakly_left_resolving;
  if (!out.precondition_ok) fail(Errc::precondition, out.detail);
  return out;
}

SpaceReport validate_space(const LabeledSpace& s) { return s.report(); }

LabeledSpace::LabeledSpace(LabeledGraph graph, SetFamily family)
    : graph_(std::move(graph)), family_(std::move(family)) {
  if (family_.empty()) fail(Errc::bad_family, "family has no members");
  VertexSet universe = graph_.all_vertices();
  for (VertexSet m : family_.members())
    if (!m.subset_of(universe))
      fail(Errc::bad_family, "family member uses vertices outside the graph");

  report_.accommodating = lgca::is_accommodating(*this);
  report_.non_degenerate = lgca::is_non_degenerate(*this);
  report_.normal = report_.accommodating.ok && report_.non_degenerate.ok;
  report_.weakly_left_resolving = wlr_scan(*this);
  report_.sinks_in_family = family_.contains(sinks(graph_));
  report_.left_resolving = lgca::is_left_resolving(graph_);
  report_.acyclic = lgca::is_acyclic(graph_);
}

}  // namespace lgca

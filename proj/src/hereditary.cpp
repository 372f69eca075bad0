#include "lgca/hereditary.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace lgca {

HereditaryFamily hereditary_closure(const LabeledSpace& s, const SetFamily& seeds) {
  const LabeledGraph& g = s.graph();
  const SetFamily& b = s.family();
  if (seeds.empty()) fail(Errc::bad_family, "hereditary closure needs at least one seed");
  for (VertexSet m : seeds.members()) {
    if (m.empty()) fail(Errc::bad_family, "∅ cannot seed a hereditary subfamily");
    if (!b.contains(m))
      fail(Errc::family_membership, "seed " + render(g, m) + " is not a family member");
  }

  HereditaryFamily out;
  std::set<VertexSet> h(seeds.members().begin(), seeds.members().end());
  std::deque<VertexSet> work(h.begin(), h.end());
  std::set<std::pair<VertexSet, VertexSet>> warned;

  auto add = [&](VertexSet x) {
    if (h.insert(x).second) work.push_back(x);
  };

  while (!work.empty()) {
    VertexSet a = work.front();
    work.pop_front();

    for (int l = 0; l < g.label_count(); ++l) {
      VertexSet r = relative_range(g, a, Word({l}));
      if (r.empty()) continue;
      if (!b.contains(r))
        fail(Errc::family_membership,
             "family is not closed under relative ranges: r(" + render(g, a) + ", " +
                 g.label_name(l) + ") missing");
      add(r);
    }

    std::vector<VertexSet> others(h.begin(), h.end());
    for (VertexSet c : others) {
      VertexSet u = a | c;
      if (b.contains(u)) {
        add(u);
      } else if (warned.emplace(std::min(a, c), std::max(a, c)).second) {
        out.warnings.push_back("union " + render(g, a) + " ∪ " + render(g, c) +
                               " is not a family member; skipped");
      }
    }

    for (VertexSet m : b.members())
      if (!m.empty() && m.subset_of(a)) add(m);
  }

  out.sets = SetFamily(std::vector<VertexSet>(h.begin(), h.end()));
  return out;
}

HereditaryCheck is_hereditary(const LabeledSpace& s, const SetFamily& h) {
  const LabeledGraph& g = s.graph();
  const SetFamily& b = s.family();
  HereditaryCheck out;

  if (h.contains_empty_set() || h.empty()) {
    out.ok = false;
    out.clause = 3;
    out.detail = h.empty() ? "subfamily is empty" : "∅ is not allowed as a member";
    return out;
  }

  for (VertexSet a : h.members()) {
    for (int l = 0; l < g.label_count(); ++l) {
      VertexSet r = relative_range(g, a, Word({l}));
      if (!r.empty() && !h.contains(r)) {
        out.ok = false;
        out.clause = 1;
        out.a = a;
        out.detail = "r(" + render(g, a) + ", " + g.label_name(l) + ") = " + render(g, r) +
                     " escapes the subfamily";
        return out;
      }
    }
  }

  for (VertexSet a : h.members()) {
    for (VertexSet c : h.members()) {
      // The union clause only binds when the union is an ambient member;
      // otherwise a subfamily of a non-union-closed family could never pass.
      if (!b.contains(a | c)) continue;
      if (!h.contains(a | c)) {
        out.ok = false;
        out.clause = 2;
        out.a = a;
        out.b = c;
        out.detail = render(g, a) + " ∪ " + render(g, c) + " escapes the subfamily";
        return out;
      }
    }
  }

  for (VertexSet a : h.members()) {
    for (VertexSet m : b.members()) {
      if (!m.empty() && m.subset_of(a) && !h.contains(m)) {
        out.ok = false;
        out.clause = 3;
        out.a = a;
        out.b = m;
        out.detail = "family member " + render(g, m) + " ⊆ " + render(g, a) +
                     " escapes the subfamily";
        return out;
      }
    }
  }
  return out;
}

IdealHypothesisCheck check_ideal_hypothesis(const LabeledSpace& s, const SetFamily& h) {
  const LabeledGraph& g = s.graph();
  for (int l = 0; l < g.label_count(); ++l) {
    VertexSet src = g.label_sources(l);
    if (h.contains(src)) continue;
    bool disjoint = true;
    for (VertexSet a : h.members())
      if (src.intersects(a)) {
        disjoint = false;
        break;
      }
    if (!disjoint)
      return {false, l,
              "label " + g.label_name(l) + ": sources " + render(g, src) +
                  " neither form a member nor miss every member"};
  }
  return {};
}

std::vector<VertexSet> minimal_sink_sets(const LabeledSpace& s) {
  const LabeledGraph& g = s.graph();
  const SetFamily& b = s.family();
  VertexSet sink = sinks(g);
  if (sink.empty()) fail(Errc::no_sinks, "graph has no sinks");
  if (!b.contains(sink)) fail(Errc::sinks_not_in_family, "E^0_sink ∉ B");

  std::vector<VertexSet> out;
  sink.for_each([&](int x) {
    VertexSet ax = g.all_vertices();
    for (VertexSet m : b.members())
      if (m.contains(x)) ax = ax & m;
    if (std::find(out.begin(), out.end(), ax) == out.end()) {
      if (!is_minimal_sinks_set(s, ax))
        fail(Errc::precondition,
             "intersection set " + render(g, ax) + " for sink " + g.vertex_name(x) +
                 " is split by some family member (space is not normal enough)");
      out.push_back(ax);
    }
  });
  // for_each walks sinks by ascending index, and x ∈ A_x, so the list is
  // already ordered by smallest contained vertex. Keep that order explicit:
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b2) {
    return std::countr_zero(a.bits) < std::countr_zero(b2.bits);
  });
  return out;
}

bool is_minimal_sinks_set(const LabeledSpace& s, VertexSet a) {
  if (a.empty() || !a.subset_of(sinks(s.graph()))) return false;
  for (VertexSet m : s.family().members())
    if (!a.subset_of(m) && a.intersects(m)) return false;
  return true;
}

}  // namespace lgca

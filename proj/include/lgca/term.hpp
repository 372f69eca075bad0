#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lgca/family.hpp"
#include "lgca/rational.hpp"

namespace lgca {

// One spanning term s[left] p{mid} s*[right], always kept normalized:
// mid ⊆ r(left) and mid ⊆ r(right) (empty words impose nothing), mid is a
// family member, and mid ≠ ∅ — the empty projection is the zero element and
// never appears as a term.
struct CanonicalTerm {
  Word left;
  VertexSet mid;
  Word right;

  friend bool operator==(const CanonicalTerm& a, const CanonicalTerm& b) {
    return a.left == b.left && a.mid == b.mid && a.right == b.right;
  }
  friend bool operator<(const CanonicalTerm& a, const CanonicalTerm& b) {
    if (a.left != b.left) return a.left < b.left;
    if (a.mid != b.mid) return a.mid < b.mid;
    return a.right < b.right;
  }
};

// Finite rational combination of canonical terms. The map keeps terms in
// canonical order, so iteration, printing and comparison are deterministic.
// Zero coefficients are erased on the spot.
class AlgebraElement {
public:
  AlgebraElement() = default;

  static AlgebraElement term(CanonicalTerm t, Rational coeff = 1) {
    AlgebraElement e;
    e.add(std::move(t), coeff);
    return e;
  }

  void add(CanonicalTerm t, Rational coeff) {
    if (coeff.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(std::move(t), coeff);
    if (!fresh) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<CanonicalTerm, Rational>& terms() const { return terms_; }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    for (const auto& [t, c] : o.terms_) add(t, c);
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    for (const auto& [t, c] : o.terms_) add(t, -c);
    return *this;
  }
  AlgebraElement& operator*=(const Rational& q) {
    if (q.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [t, c] : terms_) c *= q;
    return *this;
  }

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Rational& q, AlgebraElement a) { return a *= q; }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

private:
  std::map<CanonicalTerm, Rational> terms_;
};

enum class WordCase { equal, right_extends, left_extends, orthogonal };

struct WordRelation {
  WordCase tag = WordCase::orthogonal;
  Word tail;  // the extension γ for the two extension cases
};

// How ν compares to μ as a prefix: equal, ν = μγ (right_extends),
// μ = νγ (left_extends), or neither.
WordRelation word_case(const Word& mu, const Word& nu);

// Normalize (mu, a, nu) into a canonical term: intersect a with the ranges
// of both words, return nullopt when that intersection is empty (the zero
// element), and insist the result is a family member otherwise.
std::optional<CanonicalTerm> canonicalize(const LabeledSpace& s, const Word& mu, VertexSet a,
                                          const Word& nu);

// Product of two canonical terms, resolved through the prefix relation of
// t1.right and t2.left:
//
//   equal          s[α] p{A∩B} s*[ν]
//   t2.left = βγ   s[αγ] p{r(A,γ) ∩ B} s*[ν]
//   t1.right = μγ  s[α] p{A ∩ r(B,γ)} s*[νγ]
//   orthogonal     0
//
// where t1 = s[α] p{A} s*[β], t2 = s[μ] p{B} s*[ν]. The middle-set algebra
// is only valid on weakly left-resolving spaces; anything else is refused.
AlgebraElement star_product(const LabeledSpace& s, const CanonicalTerm& t1,
                            const CanonicalTerm& t2);

// Bilinear extension of star_product.
AlgebraElement mul(const LabeledSpace& s, const AlgebraElement& a, const AlgebraElement& b);

// Swaps the two words of every term; coefficients are rational, hence fixed.
AlgebraElement adjoint(const AlgebraElement& e);

// p{a} + p{b} − p{a∩b}, the projection onto a ∪ b. All four sets involved
// must be family members.
AlgebraElement projection_sum(const LabeledSpace& s, VertexSet a, VertexSet b);

// Σ over labels l of s[l] p{r(a,l)} s*[l] — the one-step expansion of p{a},
// valid exactly when a is a family member without sinks.
AlgebraElement expand_sink_free(const LabeledSpace& s, VertexSet a);

// Rewrite every term into the span of terms whose middle set is a minimal
// sink set, by splitting each middle set into its sink part (a disjoint
// union of minimal sink sets) and repeatedly applying the one-step
// expansion to the rest. Requires an acyclic graph, a normal space, and the
// sink set as a family member.
AlgebraElement expand_to_sink_basis(const LabeledSpace& s, const AlgebraElement& e);

enum class EqualityMode { raw, modulo_relations };

// raw: coefficient maps match term for term. modulo_relations: both sides
// are rewritten to the sink basis first (where terms are linearly
// independent); only available on acyclic graphs.
bool equals(const LabeledSpace& s, const AlgebraElement& a, const AlgebraElement& b,
            EqualityMode mode);

// Deterministic sample of nonzero canonical terms (random word pair plus
// random middle set, zeros skipped). Words are drawn up to length 4 so this
// also works on cyclic graphs.
std::vector<CanonicalTerm> sample_canonical_terms(const LabeledSpace& s, int count,
                                                  std::uint64_t seed);

}  // namespace lgca

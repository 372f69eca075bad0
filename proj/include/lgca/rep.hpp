#pragma once

#include <map>
#include <string>
#include <vector>

#include "lgca/decompose.hpp"
#include "lgca/matrix.hpp"
#include "lgca/term.hpp"

namespace lgca {

// Concrete integer matrices for the generators, acting on one coordinate
// slot per (block, basis word):
//
//   gen_p[a]  diagonal, 1 at slot (V, w) iff V ⊆ r(a, w)
//   gen_s[l]  1 at ((V, l·w), (V, w)) whenever both words lie in V's basis
//
// Block bases are suffix-closed (a word's range is contained in each of its
// suffixes' ranges), so products of the gen_s matrices realize every basis
// word without leaving the slot space.
struct Rep {
  Decomposition dec;
  std::vector<std::pair<int, Word>> basis;  // slot -> (block index, word)
  std::map<int, IntMatrix> gen_s;           // by label index
  std::map<VertexSet, IntMatrix> gen_p;     // by family member
  Eigen::Index dim = 0;

  // Slot of (block, word), or -1 when the word is outside that block basis.
  int slot(int block, const Word& w) const;
};

Rep build_rep(const LabeledSpace& s, const Decomposition& dec);

// Evaluates words and elements against a Rep, memoizing word matrices.
class RepEvaluator {
public:
  explicit RepEvaluator(const LabeledSpace& s, const Rep& r) : space_(&s), rep_(&r) {}

  const IntMatrix& word_matrix(const Word& w);
  IntMatrix term_matrix(const CanonicalTerm& t);
  RatMatrix matrix_of(const AlgebraElement& e);

private:
  const LabeledSpace* space_;
  const Rep* rep_;
  std::map<Word, IntMatrix> cache_;
};

// One-call form of RepEvaluator::matrix_of.
RatMatrix rep_of_element(const LabeledSpace& s, const Rep& r, const AlgebraElement& e);

struct RelationCheckResult {
  std::string name;
  bool pass = true;
  long long cases = 0;
  std::string counterexample;
};

struct RelationReport {
  std::vector<RelationCheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Exhaustively certifies the defining relations in the matrices: projection
// intersection/union laws, isometry orthogonality, range commutation, the
// sink-free expansion identity, domination by partial expansion sums, and
// every prefix-case reduction of s*[μ]s[ν] (both written forms). Exact
// integer arithmetic throughout; any mismatch carries a witness.
RelationReport verify_relations(const LabeledSpace& s, const Rep& r);

// All pairs (x, y) from elements: matrix(x·y) = matrix(x)·matrix(y), and
// matrix(adjoint x) = matrix(x)ᵀ. Optionally reports the first mismatch.
bool verify_homomorphism(const LabeledSpace& s, const Rep& r,
                         const std::vector<AlgebraElement>& elements,
                         std::string* counterexample = nullptr);

}  // namespace lgca

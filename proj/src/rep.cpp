#include "lgca/rep.hpp"

#include <algorithm>

namespace lgca {

int Rep::slot(int block, const Word& w) const {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i].first == block && basis[i].second == w) return static_cast<int>(i);
  return -1;
}

Rep build_rep(const LabeledSpace& s, const Decomposition& dec) {
  const LabeledGraph& g = s.graph();
  Rep rep;
  rep.dec = dec;
  for (std::size_t b = 0; b < dec.blocks.size(); ++b)
    for (const Word& w : dec.blocks[b].basis)
      rep.basis.emplace_back(static_cast<int>(b), w);
  rep.dim = static_cast<Eigen::Index>(rep.basis.size());

  for (VertexSet a : s.family().members()) {
    IntMatrix m = IntMatrix::Zero(rep.dim, rep.dim);
    for (Eigen::Index i = 0; i < rep.dim; ++i) {
      const auto& [block, w] = rep.basis[i];
      if (dec.blocks[block].sink_set.subset_of(relative_range(g, a, w))) m(i, i) = 1;
    }
    rep.gen_p.emplace(a, std::move(m));
  }

  for (int l = 0; l < g.label_count(); ++l) {
    IntMatrix m = IntMatrix::Zero(rep.dim, rep.dim);
    for (Eigen::Index j = 0; j < rep.dim; ++j) {
      const auto& [block, w] = rep.basis[j];
      Word lw({l});
      int i = rep.slot(block, lw.concat(w));
      if (i >= 0) m(i, j) = 1;
    }
    rep.gen_s.emplace(l, std::move(m));
  }
  return rep;
}

const IntMatrix& RepEvaluator::word_matrix(const Word& w) {
  auto it = cache_.find(w);
  if (it != cache_.end()) return it->second;
  IntMatrix m;
  if (w.empty()) {
    m = IntMatrix::Identity(rep_->dim, rep_->dim);
  } else {
    m = rep_->gen_s.at(w[0]);
    for (std::size_t i = 1; i < w.size(); ++i) m = m * rep_->gen_s.at(w[i]);
  }
  return cache_.emplace(w, std::move(m)).first->second;
}

IntMatrix RepEvaluator::term_matrix(const CanonicalTerm& t) {
  auto p = rep_->gen_p.find(t.mid);
  if (p == rep_->gen_p.end())
    fail(Errc::family_membership,
         "middle set " + render(space_->graph(), t.mid) + " has no generator matrix");
  IntMatrix left = word_matrix(t.left) * p->second;
  return left * word_matrix(t.right).transpose();
}

RatMatrix RepEvaluator::matrix_of(const AlgebraElement& e) {
  RatMatrix out = RatMatrix::Constant(rep_->dim, rep_->dim, Rational(0));
  for (const auto& [t, c] : e.terms()) {
    IntMatrix m = term_matrix(t);
    for (Eigen::Index j = 0; j < rep_->dim; ++j)
      for (Eigen::Index i = 0; i < rep_->dim; ++i)
        if (m(i, j) != 0) out(i, j) += c * Rational(m(i, j));
  }
  return out;
}

RatMatrix rep_of_element(const LabeledSpace& s, const Rep& r, const AlgebraElement& e) {
  return RepEvaluator(s, r).matrix_of(e);
}

namespace {

std::string word_str(const LabeledGraph& g, const Word& w) { return render(g, w); }

}  // namespace

RelationReport verify_relations(const LabeledSpace& s, const Rep& r) {
  const LabeledGraph& g = s.graph();
  const auto& members = s.family().members();
  RepEvaluator ev(s, r);
  RelationReport report;

  // Projection diagonality first; the pairwise laws below lean on it.
  {
    RelationCheckResult c{"projections are diagonal 0/1", true, 0, ""};
    for (const auto& [a, m] : r.gen_p) {
      ++c.cases;
      if (!is_diagonal_01(m)) {
        c.pass = false;
        c.counterexample = "p" + render(g, a);
        break;
      }
    }
    report.checks.push_back(std::move(c));
  }

  bool projections_diagonal = report.checks.back().pass;

  {
    RelationCheckResult c{"p{a}·p{b} = p{a∩b} and p{a∪b} = p{a}+p{b}−p{a∩b}", true, 0, ""};
    for (VertexSet a : members) {
      for (VertexSet b : members) {
        ++c.cases;
        const IntMatrix& pa = r.gen_p.at(a);
        const IntMatrix& pb = r.gen_p.at(b);
        auto meet = r.gen_p.find(a & b);
        auto join = r.gen_p.find(a | b);
        if (meet == r.gen_p.end() || join == r.gen_p.end()) {
          c.pass = false;
          c.counterexample = "family not closed for " + render(g, a) + ", " + render(g, b);
          break;
        }
        bool ok;
        if (projections_diagonal) {
          // With diagonality certified above, the product of two diagonal
          // matrices is the entrywise product of their diagonals; comparing
          // diagonals is the same exact check at a fraction of the cost.
          Eigen::VectorX<std::int64_t> da = pa.diagonal(), db = pb.diagonal();
          ok = (da.cwiseProduct(db).array() == meet->second.diagonal().array()).all() &&
               ((da + db - meet->second.diagonal()).array() ==
                join->second.diagonal().array())
                   .all();
        } else {
          ok = exactly_equal(IntMatrix(pa * pb), meet->second) &&
               exactly_equal(IntMatrix(pa + pb - meet->second), join->second);
        }
        if (!ok) {
          c.pass = false;
          c.counterexample = "a = " + render(g, a) + ", b = " + render(g, b);
          break;
        }
      }
      if (!c.pass) break;
    }
    report.checks.push_back(std::move(c));
  }

  {
    RelationCheckResult c{"s*[a]·s[b] = δ(a,b)·p{r(b)}", true, 0, ""};
    for (int la = 0; la < g.label_count() && c.pass; ++la) {
      for (int lb = 0; lb < g.label_count(); ++lb) {
        ++c.cases;
        IntMatrix lhs = r.gen_s.at(la).transpose() * r.gen_s.at(lb);
        IntMatrix rhs = IntMatrix::Zero(r.dim, r.dim);
        if (la == lb) {
          VertexSet range = relative_range(g, g.all_vertices(), Word({lb}));
          auto it = r.gen_p.find(range);
          if (it == r.gen_p.end()) {
            c.pass = false;
            c.counterexample = "r(" + g.label_name(lb) + ") not in family";
            break;
          }
          rhs = it->second;
        }
        if (!exactly_equal(lhs, rhs)) {
          c.pass = false;
          c.counterexample = "(" + g.label_name(la) + ", " + g.label_name(lb) + ")";
          break;
        }
      }
    }
    report.checks.push_back(std::move(c));
  }

  {
    RelationCheckResult c{"s*[l]·p{a} = p{r(a,l)}·s*[l]", true, 0, ""};
    for (int l = 0; l < g.label_count() && c.pass; ++l) {
      IntMatrix st = r.gen_s.at(l).transpose();
      for (VertexSet a : members) {
        ++c.cases;
        VertexSet ra = relative_range(g, a, Word({l}));
        auto it = r.gen_p.find(ra);
        if (it == r.gen_p.end()) {
          c.pass = false;
          c.counterexample = "r(" + render(g, a) + ", " + g.label_name(l) + ") not in family";
          break;
        }
        IntMatrix lhs = st * r.gen_p.at(a);
        IntMatrix rhs = it->second * st;
        if (!exactly_equal(lhs, rhs)) {
          c.pass = false;
          c.counterexample = "a = " + render(g, a) + ", l = " + g.label_name(l);
          break;
        }
      }
    }
    report.checks.push_back(std::move(c));
  }

  VertexSet sinkset = sinks(g);

  {
    RelationCheckResult c{"p{a} = Σ_l s[l]·p{r(a,l)}·s*[l] for sink-free a", true, 0, ""};
    for (VertexSet a : members) {
      if (a.empty() || a.intersects(sinkset)) continue;
      ++c.cases;
      IntMatrix rhs = IntMatrix::Zero(r.dim, r.dim);
      for (int l : out_labels(g, a)) {
        const IntMatrix& sl = r.gen_s.at(l);
        rhs += sl * r.gen_p.at(relative_range(g, a, Word({l}))) * sl.transpose();
      }
      if (!exactly_equal(r.gen_p.at(a), rhs)) {
        c.pass = false;
        c.counterexample = "a = " + render(g, a);
        break;
      }
    }
    report.checks.push_back(std::move(c));
  }

  {
    // Partial expansion sums never overshoot: the summands are mutually
    // orthogonal pieces dominated by p{a}, so each difference must stay a
    // diagonal 0/1 projection. Label subsets are enumerated exhaustively;
    // the per-label summand matrices are hoisted out of the subset loop.
    RelationCheckResult c{"p{a} dominates every partial expansion sum", true, 0, ""};
    for (VertexSet a : members) {
      if (a.empty() || a.intersects(sinkset)) continue;
      std::vector<int> labels = out_labels(g, a);
      std::vector<IntMatrix> summand;
      for (int l : labels) {
        const IntMatrix& sl = r.gen_s.at(l);
        summand.push_back(sl * r.gen_p.at(relative_range(g, a, Word({l}))) * sl.transpose());
      }
      for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << labels.size()); ++mask) {
        ++c.cases;
        IntMatrix diff = r.gen_p.at(a);
        for (std::size_t i = 0; i < labels.size(); ++i)
          if ((mask >> i) & 1) diff -= summand[i];
        if (!is_diagonal_01(diff)) {
          c.pass = false;
          c.counterexample = "a = " + render(g, a) + ", subset mask " + std::to_string(mask);
          break;
        }
      }
      if (!c.pass) break;
    }
    report.checks.push_back(std::move(c));
  }

  {
    // s*[μ]·s[ν] resolves by prefix case; both written forms of each
    // extension case must agree with it.
    RelationCheckResult c{"s*[μ]·s[ν] prefix-case reductions (both forms)", true, 0, ""};
    std::vector<Word> words = enumerate_words(g);
    auto proj = [&](VertexSet a) -> IntMatrix {
      auto it = r.gen_p.find(a);
      if (it != r.gen_p.end()) return it->second;
      return IntMatrix::Zero(r.dim, r.dim);  // p of a missing set only arises as p{∅}
    };
    for (const Word& mu : words) {
      for (const Word& nu : words) {
        ++c.cases;
        IntMatrix lhs = ev.word_matrix(mu).transpose() * ev.word_matrix(nu);
        WordRelation rel = word_case(mu, nu);
        IntMatrix expect = IntMatrix::Zero(r.dim, r.dim);
        bool both_forms_agree = true;
        switch (rel.tag) {
          case WordCase::equal:
            expect = proj(range_of_word(g, mu));
            break;
          case WordCase::right_extends: {
            IntMatrix f1 = proj(range_of_word(g, mu)) * ev.word_matrix(rel.tail);
            IntMatrix f2 = ev.word_matrix(rel.tail) * proj(range_of_word(g, nu));
            both_forms_agree = exactly_equal(f1, f2);
            expect = f1;
            break;
          }
          case WordCase::left_extends: {
            IntMatrix f1 = ev.word_matrix(rel.tail).transpose() * proj(range_of_word(g, nu));
            IntMatrix f2 = proj(range_of_word(g, mu)) * ev.word_matrix(rel.tail).transpose();
            both_forms_agree = exactly_equal(f1, f2);
            expect = f1;
            break;
          }
          case WordCase::orthogonal:
            break;
        }
        if (!both_forms_agree || !exactly_equal(lhs, expect)) {
          c.pass = false;
          c.counterexample = "μ = " + word_str(g, mu) + ", ν = " + word_str(g, nu);
          break;
        }
      }
      if (!c.pass) break;
    }
    report.checks.push_back(std::move(c));
  }

  {
    RelationCheckResult c{"partial isometries: S·Sᵀ·S = S", true, 0, ""};
    for (const auto& [l, m] : r.gen_s) {
      ++c.cases;
      if (!exactly_equal(IntMatrix(m * m.transpose() * m), m)) {
        c.pass = false;
        c.counterexample = "s[" + g.label_name(l) + "]";
        break;
      }
    }
    report.checks.push_back(std::move(c));
  }

  return report;
}

bool verify_homomorphism(const LabeledSpace& s, const Rep& r,
                         const std::vector<AlgebraElement>& elements,
                         std::string* counterexample) {
  RepEvaluator ev(s, r);
  std::vector<RatMatrix> mats;
  mats.reserve(elements.size());
  for (const auto& e : elements) mats.push_back(ev.matrix_of(e));

  for (std::size_t i = 0; i < elements.size(); ++i) {
    RatMatrix adj = ev.matrix_of(adjoint(elements[i]));
    if (!exactly_equal(adj, RatMatrix(mats[i].transpose()))) {
      if (counterexample) *counterexample = "adjoint of element " + std::to_string(i);
      return false;
    }
    for (std::size_t j = 0; j < elements.size(); ++j) {
      RatMatrix lhs = ev.matrix_of(mul(s, elements[i], elements[j]));
      RatMatrix rhs = mats[i] * mats[j];
      if (!exactly_equal(lhs, rhs)) {
        if (counterexample)
          *counterexample = "product of elements " + std::to_string(i) + ", " + std::to_string(j);
        return false;
      }
    }
  }
  return true;
}

}  // namespace lgca

#include "evoalg/algebra.hpp"

#include <algorithm>

#include "evoalg/errors.hpp"

namespace evoalg {

EvolutionAlgebra::EvolutionAlgebra(const FieldSpec& f, Matrix structure)
    : field_(f), dim_(structure.rows()), structure_(std::move(structure)) {
  if (structure_.rows() != structure_.cols())
    throw DimensionMismatch("structure matrix must be square");
  if (structure_.field() != f) throw MixedFields();
}

Vector EvolutionAlgebra::multiply(const Vector& u, const Vector& v) const {
  if (u.field() != field_ || v.field() != field_) throw MixedFields();
  if (u.dim() != dim_ || v.dim() != dim_) throw DimensionMismatch();
  Vector out(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    Scalar c = u[i] * v[i];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) out[j] += c * structure_.at(i, j);
  }
  return out;
}

Subspace annihilator(const EvolutionAlgebra& E) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < E.dim(); ++i)
    if (E.square(i).is_zero()) gens.push_back(Vector::unit(E.field(), E.dim(), i));
  return Subspace::span(E.field(), E.dim(), gens);
}

Subspace subspace_product(const EvolutionAlgebra& E, const Subspace& U, const Subspace& V) {
  std::vector<Vector> gens;
  for (const Vector& u : U.basis())
    for (const Vector& v : V.basis()) gens.push_back(E.multiply(u, v));
  return Subspace::span(E.field(), E.dim(), gens);
}

Subspace derived_subalgebra(const EvolutionAlgebra& E) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < E.dim(); ++i) gens.push_back(E.square(i));
  return Subspace::span(E.field(), E.dim(), gens);
}

bool is_subalgebra(const EvolutionAlgebra& E, const Subspace& U) {
  for (std::size_t i = 0; i < U.dim(); ++i)
    for (std::size_t j = i; j < U.dim(); ++j)
      if (!U.contains_vector(E.multiply(U.basis()[i], U.basis()[j]))) return false;
  return true;
}

bool is_ideal(const EvolutionAlgebra& E, const Subspace& U) {
  // Commutativity makes one-sided closure enough: e_i u = u_i e_i^2.
  for (const Vector& u : U.basis())
    for (std::size_t i : u.support())
      if (!U.contains_vector(E.square(i) * u[i])) return false;
  return true;
}

bool is_basic_ideal(const EvolutionAlgebra& E, const Subspace& U) {
  if (!is_ideal(E, U)) return false;
  std::vector<Vector> units;
  for (std::size_t i : U.support()) units.push_back(Vector::unit(E.field(), E.dim(), i));
  return U == Subspace::span(E.field(), E.dim(), units);
}

std::vector<Subspace> power_sequence(const EvolutionAlgebra& E, const Subspace& U, PowerKind kind,
                                     std::size_t max_k) {
  if (!is_subalgebra(E, U)) throw NotASubalgebra();
  std::vector<Subspace> chain{U};
  while (chain.size() < max_k) {
    Subspace next(E.field(), E.dim());
    switch (kind) {
      case PowerKind::RightPowers:
        next = subspace_product(E, chain.back(), U);
        break;
      case PowerKind::DerivedSeries:
        next = subspace_product(E, chain.back(), chain.back());
        break;
      case PowerKind::PrincipalPowers: {
        const std::size_t k = chain.size();
        for (std::size_t i = 1; i <= k; ++i)
          next = sum(next, subspace_product(E, chain[i - 1], chain[k - i]));
        break;
      }
    }
    chain.push_back(next);
    if (next.is_zero()) break;
  }
  return chain;
}

namespace {

// Right powers and the derived series freeze after one flat step, so the
// chain decides membership of zero within dim+1 terms.
bool descending_chain_reaches_zero(const EvolutionAlgebra& E, const Subspace& U, PowerKind kind) {
  if (!is_subalgebra(E, U)) throw NotASubalgebra();
  Subspace cur = U;
  for (std::size_t step = 0; step <= E.dim() + 1; ++step) {
    if (cur.is_zero()) return true;
    Subspace next = kind == PowerKind::RightPowers ? subspace_product(E, cur, U)
                                                   : subspace_product(E, cur, cur);
    if (next == cur) return false;
    cur = next;
  }
  return cur.is_zero();
}

}  // namespace

bool is_nilpotent(const EvolutionAlgebra& E, const Subspace& U) {
  return descending_chain_reaches_zero(E, U, PowerKind::RightPowers);
}

bool is_nilpotent(const EvolutionAlgebra& E) { return is_nilpotent(E, E.whole_space()); }

bool is_solvable(const EvolutionAlgebra& E, const Subspace& U) {
  return descending_chain_reaches_zero(E, U, PowerKind::DerivedSeries);
}

bool is_solvable(const EvolutionAlgebra& E) { return is_solvable(E, E.whole_space()); }

bool principal_powers_reach_zero(const EvolutionAlgebra& E, const Subspace& U) {
  if (!is_subalgebra(E, U)) throw NotASubalgebra();
  std::vector<Subspace> chain{U};
  std::size_t last_drop = 0;  // index of the last strict decrease
  for (;;) {
    const std::size_t k = chain.size();
    Subspace next(E.field(), E.dim());
    for (std::size_t i = 1; i <= k; ++i)
      next = sum(next, subspace_product(E, chain[i - 1], chain[k - i]));
    if (next.is_zero()) return true;
    if (next != chain.back()) last_drop = k;
    chain.push_back(next);
    // Once the chain is flat from index j through 2j+1, the recurrence only
    // ever recombines values from the flat tail, so it stays flat forever.
    if (chain.size() >= 2 * (last_drop + 1) + 1) return false;
  }
}

Vector QuotientPresentation::lift(const Vector& v) const {
  Vector out(ideal.field(), ideal.ambient_dim());
  for (std::size_t j = 0; j < kept_indices.size(); ++j) out[kept_indices[j]] = v[j];
  return out;
}

Subspace QuotientPresentation::preimage(const Subspace& s) const {
  std::vector<Vector> gens = ideal.basis();
  for (const Vector& v : s.basis()) gens.push_back(lift(v));
  return Subspace::span(ideal.field(), ideal.ambient_dim(), gens);
}

QuotientPresentation quotient(const EvolutionAlgebra& E, const Subspace& ideal) {
  if (!is_ideal(E, ideal)) throw NotAnIdeal();
  const std::size_t n = E.dim();
  const FieldSpec& f = E.field();

  // Greedy scan: keep e_i whenever it is independent of the ideal together
  // with the vectors already kept.
  std::vector<std::size_t> kept;
  Subspace grown = ideal;
  for (std::size_t i = 0; i < n && kept.size() + ideal.dim() < n; ++i) {
    Vector e = Vector::unit(f, n, i);
    if (grown.contains_vector(e)) continue;
    kept.push_back(i);
    grown = sum(grown, Subspace::span(f, n, {e}));
  }
  const std::size_t m = kept.size();

  // Express parent coordinates in the basis (ideal rows, kept units); the
  // kept block of the inverse is the projection.
  Matrix basis(f, n, n);
  for (std::size_t r = 0; r < ideal.dim(); ++r) basis.set_row(r, ideal.basis()[r]);
  for (std::size_t j = 0; j < m; ++j) basis.set_row(ideal.dim() + j, Vector::unit(f, n, kept[j]));
  Matrix inv = basis.inverse();
  Matrix projection(f, n, m);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j < m; ++j) projection.at(r, j) = inv.at(r, ideal.dim() + j);

  Matrix qstruct(f, m, m);
  for (std::size_t j = 0; j < m; ++j) qstruct.set_row(j, projection.apply_left(E.square(kept[j])));

  return QuotientPresentation{ideal, kept, EvolutionAlgebra(f, std::move(qstruct)),
                              std::move(projection)};
}

EvolutionAlgebra direct_sum(const EvolutionAlgebra& A, const EvolutionAlgebra& B) {
  if (A.field() != B.field()) throw MixedFields();
  const std::size_t n = A.dim() + B.dim();
  Matrix m(A.field(), n, n);
  for (std::size_t r = 0; r < A.dim(); ++r)
    for (std::size_t c = 0; c < A.dim(); ++c) m.at(r, c) = A.structure().at(r, c);
  for (std::size_t r = 0; r < B.dim(); ++r)
    for (std::size_t c = 0; c < B.dim(); ++c) m.at(A.dim() + r, A.dim() + c) = B.structure().at(r, c);
  return EvolutionAlgebra(A.field(), std::move(m));
}

OneDimIdeals one_dim_ideals(const EvolutionAlgebra& E) {
  OneDimIdeals out{annihilator(E), {}};
  // A line not inside the annihilator must equal spa{e_k^2} for each k in its
  // support with e_k^2 != 0, so those squares exhaust the candidates.
  for (std::size_t k = 0; k < E.dim(); ++k) {
    Vector w = E.square(k);
    if (w.is_zero()) continue;
    Subspace line = Subspace::span(E.field(), E.dim(), {w});
    if (out.inside_annihilator.contains(line)) continue;
    bool ok = true;
    for (std::size_t i : w.support())
      if (!line.contains_vector(E.square(i))) {
        ok = false;
        break;
      }
    if (!ok) continue;
    if (std::find(out.lines.begin(), out.lines.end(), line) == out.lines.end())
      out.lines.push_back(line);
  }
  std::sort(out.lines.begin(), out.lines.end(), Subspace::less);
  return out;
}

namespace {

struct FlagSearch {
  enum class Node { Yes, No, Undetermined };

  std::size_t nodes_left = 200000;

  Node run(const EvolutionAlgebra& E, std::vector<Subspace>& flag_out) {
    if (E.dim() == 0) return Node::Yes;
    if (nodes_left == 0) return Node::Undetermined;
    --nodes_left;
    OneDimIdeals ids = one_dim_ideals(E);
    std::vector<Vector> candidates;
    if (E.field().is_prime()) {
      for (const Vector& v : enumerate_lines(ids.inside_annihilator)) candidates.push_back(v);
    } else {
      for (std::size_t i : ids.inside_annihilator.support())
        candidates.push_back(Vector::unit(E.field(), E.dim(), i));
    }
    for (const Subspace& line : ids.lines) candidates.push_back(line.basis()[0]);

    bool complete = E.field().is_prime() || ids.inside_annihilator.dim() <= 1;
    bool saw_undetermined = false;
    for (const Vector& v : candidates) {
      Subspace line = Subspace::span(E.field(), E.dim(), {v});
      QuotientPresentation q = quotient(E, line);
      std::vector<Subspace> tail;
      Node sub = run(q.algebra, tail);
      if (sub == Node::Yes) {
        flag_out.clear();
        flag_out.push_back(line);
        for (const Subspace& t : tail) flag_out.push_back(q.preimage(t));
        return Node::Yes;
      }
      if (sub == Node::Undetermined) saw_undetermined = true;
    }
    if (saw_undetermined || !complete) return Node::Undetermined;
    return Node::No;
  }
};

}  // namespace

SupersolvableResult is_supersolvable(const EvolutionAlgebra& E) {
  FlagSearch search;
  std::vector<Subspace> flag;
  FlagSearch::Node node = search.run(E, flag);
  SupersolvableResult out{SupersolvableResult::Verdict::Undetermined, {}};
  if (node == FlagSearch::Node::Yes) {
    out.verdict = SupersolvableResult::Verdict::Yes;
    out.flag = std::move(flag);
  } else if (node == FlagSearch::Node::No) {
    out.verdict = SupersolvableResult::Verdict::No;
  }
  return out;
}

}  // namespace evoalg

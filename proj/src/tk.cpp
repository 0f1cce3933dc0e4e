#include "evoalg/tk.hpp"

#include <algorithm>
#include <numeric>

#include "evoalg/errors.hpp"

namespace evoalg {

EvolutionAlgebra TKForm::canonical_algebra(const FieldSpec& f) const {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) m.at(i, j) = lambdas[i];
  return EvolutionAlgebra(f, std::move(m));
}

bool detect_tk(const EvolutionAlgebra& E) {
  if (derived_subalgebra(E).dim() != 1) return false;
  return is_solvable(E) && !is_nilpotent(E);
}

TKForm canonicalize_tk(const EvolutionAlgebra& E) {
  if (!detect_tk(E)) throw NotTK();
  const FieldSpec& f = E.field();
  const std::size_t n = E.dim();

  // Every square is a multiple of the derived line's canonical generator.
  Vector w = derived_subalgebra(E).basis()[0];
  const std::size_t lead = w.support().front();
  std::vector<Scalar> lam;  // e_i^2 = lam_i w
  lam.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Scalar li = E.square(i)[lead] / w[lead];
    if (E.square(i) != w * li) throw TheoremViolation("square outside the derived line");
    lam.push_back(li);
  }

  // First stage: rescale the support of w to turn it into f_1 + ... + f_k.
  std::vector<std::size_t> order = w.support();  // indices j_1 < ... < j_k
  const std::size_t k = order.size();
  for (std::size_t j = 0; j < n; ++j)
    if (w[j].is_zero()) order.push_back(j);
  Matrix stage1(f, n, n);
  std::vector<Scalar> lam1;  // f_i^2 = lam1_i (f_1 + ... + f_k)
  lam1.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = order[i];
    if (i < k) {
      stage1.at(j, i) = w[j].inverse();
      lam1.push_back(w[j] * w[j] * lam[j]);
    } else {
      stage1.at(j, i) = Scalar::one(f);
      lam1.push_back(lam[j]);
    }
  }
  Scalar head_sum = Scalar::zero(f);
  for (std::size_t i = 0; i < k; ++i) head_sum += lam1[i];
  if (!head_sum.is_zero()) throw TheoremViolation("head coefficients do not sum to zero");

  // Second stage: move the zero coefficients out of the head. Permute the
  // nonzero ones first, then absorb the zero head positions into f_1 and
  // scale everything by 1/lambda_1.
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_partition(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(k),
                        [&](std::size_t i) { return !lam1[i].is_zero(); });
  Matrix stage2(f, n, n);
  std::vector<Scalar> lam2;
  lam2.reserve(n);
  for (std::size_t i = 0; i < n; ++i) lam2.push_back(lam1[perm[i]]);
  std::size_t m = 0;
  while (m < k && !lam2[m].is_zero()) ++m;
  if (m < 2) throw TheoremViolation("fewer than two nonzero head coefficients");
  // g_0 = lam_1 h_0 - lam_1 (h_m + ... + h_{k-1}), g_i = lam_1 h_i otherwise.
  const Scalar lead_lam = lam2[0];
  stage2.at(0, 0) = lead_lam;
  for (std::size_t z = m; z < k; ++z) stage2.at(0, z) = -lead_lam;
  for (std::size_t i = 1; i < n; ++i) stage2.at(i, i) = lead_lam;
  // Fold in the head permutation (f-coordinates -> g-coordinates).
  Matrix permute(f, n, n);
  for (std::size_t i = 0; i < n; ++i) permute.at(perm[i], i) = Scalar::one(f);

  std::vector<Scalar> final_lam;
  final_lam.reserve(n);
  for (std::size_t i = 0; i < n; ++i) final_lam.push_back(lam2[i] / lead_lam);

  TKForm out{n, m, std::move(final_lam), stage1 * permute * stage2};
  return out;
}

Subspace tk_nilradical(const EvolutionAlgebra& E) {
  TKForm t = canonicalize_tk(E);
  Matrix back = t.basis_change.inverse();
  const FieldSpec& f = E.field();
  std::vector<Vector> gens;
  for (std::size_t i = 1; i < t.k; ++i) {
    Vector v(f, t.n);
    v[0] = t.lambdas[i];
    v[i] = -t.lambdas[0];
    gens.push_back(back.apply_left(v));
  }
  for (std::size_t i = t.k; i < t.n; ++i)
    gens.push_back(back.apply_left(Vector::unit(f, t.n, i)));
  return Subspace::span(f, t.n, gens);
}

Subspace ann_of_derived(const EvolutionAlgebra& E) {
  Subspace d = derived_subalgebra(E);
  const std::size_t n = E.dim();
  if (d.is_zero()) return E.whole_space();
  // x -> x w is linear with matrix rows w_i * (row i of the structure
  // matrix); stack one block per generator of the derived subalgebra.
  Matrix stacked(E.field(), n * d.dim(), n);
  for (std::size_t g = 0; g < d.dim(); ++g) {
    const Vector& w = d.basis()[g];
    for (std::size_t i = 0; i < n; ++i) {
      if (w[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) stacked.at(g * n + j, i) = w[i] * E.structure().at(i, j);
    }
  }
  return kernel(stacked);
}

std::pair<Subspace, Subspace> tk_frattini(const EvolutionAlgebra& E) {
  if (!detect_tk(E)) throw NotTK();
  const std::size_t codim = E.dim() - annihilator(E).dim();
  if (codim == 2) return {E.zero_subspace(), E.zero_subspace()};
  Subspace d = derived_subalgebra(E);
  return {d, d};
}

SplitOverAnnihilator split_over_annihilator(const EvolutionAlgebra& E) {
  TKForm t = canonicalize_tk(E);
  Matrix back = t.basis_change.inverse();
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < t.n; ++i)
    if (!t.lambdas[i].is_zero()) gens.push_back(back.apply_left(Vector::unit(E.field(), t.n, i)));
  return {Subspace::span(E.field(), t.n, gens), annihilator(E)};
}

}  // namespace evoalg

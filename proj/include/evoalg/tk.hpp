#ifndef EVOALG_TK_HPP
#define EVOALG_TK_HPP

#include <utility>

#include "evoalg/algebra.hpp"

namespace evoalg {

/// Canonical form of a solvable non-nilpotent evolution algebra with
/// one-dimensional derived subalgebra: a natural basis f_1..f_n with
/// f_i^2 = lambda_i (f_1 + ... + f_k), lambda_1 = 1, lambda_2..lambda_k
/// nonzero, sum_{j<=k} lambda_j = 0. The tail lambda_{k+1}..lambda_n is
/// whatever the canonicalizing substitution produces.
struct TKForm {
  std::size_t n;
  std::size_t k;
  std::vector<Scalar> lambdas;
  /// Invertible coordinate change: canonical coords = input coords * basis_change.
  Matrix basis_change;

  EvolutionAlgebra canonical_algebra(const FieldSpec& f) const;
};

/// Solvable, not nilpotent, and dim(E E) == 1.
bool detect_tk(const EvolutionAlgebra& E);

/// Two-stage natural basis change onto the canonical form above
/// (throws NotTK unless detect_tk holds).
TKForm canonicalize_tk(const EvolutionAlgebra& E);

/// The unique maximal nilpotent ideal, via the explicit spanning set
/// {lambda_2 f_1 - f_2, ..., lambda_k f_1 - f_k, f_{k+1}, ..., f_n} carried
/// back through the basis change. Codimension one.
Subspace tk_nilradical(const EvolutionAlgebra& E);

/// {x : x (E E) = 0}, computed as a kernel; defined for any algebra. For a
/// member of the family this coincides with tk_nilradical, which gives an
/// independent route to the same subspace.
Subspace ann_of_derived(const EvolutionAlgebra& E);

/// Closed-form Frattini subalgebra and ideal of a family member: both zero
/// when the annihilator has codimension two, both equal to E E otherwise.
std::pair<Subspace, Subspace> tk_frattini(const EvolutionAlgebra& E);

/// Basic-ideal complement of the annihilator: E = K + ann(E) with
/// K = spa{f_i : lambda_i != 0} pulled back to input coordinates.
struct SplitOverAnnihilator {
  Subspace complement;
  Subspace ann;
};

SplitOverAnnihilator split_over_annihilator(const EvolutionAlgebra& E);

}  // namespace evoalg

#endif

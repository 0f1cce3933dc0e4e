#ifndef EVOALG_ALGEBRA_HPP
#define EVOALG_ALGEBRA_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "evoalg/linalg.hpp"

namespace evoalg {

/// Finite-dimensional evolution algebra: a commutative algebra with a basis
/// e_1..e_n whose distinct elements multiply to zero. Row i of the structure
/// matrix holds the coordinates of e_i^2; every computation is relative to
/// this fixed natural basis.
class EvolutionAlgebra {
 public:
  EvolutionAlgebra(const FieldSpec& f, Matrix structure);

  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Matrix& structure() const { return structure_; }

  /// e_i^2 as a coordinate vector.
  Vector square(std::size_t i) const { return structure_.row(i); }

  /// Bilinear product: u v = sum_i u_i v_i e_i^2.
  Vector multiply(const Vector& u, const Vector& v) const;

  Subspace zero_subspace() const { return Subspace(field_, dim_); }
  Subspace whole_space() const { return Subspace::whole(field_, dim_); }

  bool operator==(const EvolutionAlgebra& o) const {
    return field_ == o.field_ && structure_ == o.structure_;
  }

 private:
  FieldSpec field_;
  std::size_t dim_;
  Matrix structure_;
};

/// spa{e_i : e_i^2 = 0}; kills the whole algebra.
Subspace annihilator(const EvolutionAlgebra& E);

/// Span of the pairwise products of basis vectors of U and V (equals U V by
/// bilinearity).
Subspace subspace_product(const EvolutionAlgebra& E, const Subspace& U, const Subspace& V);

/// Derived subalgebra E E.
Subspace derived_subalgebra(const EvolutionAlgebra& E);

bool is_subalgebra(const EvolutionAlgebra& E, const Subspace& U);
bool is_ideal(const EvolutionAlgebra& E, const Subspace& U);
/// Ideal spanned by natural basis vectors.
bool is_basic_ideal(const EvolutionAlgebra& E, const Subspace& U);

enum class PowerKind { RightPowers, PrincipalPowers, DerivedSeries };

/// Chain U^<k> / U^k / U^(k) for k = 1..max_k. U must be a subalgebra; all
/// three chains are then descending.
std::vector<Subspace> power_sequence(const EvolutionAlgebra& E, const Subspace& U, PowerKind kind,
                                     std::size_t max_k);

/// Right powers reach zero within dim+1 steps (equivalent to nilpotency for
/// commutative algebras). U must be a subalgebra.
bool is_nilpotent(const EvolutionAlgebra& E, const Subspace& U);
bool is_nilpotent(const EvolutionAlgebra& E);

/// Derived series reaches zero within dim+1 steps.
bool is_solvable(const EvolutionAlgebra& E, const Subspace& U);
bool is_solvable(const EvolutionAlgebra& E);

/// Principal powers reach zero. The chain is descending but a single flat
/// step does not freeze it, so the loop runs until the recurrence provably
/// stabilises (a flat window from j to 2j+1 repeats forever).
bool principal_powers_reach_zero(const EvolutionAlgebra& E, const Subspace& U);

/// Quotient by an ideal, presented on the lexicographically-first subset of
/// natural basis vectors whose images stay independent. The quotient of an
/// evolution algebra by an ideal is again an evolution algebra on the images
/// of the kept basis vectors.
struct QuotientPresentation {
  Subspace ideal;
  std::vector<std::size_t> kept_indices;  // 0-based, ascending
  EvolutionAlgebra algebra;               // dim = parent dim - dim ideal
  Matrix projection;                      // parent coords -> quotient coords (row convention)

  Vector project(const Vector& v) const { return projection.apply_left(v); }
  /// Canonical section: place quotient coordinates at the kept indices.
  Vector lift(const Vector& v) const;
  /// Full preimage of a subspace of the quotient.
  Subspace preimage(const Subspace& s) const;
};

QuotientPresentation quotient(const EvolutionAlgebra& E, const Subspace& ideal);

EvolutionAlgebra direct_sum(const EvolutionAlgebra& A, const EvolutionAlgebra& B);

/// All one-dimensional ideals. Lines inside `inside_annihilator` (= ann E)
/// are ideals without further condition and are returned symbolically; the
/// finite list holds every one-dimensional ideal not inside the annihilator
/// (each such line is spanned by some e_k^2).
struct OneDimIdeals {
  Subspace inside_annihilator;
  std::vector<Subspace> lines;
};

OneDimIdeals one_dim_ideals(const EvolutionAlgebra& E);

/// Supersolvability: a complete flag of ideals. Complete over prime fields
/// (one-dimensional ideals are enumerable); over the rationals the candidate
/// lines inside the annihilator are restricted to natural basis directions,
/// so a failed search reports Undetermined instead of No.
struct SupersolvableResult {
  enum class Verdict { Yes, No, Undetermined };
  Verdict verdict;
  /// On Yes: ideals of dims 1..n forming the flag (prepend 0 for the full chain).
  std::vector<Subspace> flag;
};

SupersolvableResult is_supersolvable(const EvolutionAlgebra& E);

}  // namespace evoalg

#endif

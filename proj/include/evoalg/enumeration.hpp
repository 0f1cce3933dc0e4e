#ifndef EVOALG_ENUMERATION_HPP
#define EVOALG_ENUMERATION_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "evoalg/linalg.hpp"

namespace evoalg {

/// Number of r-dimensional subspaces of F_q^n (Gaussian binomial), saturated
/// at uint64 max.
std::uint64_t gaussian_binomial(std::size_t n, std::size_t r, std::uint64_t q);

/// Total number of subspaces of F_q^n, saturated.
std::uint64_t subspace_count(std::size_t n, std::uint64_t q);

/// Default budget: a cap on the total number of subspaces visited by a
/// brute-force enumeration. 4000 admits dim 5 over F_3 and dim 4 over F_5
/// and F_7.
inline constexpr std::uint64_t kDefaultSubspaceBudget = 4000;

/// Throws NotFiniteField / BudgetExceeded when a brute-force enumeration over
/// (f, n) is not allowed under `budget`.
void require_enumerable(const FieldSpec& f, std::size_t n, std::uint64_t budget);

/// One representative per line of s (first nonzero coefficient normalized to
/// 1); prime fields only.
std::vector<Vector> enumerate_lines(const Subspace& s);

/// Visit every subspace of F_q^n exactly once, in canonical order (dimension
/// ascending, pivot pattern lexicographic, free entries in odometer order).
/// Serial reference implementation.
void for_each_subspace(const FieldSpec& f, std::size_t n,
                       const std::function<void(const Subspace&)>& fn);

/// All subspaces satisfying pred, in the same canonical order as
/// for_each_subspace. Partitioned across threads by pivot pattern and merged
/// deterministically, so the result is identical for any worker count.
std::vector<Subspace> collect_subspaces_if(const FieldSpec& f, std::size_t n,
                                           const std::function<bool(const Subspace&)>& pred);

/// Serial reference for collect_subspaces_if; kept for tests and benchmarks.
std::vector<Subspace> collect_subspaces_if_serial(const FieldSpec& f, std::size_t n,
                                                  const std::function<bool(const Subspace&)>& pred);

}  // namespace evoalg

#endif

#include "evoalg/enumeration.hpp"

#include <gmpxx.h>

#include <limits>

#include "evoalg/errors.hpp"

namespace evoalg {

namespace {

std::uint64_t clamp_to_u64(const mpz_class& z) {
  static const mpz_class cap(std::numeric_limits<std::uint64_t>::max());
  if (z > cap) return std::numeric_limits<std::uint64_t>::max();
  return mpz_get_ui(z.get_mpz_t());  // unsigned long is 64-bit here
}

mpz_class gaussian_binomial_exact(std::size_t n, std::size_t r, std::uint64_t q) {
  if (r > n) return 0;
  mpz_class num = 1, den = 1, qz(static_cast<unsigned long>(q));
  for (std::size_t i = 0; i < r; ++i) {
    mpz_class qn, qd;
    mpz_pow_ui(qn.get_mpz_t(), qz.get_mpz_t(), static_cast<unsigned long>(n - i));
    mpz_pow_ui(qd.get_mpz_t(), qz.get_mpz_t(), static_cast<unsigned long>(i + 1));
    num *= qn - 1;
    den *= qd - 1;
  }
  return num / den;
}

// All r-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  if (r > n) return out;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  for (;;) {
    out.push_back(idx);
    std::size_t i = r;
    while (i > 0) {
      --i;
      if (idx[i] != i + n - r) break;
      if (i == 0) return out;
    }
    ++idx[i];
    for (std::size_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Visit every RREF matrix with the given pivot columns.
void scan_pattern(const FieldSpec& f, std::size_t n, const std::vector<std::size_t>& pivots,
                  const std::function<void(const Subspace&)>& fn) {
  const std::size_t r = pivots.size();
  const std::uint64_t q = f.p();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  struct Cell {
    std::size_t row, col;
  };
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = pivots[i] + 1; j < n; ++j)
      if (!is_pivot[j]) cells.push_back({i, j});

  std::vector<std::uint64_t> value(cells.size(), 0);
  std::vector<Scalar> lut;
  lut.reserve(q);
  for (std::uint64_t v = 0; v < q; ++v) lut.push_back(Scalar::from_int(f, static_cast<long long>(v)));

  for (;;) {
    std::vector<Vector> rows;
    rows.reserve(r);
    for (std::size_t i = 0; i < r; ++i) {
      Vector row(f, n);
      row[pivots[i]] = Scalar::one(f);
      rows.push_back(std::move(row));
    }
    for (std::size_t c = 0; c < cells.size(); ++c)
      rows[cells[c].row][cells[c].col] = lut[value[c]];
    fn(Subspace::span(f, n, rows));

    std::size_t pos = 0;
    while (pos < cells.size() && value[pos] + 1 == q) value[pos++] = 0;
    if (pos == cells.size()) break;
    ++value[pos];
  }
}

}  // namespace

std::uint64_t gaussian_binomial(std::size_t n, std::size_t r, std::uint64_t q) {
  return clamp_to_u64(gaussian_binomial_exact(n, r, q));
}

std::uint64_t subspace_count(std::size_t n, std::uint64_t q) {
  mpz_class total = 0;
  for (std::size_t r = 0; r <= n; ++r) total += gaussian_binomial_exact(n, r, q);
  return clamp_to_u64(total);
}

void require_enumerable(const FieldSpec& f, std::size_t n, std::uint64_t budget) {
  if (!f.is_prime()) throw NotFiniteField();
  const std::uint64_t count = subspace_count(n, f.p());
  if (count > budget)
    throw BudgetExceeded("enumerating " + std::to_string(count) + " subspaces exceeds budget " +
                         std::to_string(budget));
}

std::vector<Vector> enumerate_lines(const Subspace& s) {
  if (!s.field().is_prime()) throw NotFiniteField();
  std::vector<Vector> out;
  const std::uint64_t q = s.field().p();
  const std::size_t r = s.dim();
  if (r == 0) return out;
  std::vector<std::uint64_t> coeff(r, 0);
  for (;;) {
    std::size_t pos = 0;
    while (pos < r && coeff[pos] + 1 == q) coeff[pos++] = 0;
    if (pos == r) break;
    ++coeff[pos];
    std::size_t first = 0;
    while (first < r && coeff[first] == 0) ++first;
    if (coeff[first] != 1) continue;  // one representative per line
    Vector v(s.field(), s.ambient_dim());
    for (std::size_t i = 0; i < r; ++i)
      if (coeff[i])
        v = v + s.basis()[i] * Scalar::from_int(s.field(), static_cast<long long>(coeff[i]));
    out.push_back(v);
  }
  return out;
}

void for_each_subspace(const FieldSpec& f, std::size_t n,
                       const std::function<void(const Subspace&)>& fn) {
  if (!f.is_prime()) throw NotFiniteField();
  for (std::size_t r = 0; r <= n; ++r)
    for (const auto& pivots : combinations(n, r)) scan_pattern(f, n, pivots, fn);
}

std::vector<Subspace> collect_subspaces_if_serial(
    const FieldSpec& f, std::size_t n, const std::function<bool(const Subspace&)>& pred) {
  std::vector<Subspace> out;
  for_each_subspace(f, n, [&](const Subspace& s) {
    if (pred(s)) out.push_back(s);
  });
  return out;
}

std::vector<Subspace> collect_subspaces_if(const FieldSpec& f, std::size_t n,
                                           const std::function<bool(const Subspace&)>& pred) {
  if (!f.is_prime()) throw NotFiniteField();
  std::vector<std::vector<std::size_t>> patterns;
  for (std::size_t r = 0; r <= n; ++r)
    for (auto& c : combinations(n, r)) patterns.push_back(std::move(c));

  std::vector<std::vector<Subspace>> buckets(patterns.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(patterns.size()); ++t) {
    std::vector<Subspace> local;
    scan_pattern(f, n, patterns[static_cast<std::size_t>(t)], [&](const Subspace& s) {
      if (pred(s)) local.push_back(s);
    });
    buckets[static_cast<std::size_t>(t)] = std::move(local);
  }

  std::vector<Subspace> out;
  for (auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace evoalg

#ifndef EVOALG_LINALG_HPP
#define EVOALG_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "evoalg/scalar.hpp"

namespace evoalg {

/// Coordinate vector relative to the natural basis.
class Vector {
 public:
  Vector(const FieldSpec& f, std::size_t n) : field_(f), c_(n, Scalar::zero(f)) {}
  static Vector unit(const FieldSpec& f, std::size_t n, std::size_t i);

  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return c_.size(); }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  Scalar& operator[](std::size_t i) { return c_[i]; }

  bool is_zero() const;
  Vector operator+(const Vector& o) const;
  Vector operator-(const Vector& o) const;
  Vector operator*(const Scalar& s) const;
  Vector operator-() const;
  bool operator==(const Vector& o) const;
  bool operator!=(const Vector& o) const { return !(*this == o); }

  /// 0-based indices of nonzero coordinates, ascending.
  std::vector<std::size_t> support() const;

  /// Human-readable form like "e1+2*e3-e4" ("0" for the zero vector).
  std::string pretty() const;

 private:
  FieldSpec field_;
  std::vector<Scalar> c_;
};

class Matrix {
 public:
  Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  void set_row(std::size_t r, const Vector& v);
  Matrix transpose() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  /// Multiply a row vector on the left: result = v * M.
  Vector apply_left(const Vector& v) const;
  Matrix operator*(const Matrix& o) const;

  /// Inverse of a square matrix (throws DimensionMismatch if singular).
  Matrix inverse() const;

 private:
  FieldSpec field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

/// Canonical reduced row echelon form. Pivoting is deterministic: the pivot
/// of each step is the first nonzero entry in the leftmost unfinished column,
/// scanning top-down, so equal row spaces always reduce to identical matrices.
Matrix rref(const Matrix& m);

/// Subspace of the coordinate space, stored as its canonical RREF basis with
/// strictly increasing pivots. Two subspaces are equal iff their canonical
/// bases are identical.
class Subspace {
 public:
  Subspace(const FieldSpec& f, std::size_t ambient);  // zero subspace
  static Subspace span(const FieldSpec& f, std::size_t ambient, const std::vector<Vector>& gens);
  static Subspace whole(const FieldSpec& f, std::size_t ambient);

  const FieldSpec& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains_vector(const Vector& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  /// Union of the supports of the canonical basis vectors (0-based).
  std::vector<std::size_t> support() const;

  /// Deterministic ordering (by dim, then lexicographic on basis entries);
  /// used to merge enumeration results canonically.
  static bool less(const Subspace& a, const Subspace& b);

 private:
  FieldSpec field_;
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// Right kernel {x : m x = 0} as a subspace of the column coordinate space.
Subspace kernel(const Matrix& m);

/// Unique coset representative of v + s with zeros in the pivot coordinates
/// of s; reduce_mod(s, v) == 0 iff v lies in s.
Vector reduce_mod(const Subspace& s, const Vector& v);

}  // namespace evoalg

#endif

#include "evoalg/linalg.hpp"

#include <algorithm>

#include "evoalg/errors.hpp"

namespace evoalg {

namespace {

void check_fields(const FieldSpec& a, const FieldSpec& b) {
  if (a != b) throw MixedFields();
}

void check_dims(std::size_t a, std::size_t b) {
  if (a != b) throw DimensionMismatch();
}

}  // namespace

Vector Vector::unit(const FieldSpec& f, std::size_t n, std::size_t i) {
  Vector v(f, n);
  v[i] = Scalar::one(f);
  return v;
}

bool Vector::is_zero() const {
  for (const Scalar& s : c_)
    if (!s.is_zero()) return false;
  return true;
}

Vector Vector::operator+(const Vector& o) const {
  check_fields(field_, o.field_);
  check_dims(dim(), o.dim());
  Vector r = *this;
  for (std::size_t i = 0; i < dim(); ++i) r[i] += o[i];
  return r;
}

Vector Vector::operator-(const Vector& o) const {
  check_fields(field_, o.field_);
  check_dims(dim(), o.dim());
  Vector r = *this;
  for (std::size_t i = 0; i < dim(); ++i) r[i] -= o[i];
  return r;
}

Vector Vector::operator*(const Scalar& s) const {
  Vector r = *this;
  for (std::size_t i = 0; i < dim(); ++i) r[i] *= s;
  return r;
}

Vector Vector::operator-() const {
  Vector r = *this;
  for (std::size_t i = 0; i < dim(); ++i) r[i] = -r[i];
  return r;
}

bool Vector::operator==(const Vector& o) const {
  check_fields(field_, o.field_);
  if (dim() != o.dim()) return false;
  for (std::size_t i = 0; i < dim(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

std::vector<std::size_t> Vector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(); ++i)
    if (!c_[i].is_zero()) out.push_back(i);
  return out;
}

std::string Vector::pretty() const {
  std::string out;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (c_[i].is_zero()) continue;
    std::string coeff = c_[i].str();
    bool neg = !coeff.empty() && coeff[0] == '-';
    std::string mag = neg ? coeff.substr(1) : coeff;
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? '-' : '+';
    }
    if (mag != "1") out += mag + "*";
    out += "e" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

Vector Matrix::row(std::size_t r) const {
  Vector v(field_, cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

void Matrix::set_row(std::size_t r, const Vector& v) {
  check_dims(v.dim(), cols_);
  for (std::size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  check_fields(field_, o.field_);
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

Vector Matrix::apply_left(const Vector& v) const {
  check_fields(field_, v.field());
  check_dims(v.dim(), rows_);
  Vector out(field_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (v[r].is_zero()) continue;
    for (std::size_t c = 0; c < cols_; ++c) out[c] += v[r] * at(r, c);
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  check_fields(field_, o.field_);
  check_dims(cols_, o.rows_);
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) out.at(r, c) += at(r, k) * o.at(k, c);
    }
  return out;
}

Matrix Matrix::inverse() const {
  check_dims(rows_, cols_);
  Matrix aug(field_, rows_, 2 * cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_ + r) = Scalar::one(field_);
  }
  Matrix red = rref(aug);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (red.at(r, c) != (r == c ? Scalar::one(field_) : Scalar::zero(field_)))
        throw DimensionMismatch("matrix is singular");
  Matrix inv(field_, rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) inv.at(r, c) = red.at(r, cols_ + c);
  return inv;
}

Matrix rref(const Matrix& m) {
  Matrix a = m;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < a.rows() && a.at(sel, col).is_zero()) ++sel;
    if (sel == a.rows()) continue;
    if (sel != pivot_row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(sel, c), a.at(pivot_row, c));
    Scalar inv = a.at(pivot_row, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c) a.at(pivot_row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == pivot_row || a.at(r, col).is_zero()) continue;
      Scalar factor = a.at(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        a.at(r, c) -= factor * a.at(pivot_row, c);
    }
    ++pivot_row;
  }
  return a;
}

Subspace::Subspace(const FieldSpec& f, std::size_t ambient) : field_(f), ambient_(ambient) {}

Subspace Subspace::span(const FieldSpec& f, std::size_t ambient, const std::vector<Vector>& gens) {
  Subspace s(f, ambient);
  if (gens.empty()) return s;
  Matrix m(f, gens.size(), ambient);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    check_fields(gens[i].field(), f);
    check_dims(gens[i].dim(), ambient);
    m.set_row(i, gens[i]);
  }
  Matrix r = rref(m);
  for (std::size_t i = 0; i < r.rows(); ++i) {
    Vector row = r.row(i);
    if (row.is_zero()) break;  // zero rows sink to the bottom
    s.basis_.push_back(row);
    s.pivots_.push_back(row.support().front());
  }
  return s;
}

Subspace Subspace::whole(const FieldSpec& f, std::size_t ambient) {
  std::vector<Vector> units;
  units.reserve(ambient);
  for (std::size_t i = 0; i < ambient; ++i) units.push_back(Vector::unit(f, ambient, i));
  return span(f, ambient, units);
}

bool Subspace::contains_vector(const Vector& v) const {
  return reduce_mod(*this, v).is_zero();
}

bool Subspace::contains(const Subspace& other) const {
  check_fields(field_, other.field_);
  check_dims(ambient_, other.ambient_);
  for (const Vector& v : other.basis_)
    if (!contains_vector(v)) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  check_fields(field_, o.field_);
  if (ambient_ != o.ambient_ || basis_.size() != o.basis_.size()) return false;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i] != o.basis_[i]) return false;
  return true;
}

std::vector<std::size_t> Subspace::support() const {
  std::vector<bool> seen(ambient_, false);
  for (const Vector& v : basis_)
    for (std::size_t i : v.support()) seen[i] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ambient_; ++i)
    if (seen[i]) out.push_back(i);
  return out;
}

bool Subspace::less(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t c = 0; c < a.ambient_; ++c) {
      const std::string x = a.basis_[i][c].str();
      const std::string y = b.basis_[i][c].str();
      if (x != y) return x < y;
    }
  return false;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  check_fields(a.field(), b.field());
  check_dims(a.ambient_dim(), b.ambient_dim());
  std::vector<Vector> gens = a.basis();
  gens.insert(gens.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.field(), a.ambient_dim(), gens);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  check_fields(a.field(), b.field());
  check_dims(a.ambient_dim(), b.ambient_dim());
  const std::size_t n = a.ambient_dim();
  const std::size_t r = a.dim(), s = b.dim();
  if (r == 0 || s == 0) return Subspace(a.field(), n);
  // Solve sum(alpha_i u_i) = sum(beta_j w_j): the kernel of the stacked
  // coefficient system yields the intersection generators.
  Matrix sys(a.field(), n, r + s);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < n; ++c) sys.at(c, i) = a.basis()[i][c];
  for (std::size_t j = 0; j < s; ++j)
    for (std::size_t c = 0; c < n; ++c) sys.at(c, r + j) = -b.basis()[j][c];
  Subspace ker = kernel(sys);
  std::vector<Vector> gens;
  for (const Vector& sol : ker.basis()) {
    Vector v(a.field(), n);
    for (std::size_t i = 0; i < r; ++i)
      if (!sol[i].is_zero()) v = v + a.basis()[i] * sol[i];
    gens.push_back(v);
  }
  return Subspace::span(a.field(), n, gens);
}

Subspace kernel(const Matrix& m) {
  Matrix r = rref(m);
  const std::size_t n = m.cols();
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(n, false);
  for (std::size_t row = 0; row < r.rows(); ++row) {
    Vector v = r.row(row);
    if (v.is_zero()) break;
    std::size_t p = v.support().front();
    pivot_col.push_back(p);
    is_pivot[p] = true;
  }
  std::vector<Vector> gens;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.field(), n);
    v[free] = Scalar::one(m.field());
    for (std::size_t row = 0; row < pivot_col.size(); ++row)
      v[pivot_col[row]] = -r.at(row, free);
    gens.push_back(v);
  }
  return Subspace::span(m.field(), n, gens);
}

Vector reduce_mod(const Subspace& s, const Vector& v) {
  check_fields(s.field(), v.field());
  check_dims(s.ambient_dim(), v.dim());
  Vector out = v;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const std::size_t p = s.pivots()[i];
    if (out[p].is_zero()) continue;
    out = out - s.basis()[i] * out[p];
  }
  return out;
}

}  // namespace evoalg

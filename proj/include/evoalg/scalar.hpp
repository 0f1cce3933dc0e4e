#ifndef EVOALG_SCALAR_HPP
#define EVOALG_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "evoalg/field.hpp"

namespace evoalg {

/// Exact field element. Rational values are arbitrary-precision fractions in
/// lowest terms with positive denominator; prime-field values are residues in
/// [0, p-1]. Immutable value type, safe to copy across threads.
class Scalar {
 public:
  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar from_int(const FieldSpec& f, long long v);

  /// Grammar: optional '-', decimal digits, optional "/digits".
  /// In F_p the form "a/b" denotes a * b^{-1}.
  static Scalar parse(std::string_view text, const FieldSpec& f);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws DivisionByZero
  Scalar operator-() const;
  Scalar inverse() const;  // throws DivisionByZero

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical text form matching the parse grammar.
  std::string str() const;

  /// Rational value (rational field only).
  const mpq_class& rat() const { return *rat_; }
  /// Residue in [0, p-1] (prime field only).
  std::uint64_t residue() const { return res_; }

  /// True when the value is a square in the field; if so and `root` is
  /// non-null, stores one square root.
  bool is_square(Scalar* root = nullptr) const;

 private:
  Scalar(const FieldSpec& f, mpq_class q) : field_(f), res_(0), rat_(std::move(q)) {}
  Scalar(const FieldSpec& f, std::uint64_t r) : field_(f), res_(r) {}
  void check_same_field(const Scalar& o) const;

  FieldSpec field_;
  std::uint64_t res_;
  std::optional<mpq_class> rat_;
};

/// Modular inverse by the extended Euclidean algorithm; 0 < a < p.
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p);

}  // namespace evoalg

#endif

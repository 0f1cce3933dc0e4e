#ifndef EVOALG_FIELD_HPP
#define EVOALG_FIELD_HPP

#include <cstdint>
#include <string>

namespace evoalg {

/// Coefficient field: the rationals, or F_p for an odd prime p that fits a
/// machine word. Characteristic two is rejected at construction.
class FieldSpec {
 public:
  enum class Kind { Rational, Prime };

  static FieldSpec rational() { return FieldSpec(Kind::Rational, 0); }
  static FieldSpec prime(std::uint64_t p);  // throws ParseError unless p is an odd prime

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rational; }
  bool is_prime() const { return kind_ == Kind::Prime; }
  std::uint64_t p() const { return p_; }  // 0 for the rationals

  bool operator==(const FieldSpec& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

  std::string describe() const;

 private:
  FieldSpec(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint64_t p_;
};

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

}  // namespace evoalg

#endif

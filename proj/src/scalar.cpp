#include "evoalg/scalar.hpp"

#include <cctype>

#include "evoalg/errors.hpp"

namespace evoalg {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t negmod(std::uint64_t a, std::uint64_t p) { return a == 0 ? 0 : p - a; }

// Fold a digit string into a residue; handles inputs of any length.
std::uint64_t digits_mod(std::string_view digits, std::uint64_t p) {
  std::uint64_t r = 0;
  for (char c : digits) r = (mulmod(r, 10, p) + static_cast<std::uint64_t>(c - '0')) % p;
  return r;
}

struct ParsedFraction {
  bool negative = false;
  std::string_view num;
  std::string_view den;  // empty when absent
};

ParsedFraction split_fraction(std::string_view text) {
  ParsedFraction out;
  std::string_view s = text;
  if (!s.empty() && s[0] == '-') {
    out.negative = true;
    s.remove_prefix(1);
  }
  std::size_t slash = s.find('/');
  out.num = slash == std::string_view::npos ? s : s.substr(0, slash);
  if (slash != std::string_view::npos) out.den = s.substr(slash + 1);
  auto all_digits = [](std::string_view v) {
    if (v.empty()) return false;
    for (char c : v)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  if (!all_digits(out.num)) throw ParseError("malformed scalar '" + std::string(text) + "'");
  if (slash != std::string_view::npos && !all_digits(out.den))
    throw ParseError("malformed scalar '" + std::string(text) + "'");
  return out;
}

}  // namespace

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) {
  // Extended Euclid on (a, p); coefficients stay below p in magnitude.
  __int128 t = 0, new_t = 1;
  __int128 r = static_cast<__int128>(p), new_r = static_cast<__int128>(a);
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw DivisionByZero();
  if (t < 0) t += static_cast<__int128>(p);
  return static_cast<std::uint64_t>(t);
}

Scalar Scalar::zero(const FieldSpec& f) {
  return f.is_rational() ? Scalar(f, mpq_class(0)) : Scalar(f, std::uint64_t{0});
}

Scalar Scalar::one(const FieldSpec& f) {
  return f.is_rational() ? Scalar(f, mpq_class(1)) : Scalar(f, std::uint64_t{1});
}

Scalar Scalar::from_int(const FieldSpec& f, long long v) {
  if (f.is_rational()) return Scalar(f, mpq_class(static_cast<long>(v)));
  std::uint64_t p = f.p();
  if (v >= 0) return Scalar(f, static_cast<std::uint64_t>(v) % p);
  std::uint64_t mag = static_cast<std::uint64_t>(-(v + 1)) + 1;
  return Scalar(f, negmod(mag % p, p));
}

Scalar Scalar::parse(std::string_view text, const FieldSpec& f) {
  ParsedFraction parts = split_fraction(text);
  if (f.is_rational()) {
    mpz_class num(std::string(parts.num), 10);
    if (parts.negative) num = -num;
    mpz_class den = parts.den.empty() ? mpz_class(1) : mpz_class(std::string(parts.den), 10);
    if (den == 0) throw DenominatorZero();
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(f, std::move(q));
  }
  std::uint64_t p = f.p();
  std::uint64_t num = digits_mod(parts.num, p);
  if (parts.negative) num = negmod(num, p);
  if (parts.den.empty()) return Scalar(f, num);
  bool den_zero_literal = true;
  for (char c : parts.den) den_zero_literal = den_zero_literal && c == '0';
  if (den_zero_literal) throw DenominatorZero();
  std::uint64_t den = digits_mod(parts.den, p);
  if (den == 0)
    throw DenominatorNotInvertible("denominator '" + std::string(parts.den) + "' vanishes mod " +
                                   std::to_string(p));
  return Scalar(f, mulmod(num, invmod_u64(den, p), p));
}

bool Scalar::is_zero() const { return field_.is_rational() ? rat_->get_num() == 0 : res_ == 0; }

bool Scalar::is_one() const { return field_.is_rational() ? *rat_ == 1 : res_ == 1; }

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_) throw MixedFields();
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  if (field_.is_rational()) return Scalar(field_, mpq_class(*rat_ + *o.rat_));
  return Scalar(field_, (res_ + o.res_) % field_.p());
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  if (field_.is_rational()) return Scalar(field_, mpq_class(*rat_ - *o.rat_));
  return Scalar(field_, (res_ + negmod(o.res_, field_.p())) % field_.p());
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  if (field_.is_rational()) return Scalar(field_, mpq_class(*rat_ * *o.rat_));
  return Scalar(field_, mulmod(res_, o.res_, field_.p()));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  if (field_.is_rational()) return Scalar(field_, mpq_class(-*rat_));
  return Scalar(field_, negmod(res_, field_.p()));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (field_.is_rational()) return Scalar(field_, mpq_class(1 / *rat_));
  return Scalar(field_, invmod_u64(res_, field_.p()));
}

bool Scalar::operator==(const Scalar& o) const {
  check_same_field(o);
  return field_.is_rational() ? *rat_ == *o.rat_ : res_ == o.res_;
}

std::string Scalar::str() const {
  if (field_.is_rational()) return rat_->get_str();
  return std::to_string(res_);
}

bool Scalar::is_square(Scalar* root) const {
  if (is_zero()) {
    if (root) *root = zero(field_);
    return true;
  }
  if (field_.is_rational()) {
    if (*rat_ < 0) return false;
    mpz_class num_root, den_root;
    if (!mpz_root(num_root.get_mpz_t(), rat_->get_num().get_mpz_t(), 2)) return false;
    if (num_root * num_root != rat_->get_num()) return false;
    if (!mpz_root(den_root.get_mpz_t(), rat_->get_den().get_mpz_t(), 2)) return false;
    if (den_root * den_root != rat_->get_den()) return false;
    if (root) *root = Scalar(field_, mpq_class(num_root, den_root));
    return true;
  }
  std::uint64_t p = field_.p();
  auto pow = [p](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
      if (e & 1) r = mulmod(r, b, p);
      b = mulmod(b, b, p);
      e >>= 1;
    }
    return r;
  };
  if (pow(res_, (p - 1) / 2) != 1) return false;  // Euler's criterion
  if (root) {
    std::uint64_t r;
    if (p % 4 == 3) {
      r = pow(res_, (p + 1) / 4);
    } else {
      // Tonelli-Shanks.
      std::uint64_t q = p - 1;
      std::uint64_t s = 0;
      while ((q & 1) == 0) {
        q >>= 1;
        ++s;
      }
      std::uint64_t z = 2;
      while (pow(z, (p - 1) / 2) == 1) ++z;
      std::uint64_t m = s;
      std::uint64_t c = pow(z, q);
      std::uint64_t t = pow(res_, q);
      r = pow(res_, (q + 1) / 2);
      while (t != 1) {
        std::uint64_t i = 0;
        std::uint64_t tt = t;
        while (tt != 1) {
          tt = mulmod(tt, tt, p);
          ++i;
        }
        std::uint64_t b = c;
        for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
      }
    }
    *root = Scalar(field_, r);
  }
  return true;
}

}  // namespace evoalg

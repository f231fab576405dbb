#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace grl {

class Scalar;

// Coefficient field: the rationals or a prime field F_p.
class Field {
 public:
  enum class Kind { Rational, Prime };

  static Field rationals() { return Field(Kind::Rational, 0); }
  static Field prime(std::uint32_t p);  // throws InvalidField unless p is prime

  Kind kind() const { return kind_; }
  bool is_prime() const { return kind_ == Kind::Prime; }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long value) const;
  Scalar from_integer(const mpz_class& value) const;
  Scalar from_rational(const mpq_class& value) const;  // F_p: denominator must be invertible
  Scalar parse(const std::string& text) const;          // "p/q" or an integer
  // F_p only: the element with residue r (0 <= r < p).
  Scalar residue(std::uint32_t r) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  Field(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

// Exact field element. Rationals are kept canonical (lowest terms, positive
// denominator) so equality is structural.
class Scalar {
 public:
  struct Residue {
    std::uint32_t value;
    std::uint32_t p;
    friend bool operator==(const Residue&, const Residue&) = default;
  };

  explicit Scalar(mpq_class q);
  explicit Scalar(Residue r) : v_(r) {}

  Field field() const;
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
  const mpq_class& rational() const;
  std::uint32_t residue() const;

  Scalar operator-() const;
  Scalar inverse() const;  // throws DivisionByZero
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  void require_same(const Scalar& o) const;

  std::variant<Residue, mpq_class> v_;
};

}  // namespace grl

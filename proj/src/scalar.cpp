#include "grl/scalar.hpp"

#include "grl/error.hpp"

namespace grl {

namespace {

bool is_prime_number(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t reduce(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::NotMember: return "NotMember";
    case ErrorCode::NotSubgroup: return "NotSubgroup";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::InvalidGroup: return "InvalidGroup";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorCode::InvalidGrading: return "InvalidGrading";
    case ErrorCode::InvalidTwist: return "InvalidTwist";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::NotUnital: return "NotUnital";
    case ErrorCode::InfiniteGroup: return "InfiniteGroup";
    case ErrorCode::DegreeOutsideMonoid: return "DegreeOutsideMonoid";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::Parse: return "Parse";
  }
  return "Error";
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime_number(p)) throw Error(ErrorCode::InvalidField, std::to_string(p) + " is not prime");
  return Field(Kind::Prime, p);
}

std::string Field::name() const { return is_prime() ? "F" + std::to_string(p_) : "Q"; }

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long value) const {
  if (is_prime()) {
    long r = value % static_cast<long>(p_);
    if (r < 0) r += p_;
    return Scalar(Scalar::Residue{static_cast<std::uint32_t>(r), p_});
  }
  return Scalar(mpq_class(value));
}

Scalar Field::from_integer(const mpz_class& value) const {
  if (is_prime()) return Scalar(Scalar::Residue{reduce(value, p_), p_});
  return Scalar(mpq_class(value));
}

Scalar Field::from_rational(const mpq_class& value) const {
  if (!is_prime()) return Scalar(value);
  const std::uint32_t den = reduce(value.get_den(), p_);
  if (den == 0) throw Error(ErrorCode::DivisionByZero, value.get_str() + " has no image in " + name());
  return from_integer(value.get_num()) / Scalar(Scalar::Residue{den, p_});
}

Scalar Field::parse(const std::string& text) const {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0 || (text.find('/') != std::string::npos && q.get_den() == 0))
    throw Error(ErrorCode::Parse, "invalid scalar '" + text + "'");
  if (q.get_den() == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + text + "'");
  q.canonicalize();
  return from_rational(q);
}

Scalar Field::residue(std::uint32_t r) const {
  if (!is_prime() || r >= p_) throw Error(ErrorCode::InvalidField, "residue outside " + name());
  return Scalar(Scalar::Residue{r, p_});
}

Scalar::Scalar(mpq_class q) : v_(std::move(q)) { std::get<mpq_class>(v_).canonicalize(); }

Field Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&v_)) return Field(Field::Kind::Prime, r->p);
  return Field::rationals();
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&v_)) return r->value == 0;
  return sgn(std::get<mpq_class>(v_)) == 0;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<Residue>(&v_)) return r->value == 1;
  return std::get<mpq_class>(v_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&v_)) return *q;
  throw Error(ErrorCode::FieldMismatch, "rational() on an F_p element");
}

std::uint32_t Scalar::residue() const {
  if (const auto* r = std::get_if<Residue>(&v_)) return r->value;
  throw Error(ErrorCode::FieldMismatch, "residue() on a rational");
}

void Scalar::require_same(const Scalar& o) const {
  const auto* a = std::get_if<Residue>(&v_);
  const auto* b = std::get_if<Residue>(&o.v_);
  if ((a == nullptr) != (b == nullptr) || (a && a->p != b->p))
    throw Error(ErrorCode::FieldMismatch, "arithmetic across fields");
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Residue>(&v_)) return Scalar(Residue{r->value ? r->p - r->value : 0, r->p});
  return Scalar(mpq_class(-std::get<mpq_class>(v_)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (const auto* r = std::get_if<Residue>(&v_)) return Scalar(Residue{mod_pow(r->value, r->p - 2, r->p), r->p});
  return Scalar(mpq_class(1 / std::get<mpq_class>(v_)));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same(o);
  if (auto* r = std::get_if<Residue>(&v_)) {
    r->value = static_cast<std::uint32_t>((std::uint64_t{r->value} + std::get<Residue>(o.v_).value) % r->p);
  } else {
    std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same(o);
  if (auto* r = std::get_if<Residue>(&v_)) {
    r->value = static_cast<std::uint32_t>(std::uint64_t{r->value} * std::get<Residue>(o.v_).value % r->p);
  } else {
    std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&v_)) return std::to_string(r->value);
  return std::get<mpq_class>(v_).get_str();
}

}  // namespace grl

#pragma once

#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "grl/groups.hpp"
#include "grl/linalg.hpp"
#include "grl/scalar.hpp"

namespace grl {

// What the group-ring machinery needs from a coefficient ring. The spanning
// set must generate the ring additively up to scalars that commute with the
// ring product, so commuting with it means commuting with everything.
template <class R>
concept CoefficientRing = requires(const R& ring, const typename R::Element& a) {
  { ring.zero() } -> std::convertible_to<typename R::Element>;
  { ring.one() } -> std::convertible_to<typename R::Element>;
  { ring.add(a, a) } -> std::convertible_to<typename R::Element>;
  { ring.mul(a, a) } -> std::convertible_to<typename R::Element>;
  { ring.is_zero(a) } -> std::same_as<bool>;
  { ring.spanning_set() } -> std::convertible_to<std::vector<typename R::Element>>;
  { ring.format(a) } -> std::convertible_to<std::string>;
  { a == a } -> std::convertible_to<bool>;
};

struct Term {
  std::size_t index;
  Scalar coeff;
};
using SparseVector = std::vector<Term>;  // sorted by index, no zero coefficients

SparseVector to_sparse(const Vector& v);
Vector to_dense(const SparseVector& v, const Field& field, std::size_t dim);

// (i, j, k, c): the coefficient of b_k in b_i b_j is c.
using StructureConstant = std::tuple<std::size_t, std::size_t, std::size_t, Scalar>;

// Finite-dimensional associative algebra over a field, given by structure
// constants on a basis b_0..b_{d-1}.
class Algebra {
 public:
  using Element = Vector;

  // Validates associativity. The identity is checked when given and searched
  // for by solving 1*b_i = b_i*1 = b_i otherwise.
  Algebra(Field field, std::vector<std::string> labels, std::vector<std::vector<SparseVector>> products,
          std::optional<Vector> identity = std::nullopt);

  static Algebra from_constants(Field field, std::size_t dim, const std::vector<StructureConstant>& constants,
                                std::vector<std::string> labels = {});

  const Field& field() const { return field_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const SparseVector& product(std::size_t i, std::size_t j) const { return products_.at(i).at(j); }

  Vector mul(const Vector& x, const Vector& y) const;
  Vector add(const Vector& x, const Vector& y) const { return x + y; }
  Vector basis(std::size_t i) const { return unit_vector(field_, dim(), i); }
  Vector zero() const { return zero_vector(field_, dim()); }
  Vector one() const;  // throws NotUnital
  bool is_zero(const Vector& x) const { return grl::is_zero(x); }
  std::vector<Vector> spanning_set() const;
  std::string format(const Vector& x) const;

  const std::optional<Vector>& identity() const { return identity_; }
  bool is_commutative() const;

  Matrix left_multiplication(const Vector& x) const;   // y -> x*y
  Matrix right_multiplication(const Vector& x) const;  // y -> y*x

  // Orthogonal primitive idempotents spanning the algebra, present when the
  // algebra is known to be a product of copies of the field.
  const std::optional<std::vector<Vector>>& split_idempotents() const { return split_; }
  // Primeness of the whole algebra when known from its construction.
  std::optional<bool> declared_prime() const { return prime_; }
  const std::string& description() const { return description_; }

  // Same algebra in a new basis (rows are coordinates in the current basis).
  Algebra rebase(const std::vector<Vector>& new_basis, std::vector<std::string> labels) const;
  Algebra opposite() const;

  Algebra& set_split_idempotents(std::vector<Vector> idempotents);
  Algebra& set_declared_prime(bool prime) {
    prime_ = prime;
    return *this;
  }
  Algebra& set_description(std::string d) {
    description_ = std::move(d);
    return *this;
  }

 private:
  Field field_;
  std::vector<std::string> labels_;
  std::vector<std::vector<SparseVector>> products_;
  std::optional<Vector> identity_;
  std::optional<std::vector<Vector>> split_;
  std::optional<bool> prime_;
  std::string description_;
};

static_assert(CoefficientRing<Algebra>);

Algebra matrix_algebra(const Field& field, std::size_t n);
Algebra product_algebra(const Field& field, std::size_t n);
Algebra truncated_poly(const Field& field, std::size_t n);
// Monomials x1^a1 ... xk^ak with ai < bounds[i]; products past a bound vanish.
Algebra truncated_monomials(const Field& field, const std::vector<std::size_t>& bounds);
Algebra group_algebra(const Field& field, const Group& group);
Algebra upper_triangular(const Field& field, std::size_t n);
// [[F, F[t]], [0, F[t]]] modulo t^n in both polynomial entries. Basis: E11,
// then E12 t^k and E22 t^k interleaved by k.
Algebra triangular_truncated(const Field& field, std::size_t n);

// Basis of the center, from the kernel of x -> (x b_i - b_i x)_i.
std::vector<Vector> center_of_algebra(const Algebra& a);

}  // namespace grl

#include "doctest.h"

#include <random>

#include "grl/algebra.hpp"
#include "grl/error.hpp"
#include "oracles.hpp"

using namespace grl;

namespace {

std::vector<Algebra> small_f2_algebras() {
  const Field f = Field::prime(2);
  return {matrix_algebra(f, 2),       product_algebra(f, 3), truncated_poly(f, 4), truncated_monomials(f, {2, 2}),
          group_algebra(f, Group::symmetric3()), upper_triangular(f, 2), triangular_truncated(f, 2)};
}

}  // namespace

TEST_CASE("built-in algebras have a two-sided identity") {
  for (const Field& f : {Field::rationals(), Field::prime(3)}) {
    for (const Algebra& a : {matrix_algebra(f, 2), product_algebra(f, 3), truncated_poly(f, 3),
                             group_algebra(f, Group::builtin("D3")), upper_triangular(f, 3), triangular_truncated(f, 3)}) {
      REQUIRE(a.identity());
      for (std::size_t i = 0; i < a.dim(); ++i) {
        CHECK(a.mul(a.one(), a.basis(i)) == a.basis(i));
        CHECK(a.mul(a.basis(i), a.one()) == a.basis(i));
      }
    }
  }
}

TEST_CASE("center matches brute-force commutation over F2") {
  for (const Algebra& a : small_f2_algebras()) {
    CAPTURE(a.description());
    const auto center = center_of_algebra(a);
    for (const auto& z : center) CHECK(oracle::commutes_with_basis(a, z));
    std::size_t count = 0;
    oracle::each_vector(a.field(), a.dim(), [&](const Vector& x) { count += oracle::commutes_with_basis(a, x); });
    CHECK(count == (std::size_t{1} << center.size()));
  }
}

TEST_CASE("center of M2 over Q is the scalars") {
  const Algebra m = matrix_algebra(Field::rationals(), 2);
  const auto c = center_of_algebra(m);
  REQUIRE(c.size() == 1);
  CHECK(c[0] == m.one());
}

TEST_CASE("triangular truncation layout") {
  const Algebra a = triangular_truncated(Field::rationals(), 4);
  CHECK(a.labels() == std::vector<std::string>{"E11", "E22", "E12", "E22t", "E12t", "E22t^2", "E12t^2", "E22t^3",
                                               "E12t^3"});
  CHECK(a.one() == a.basis(0) + a.basis(1));
  CHECK(a.mul(a.basis(2), a.basis(3)) == a.basis(4));
  CHECK(is_zero(a.mul(a.basis(2), a.basis(0))));
  CHECK(is_zero(a.mul(a.basis(8), a.basis(3))));
  CHECK(center_of_algebra(a).size() == 1);
}

TEST_CASE("rebase and opposite preserve the product") {
  const Field q = Field::rationals();
  const Algebra m = matrix_algebra(q, 2);
  const std::vector<Vector> basis{{q.one(), q.zero(), q.zero(), q.one()},
                                  {q.zero(), q.one(), q.zero(), q.zero()},
                                  {q.zero(), q.zero(), q.one(), q.zero()},
                                  {q.one(), q.zero(), q.zero(), -q.one()}};
  const Algebra r = m.rebase(basis, {"I", "X", "Y", "H"});
  auto to_old = [&](const Vector& v) {
    Vector out = m.zero();
    for (std::size_t i = 0; i < 4; ++i) out += v[i] * basis[i];
    return out;
  };
  const Algebra op = m.opposite();
  std::mt19937 rng(2);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int trial = 0; trial < 50; ++trial) {
    Vector x, y;
    for (int i = 0; i < 4; ++i) {
      x.push_back(q.from_int(d(rng)));
      y.push_back(q.from_int(d(rng)));
    }
    CHECK(to_old(r.mul(x, y)) == m.mul(to_old(x), to_old(y)));
    CHECK(op.mul(x, y) == m.mul(y, x));
  }
  CHECK(r.one() == unit_vector(q, 4, 0));
  CHECK_THROWS_AS(m.rebase({basis[0], basis[0], basis[1], basis[2]}, {"a", "b", "c", "d"}), Error);
}

TEST_CASE("structure constants are validated") {
  const Field f = Field::prime(3);
  // x*y = x, y*x = 0, y*y = y, x*x = 0 is associative and has no identity.
  const Algebra a = Algebra::from_constants(f, 2, {{1, 0, 0, f.one()}, {1, 1, 1, f.one()}});
  CHECK(!a.identity());
  CHECK_THROWS_AS(a.one(), Error);
  // x*x = y, y*x = x is not associative: (xx)x = yx = x but x(xx) = xy = 0.
  CHECK_THROWS_AS(Algebra::from_constants(f, 2, {{0, 0, 1, f.one()}, {1, 0, 0, f.one()}}), Error);
  CHECK_THROWS_AS(Algebra::from_constants(f, 2, {{0, 0, 2, f.one()}}), Error);
}

TEST_CASE("split idempotents must be orthogonal idempotents summing to 1") {
  const Field q = Field::rationals();
  Algebra a = product_algebra(q, 2);
  CHECK(a.split_idempotents()->size() == 2);
  CHECK_THROWS_AS(a.set_split_idempotents({a.one()}), Error);
}

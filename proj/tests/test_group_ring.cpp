#include "doctest.h"

#include <random>

#include "grl/error.hpp"
#include "grl/group_ring.hpp"
#include "oracles.hpp"

using namespace grl;

namespace {

using Ring = GroupRing<Algebra>;

Ring::Element random_element(const Ring& ring, std::mt19937& rng) {
  const Algebra& a = ring.coefficients();
  std::uniform_int_distribution<int> d(-2, 2);
  Ring::Element x;
  for (const auto& g : ring.group().elements()) {
    Vector c;
    for (std::size_t i = 0; i < a.dim(); ++i) c.push_back(a.field().from_int(d(rng)));
    x = ring.add(x, ring.monomial(c, g));
  }
  return x;
}

// Twisted product written out from (a u_g)(b u_h) = a alpha_g(b) sigma(g,h) u_gh.
Ring::Element naive_twisted(const Ring& ring, const Ring::Element& x, const Ring::Element& y) {
  const Algebra& a = ring.coefficients();
  const Twist& t = *ring.twist();
  Ring::Element out;
  for (const auto& [g, u] : x)
    for (const auto& [h, v] : y) {
      Vector acted = a.zero();
      for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) acted[i] += t.action[g.index()][i][j] * v[j];
      out = ring.add(out, ring.monomial(a.mul(a.mul(u, acted), t.cocycle[g.index()][h.index()]), ring.group().mul(g, h)));
    }
  return out;
}

Ring swap_crossed_product(const Field& f, const Scalar& c) {
  const Group c2 = Group::cyclic(2);
  const GroupElement s = c2.parse_label("a");
  const Matrix swap{{f.zero(), f.one()}, {f.one(), f.zero()}};
  return make_crossed_product(product_algebra(f, 2), c2, {{s, swap}}, {{s, s, Vector{c, c}}});
}

}  // namespace

TEST_CASE("group ring multiplication is associative and unital") {
  std::mt19937 rng(1);
  for (const Field& f : {Field::rationals(), Field::prime(3)}) {
    const Ring ring(matrix_algebra(f, 2), Group::symmetric3());
    for (int trial = 0; trial < 20; ++trial) {
      const auto x = random_element(ring, rng), y = random_element(ring, rng), z = random_element(ring, rng);
      CHECK(ring.mul(ring.mul(x, y), z) == ring.mul(x, ring.mul(y, z)));
      CHECK(ring.mul(ring.one(), x) == x);
      CHECK(ring.mul(x, ring.one()) == x);
      CHECK(ring.mul(x, ring.add(y, z)) == ring.add(ring.mul(x, y), ring.mul(x, z)));
    }
  }
}

TEST_CASE("graded form reproduces the group ring product") {
  std::mt19937 rng(4);
  for (const Ring& ring : {Ring(matrix_algebra(Field::prime(2), 2), Group::builtin("V4")),
                           swap_crossed_product(Field::prime(5), Field::prime(5).from_int(3))}) {
    const GradedAlgebra r = as_graded_algebra(ring);
    CHECK(r.dim() == ring.coefficients().dim() * *ring.group().order());
    for (int trial = 0; trial < 30; ++trial) {
      const auto x = random_element(ring, rng), y = random_element(ring, rng);
      const Vector gx = to_graded_coordinates(ring, x), gy = to_graded_coordinates(ring, y);
      CHECK(from_graded_coordinates(ring, gx) == x);
      CHECK(from_graded_coordinates(ring, r.algebra().mul(gx, gy)) == ring.mul(x, y));
    }
  }
}

TEST_CASE("twisted product matches the defining formula") {
  std::mt19937 rng(9);
  const Ring ring = swap_crossed_product(Field::prime(7), Field::prime(7).from_int(3));
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = random_element(ring, rng), y = random_element(ring, rng);
    CHECK(ring.mul(x, y) == naive_twisted(ring, x, y));
  }
}

TEST_CASE("centrality in F2[S3] agrees with the graded form on every element") {
  const Ring ring(product_algebra(Field::prime(2), 1), Group::symmetric3());
  const GradedAlgebra r = as_graded_algebra(ring);
  std::size_t central = 0;
  oracle::each_vector(r.field(), r.dim(), [&](const Vector& v) {
    const bool a = is_central(r, r.element(v));
    CHECK(a == ring.is_central(from_graded_coordinates(ring, v)));
    central += a;
  });
  CHECK(central == 8);  // three conjugacy classes
}

TEST_CASE("crossed product validation") {
  const Field f = Field::prime(5);
  const Group c2 = Group::cyclic(2);
  const GroupElement s = c2.parse_label("a");
  const Algebra k = product_algebra(f, 1);
  CHECK_NOTHROW(make_crossed_product(k, c2, {}, {{s, s, Vector{f.from_int(2)}}}));
  // sigma(e, a) != 1
  CHECK_THROWS_WITH_AS(make_crossed_product(k, c2, {}, {{c2.identity(), s, Vector{f.from_int(2)}}}),
                       doctest::Contains("InvalidTwist"), Error);
  CHECK_THROWS_WITH_AS(make_crossed_product(k, c2, {}, {{s, s, Vector{f.zero()}}}), doctest::Contains("InvalidTwist"),
                       Error);
  // An action that is not an algebra map.
  const Algebra k2 = product_algebra(f, 2);
  const Matrix bad{{f.one(), f.one()}, {f.zero(), f.one()}};
  CHECK_THROWS_AS(make_crossed_product(k2, c2, {{s, bad}}, {}), Error);
  // Swap on C3 cannot extend to a homomorphism: alpha_a^3 = swap != id.
  const Group c3 = Group::cyclic(3);
  const Matrix swap{{f.zero(), f.one()}, {f.one(), f.zero()}};
  CHECK_THROWS_AS(make_crossed_product(k2, c3, {{c3.parse_label("a"), swap}}, {}), Error);
  // sigma(a, a) = (1, 2) is not fixed by the swap, so the cocycle identity fails.
  CHECK_THROWS_AS(make_crossed_product(k2, c2, {{s, swap}}, {{s, s, Vector{f.one(), f.from_int(2)}}}), Error);
  // Non-central cocycle values are refused.
  const Algebra m2 = matrix_algebra(f, 2);
  const Vector diag{f.one(), f.zero(), f.zero(), f.from_int(2)};
  CHECK_THROWS_AS(make_crossed_product(m2, c2, {}, {{s, s, diag}}), Error);
  // A carry cocycle on C3 satisfies the cocycle identity.
  std::vector<std::tuple<GroupElement, GroupElement, Vector>> carry;
  for (std::size_t i = 1; i < 3; ++i)
    for (std::size_t j = 3 - i; j < 3; ++j) carry.emplace_back(GroupElement::finite(i), GroupElement::finite(j), Vector{f.from_int(3)});
  CHECK_NOTHROW(make_crossed_product(k, c3, {}, carry));
}

TEST_CASE("group rings need a unital coefficient ring") {
  const Field f = Field::prime(3);
  const Algebra nil = Algebra::from_constants(f, 2, {{0, 0, 1, f.one()}});
  CHECK_THROWS_WITH_AS(Ring(nil, Group::cyclic(2)), doctest::Contains("NotUnital"), Error);
}

TEST_CASE("group rings over infinite groups") {
  const Field q = Field::rationals();
  const Ring ring(matrix_algebra(q, 2), Group::free_abelian(1));
  const Algebra& m = ring.coefficients();
  const auto f = ring.add(ring.monomial(m.basis(0), GroupElement::lattice({0})),
                          ring.monomial(m.basis(1), GroupElement::lattice({1})));
  CHECK(ring.is_idempotent(f));
  CHECK(!ring.is_central(f));
  CHECK(ring.support(f).size() == 2);
  CHECK(!ring.support_group(f, 2));
  CHECK_THROWS_AS(as_graded_algebra(ring), Error);
  CHECK_THROWS_AS(ring.unit(GroupElement::lattice({1, 2})), Error);
}

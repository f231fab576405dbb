#include "doctest.h"

#include <random>

#include "grl/constructions.hpp"
#include "grl/error.hpp"
#include "grl/harness.hpp"
#include "oracles.hpp"

using namespace grl;

namespace {

// span{t, t^2} with t^3 = 0, degrees 1 and 2: no identity.
GradedAlgebra nilpotent(const Field& f) {
  const Algebra a = Algebra::from_constants(f, 2, {{0, 0, 1, f.one()}}, {"t", "t^2"});
  return GradedAlgebra(a, Group::free_abelian(1), {GroupElement::lattice({1}), GroupElement::lattice({2})});
}

// Upper triangular 2x2 matrices with the corner x = E12 in degree a of C2.
GradedAlgebra triangular_c2(const Field& f) {
  const Algebra a = Algebra::from_constants(f, 3, {{0, 0, 0, f.one()}, {1, 1, 1, f.one()}, {0, 2, 2, f.one()},
                                                   {2, 1, 2, f.one()}},
                                            {"e1", "e2", "x"});
  const Group c2 = Group::cyclic(2);
  return GradedAlgebra(a, c2, {c2.identity(), c2.identity(), c2.parse_label("a")});
}

}  // namespace

TEST_CASE("Dorroh ring on a non-unital algebra") {
  const Field f = Field::prime(3);
  const DorrohRing d(nilpotent(f));
  const DorrohElement t = d.psi({f.one(), f.zero()});
  CHECK(d.mul(t, t) == d.psi({f.zero(), f.one()}));
  CHECK(d.mul(d.one(), t) == t);
  CHECK(d.format(d.add(t, d.one())) == "(t, 1)");
  CHECK(d.support(d.one()) == ElementSet{GroupElement::lattice({0})});
  CHECK(d.support(t) == ElementSet{GroupElement::lattice({1})});
  const auto ids = d.central_idempotents(1000);
  REQUIRE(ids.size() == 2);
  CHECK(d.is_zero(ids[0]));
  CHECK(ids[1] == d.one());
  CHECK_THROWS_AS(d.psi({f.one()}), Error);
}

TEST_CASE("Dorroh idempotents match exhaustive search with n in {0, 1}") {
  // (r, n)^2 = (r, n) forces n^2 = n, so n is 0 or 1 and r ranges over F_p^d.
  const Field f = Field::prime(2);
  const DorrohRing d(triangular_c2(f));
  std::size_t found = 0;
  for (long n : {0L, 1L})
    oracle::each_vector(f, 3, [&](const Vector& r) {
      const DorrohElement x{r, n};
      if (d.is_idempotent(x) && d.is_central(x)) ++found;
    });
  CHECK(d.central_idempotents(1000).size() == found);
}

TEST_CASE("Dorroh laws and phi laws hold with and without an identity") {
  for (const Instance& inst : {make_graded_instance("triangular", triangular_c2(Field::prime(5))),
                               make_graded_instance("nilpotent", nilpotent(Field::prime(5)))}) {
    CAPTURE(inst.name);
    const LawTally dl = dorroh_laws(inst, 200, 1, 100000);
    CHECK(dl.failures == 0);
    CHECK(dl.checks >= 200);
    const LawTally pl = phi_laws(inst, 200, 1);
    CHECK(pl.failures == 0);
    CHECK(pl.checks >= 200);
  }
}

TEST_CASE("phi needs an identity in R") {
  const GradedAlgebra r = nilpotent(Field::prime(3));
  CHECK_THROWS_WITH_AS(phi_target(r), doctest::Contains("NotUnital"), Error);
  const DorrohRing d(r);
  const auto target = phi_target(d);
  const DorrohElement t = d.psi({Field::prime(3).one(), Field::prime(3).zero()});
  const auto image = embed_phi(d, t);
  CHECK(target.support(image) == ElementSet{GroupElement::lattice({1})});
  CHECK(target.mul(image, image) == embed_phi(d, d.mul(t, t)));
}

TEST_CASE("phi on the infinite dihedral example keeps the support of f") {
  const Instance inst = fixture_instance("dinf-q4");
  const GradedAlgebra& r = *inst.graded;
  const auto target = phi_target(r);
  const auto image = embed_phi(r, inst.elements[0].second);
  CHECK(target.is_idempotent(image));
  // u_s and u_t do not commute in R[G], so the image is not central.
  CHECK(!target.is_central(image));
  CHECK(r.group().format(target.support(image)) == "{e, s, t}");
}

TEST_CASE("quotient regrading") {
  const Instance inst = fixture_instance("f2-s3");
  const GradedAlgebra& r = *inst.graded;
  const Group& g = r.group();
  const ElementSet a3{g.identity(), g.parse_label("(123)"), g.parse_label("(132)")};
  const GradedAlgebra q = quotient_regrade(r, a3);
  CHECK(q.group().order() == 2u);
  for (const auto& x : q.group().elements()) CHECK(q.component_basis(x).size() == 3);
  CHECK_THROWS_WITH_AS(quotient_regrade(r, {g.identity(), g.parse_label("(12)")}), doctest::Contains("NotNormal"), Error);
  const Instance z = fixture_instance("poly-z");
  CHECK_THROWS_AS(quotient_regrade(*z.graded, {z.graded->group().identity()}), Error);
}

TEST_CASE("restriction to a subgroup") {
  const Instance inst = fixture_instance("dinf-q4");
  const GradedAlgebra& r = *inst.graded;
  const GroupElement s = GroupElement::dihedral(0, true);
  const GradedAlgebra sub = restrict_to_subgroup(r, {r.group().identity(), s});
  CHECK(sub.dim() == 3);
  CHECK(sub.group().order() == 2u);
  CHECK(sub.unit().has_value());
  CHECK_THROWS_AS(restrict_to_subgroup(r, {s}), Error);
}

TEST_CASE("monoid regrading and opposite") {
  const Field f = Field::prime(3);
  const Algebra a = truncated_monomials(f, {2, 2});
  const GradedAlgebra r = monoid_to_group_regrade(a, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(r.support().size() == 4);
  CHECK_THROWS_WITH_AS(monoid_to_group_regrade(a, 2, {{0, 0}, {0, -1}, {1, 0}, {1, 1}}),
                       doctest::Contains("DegreeOutsideMonoid"), Error);

  const GradedAlgebra s3 = *fixture_instance("f2-s3").graded;
  const GradedAlgebra op = opposite(s3);
  for (std::size_t i = 0; i < s3.dim(); ++i) {
    CHECK(op.degree(i) == s3.group().inverse(s3.degree(i)));
    for (std::size_t j = 0; j < s3.dim(); ++j)
      CHECK(op.algebra().mul(op.algebra().basis(i), op.algebra().basis(j)) ==
            s3.algebra().mul(s3.algebra().basis(j), s3.algebra().basis(i)));
  }
}

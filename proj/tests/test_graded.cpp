#include "doctest.h"

#include "grl/constructions.hpp"
#include "grl/error.hpp"
#include "grl/harness.hpp"
#include "oracles.hpp"

using namespace grl;

namespace {

std::vector<Instance> f2_corpus() {
  SweepOptions opt;
  opt.max_order = 6;
  opt.max_dim = 6;
  opt.fields = {Field::prime(2)};
  std::vector<Instance> out;
  for (auto& inst : sweep_corpus(opt))
    if (inst.graded && inst.graded->dim() <= 6) out.push_back(std::move(inst));
  return out;
}

bool naive_condition(const GradedAlgebra& r, Side side) {
  const Algebra& a = r.algebra();
  for (const auto& g : r.support())
    for (const auto& h : r.support()) {
      bool ok = true;
      oracle::each_vector_on(r.field(), r.dim(), r.component_basis(h), [&](const Vector& x) {
        if (is_zero(x) || !ok) return;
        bool hit = false;
        for (std::size_t i : r.component_basis(g))
          hit = hit || !is_zero(side == Side::Left ? a.mul(a.basis(i), x) : a.mul(x, a.basis(i)));
        ok = hit;
      });
      if (!ok) return false;
    }
  return true;
}

bool naive_non_degenerate(const GradedAlgebra& r, Side side) {
  const Algebra& a = r.algebra();
  for (const auto& g : r.support()) {
    const auto inv = r.component_basis(r.group().inverse(g));
    bool ok = true;
    oracle::each_vector_on(r.field(), r.dim(), r.component_basis(g), [&](const Vector& x) {
      if (is_zero(x) || !ok) return;
      bool hit = false;
      for (std::size_t i : inv) hit = hit || !is_zero(side == Side::Right ? a.mul(x, a.basis(i)) : a.mul(a.basis(i), x));
      ok = hit;
    });
    if (!ok) return false;
  }
  return true;
}

bool naive_prime_principal(const GradedAlgebra& r) {
  const Algebra& a = r.algebra();
  const auto e = r.component_basis(r.group().identity());
  bool prime = true;
  oracle::each_vector_on(r.field(), r.dim(), e, [&](const Vector& x) {
    if (is_zero(x) || !prime) return;
    oracle::each_vector_on(r.field(), r.dim(), e, [&](const Vector& y) {
      if (is_zero(y) || !prime) return;
      bool zero = true;
      for (std::size_t i : e) zero = zero && is_zero(a.mul(a.mul(x, a.basis(i)), y));
      if (zero) prime = false;
    });
  });
  return prime;
}

std::set<std::string> as_strings(const GradedAlgebra& r, const std::vector<GradedElement>& xs) {
  std::set<std::string> out;
  for (const auto& x : xs) out.insert(format(r.dense(x)));
  return out;
}

}  // namespace

TEST_CASE("central idempotent enumeration matches exhaustive search over F2") {
  for (const auto& inst : f2_corpus()) {
    CAPTURE(inst.name);
    const GradedAlgebra& r = *inst.graded;
    const auto found = central_idempotents(r, 1000000);
    CHECK(as_strings(r, found) == oracle::central_idempotents(r.algebra()));
  }
}

TEST_CASE("enumeration over F3 and F5 matches exhaustive search") {
  for (const Field& f : {Field::prime(3), Field::prime(5)}) {
    for (const auto& inst :
         {make_ring_instance("c3", GroupRing<Algebra>(product_algebra(f, 1), Group::cyclic(3))),
          make_ring_instance("c4", GroupRing<Algebra>(product_algebra(f, 1), Group::cyclic(4))),
          make_graded_instance("t2", GradedAlgebra(upper_triangular(f, 2), Group::cyclic(2),
                                                   {GroupElement::finite(0), GroupElement::finite(1),
                                                    GroupElement::finite(0)}))}) {
      CAPTURE(inst.name);
      const GradedAlgebra& r = *inst.graded;
      CHECK(as_strings(r, central_idempotents(r, 1000000)) == oracle::central_idempotents(r.algebra()));
    }
  }
}

TEST_CASE("condition checks agree with exhaustive search over F2") {
  for (const auto& inst : f2_corpus()) {
    CAPTURE(inst.name);
    const GradedAlgebra& r = *inst.graded;
    for (Side side : {Side::Left, Side::Right}) {
      const ConditionResult c = check_condition(r, side);
      CHECK(c.holds == naive_condition(r, side));
      if (!c.holds) {
        REQUIRE(c.witness);
        const Algebra& a = r.algebra();
        const Vector x = r.dense(c.witness->r);
        CHECK(!is_zero(x));
        CHECK(support(r, c.witness->r) == ElementSet{c.witness->h});
        for (std::size_t i : r.component_basis(c.witness->g))
          CHECK(is_zero(side == Side::Left ? a.mul(a.basis(i), x) : a.mul(x, a.basis(i))));
      }
    }
  }
}

TEST_CASE("non-degeneracy and primeness agree with exhaustive search over F2") {
  for (const auto& inst : f2_corpus()) {
    CAPTURE(inst.name);
    const GradedAlgebra& r = *inst.graded;
    CHECK(check_non_degenerate(r, Side::Right).holds == naive_non_degenerate(r, Side::Right));
    CHECK(check_non_degenerate(r, Side::Left).holds == naive_non_degenerate(r, Side::Left));
    const PrimeResult p = is_prime_principal(r, 1000000);
    REQUIRE(p.status != PrimeResult::Status::Unsupported);
    CHECK((p.status == PrimeResult::Status::Prime) == naive_prime_principal(r));
  }
}

TEST_CASE("strong grading on the support") {
  for (const auto& inst : f2_corpus()) {
    CAPTURE(inst.name);
    const GradedAlgebra& r = *inst.graded;
    const auto s = check_strongly_graded(r);
    const ElementSet supp(r.support().begin(), r.support().end());
    if (!is_subgroup(r.group(), supp)) {
      CHECK(s.status == StrongGradingResult::Status::SupportNotClosed);
      continue;
    }
    bool strong = true;
    for (const auto& g : supp)
      for (const auto& h : supp) {
        Matrix products;
        for (std::size_t i : r.component_basis(g))
          for (std::size_t j : r.component_basis(h))
            products.push_back(r.algebra().mul(r.algebra().basis(i), r.algebra().basis(j)));
        strong = strong && rank(products, r.dim()) == r.component_basis(r.group().mul(g, h)).size();
      }
    CHECK((s.status == StrongGradingResult::Status::StronglyGradedOnSupport) == strong);
  }
}

TEST_CASE("invalid degree maps are rejected") {
  const Field f = Field::prime(3);
  const Group z = Group::free_abelian(1);
  CHECK_THROWS_WITH_AS(GradedAlgebra(truncated_poly(f, 3), z,
                                     {GroupElement::lattice({0}), GroupElement::lattice({1}), GroupElement::lattice({3})}),
                       doctest::Contains("InvalidGrading"), Error);
  CHECK_THROWS_AS(GradedAlgebra(truncated_poly(f, 3), z, {GroupElement::lattice({0})}), Error);
  CHECK_THROWS_AS(GradedAlgebra(truncated_poly(f, 2), Group::cyclic(2), {GroupElement::lattice({0}), GroupElement::lattice({1})}),
                  Error);
}

TEST_CASE("rational enumeration: split products and one-dimensional centers") {
  const Field q = Field::rationals();
  const Group z = Group::free_abelian(1);
  const GradedAlgebra split(product_algebra(q, 3), z, std::vector<GroupElement>(3, GroupElement::lattice({0})));
  CHECK(central_idempotents(split, 1000).size() == 8);
  CHECK_THROWS_WITH_AS(central_idempotents(split, 4), doctest::Contains("BudgetExceeded"), Error);

  const GradedAlgebra m2(matrix_algebra(q, 2), z,
                         {GroupElement::lattice({0}), GroupElement::lattice({-1}), GroupElement::lattice({1}),
                          GroupElement::lattice({0})});
  const auto ids = central_idempotents(m2, 1000);
  REQUIRE(ids.size() == 2);
  CHECK(ids[0].is_zero());
  CHECK(m2.dense(ids[1]) == m2.algebra().one());

  const GradedAlgebra poly(truncated_poly(q, 3), z,
                           {GroupElement::lattice({0}), GroupElement::lattice({1}), GroupElement::lattice({2})});
  CHECK_THROWS_WITH_AS(central_idempotents(poly, 1000), doctest::Contains("Unsupported"), Error);
}

TEST_CASE("degree window hides truncation artifacts") {
  const Instance inst = fixture_instance("triangular-z");
  const GradedAlgebra& r = *inst.graded;
  CHECK(!check_condition(r, Side::Right).holds);
  CHECK(check_condition(r, Side::Right, DegreeWindow{3}).holds);
  const ConditionResult left = check_condition(r, Side::Left, DegreeWindow{3});
  REQUIRE(!left.holds);
  CHECK(r.group().format(left.witness->g) == "1");
  CHECK(r.dense(left.witness->r) == r.algebra().basis(0));
}

TEST_CASE("components, supports and support groups") {
  const Instance inst = fixture_instance("dinf-q4");
  const GradedAlgebra& r = *inst.graded;
  const GradedElement f = r.element(inst.elements[0].second);
  Vector sum = r.algebra().zero();
  for (const auto& g : support(r, f)) {
    const GradedElement c = component(r, f, g);
    CHECK(support(r, c) == ElementSet{g});
    sum += r.dense(c);
  }
  CHECK(sum == r.dense(f));
  CHECK(!support_group(r, f, 100));
  const GradedElement b = r.basis(2);
  CHECK(support_group(r, b, 100)->size() == 2);
  CHECK(is_central(r, f));
  CHECK(is_idempotent(r, f));
}

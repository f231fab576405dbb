#include <functional>

#include "grl/constructions.hpp"
#include "grl/error.hpp"
#include "grl/harness.hpp"

namespace grl {

namespace {

using Facts = std::vector<Check>;

struct Fixture {
  std::string name;
  std::function<Instance()> build;
  std::function<Facts(const Instance&, const VerifyOptions&)> facts;
};

Check fact(std::string id, std::string claim, bool pass, std::string observed = "") {
  return {std::move(id), std::move(claim), pass, std::move(observed)};
}

template <class F>
bool throws(ErrorCode code, F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

const Vector& named(const Instance& inst, const std::string& name) {
  for (const auto& [n, v] : inst.elements)
    if (n == name) return v;
  throw Error(ErrorCode::InvalidSpec, "fixture element " + name + " missing");
}

std::string witness_text(const GradedAlgebra& r, const ConditionResult& c) {
  if (c.holds) return "holds";
  const Group& g = r.group();
  return "g = " + g.format(c.witness->g) + ", h = " + g.format(c.witness->h) + ", r = " + r.format(c.witness->r);
}

bool witness_is(const GradedAlgebra& r, const ConditionResult& c, const std::string& g, const std::string& h,
                const Vector& expected) {
  if (c.holds) return false;
  const Group& G = r.group();
  return G.format(c.witness->g) == g && G.format(c.witness->h) == h && r.dense(c.witness->r) == expected;
}

// Q^4 with basis 1, a, b, c graded by the infinite dihedral group.
const std::vector<std::vector<long>> kDinfBasis{{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 0, 0}, {0, 0, 1, -1}};

Instance dinf_q4() {
  const Field q = Field::rationals();
  std::vector<Vector> basis;
  for (const auto& row : kDinfBasis) {
    Vector v;
    for (long x : row) v.push_back(q.from_int(x));
    basis.push_back(std::move(v));
  }
  Algebra a = product_algebra(q, 4).rebase(basis, {"1", "a", "b", "c"});
  a.set_description("Q^4 in the basis 1, a, b, c");
  const Group d = Group::infinite_dihedral();
  const GroupElement e = d.identity(), s = GroupElement::dihedral(0, true), t = GroupElement::dihedral(1, true);
  Instance inst = make_graded_instance("dinf-q4", GradedAlgebra(std::move(a), d, {e, e, s, t}));
  const Scalar half = q.parse("1/2");
  inst.elements = {{"f", {half, q.zero(), half, half}},
                   {"a", unit_vector(q, 4, 1)},
                   {"b", unit_vector(q, 4, 2)},
                   {"c", unit_vector(q, 4, 3)}};
  return inst;
}

Facts dinf_q4_facts(const Instance& inst, const VerifyOptions& opt) {
  const GradedAlgebra& r = *inst.graded;
  const Algebra& A = r.algebra();
  const Field q = r.field();
  const Group& G = r.group();
  const Vector f = named(inst, "f");
  const Vector one = A.one(), a = named(inst, "a"), b = named(inst, "b"), c = named(inst, "c");
  const Scalar half = q.parse("1/2");
  Facts out;

  Vector standard = zero_vector(q, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k) standard[k] += f[i] * q.from_int(kDinfBasis[i][k]);
  out.push_back(fact("f_coordinates", "f = 1/2 1 + 1/2 b + 1/2 c is (1,0,1,0)",
                     standard == Vector{q.one(), q.zero(), q.one(), q.zero()}, format(standard)));
  const GradedElement fe = r.element(f);
  out.push_back(fact("f_idempotent", "f^2 = f", is_idempotent(r, fe)));
  out.push_back(fact("f_central", "f is central", is_central(r, fe)));
  out.push_back(fact("f_support", "Supp(f) = {e, s, t}", G.format(support(r, fe)) == "{e, s, t}", G.format(support(r, fe))));
  out.push_back(fact("f_support_group", "the support group of f exceeds cap 100", !support_group(r, fe, 100)));
  out.push_back(fact("a_squared", "a^2 = 1", A.mul(a, a) == one));
  out.push_back(fact("ab_ac", "ab = b and ac = -c", A.mul(a, b) == b && A.mul(a, c) == -c));
  out.push_back(fact("b_squared", "b^2 = 1/2 (1 + a)", A.mul(b, b) == half * (one + a)));
  out.push_back(fact("c_squared", "c^2 = 1/2 (1 - a)", A.mul(c, c) == half * (one - a)));
  out.push_back(fact("bc_zero", "bc = 0", is_zero(A.mul(b, c))));

  const auto left = check_condition(r, Side::Left);
  const auto right = check_condition(r, Side::Right);
  out.push_back(fact("condition_left", "condition (i) fails: R_s c = 0", witness_is(r, left, "s", "t", c),
                     witness_text(r, left)));
  out.push_back(fact("condition_right", "condition (ii) fails: c R_s = 0", witness_is(r, right, "s", "t", c),
                     witness_text(r, right)));
  out.push_back(fact("strong_grading", "the support {e, s, t} is not a subgroup",
                     check_strongly_graded(r).status == StrongGradingResult::Status::SupportNotClosed));
  out.push_back(fact("non_degenerate_right", "r R_{g^-1} != 0 for nonzero homogeneous r",
                     check_non_degenerate(r, Side::Right).holds));
  const PrimeResult p = is_prime_principal(r, opt.budget);
  bool zero_divisors = false;
  std::string observed = to_string(p.status);
  if (p.a && p.b) {
    const Vector x = r.dense(*p.a), y = r.dense(*p.b);
    zero_divisors = is_zero(A.mul(A.mul(x, one), y)) && is_zero(A.mul(A.mul(x, a), y));
    observed += ": " + A.format(x) + " and " + A.format(y);
  }
  out.push_back(fact("principal_not_prime", "R_e = Q1 + Qa is not prime: (1 + a) R_e (1 - a) = 0",
                     p.status == PrimeResult::Status::NotPrime && zero_divisors, observed));

  const auto ids = central_idempotents(r, opt.budget);
  bool zero_one = ids.size() == 16;
  for (const auto& e : ids) {
    Vector st = zero_vector(q, 4);
    const Vector v = r.dense(e);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t k = 0; k < 4; ++k) st[k] += v[i] * q.from_int(kDinfBasis[i][k]);
    for (const auto& x : st) zero_one = zero_one && (x.is_zero() || x.is_one());
  }
  out.push_back(fact("central_idempotents", "the central idempotents are the 16 vectors with entries in {0,1}",
                     zero_one, std::to_string(ids.size()) + " found"));

  const DorrohRing d(r);
  const DorrohElement pf = d.psi(f);
  out.push_back(fact("dorroh_psi", "psi(f) is a central idempotent of the unitization with the same support",
                     d.is_central(pf) && d.is_idempotent(pf) && d.support(pf) == support(r, fe)));
  const auto target = phi_target(d);
  const auto image = embed_phi(d, pf);
  out.push_back(fact("phi_support", "Supp(phi(psi(f))) = {e, s, t}", G.format(target.support(image)) == "{e, s, t}",
                     G.format(target.support(image))));
  const GradedAlgebra sub = restrict_to_subgroup(r, {G.identity(), GroupElement::dihedral(0, true)});
  out.push_back(fact("restrict_s", "restricting to <s> keeps the basis {1, a, b}",
                     sub.algebra().labels() == std::vector<std::string>{"1", "a", "b"}));
  return out;
}

Instance m2_z() {
  const Field q = Field::rationals();
  GroupRing<Algebra> ring(matrix_algebra(q, 2), Group::free_abelian(1));
  Instance inst = make_ring_instance("m2-z", ring);
  const Algebra& m = inst.ring->coefficients();
  const auto f = inst.ring->add(inst.ring->monomial(m.basis(0), GroupElement::lattice({0})),
                                inst.ring->monomial(m.basis(1), GroupElement::lattice({1})));
  inst.ring_elements = {{"f", f}};
  return inst;
}

Facts m2_z_facts(const Instance& inst, const VerifyOptions&) {
  const auto& ring = *inst.ring;
  const auto& f = inst.ring_elements.front().second;
  const Group& G = ring.group();
  Facts out;
  out.push_back(fact("f_idempotent", "f = E11 u_e + E12 u_t is idempotent", ring.is_idempotent(f)));
  out.push_back(fact("f_not_central", "f is not central", !ring.is_central(f)));
  out.push_back(fact("f_support", "Supp(f) = {e, t}", G.format(ring.support(f)) == "{0, 1}", G.format(ring.support(f))));
  bool exceeds = true;
  for (std::size_t cap : {2, 3, 10, 100, 1000}) exceeds = exceeds && !ring.support_group(f, cap);
  out.push_back(fact("f_support_group", "the support group of f exceeds every cap >= 2", exceeds));
  const auto center = center_of_algebra(ring.coefficients());
  out.push_back(fact("e11_not_central", "E11 is outside the center of M2, which is spanned by I",
                     center.size() == 1 && center[0] == ring.coefficients().one()));
  out.push_back(fact("unit_identity", "1 u_e f = f", ring.mul(ring.one(), f) == f));
  return out;
}

Instance s3_k() {
  const Field q = Field::rationals();
  const Group s3 = Group::symmetric3();
  const GroupElement swap = s3.parse_label("(12)");
  const Group k = Group::from_subgroup(s3, {s3.identity(), swap});
  Algebra a = group_algebra(q, k);
  const Scalar half = q.parse("1/2");
  a.set_split_idempotents({{half, half}, {half, -half}});
  std::vector<GroupElement> degrees;
  for (const auto& x : k.elements()) degrees.push_back(s3.parse_label(k.format(x)));
  Instance inst = make_graded_instance("s3-k", GradedAlgebra(std::move(a), s3, degrees));
  inst.elements = {{"f", {half, half}}};
  return inst;
}

Facts s3_k_facts(const Instance& inst, const VerifyOptions& opt) {
  const GradedAlgebra& r = *inst.graded;
  const Group& G = r.group();
  const GradedElement f = r.element(named(inst, "f"));
  const ElementSet k{G.identity(), G.parse_label("(12)")};
  Facts out;
  out.push_back(fact("f_idempotent", "f = 1/2 (1 + u_(12)) is idempotent", is_idempotent(r, f)));
  out.push_back(fact("f_central", "f is a nonzero central idempotent", !f.is_zero() && is_central(r, f)));
  const auto sg = support_group(r, f, opt.cap);
  out.push_back(fact("f_support_group", "the support group of f is K = {e, (12)}", sg && *sg == k,
                     sg ? G.format(*sg) : "exceeds cap"));
  out.push_back(fact("closure", "<(12)> = {e, (12)}", subgroup_closure(G, {G.parse_label("(12)")}, opt.cap) == k));
  out.push_back(fact("not_normal", "K is not normal in S3",
                     throws(ErrorCode::NotNormal, [&] { quotient_group(G, k); })));

  const Group kg = Group::from_subgroup(G, k);
  GroupRing<Algebra> ring(product_algebra(r.field(), 1), kg);
  const Scalar half = r.field().parse("1/2");
  const auto rf = ring.add(ring.monomial({half}, kg.identity()), ring.monomial({half}, kg.parse_label("(12)")));
  out.push_back(fact("group_ring_view", "in Q[K], f^2 = f and f is central", ring.is_idempotent(rf) && ring.is_central(rf)));
  out.push_back(fact("condition_left", "condition (i) holds", check_condition(r, Side::Left).holds));
  return out;
}

Instance triangular_z() {
  const Field q = Field::rationals();
  Algebra a = triangular_truncated(q, 4);
  std::vector<std::int64_t> deg{0, 0};
  for (std::int64_t k = 1; k < 4; ++k) {
    deg.push_back(k);
    deg.push_back(k);
  }
  deg.push_back(4);
  std::vector<std::vector<std::int64_t>> degrees;
  for (auto x : deg) degrees.push_back({x});
  Instance inst = make_graded_instance("triangular-z", monoid_to_group_regrade(a, 1, degrees));
  inst.window = DegreeWindow{3};
  inst.elements = {{"E11", unit_vector(q, a.dim(), 0)}};
  return inst;
}

Facts triangular_z_facts(const Instance& inst, const VerifyOptions&) {
  const GradedAlgebra& r = *inst.graded;
  const Vector e11 = named(inst, "E11");
  Facts out;
  const auto left = check_condition(r, Side::Left, inst.window);
  const auto right = check_condition(r, Side::Right, inst.window);
  out.push_back(fact("condition_left", "condition (i) fails: R_1 r = 0 for r = E11 in R_0",
                     witness_is(r, left, "1", "0", e11), witness_text(r, left)));
  out.push_back(fact("condition_right", "condition (ii) holds on every degree inside the truncation", right.holds,
                     witness_text(r, right)));
  const GradedAlgebra op = opposite(r);
  const auto op_left = check_condition(op, Side::Left, inst.window);
  const auto op_right = check_condition(op, Side::Right, inst.window);
  out.push_back(fact("opposite", "the opposite ring satisfies (i) but not (ii)",
                     op_left.holds && witness_is(op, op_right, "1", "0", e11),
                     "left " + witness_text(op, op_left) + "; right " + witness_text(op, op_right)));
  out.push_back(fact("non_degenerate", "R_{-1} = 0, so the grading is degenerate at 1",
                     !check_non_degenerate(r, Side::Right).holds));
  return out;
}

Instance poly_z() {
  const Field f3 = Field::prime(3);
  Algebra a = truncated_poly(f3, 4);
  return make_graded_instance("poly-z", monoid_to_group_regrade(a, 1, {{0}, {1}, {2}, {3}}));
}

Facts poly_z_facts(const Instance& inst, const VerifyOptions& opt) {
  const GradedAlgebra& r = *inst.graded;
  Facts out;
  const auto ids = central_idempotents(r, opt.budget);
  bool principal = true;
  for (const auto& f : ids) {
    const ElementSet s = support(r, f);
    principal = principal && (s.empty() || s == ElementSet{r.group().identity()});
  }
  out.push_back(fact("central_in_r0", "every central idempotent lies in R_0 = A", principal && ids.size() == 2,
                     std::to_string(ids.size()) + " central idempotents"));
  out.push_back(fact("strong_grading", "the support {0,1,2,3} is not a subgroup",
                     check_strongly_graded(r).status == StrongGradingResult::Status::SupportNotClosed));
  out.push_back(fact("monoid_check", "a negative degree is rejected", throws(ErrorCode::DegreeOutsideMonoid, [&] {
                       monoid_to_group_regrade(r.algebra(), 1, {{0}, {1}, {-1}, {3}});
                     })));
  return out;
}

Instance f2_s3() {
  return make_ring_instance("f2-s3", GroupRing<Algebra>(product_algebra(Field::prime(2), 1), Group::symmetric3()));
}

Facts f2_s3_facts(const Instance& inst, const VerifyOptions&) {
  const GradedAlgebra& r = *inst.graded;
  const Group& G = r.group();
  Facts out;
  out.push_back(fact("dimension", "F2[S3] is 6-dimensional", r.dim() == 6));
  out.push_back(fact("condition_left", "condition (i) holds", check_condition(r, Side::Left).holds));
  out.push_back(fact("strong_grading", "group rings are strongly graded",
                     check_strongly_graded(r).status == StrongGradingResult::Status::StronglyGradedOnSupport));
  const ElementSet a3{G.identity(), G.parse_label("(123)"), G.parse_label("(132)")};
  const GradedAlgebra q = quotient_regrade(r, a3);
  out.push_back(fact("quotient_a3", "regrading by S3/A3 gives a principal component of dimension 3",
                     q.group().order() == 2u && q.component_basis(q.group().identity()).size() == 3));
  return out;
}

Instance crossed_f5_c2() {
  const Field f5 = Field::prime(5);
  const Group c2 = Group::cyclic(2);
  const GroupElement s = c2.parse_label("a");
  return make_ring_instance("crossed-f5-c2",
                            make_crossed_product(product_algebra(f5, 1), c2, {}, {{s, s, {f5.from_int(2)}}}));
}

Facts crossed_f5_c2_facts(const Instance& inst, const VerifyOptions&) {
  const GradedAlgebra& r = *inst.graded;
  const auto& ring = *inst.ring;
  const Field f5 = r.field();
  const Group& G = r.group();
  const GroupElement s = G.parse_label("a");
  Facts out;
  const Vector us = unit_vector(f5, 2, 1);
  out.push_back(fact("twisted_square", "u_a^2 = sigma(a,a) u_e = 2 u_e",
                     r.algebra().mul(us, us) == Vector{f5.from_int(2), f5.zero()}));
  out.push_back(fact("direct_product", "the graded form agrees with the twisted product",
                     from_graded_coordinates(ring, r.algebra().mul(us, us)) == ring.mul(ring.unit(s), ring.unit(s))));
  out.push_back(fact("conditions", "both annihilator conditions hold",
                     check_condition(r, Side::Left).holds && check_condition(r, Side::Right).holds));
  const Algebra f = product_algebra(f5, 1);
  out.push_back(fact("normalized", "an unnormalized cocycle is rejected", throws(ErrorCode::InvalidTwist, [&] {
                       make_crossed_product(f, G, {}, {{G.identity(), s, {f5.from_int(2)}}});
                     })));
  out.push_back(fact("invertible", "a zero cocycle value is rejected", throws(ErrorCode::InvalidTwist, [&] {
                       make_crossed_product(f, G, {}, {{s, s, {f5.zero()}}});
                     })));
  return out;
}

const std::vector<Fixture>& registry() {
  static const std::vector<Fixture> all{
      {"crossed-f5-c2", crossed_f5_c2, crossed_f5_c2_facts},
      {"dinf-q4", dinf_q4, dinf_q4_facts},
      {"f2-s3", f2_s3, f2_s3_facts},
      {"m2-z", m2_z, m2_z_facts},
      {"poly-z", poly_z, poly_z_facts},
      {"s3-k", s3_k, s3_k_facts},
      {"triangular-z", triangular_z, triangular_z_facts},
  };
  return all;
}

const Fixture& lookup(const std::string& name) {
  for (const auto& f : registry())
    if (f.name == name) return f;
  throw Error(ErrorCode::UnknownFixture, "no fixture named '" + name + "'");
}

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& f : registry()) out.push_back(f.name);
  return out;
}

Instance fixture_instance(const std::string& name) { return lookup(name).build(); }

InstanceReport run_fixture(const std::string& name, const VerifyOptions& options) {
  const Fixture& f = lookup(name);
  Instance inst = f.build();
  inst.dorroh = inst.phi = true;
  InstanceReport rep = verify_theorems(inst, options);
  if (inst.graded && inst.graded->group().is_abelian()) {
    const LawTally t = componentwise_centrality(inst, options.law_samples, options.seed);
    rep.checks.push_back({"componentwise_sampled", "components of sampled central elements are central",
                          t.failures == 0, std::to_string(t.checks) + " checks"});
  }
  Facts facts = f.facts(inst, options);
  for (auto& c : facts) c.id = "fact." + c.id;
  rep.checks.insert(rep.checks.begin(), facts.begin(), facts.end());
  return rep;
}

}  // namespace grl

#include <map>
#include <random>

#include "grl/constructions.hpp"
#include "grl/error.hpp"
#include "grl/harness.hpp"

namespace grl {

namespace {

Scalar random_scalar(const Field& field, std::mt19937_64& rng) {
  if (field.is_prime()) {
    std::uniform_int_distribution<std::uint32_t> d(0, field.characteristic() - 1);
    return field.residue(d(rng));
  }
  std::uniform_int_distribution<long> num(-3, 3), den(1, 3);
  return field.from_rational(mpq_class(num(rng), den(rng)));
}

Vector random_vector(const Field& field, std::size_t dim, std::mt19937_64& rng) {
  Vector v;
  for (std::size_t i = 0; i < dim; ++i) v.push_back(random_scalar(field, rng));
  return v;
}

Vector random_homogeneous(const GradedAlgebra& r, const GroupElement& g, std::mt19937_64& rng) {
  Vector v = r.algebra().zero();
  for (std::size_t i : r.component_basis(g)) v[i] = random_scalar(r.field(), rng);
  return v;
}

DorrohElement random_dorroh(const DorrohRing& d, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> n(-3, 3);
  return {random_vector(d.base().field(), d.base().dim(), rng), n(rng)};
}

const GroupElement& random_degree(const GradedAlgebra& r, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> d(0, r.support().size() - 1);
  return r.support()[d(rng)];
}

const GradedAlgebra& graded_of(const Instance& inst) {
  if (!inst.graded) throw Error(ErrorCode::InvalidSpec, inst.name + " has no graded form");
  return *inst.graded;
}

template <class Ring, class Map>
void phi_checks(LawTally& t, const GroupRing<Ring>& target, const Map& phi, const typename Ring::Element& a,
                const typename Ring::Element& b, const typename Ring::Element& sum, const typename Ring::Element& prod,
                const ElementSet& supp_a, bool a_zero) {
  const auto pa = phi(a);
  t.record(target.add(pa, phi(b)) == phi(sum), "phi is not additive");
  t.record(target.mul(pa, phi(b)) == phi(prod), "phi is not multiplicative");
  t.record(target.support(pa) == supp_a, "phi changes the support");
  t.record(target.is_zero(pa) == a_zero, "phi is not injective");
}


// Group-ring instances over infinite groups: R = A[G] itself, with elements
// drawn from monomials in a small window of G.
using RingEl = GroupRing<Algebra>::Element;
using Lifted = std::map<GroupElement, RingEl>;  // elements of R[G]

GroupElement random_group_element(const Group& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> c(-2, 2);
  switch (g.kind()) {
    case GroupKind::Finite: {
      const auto els = g.elements();
      std::uniform_int_distribution<std::size_t> d(0, els.size() - 1);
      return els[d(rng)];
    }
    case GroupKind::FreeAbelian: {
      std::vector<std::int64_t> v;
      for (std::size_t i = 0; i < g.rank(); ++i) v.push_back(c(rng));
      return GroupElement::lattice(std::move(v));
    }
    case GroupKind::InfiniteDihedral: return GroupElement::dihedral(c(rng), rng() % 2 == 1);
  }
  return g.identity();
}

RingEl random_ring_element(const GroupRing<Algebra>& ring, std::mt19937_64& rng) {
  const Algebra& a = ring.coefficients();
  RingEl x;
  for (int k = 0; k < 3; ++k)
    x = ring.add(x, ring.monomial(random_vector(a.field(), a.dim(), rng), random_group_element(ring.group(), rng)));
  return x;
}

RingEl scale(const GroupRing<Algebra>& ring, const mpz_class& n, const RingEl& x) {
  RingEl out;
  const Scalar s = ring.coefficients().field().from_integer(n);
  for (const auto& [g, c] : x) out = ring.add(out, ring.monomial(s * c, g));
  return out;
}

Lifted lift(const RingEl& x) {
  Lifted out;
  for (const auto& [g, c] : x) out[g].emplace(g, c);
  return out;
}

Lifted lifted_mul(const GroupRing<Algebra>& ring, const Lifted& x, const Lifted& y) {
  Lifted out;
  for (const auto& [g, a] : x)
    for (const auto& [h, b] : y) {
      const GroupElement gh = ring.group().mul(g, h);
      RingEl sum = ring.add(out[gh], ring.mul(a, b));
      if (sum.empty()) out.erase(gh);
      else out[gh] = std::move(sum);
    }
  return out;
}

Lifted lifted_add(const GroupRing<Algebra>& ring, const Lifted& x, const Lifted& y) {
  Lifted out = x;
  for (const auto& [g, b] : y) {
    RingEl sum = ring.add(out[g], b);
    if (sum.empty()) out.erase(g);
    else out[g] = std::move(sum);
  }
  return out;
}

// (r, n) in the Dorroh extension of R = A[G].
struct Pair {
  RingEl r;
  mpz_class n;
  friend bool operator==(const Pair& a, const Pair& b) { return a.r == b.r && a.n == b.n; }
};

Pair pair_mul(const GroupRing<Algebra>& ring, const Pair& a, const Pair& b) {
  RingEl r = ring.add(ring.mul(a.r, b.r), ring.add(scale(ring, a.n, b.r), scale(ring, b.n, a.r)));
  return {std::move(r), a.n * b.n};
}

Pair pair_add(const GroupRing<Algebra>& ring, const Pair& a, const Pair& b) { return {ring.add(a.r, b.r), a.n + b.n}; }

bool pair_central(const GroupRing<Algebra>& ring, const Pair& a) {
  std::vector<Pair> probes{{RingEl{}, 1}};
  for (const auto& x : ring.coefficients().spanning_set()) probes.push_back({ring.monomial(x, ring.group().identity()), 0});
  for (const auto& g : ring.group().generators()) probes.push_back({ring.unit(g), 0});
  for (const auto& p : probes)
    if (!(pair_mul(ring, a, p) == pair_mul(ring, p, a))) return false;
  return true;
}

ElementSet pair_support(const GroupRing<Algebra>& ring, const Pair& a) {
  ElementSet s = ring.support(a.r);
  if (a.n != 0) s.insert(ring.group().identity());
  return s;
}

LawTally ring_phi_laws(const GroupRing<Algebra>& ring, std::size_t samples, std::mt19937_64& rng) {
  LawTally t;
  t.record(lift(ring.one()) == Lifted{{ring.group().identity(), ring.one()}}, "phi(1) is not the identity");
  for (std::size_t s = 0; s < samples; ++s) {
    const RingEl x = random_ring_element(ring, rng), y = random_ring_element(ring, rng);
    const Lifted px = lift(x), py = lift(y);
    t.record(lifted_add(ring, px, py) == lift(ring.add(x, y)), "phi is not additive");
    t.record(lifted_mul(ring, px, py) == lift(ring.mul(x, y)), "phi is not multiplicative");
    ElementSet supp;
    for (const auto& [g, c] : px) supp.insert(g);
    t.record(supp == ring.support(x), "phi changes the support");
    t.record(px.empty() == x.empty(), "phi is not injective");
  }
  return t;
}

LawTally ring_dorroh_laws(const Instance& inst, std::size_t samples, std::mt19937_64& rng) {
  const GroupRing<Algebra>& ring = *inst.ring;
  LawTally t;
  std::uniform_int_distribution<long> small(-3, 3);
  auto random_pair = [&] { return Pair{random_ring_element(ring, rng), small(rng)}; };
  const Pair one{RingEl{}, 1};
  for (std::size_t s = 0; s < samples; ++s) {
    const Pair x = random_pair(), y = random_pair(), z = random_pair();
    t.record(pair_mul(ring, pair_mul(ring, x, y), z) == pair_mul(ring, x, pair_mul(ring, y, z)),
             "multiplication is not associative");
    t.record(pair_mul(ring, x, pair_add(ring, y, z)) == pair_add(ring, pair_mul(ring, x, y), pair_mul(ring, x, z)),
             "left distributivity fails");
    t.record(pair_mul(ring, pair_add(ring, x, y), z) == pair_add(ring, pair_mul(ring, x, z), pair_mul(ring, y, z)),
             "right distributivity fails");
    t.record(pair_mul(ring, one, x) == x && pair_mul(ring, x, one) == x, "(0,1) is not an identity");
    const Pair px{x.r, 0}, py{y.r, 0};
    t.record(pair_add(ring, px, py) == Pair{ring.add(x.r, y.r), 0}, "psi is not additive");
    t.record(pair_mul(ring, px, py) == Pair{ring.mul(x.r, y.r), 0}, "psi is not multiplicative");
    t.record(pair_support(ring, px) == ring.support(x.r), "psi changes the support");
    t.record(pair_central(ring, px) == ring.is_central(x.r), "psi does not reflect centrality");
  }
  for (const auto& [name, f] : inst.ring_elements) {
    const Pair pf{f, 0};
    t.record(pair_central(ring, pf) == ring.is_central(f), "psi(" + name + ") changes centrality");
    t.record(ring.is_idempotent(f) == (pair_mul(ring, pf, pf) == pf), "psi(" + name + ") changes idempotency");
    t.record(pair_support(ring, pf) == ring.support(f), "psi(" + name + ") changes the support");
  }
  return t;
}

}  // namespace

void LawTally::record(bool ok, const std::string& what) {
  ++checks;
  if (ok) return;
  ++failures;
  if (messages.size() < 5) messages.push_back(what);
}

LawTally phi_laws(const Instance& inst, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  if (!inst.graded && inst.ring) return ring_phi_laws(*inst.ring, samples, rng);
  const GradedAlgebra& r = graded_of(inst);
  LawTally t;
  if (r.algebra().identity()) {
    const auto target = phi_target(r);
    const auto phi = [&](const Vector& x) { return embed_phi(r, x); };
    const Algebra& a = r.algebra();
    t.record(phi(a.one()) == target.one(), "phi(1) is not the identity");
    for (std::size_t s = 0; s < samples; ++s) {
      const Vector x = random_vector(r.field(), r.dim(), rng);
      const Vector y = random_vector(r.field(), r.dim(), rng);
      phi_checks(t, target, phi, x, y, a.add(x, y), a.mul(x, y), support(r, r.element(x)), is_zero(x));
      const GroupElement& g = random_degree(r, rng);
      const GroupElement& h = random_degree(r, rng);
      const Vector u = random_homogeneous(r, g, rng);
      const Vector v = random_homogeneous(r, h, rng);
      const auto expected = target.monomial(a.mul(u, v), r.group().mul(g, h));
      t.record(target.mul(phi(u), phi(v)) == expected, "phi(a)phi(b) != ab u_gh for homogeneous a, b");
    }
    return t;
  }
  const DorrohRing d(r);
  const auto target = phi_target(d);
  const auto phi = [&](const DorrohElement& x) { return embed_phi(d, x); };
  t.record(phi(d.one()) == target.one(), "phi(1) is not the identity");
  for (std::size_t s = 0; s < samples; ++s) {
    const DorrohElement x = random_dorroh(d, rng);
    const DorrohElement y = random_dorroh(d, rng);
    phi_checks(t, target, phi, x, y, d.add(x, y), d.mul(x, y), d.support(x), d.is_zero(x));
  }
  return t;
}

LawTally dorroh_laws(const Instance& inst, std::size_t samples, std::uint64_t seed, std::uint64_t budget) {
  std::mt19937_64 rng(seed);
  if (!inst.graded && inst.ring) return ring_dorroh_laws(inst, samples, rng);
  const GradedAlgebra& r = graded_of(inst);
  const DorrohRing d(r);
  const Algebra& a = r.algebra();
  LawTally t;
  for (std::size_t s = 0; s < samples; ++s) {
    const DorrohElement x = random_dorroh(d, rng), y = random_dorroh(d, rng), z = random_dorroh(d, rng);
    t.record(d.mul(d.mul(x, y), z) == d.mul(x, d.mul(y, z)), "multiplication is not associative");
    t.record(d.mul(x, d.add(y, z)) == d.add(d.mul(x, y), d.mul(x, z)), "left distributivity fails");
    t.record(d.mul(d.add(x, y), z) == d.add(d.mul(x, z), d.mul(y, z)), "right distributivity fails");
    t.record(d.mul(d.one(), x) == x && d.mul(x, d.one()) == x, "(0,1) is not an identity");

    const Vector u = random_vector(r.field(), r.dim(), rng);
    const Vector v = random_vector(r.field(), r.dim(), rng);
    t.record(d.psi(a.add(u, v)) == d.add(d.psi(u), d.psi(v)), "psi is not additive");
    t.record(d.psi(a.mul(u, v)) == d.mul(d.psi(u), d.psi(v)), "psi is not multiplicative");
    t.record(d.support(d.psi(u)) == support(r, r.element(u)), "psi changes the support");
    t.record(is_central(r, r.element(u)) == d.is_central(d.psi(u)), "psi does not reflect centrality");

    // Components of x follow the grading D_e = R_e x Z, D_g = R_g x 0.
    DorrohElement sum = d.zero();
    for (const auto& g : d.support(x)) sum = d.add(sum, d.component(x, g));
    t.record(sum == x, "components do not reassemble the element");
    const GroupElement& g = random_degree(r, rng);
    const GroupElement& h = random_degree(r, rng);
    const DorrohElement xg = d.component(x, g), yh = d.component(y, h);
    const ElementSet prod_support = d.support(d.mul(xg, yh));
    t.record(prod_support.empty() || prod_support == ElementSet{r.group().mul(g, h)}, "D_g D_h is not inside D_gh");
  }
  // Central idempotents: psi preserves them with the same support group.
  try {
    for (const auto& f : central_idempotents(r, budget)) {
      const DorrohElement pf = d.psi(r.dense(f));
      t.record(d.is_central(pf) && d.is_idempotent(pf), "psi(f) is not a central idempotent");
      t.record(d.support_group(pf, 1000) == support_group(r, f, 1000), "support groups differ under psi");
      const DorrohElement co = d.add(d.one(), d.neg(pf));
      t.record(d.is_central(co) && d.is_idempotent(co), "1 - psi(f) is not a central idempotent");
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExceeded && e.code() != ErrorCode::Unsupported) throw;
  }
  return t;
}

LawTally componentwise_centrality(const Instance& inst, std::size_t samples, std::uint64_t seed) {
  const GradedAlgebra& r = graded_of(inst);
  LawTally t;
  if (!r.group().is_abelian()) return t;
  const auto center = center_of_algebra(r.algebra());
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    Vector z = r.algebra().zero();
    for (const auto& c : center) z += random_scalar(r.field(), rng) * c;
    const GradedElement f = r.element(z);
    t.record(is_central(r, f), "sampled center element is not central");
    for (const auto& g : support(r, f))
      t.record(is_central(r, component(r, f, g)), "a component of a central element is not central");
  }
  return t;
}

}  // namespace grl

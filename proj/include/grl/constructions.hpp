#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grl/graded.hpp"
#include "grl/group_ring.hpp"

namespace grl {

struct DorrohElement {
  Vector r;
  mpz_class n;

  friend bool operator==(const DorrohElement& a, const DorrohElement& b) { return a.r == b.r && a.n == b.n; }
};

// D = R x Z with (r,n)(s,m) = (rs + ns + mr, nm), graded by D_e = R_e x Z and
// D_g = R_g x 0 for g != e. Unital even when R is not.
class DorrohRing {
 public:
  using Element = DorrohElement;

  explicit DorrohRing(GradedAlgebra base) : base_(std::move(base)) {}

  const GradedAlgebra& base() const { return base_; }
  const Group& group() const { return base_.group(); }

  Element zero() const { return {base_.algebra().zero(), 0}; }
  Element one() const { return {base_.algebra().zero(), 1}; }
  Element psi(const Vector& r) const;

  Element add(const Element& a, const Element& b) const { return {a.r + b.r, a.n + b.n}; }
  Element neg(const Element& a) const { return {-a.r, -a.n}; }
  Element mul(const Element& a, const Element& b) const;
  bool is_zero(const Element& a) const { return a.n == 0 && grl::is_zero(a.r); }
  // (b_i, 0) for each basis vector and (0, 1).
  std::vector<Element> spanning_set() const;
  std::string format(const Element& a) const;

  Element component(const Element& a, const GroupElement& g) const;
  ElementSet support(const Element& a) const;
  std::optional<ElementSet> support_group(const Element& a, std::size_t cap) const;
  bool is_idempotent(const Element& a) const { return mul(a, a) == a; }
  bool is_central(const Element& a) const;

  // psi(f) and (-f, 1) for every central idempotent f of R.
  std::vector<Element> central_idempotents(std::uint64_t budget) const;

 private:
  GradedAlgebra base_;
};

static_assert(CoefficientRing<DorrohRing>);

// phi(r) = sum_g r_g u_g in R[G], coefficients taken in R itself. Both throw
// NotUnital when R has no identity.
GroupRing<Algebra> phi_target(const GradedAlgebra& r);
GroupRing<Algebra>::Element embed_phi(const GradedAlgebra& r, const Vector& x);
GroupRing<DorrohRing> phi_target(const DorrohRing& d);
GroupRing<DorrohRing>::Element embed_phi(const DorrohRing& d, const DorrohElement& x);

// Same algebra graded by G/N through the coset of each degree; R_N becomes
// the principal component. Throws InfiniteGroup, NotSubgroup, NotNormal.
GradedAlgebra quotient_regrade(const GradedAlgebra& r, const ElementSet& normal);

// R_H as an H-graded algebra on the basis vectors with degree in the finite
// subgroup H. Throws NotSubgroup.
GradedAlgebra restrict_to_subgroup(const GradedAlgebra& r, const ElementSet& h);

// An algebra whose basis degrees lie in N^k, regraded by Z^k with zero
// components elsewhere. Throws DegreeOutsideMonoid.
GradedAlgebra monoid_to_group_regrade(const Algebra& a, std::size_t k,
                                      const std::vector<std::vector<std::int64_t>>& degrees);

// R^op graded by G^op, identified with G through g -> g^-1 (the identity map
// when G is abelian).
GradedAlgebra opposite(const GradedAlgebra& r);

}  // namespace grl

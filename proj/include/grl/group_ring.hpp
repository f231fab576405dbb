#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

#include "grl/algebra.hpp"
#include "grl/error.hpp"
#include "grl/graded.hpp"
#include "grl/groups.hpp"

namespace grl {

// Crossed-product data over a finite group, indexed by element index.
struct Twist {
  std::vector<Matrix> action;                // alpha_g as a matrix on coordinates
  std::vector<std::vector<Vector>> cocycle;  // sigma(g, h)
};

// Finitely supported sums of a u_g with coefficients in a unital ring.
template <CoefficientRing Ring>
class GroupRing {
 public:
  using Coeff = typename Ring::Element;
  using Element = std::map<GroupElement, Coeff>;  // no zero coefficients

  GroupRing(Ring ring, Group group) : ring_(std::move(ring)), group_(std::move(group)) {
    one_ = ring_.one();
  }

  const Ring& coefficients() const { return ring_; }
  const Group& group() const { return group_; }
  bool is_twisted() const { return twist_.has_value(); }
  const std::optional<Twist>& twist() const { return twist_; }

  Element zero() const { return {}; }
  Element one() const { return monomial(one_, group_.identity()); }
  Element unit(const GroupElement& g) const { return monomial(one_, g); }

  Element monomial(const Coeff& a, const GroupElement& g) const {
    if (!group_.contains(g)) throw Error(ErrorCode::NotMember, "degree outside " + group_.name());
    Element out;
    if (!ring_.is_zero(a)) out.emplace(g, a);
    return out;
  }

  Element add(const Element& x, const Element& y) const {
    Element out = x;
    for (const auto& [g, b] : y) accumulate(out, g, b);
    return out;
  }

  Element mul(const Element& x, const Element& y) const {
    Element out;
    for (const auto& [g, a] : x)
      for (const auto& [h, b] : y) accumulate(out, group_.mul(g, h), term(g, a, h, b));
    return out;
  }

  bool is_zero(const Element& x) const { return x.empty(); }
  bool is_idempotent(const Element& f) const { return mul(f, f) == f; }

  ElementSet support(const Element& f) const {
    ElementSet out;
    for (const auto& [g, a] : f) out.insert(g);
    return out;
  }

  std::optional<ElementSet> support_group(const Element& f, std::size_t cap) const {
    return subgroup_closure(group_, support(f), cap);
  }

  // Commutes with x u_e for x in the coefficient spanning set and with u_g
  // for each declared generator g.
  bool is_central(const Element& f) const {
    for (const auto& x : ring_.spanning_set()) {
      const Element m = monomial(x, group_.identity());
      if (mul(m, f) != mul(f, m)) return false;
    }
    for (const auto& g : group_.generators()) {
      const Element u = unit(g);
      if (mul(u, f) != mul(f, u)) return false;
    }
    return true;
  }

  std::string format(const Element& f) const {
    if (f.empty()) return "0";
    std::string out;
    for (const auto& [g, a] : f) {
      if (!out.empty()) out += " + ";
      out += "(" + ring_.format(a) + ")u_" + group_.format(g);
    }
    return out;
  }

  // Twisted product over a finite group; see make_crossed_product.
  void set_twist(Twist twist) { twist_ = std::move(twist); }

 private:
  Coeff term(const GroupElement& g, const Coeff& a, const GroupElement& h, const Coeff& b) const {
    if constexpr (std::is_same_v<Ring, Algebra>) {
      if (twist_) {
        const Coeff acted = grl::apply(twist_->action[g.index()], b);
        return ring_.mul(ring_.mul(a, acted), twist_->cocycle[g.index()][h.index()]);
      }
    }
    (void)g;
    (void)h;
    return ring_.mul(a, b);
  }

  void accumulate(Element& out, const GroupElement& g, const Coeff& a) const {
    if (ring_.is_zero(a)) return;
    auto it = out.find(g);
    if (it == out.end()) {
      out.emplace(g, a);
      return;
    }
    it->second = ring_.add(it->second, a);
    if (ring_.is_zero(it->second)) out.erase(it);
  }

  Ring ring_;
  Group group_;
  Coeff one_;
  std::optional<Twist> twist_;
};

// A*_sigma G for finite G. `action` gives alpha on generators (as matrices on
// coordinates; missing generators act trivially) and is extended to the
// whole group; `cocycle` lists the sigma(g, h) differing from 1. Validates
// that alpha is an action by algebra automorphisms and that sigma is
// normalized, central, invertible and satisfies
// sigma(g,h) sigma(gh,k) = alpha_g(sigma(h,k)) sigma(g,hk). Throws InvalidTwist.
GroupRing<Algebra> make_crossed_product(
    Algebra coeff, Group group, const std::map<GroupElement, Matrix>& action,
    const std::vector<std::tuple<GroupElement, GroupElement, Vector>>& cocycle);

// R = A[G] (or A*_sigma G) as a G-graded algebra with basis b_i u_g ordered
// by g (element index) first, then i. Throws InfiniteGroup.
GradedAlgebra as_graded_algebra(const GroupRing<Algebra>& ring);
Vector to_graded_coordinates(const GroupRing<Algebra>& ring, const GroupRing<Algebra>::Element& x);
GroupRing<Algebra>::Element from_graded_coordinates(const GroupRing<Algebra>& ring, const Vector& v);

}  // namespace grl

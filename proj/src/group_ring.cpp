#include "grl/group_ring.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

namespace grl {

namespace {

bool commutes_with_basis(const Algebra& a, const Vector& x) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Vector b = a.basis(i);
    if (!(a.mul(x, b) == a.mul(b, x))) return false;
  }
  return true;
}

void check_automorphism(const Algebra& a, const Matrix& m, const std::string& name) {
  const std::size_t d = a.dim();
  if (m.size() != d) throw Error(ErrorCode::InvalidTwist, "action of " + name + " has the wrong shape");
  for (const auto& row : m) {
    if (row.size() != d) throw Error(ErrorCode::InvalidTwist, "action of " + name + " has the wrong shape");
    for (const auto& x : row)
      if (!(x.field() == a.field())) throw Error(ErrorCode::InvalidTwist, "action of " + name + " has entries in another field");
  }
  if (rank(m, d) != d) throw Error(ErrorCode::InvalidTwist, "action of " + name + " is not invertible");
  for (std::size_t i = 0; i < d; ++i) {
    const Vector bi = grl::apply(m, a.basis(i));
    for (std::size_t j = 0; j < d; ++j) {
      const Vector bj = grl::apply(m, a.basis(j));
      if (!(grl::apply(m, a.mul(a.basis(i), a.basis(j))) == a.mul(bi, bj)))
        throw Error(ErrorCode::InvalidTwist, "action of " + name + " is not multiplicative");
    }
  }
}

}  // namespace

GroupRing<Algebra> make_crossed_product(
    Algebra coeff, Group group, const std::map<GroupElement, Matrix>& action,
    const std::vector<std::tuple<GroupElement, GroupElement, Vector>>& cocycle) {
  if (!group.order()) throw Error(ErrorCode::InfiniteGroup, "crossed products need a finite group");
  const std::size_t n = *group.order();
  const std::size_t d = coeff.dim();
  const Field field = coeff.field();
  const Vector one = coeff.one();
  const auto elements = group.elements();

  std::vector<std::pair<GroupElement, Matrix>> seeds;
  for (const auto& g : group.generators()) {
    const auto it = action.find(g);
    seeds.emplace_back(g, it == action.end() ? identity_matrix(field, d) : it->second);
  }
  for (const auto& [g, m] : action) {
    if (!group.contains(g)) throw Error(ErrorCode::InvalidTwist, "action given for a non-member");
    if (std::find(group.generators().begin(), group.generators().end(), g) == group.generators().end())
      seeds.emplace_back(g, m);
  }
  for (const auto& [g, m] : seeds) check_automorphism(coeff, m, group.format(g));

  std::vector<std::optional<Matrix>> alpha(n);
  alpha[group.identity().index()] = identity_matrix(field, d);
  std::deque<GroupElement> queue{group.identity()};
  while (!queue.empty()) {
    const GroupElement x = queue.front();
    queue.pop_front();
    for (const auto& [g, m] : seeds) {
      const GroupElement y = group.mul(x, g);
      if (alpha[y.index()]) continue;
      alpha[y.index()] = compose(*alpha[x.index()], m);
      queue.push_back(y);
    }
  }
  Twist twist;
  for (auto& m : alpha) twist.action.push_back(std::move(*m));
  for (const auto& g : elements)
    for (const auto& h : elements)
      if (!(compose(twist.action[g.index()], twist.action[h.index()]) == twist.action[group.mul(g, h).index()]))
        throw Error(ErrorCode::InvalidTwist,
                    "action is not a homomorphism at (" + group.format(g) + ", " + group.format(h) + ")");

  twist.cocycle.assign(n, std::vector<Vector>(n, one));
  for (const auto& [g, h, value] : cocycle) {
    if (!group.contains(g) || !group.contains(h)) throw Error(ErrorCode::InvalidTwist, "cocycle entry for a non-member");
    if (value.size() != d) throw Error(ErrorCode::InvalidTwist, "cocycle value has the wrong dimension");
    twist.cocycle[g.index()][h.index()] = value;
  }
  const GroupElement e = group.identity();
  for (const auto& g : elements) {
    if (!(twist.cocycle[e.index()][g.index()] == one) || !(twist.cocycle[g.index()][e.index()] == one))
      throw Error(ErrorCode::InvalidTwist, "cocycle is not normalized at " + group.format(g));
  }
  for (const auto& g : elements) {
    for (const auto& h : elements) {
      const Vector& s = twist.cocycle[g.index()][h.index()];
      const std::string at = "(" + group.format(g) + ", " + group.format(h) + ")";
      if (!commutes_with_basis(coeff, s)) throw Error(ErrorCode::InvalidTwist, "cocycle value is not central at " + at);
      if (rank(coeff.left_multiplication(s), d) != d)
        throw Error(ErrorCode::InvalidTwist, "cocycle value is not invertible at " + at);
    }
  }
  for (const auto& g : elements) {
    for (const auto& h : elements) {
      const GroupElement gh = group.mul(g, h);
      for (const auto& k : elements) {
        const GroupElement hk = group.mul(h, k);
        const Vector lhs = coeff.mul(twist.cocycle[g.index()][h.index()], twist.cocycle[gh.index()][k.index()]);
        const Vector rhs = coeff.mul(grl::apply(twist.action[g.index()], twist.cocycle[h.index()][k.index()]),
                                     twist.cocycle[g.index()][hk.index()]);
        if (!(lhs == rhs))
          throw Error(ErrorCode::InvalidTwist, "cocycle condition fails at (" + group.format(g) + ", " +
                                                   group.format(h) + ", " + group.format(k) + ")");
      }
    }
  }

  GroupRing<Algebra> out(std::move(coeff), std::move(group));
  out.set_twist(std::move(twist));
  return out;
}

Vector to_graded_coordinates(const GroupRing<Algebra>& ring, const GroupRing<Algebra>::Element& x) {
  const auto n = ring.group().order();
  if (!n) throw Error(ErrorCode::InfiniteGroup, "graded coordinates need a finite group");
  const Algebra& a = ring.coefficients();
  Vector out = zero_vector(a.field(), *n * a.dim());
  for (const auto& [g, c] : x)
    for (std::size_t i = 0; i < a.dim(); ++i) out[g.index() * a.dim() + i] = c[i];
  return out;
}

GroupRing<Algebra>::Element from_graded_coordinates(const GroupRing<Algebra>& ring, const Vector& v) {
  const auto n = ring.group().order();
  if (!n) throw Error(ErrorCode::InfiniteGroup, "graded coordinates need a finite group");
  const Algebra& a = ring.coefficients();
  if (v.size() != *n * a.dim()) throw Error(ErrorCode::DimensionMismatch, "graded coordinate length");
  GroupRing<Algebra>::Element out;
  for (std::size_t g = 0; g < *n; ++g) {
    Vector c(v.begin() + static_cast<std::ptrdiff_t>(g * a.dim()),
             v.begin() + static_cast<std::ptrdiff_t>((g + 1) * a.dim()));
    if (!is_zero(c)) out.emplace(GroupElement::finite(g), std::move(c));
  }
  return out;
}

GradedAlgebra as_graded_algebra(const GroupRing<Algebra>& ring) {
  const Group& group = ring.group();
  if (!group.order()) throw Error(ErrorCode::InfiniteGroup, group.name() + " is infinite");
  const Algebra& a = ring.coefficients();
  const std::size_t d = a.dim();
  const auto elements = group.elements();
  const std::size_t dim = elements.size() * d;

  std::vector<std::string> labels;
  std::vector<GroupElement> degrees;
  for (const auto& g : elements) {
    for (std::size_t i = 0; i < d; ++i) {
      const std::string unit = "u_" + group.format(g);
      labels.push_back(d == 1 ? unit : a.labels()[i] + "*" + unit);
      degrees.push_back(g);
    }
  }
  std::vector<std::vector<SparseVector>> products(dim, std::vector<SparseVector>(dim));
  for (const auto& g : elements) {
    for (std::size_t i = 0; i < d; ++i) {
      const auto x = ring.monomial(a.basis(i), g);
      for (const auto& h : elements) {
        for (std::size_t j = 0; j < d; ++j) {
          const auto y = ring.monomial(a.basis(j), h);
          products[g.index() * d + i][h.index() * d + j] = to_sparse(to_graded_coordinates(ring, ring.mul(x, y)));
        }
      }
    }
  }
  Algebra algebra(a.field(), std::move(labels), std::move(products), to_graded_coordinates(ring, ring.one()));
  algebra.set_description(std::string(ring.is_twisted() ? "crossed product " : "group ring ") +
                          (a.description().empty() ? "A" : a.description()) + " over " + group.name());
  return GradedAlgebra(std::move(algebra), group, std::move(degrees));
}

}  // namespace grl

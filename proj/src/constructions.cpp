#include "grl/constructions.hpp"

#include <algorithm>

#include "grl/error.hpp"

namespace grl {

DorrohElement DorrohRing::psi(const Vector& r) const {
  if (r.size() != base_.dim()) throw Error(ErrorCode::DimensionMismatch, "psi of a vector of the wrong length");
  return {r, 0};
}

DorrohElement DorrohRing::mul(const Element& a, const Element& b) const {
  const Algebra& alg = base_.algebra();
  const Field& f = alg.field();
  Vector r = alg.mul(a.r, b.r);
  if (a.n != 0) r += f.from_integer(a.n) * b.r;
  if (b.n != 0) r += f.from_integer(b.n) * a.r;
  return {std::move(r), a.n * b.n};
}

std::vector<DorrohElement> DorrohRing::spanning_set() const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < base_.dim(); ++i) out.push_back(psi(base_.algebra().basis(i)));
  out.push_back(one());
  return out;
}

std::string DorrohRing::format(const Element& a) const {
  return "(" + base_.algebra().format(a.r) + ", " + a.n.get_str() + ")";
}

DorrohElement DorrohRing::component(const Element& a, const GroupElement& g) const {
  const Vector r = base_.dense(grl::component(base_, base_.element(a.r), g));
  return {r, g == group().identity() ? a.n : mpz_class(0)};
}

ElementSet DorrohRing::support(const Element& a) const {
  ElementSet out = grl::support(base_, base_.element(a.r));
  if (a.n != 0) out.insert(group().identity());
  return out;
}

std::optional<ElementSet> DorrohRing::support_group(const Element& a, std::size_t cap) const {
  return subgroup_closure(group(), support(a), cap);
}

bool DorrohRing::is_central(const Element& a) const {
  for (const auto& x : spanning_set())
    if (!(mul(a, x) == mul(x, a))) return false;
  return true;
}

std::vector<DorrohElement> DorrohRing::central_idempotents(std::uint64_t budget) const {
  const auto base = grl::central_idempotents(base_, budget);
  std::vector<Element> out;
  for (const auto& f : base) out.push_back(psi(base_.dense(f)));
  for (const auto& f : base) out.push_back({-base_.dense(f), 1});
  return out;
}

GroupRing<Algebra> phi_target(const GradedAlgebra& r) {
  if (!r.algebra().identity()) throw Error(ErrorCode::NotUnital, "phi needs a unital ring");
  return GroupRing<Algebra>(r.algebra(), r.group());
}

GroupRing<Algebra>::Element embed_phi(const GradedAlgebra& r, const Vector& x) {
  if (!r.algebra().identity()) throw Error(ErrorCode::NotUnital, "phi needs a unital ring");
  GroupRing<Algebra>::Element out;
  for (auto& [g, c] : r.decompose(x)) out.emplace(g, std::move(c));
  return out;
}

GroupRing<DorrohRing> phi_target(const DorrohRing& d) { return GroupRing<DorrohRing>(d, d.group()); }

GroupRing<DorrohRing>::Element embed_phi(const DorrohRing& d, const DorrohElement& x) {
  GroupRing<DorrohRing>::Element out;
  for (const auto& g : d.support(x)) out.emplace(g, d.component(x, g));
  return out;
}

GradedAlgebra quotient_regrade(const GradedAlgebra& r, const ElementSet& normal) {
  const Quotient q = quotient_group(r.group(), normal);
  std::vector<GroupElement> degrees;
  for (const auto& g : r.degrees()) degrees.push_back(q.project(g));
  return GradedAlgebra(r.algebra(), q.group, std::move(degrees));
}

GradedAlgebra restrict_to_subgroup(const GradedAlgebra& r, const ElementSet& h) {
  const Group sub = Group::from_subgroup(r.group(), h);
  const Algebra& a = r.algebra();
  std::vector<std::size_t> keep;
  std::vector<std::size_t> position(r.dim(), r.dim());
  for (std::size_t i = 0; i < r.dim(); ++i) {
    if (!h.count(r.degree(i))) continue;
    position[i] = keep.size();
    keep.push_back(i);
  }
  std::vector<std::string> labels;
  std::vector<GroupElement> degrees;
  std::vector<std::vector<SparseVector>> products(keep.size(), std::vector<SparseVector>(keep.size()));
  for (std::size_t x = 0; x < keep.size(); ++x) {
    labels.push_back(a.labels()[keep[x]]);
    degrees.push_back(sub.parse_label(r.group().format(r.degree(keep[x]))));
    for (std::size_t y = 0; y < keep.size(); ++y)
      for (const auto& t : a.product(keep[x], keep[y])) products[x][y].push_back({position[t.index], t.coeff});
  }
  std::optional<Vector> identity;
  if (a.identity()) {
    identity = Vector{};
    for (std::size_t i : keep) identity->push_back((*a.identity())[i]);
  }
  Algebra out(a.field(), std::move(labels), std::move(products), identity);
  if (keep.size() == r.dim()) {
    if (a.declared_prime()) out.set_declared_prime(*a.declared_prime());
    if (a.split_idempotents()) out.set_split_idempotents(*a.split_idempotents());
  }
  out.set_description(a.description() + " restricted to " + sub.name());
  return GradedAlgebra(std::move(out), sub, std::move(degrees));
}

GradedAlgebra monoid_to_group_regrade(const Algebra& a, std::size_t k,
                                      const std::vector<std::vector<std::int64_t>>& degrees) {
  if (degrees.size() != a.dim()) throw Error(ErrorCode::DimensionMismatch, "one degree per basis vector");
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (degrees[i].size() != k) throw Error(ErrorCode::DimensionMismatch, "degree of the wrong rank");
    if (std::any_of(degrees[i].begin(), degrees[i].end(), [](std::int64_t x) { return x < 0; }))
      throw Error(ErrorCode::DegreeOutsideMonoid, "degree of " + a.labels()[i] + " has a negative coordinate");
    out.push_back(GroupElement::lattice(degrees[i]));
  }
  return GradedAlgebra(a, Group::free_abelian(k), std::move(out));
}

GradedAlgebra opposite(const GradedAlgebra& r) {
  std::vector<GroupElement> degrees = r.degrees();
  if (!r.group().is_abelian())
    for (auto& g : degrees) g = r.group().inverse(g);
  return GradedAlgebra(r.algebra().opposite(), r.group(), std::move(degrees));
}

}  // namespace grl

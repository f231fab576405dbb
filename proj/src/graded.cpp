#include "grl/graded.hpp"

#include <algorithm>
#include <numeric>

#include "grl/error.hpp"

namespace grl {

bool operator==(const GradedElement& a, const GradedElement& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].index != b.terms_[i].index || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  return true;
}

const char* to_string(Side side) { return side == Side::Left ? "left" : "right"; }

const char* to_string(StrongGradingResult::Status s) {
  switch (s) {
    case StrongGradingResult::Status::StronglyGradedOnSupport: return "StronglyGradedOnSupport";
    case StrongGradingResult::Status::Fails: return "Fails";
    case StrongGradingResult::Status::SupportNotClosed: return "SupportNotClosed";
  }
  return "?";
}

const char* to_string(PrimeResult::Status s) {
  switch (s) {
    case PrimeResult::Status::Prime: return "Prime";
    case PrimeResult::Status::NotPrime: return "NotPrime";
    case PrimeResult::Status::Unsupported: return "Unsupported";
  }
  return "?";
}

namespace {

bool scalar_less(const Scalar& a, const Scalar& b) {
  if (a.is_rational()) return a.rational() < b.rational();
  return a.residue() < b.residue();
}

bool lex_less(const Vector& a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (scalar_less(a[i], b[i])) return true;
    if (scalar_less(b[i], a[i])) return false;
  }
  return false;
}

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t limit) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (out > limit / base) return limit + 1;
    out *= base;
  }
  return out;
}

// Calls visit(coefficients) for every point of F_p^k in odometer order.
template <class Visit>
void for_each_point(std::uint32_t p, std::size_t k, Visit&& visit) {
  std::vector<std::uint32_t> c(k, 0);
  while (true) {
    visit(c);
    std::size_t i = 0;
    while (i < k && ++c[i] == p) c[i++] = 0;
    if (i == k) return;
  }
}

Vector combination(const Field& field, const std::vector<Vector>& basis, const std::vector<std::uint32_t>& c,
                   std::size_t dim) {
  Vector out = zero_vector(field, dim);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (c[i]) out += field.residue(c[i]) * basis[i];
  return out;
}

std::int64_t total_degree(const GroupElement& g) {
  const auto& c = g.coords();
  return std::accumulate(c.begin(), c.end(), std::int64_t{0});
}

// Product of basis elements in the requested order: Left -> b_x b_r.
const SparseVector& oriented(const Algebra& a, Side side, std::size_t x, std::size_t r) {
  return side == Side::Left ? a.product(x, r) : a.product(r, x);
}

// Basis of {r in span(r_idx) : x r = 0 (Left) or r x = 0 (Right) for x in x_idx}.
std::vector<Vector> joint_kernel(const Algebra& a, Side side, const std::vector<std::size_t>& x_idx,
                                 const std::vector<std::size_t>& r_idx) {
  const std::size_t d = a.dim();
  Matrix m;
  for (std::size_t x : x_idx) {
    for (std::size_t k = 0; k < d; ++k) {
      Vector row = zero_vector(a.field(), r_idx.size());
      bool any = false;
      for (std::size_t j = 0; j < r_idx.size(); ++j)
        for (const auto& t : oriented(a, side, x, r_idx[j]))
          if (t.index == k) {
            row[j] += t.coeff;
            any = true;
          }
      if (any) m.push_back(std::move(row));
    }
  }
  return kernel(m, r_idx.size(), a.field());
}

Vector embed(const Field& field, std::size_t dim, const std::vector<std::size_t>& idx, const Vector& local) {
  Vector out = zero_vector(field, dim);
  for (std::size_t j = 0; j < idx.size(); ++j) out[idx[j]] = local[j];
  return out;
}

// Over Q: sums of split idempotents, or the two solutions on a
// one-dimensional center.
std::vector<Vector> rational_central_idempotents(const Algebra& a, std::uint64_t budget) {
  std::vector<Vector> found{a.zero()};
  if (const auto& split = a.split_idempotents()) {
    const std::size_t n = split->size();
    if (n >= 63 || (std::uint64_t{1} << n) > budget)
      throw Error(ErrorCode::BudgetExceeded, "2^" + std::to_string(n) + " candidates exceed the budget");
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      Vector f = a.zero();
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) f += (*split)[i];
      found.push_back(std::move(f));
    }
    return found;
  }
  const std::vector<Vector> center = center_of_algebra(a);
  if (center.size() != 1)
    throw Error(ErrorCode::Unsupported,
                "central idempotents over Q need a split commutative product or a one-dimensional center");
  // f = x c with c^2 = mu c forces x = 0 or x mu = 1.
  const Vector& c = center.front();
  const Scalar mu = (*coordinates(center, a.mul(c, c), a.field()))[0];
  if (!mu.is_zero()) found.push_back(mu.inverse() * c);
  return found;
}

}  // namespace

GradedAlgebra::GradedAlgebra(Algebra algebra, Group group, std::vector<GroupElement> degrees)
    : algebra_(std::move(algebra)), group_(std::move(group)), degrees_(std::move(degrees)) {
  const std::size_t d = algebra_.dim();
  if (degrees_.size() != d) throw Error(ErrorCode::InvalidGrading, "one degree per basis element is required");
  for (const auto& g : degrees_)
    if (!group_.contains(g)) throw Error(ErrorCode::InvalidGrading, "degree outside " + group_.name());
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const GroupElement gh = group_.mul(degrees_[i], degrees_[j]);
      for (const auto& t : algebra_.product(i, j))
        if (!(degrees_[t.index] == gh))
          throw Error(ErrorCode::InvalidGrading, algebra_.labels()[i] + "*" + algebra_.labels()[j] + " has a " +
                                                     algebra_.labels()[t.index] + " term outside degree " +
                                                     group_.format(gh));
    }
  }
  for (const auto& g : degrees_)
    if (std::find(support_.begin(), support_.end(), g) == support_.end()) support_.push_back(g);
}

std::vector<std::size_t> GradedAlgebra::component_basis(const GroupElement& g) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < degrees_.size(); ++i)
    if (degrees_[i] == g) out.push_back(i);
  return out;
}

GradedElement GradedAlgebra::element(const Vector& v) const {
  if (v.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "element length differs from dimension");
  return GradedElement::from_dense(v);
}

GradedElement GradedAlgebra::mul(const GradedElement& a, const GradedElement& b) const {
  return element(algebra_.mul(dense(a), dense(b)));
}

GradedElement GradedAlgebra::add(const GradedElement& a, const GradedElement& b) const {
  return element(dense(a) + dense(b));
}

GradedElement GradedAlgebra::scale(const Scalar& s, const GradedElement& a) const { return element(s * dense(a)); }

std::optional<GradedElement> GradedAlgebra::unit() const {
  if (!algebra_.identity()) return std::nullopt;
  return element(*algebra_.identity());
}

std::map<GroupElement, Vector> GradedAlgebra::decompose(const Vector& r) const {
  std::map<GroupElement, Vector> out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i].is_zero()) continue;
    auto [it, inserted] = out.try_emplace(degrees_[i], zero_vector(field(), dim()));
    it->second[i] = r[i];
  }
  return out;
}

GradedElement component(const GradedAlgebra& r, const GradedElement& x, const GroupElement& g) {
  Vector v = zero_vector(r.field(), r.dim());
  for (const auto& t : x.terms())
    if (r.degree(t.index) == g) v[t.index] = t.coeff;
  return r.element(v);
}

ElementSet support(const GradedAlgebra& r, const GradedElement& x) {
  ElementSet out;
  for (const auto& t : x.terms()) out.insert(r.degree(t.index));
  return out;
}

std::optional<ElementSet> support_group(const GradedAlgebra& r, const GradedElement& x, std::size_t cap) {
  return subgroup_closure(r.group(), support(r, x), cap);
}

bool is_idempotent(const GradedAlgebra& r, const GradedElement& f) { return r.mul(f, f) == f; }

bool is_central(const GradedAlgebra& r, const GradedElement& f) {
  const Vector v = r.dense(f);
  for (std::size_t i = 0; i < r.dim(); ++i) {
    const Vector b = r.algebra().basis(i);
    if (!(r.algebra().mul(v, b) == r.algebra().mul(b, v))) return false;
  }
  return true;
}

std::vector<GradedElement> central_idempotents(const GradedAlgebra& r, std::uint64_t budget) {
  const Algebra& a = r.algebra();
  const Field& field = a.field();
  std::vector<Vector> found;
  if (!field.is_prime()) {
    found = rational_central_idempotents(a, budget);
  } else {
    const std::uint32_t p = field.characteristic();
    const std::vector<Vector> center = center_of_algebra(a);
    const std::size_t z = center.size();
    if (checked_power(p, z, budget) > budget)
      throw Error(ErrorCode::BudgetExceeded, field.name() + "^" + std::to_string(z) + " center points exceed the budget");
    // z_i z_j in center coordinates; nonzero entries only.
    struct Triple {
      std::size_t i, j, k;
      std::uint32_t c;
    };
    std::vector<Triple> gamma;
    for (std::size_t i = 0; i < z; ++i) {
      for (std::size_t j = 0; j < z; ++j) {
        const auto coords = coordinates(center, a.mul(center[i], center[j]), field);
        if (!coords) throw Error(ErrorCode::InvalidAlgebra, "center is not closed under multiplication");
        for (std::size_t k = 0; k < z; ++k)
          if (!(*coords)[k].is_zero()) gamma.push_back({i, j, k, (*coords)[k].residue()});
      }
    }
    std::vector<std::uint64_t> square(z);
    for_each_point(p, z, [&](const std::vector<std::uint32_t>& c) {
      std::fill(square.begin(), square.end(), 0);
      for (const auto& t : gamma)
        if (c[t.i] && c[t.j]) square[t.k] = (square[t.k] + std::uint64_t{c[t.i]} * c[t.j] % p * t.c) % p;
      for (std::size_t k = 0; k < z; ++k)
        if (square[k] != c[k]) return;
      found.push_back(combination(field, center, c, a.dim()));
    });
  }
  std::sort(found.begin(), found.end(), lex_less);
  std::vector<GradedElement> out;
  for (const auto& f : found) {
    GradedElement e = r.element(f);
    if (!is_idempotent(r, e) || !is_central(r, e))
      throw Error(ErrorCode::InvalidAlgebra, "enumeration produced a non-central-idempotent " + r.format(e));
    out.push_back(std::move(e));
  }
  return out;
}

ConditionResult check_condition(const GradedAlgebra& r, Side side, std::optional<DegreeWindow> window) {
  if (window && r.group().kind() != GroupKind::FreeAbelian)
    throw Error(ErrorCode::InvalidSpec, "degree windows apply to Z^k gradings only");
  const Algebra& a = r.algebra();
  auto in_window = [&](const GroupElement& g, const GroupElement& h) {
    return !window || total_degree(g) + total_degree(h) <= window->max_total_degree;
  };
  // Stage 1: a single basis vector killed by all of R_g.
  for (const auto& g : r.support()) {
    const auto xs = r.component_basis(g);
    for (std::size_t j = 0; j < r.dim(); ++j) {
      if (!in_window(g, r.degree(j))) continue;
      const bool killed =
          std::all_of(xs.begin(), xs.end(), [&](std::size_t x) { return oriented(a, side, x, j).empty(); });
      if (killed) return {false, AnnihilationWitness{g, r.degree(j), r.basis(j)}};
    }
  }
  // Stage 2: the joint kernel inside each R_h.
  for (const auto& g : r.support()) {
    const auto xs = r.component_basis(g);
    for (const auto& h : r.support()) {
      if (!in_window(g, h)) continue;
      const auto rs = r.component_basis(h);
      const auto ker = joint_kernel(a, side, xs, rs);
      if (!ker.empty())
        return {false, AnnihilationWitness{g, h, r.element(embed(r.field(), r.dim(), rs, ker.front()))}};
    }
  }
  return {true, std::nullopt};
}

StrongGradingResult check_strongly_graded(const GradedAlgebra& r) {
  const Group& g = r.group();
  const ElementSet supp(r.support().begin(), r.support().end());
  if (!is_subgroup(g, supp)) return {StrongGradingResult::Status::SupportNotClosed, std::nullopt, std::nullopt};
  const Algebra& a = r.algebra();
  for (const auto& x : r.support()) {
    for (const auto& y : r.support()) {
      Matrix products;
      for (std::size_t i : r.component_basis(x))
        for (std::size_t j : r.component_basis(y)) products.push_back(a.mul(a.basis(i), a.basis(j)));
      const std::size_t target = r.component_basis(g.mul(x, y)).size();
      if (rank(products, r.dim()) != target) return {StrongGradingResult::Status::Fails, x, y};
    }
  }
  return {StrongGradingResult::Status::StronglyGradedOnSupport, std::nullopt, std::nullopt};
}

NonDegeneracyResult check_non_degenerate(const GradedAlgebra& r, Side side) {
  for (const auto& g : r.support()) {
    const auto own = r.component_basis(g);
    const auto partner = r.component_basis(r.group().inverse(g));
    const auto ker = joint_kernel(r.algebra(), side, partner, own);
    if (!ker.empty()) return {false, g, r.element(embed(r.field(), r.dim(), own, ker.front()))};
  }
  return {true, std::nullopt, std::nullopt};
}

PrimeResult is_prime_principal(const GradedAlgebra& r, std::uint64_t budget) {
  const Algebra& a = r.algebra();
  const Field& field = a.field();
  const auto idx = r.component_basis(r.group().identity());
  const std::size_t k = idx.size();
  if (k == 0) return {PrimeResult::Status::NotPrime, std::nullopt, std::nullopt, "R_e is the zero ring"};

  // For fixed a the b with a x b = 0 for all x in R_e form a linear space.
  auto witness_for = [&](const Vector& left) -> std::optional<Vector> {
    Matrix m;
    for (std::size_t x : idx) {
      const Vector ax = a.mul(left, a.basis(x));
      std::vector<Vector> columns;
      for (std::size_t j : idx) columns.push_back(a.mul(ax, a.basis(j)));
      for (std::size_t c = 0; c < a.dim(); ++c) {
        Vector row = zero_vector(field, k);
        for (std::size_t j = 0; j < k; ++j) row[j] = columns[j][c];
        m.push_back(std::move(row));
      }
    }
    const auto ker = kernel(m, k, field);
    if (ker.empty()) return std::nullopt;
    return embed(field, a.dim(), idx, ker.front());
  };
  auto not_prime = [&](const Vector& left, const Vector& right, std::string why) {
    return PrimeResult{PrimeResult::Status::NotPrime, r.element(left), r.element(right), std::move(why)};
  };

  if (field.is_prime()) {
    if (checked_power(field.characteristic(), k, budget) > budget)
      return {PrimeResult::Status::Unsupported, std::nullopt, std::nullopt, "|R_e| exceeds the budget"};
    std::optional<PrimeResult> result;
    for_each_point(field.characteristic(), k, [&](const std::vector<std::uint32_t>& c) {
      if (result || std::all_of(c.begin(), c.end(), [](auto v) { return v == 0; })) return;
      Vector left = zero_vector(field, a.dim());
      for (std::size_t j = 0; j < k; ++j) left[idx[j]] = field.residue(c[j]);
      if (auto right = witness_for(left)) result = not_prime(left, *right, "a R_e b = 0");
    });
    if (result) return *result;
    return {PrimeResult::Status::Prime, std::nullopt, std::nullopt, "exhaustive over R_e"};
  }

  // Over Q: try a with coefficients in {-1, 0, 1}.
  if (checked_power(3, k, budget) <= budget) {
    std::optional<PrimeResult> result;
    for_each_point(3, k, [&](const std::vector<std::uint32_t>& c) {
      if (result || std::all_of(c.begin(), c.end(), [](auto v) { return v == 0; })) return;
      Vector left = zero_vector(field, a.dim());
      for (std::size_t j = 0; j < k; ++j) left[idx[j]] = field.from_int(c[j] == 2 ? -1 : static_cast<long>(c[j]));
      if (auto right = witness_for(left)) result = not_prime(left, *right, "a R_e b = 0");
    });
    if (result) return *result;
  }
  if (k == a.dim() && a.declared_prime()) {
    if (*a.declared_prime()) return {PrimeResult::Status::Prime, std::nullopt, std::nullopt, "declared by construction"};
    return {PrimeResult::Status::NotPrime, std::nullopt, std::nullopt, "declared by construction"};
  }
  return {PrimeResult::Status::Unsupported, std::nullopt, std::nullopt, "no witness found over Q"};
}

std::optional<bool> is_s_unital_exhaustive(const GradedAlgebra& r, std::uint64_t budget) {
  const Algebra& a = r.algebra();
  const Field& field = a.field();
  if (!field.is_prime() || checked_power(field.characteristic(), a.dim(), budget) > budget) return std::nullopt;
  std::vector<Vector> basis = a.spanning_set();
  bool ok = true;
  for_each_point(field.characteristic(), a.dim(), [&](const std::vector<std::uint32_t>& c) {
    if (!ok) return;
    const Vector x = combination(field, basis, c, a.dim());
    ok = solve(a.left_multiplication(x), x, a.dim(), field) && solve(a.right_multiplication(x), x, a.dim(), field);
  });
  return ok;
}

}  // namespace grl

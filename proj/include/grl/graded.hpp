#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grl/algebra.hpp"
#include "grl/groups.hpp"

namespace grl {

// Sparse coordinates over the basis of a GradedAlgebra; no zero entries.
class GradedElement {
 public:
  GradedElement() = default;
  static GradedElement from_dense(const Vector& v) { return GradedElement(to_sparse(v)); }

  const SparseVector& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Vector dense(const Field& field, std::size_t dim) const { return to_dense(terms_, field, dim); }

  friend bool operator==(const GradedElement& a, const GradedElement& b);

 private:
  explicit GradedElement(SparseVector terms) : terms_(std::move(terms)) {}
  SparseVector terms_;
};

// Algebra with a degree map basis -> G satisfying R_g R_h in R_gh.
class GradedAlgebra {
 public:
  using Ring = Algebra;

  // Throws InvalidGrading when some nonzero structure constant c_ij^k has
  // deg(k) != deg(i) deg(j).
  GradedAlgebra(Algebra algebra, Group group, std::vector<GroupElement> degrees);

  const Algebra& algebra() const { return algebra_; }
  const Algebra& ring() const { return algebra_; }
  const Group& group() const { return group_; }
  const Field& field() const { return algebra_.field(); }
  std::size_t dim() const { return algebra_.dim(); }
  const std::vector<GroupElement>& degrees() const { return degrees_; }
  const GroupElement& degree(std::size_t i) const { return degrees_.at(i); }

  // Supp(R), in order of first appearance along the basis.
  const std::vector<GroupElement>& support() const { return support_; }
  // Basis indices spanning R_g (empty when g is outside Supp(R)).
  std::vector<std::size_t> component_basis(const GroupElement& g) const;

  GradedElement element(const Vector& v) const;
  GradedElement basis(std::size_t i) const { return element(algebra_.basis(i)); }
  Vector dense(const GradedElement& r) const { return r.dense(field(), dim()); }
  GradedElement mul(const GradedElement& a, const GradedElement& b) const;
  GradedElement add(const GradedElement& a, const GradedElement& b) const;
  GradedElement scale(const Scalar& s, const GradedElement& a) const;
  std::optional<GradedElement> unit() const;  // is_unital
  std::string format(const GradedElement& r) const { return algebra_.format(dense(r)); }

  // Homogeneous components of a dense element, keyed by degree.
  std::map<GroupElement, Vector> decompose(const Vector& r) const;

 private:
  Algebra algebra_;
  Group group_;
  std::vector<GroupElement> degrees_;
  std::vector<GroupElement> support_;
};

enum class Side { Left, Right };
const char* to_string(Side side);

GradedElement component(const GradedAlgebra& r, const GradedElement& x, const GroupElement& g);
ElementSet support(const GradedAlgebra& r, const GradedElement& x);
std::optional<ElementSet> support_group(const GradedAlgebra& r, const GradedElement& x, std::size_t cap);
bool is_idempotent(const GradedAlgebra& r, const GradedElement& f);
bool is_central(const GradedAlgebra& r, const GradedElement& f);

// Every central idempotent, sorted by coordinates. Over F_p this enumerates
// the p^z points of the center (z = dim Z(R)); over Q it needs either a split
// commutative product (the 2^d sums of primitive idempotents) or a
// one-dimensional center.
// Throws BudgetExceeded or Unsupported.
std::vector<GradedElement> central_idempotents(const GradedAlgebra& r, std::uint64_t budget);

// Restricts condition checks on Z^k-graded truncations to pairs whose product
// degree (sum of coordinates) is at most `max_total_degree`.
struct DegreeWindow {
  std::int64_t max_total_degree;
};

struct AnnihilationWitness {
  GroupElement g;  // the annihilating component R_g
  GroupElement h;  // degree of r
  GradedElement r;
};

struct ConditionResult {
  bool holds = true;
  std::optional<AnnihilationWitness> witness;
};

// Left:  R_g r != 0 for every nonzero homogeneous r and g in Supp(R).
// Right: r R_g != 0 likewise.
// A basis vector annihilated by a whole component is reported first; only
// when none exists is a general kernel vector returned.
ConditionResult check_condition(const GradedAlgebra& r, Side side,
                                std::optional<DegreeWindow> window = std::nullopt);

struct StrongGradingResult {
  enum class Status { StronglyGradedOnSupport, Fails, SupportNotClosed } status;
  std::optional<GroupElement> g, h;
};
StrongGradingResult check_strongly_graded(const GradedAlgebra& r);

struct NonDegeneracyResult {
  bool holds = true;
  std::optional<GroupElement> g;
  std::optional<GradedElement> r;
};
// Right: r R_{g^-1} != 0 for nonzero r in R_g. Left: R_{g^-1} r != 0.
NonDegeneracyResult check_non_degenerate(const GradedAlgebra& r, Side side);

struct PrimeResult {
  enum class Status { Prime, NotPrime, Unsupported } status;
  std::optional<GradedElement> a, b;  // a R_e b = 0 with a, b nonzero
  std::string reason;
};
// Primeness of R_e. Exhaustive over F_p when |R_e| <= budget; over Q the
// construction's declared flag (when R_e is all of R) or a small-coefficient
// witness search decides, otherwise Unsupported.
PrimeResult is_prime_principal(const GradedAlgebra& r, std::uint64_t budget);

// r in rR and r in Rr for every r, checked element by element; F_p only.
std::optional<bool> is_s_unital_exhaustive(const GradedAlgebra& r, std::uint64_t budget);

const char* to_string(StrongGradingResult::Status s);
const char* to_string(PrimeResult::Status s);

}  // namespace grl

#include "grl/algebra.hpp"

#include <algorithm>
#include <map>

#include "grl/error.hpp"

namespace grl {

SparseVector to_sparse(const Vector& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.push_back({i, v[i]});
  return out;
}

Vector to_dense(const SparseVector& v, const Field& field, std::size_t dim) {
  Vector out = zero_vector(field, dim);
  for (const auto& t : v) out.at(t.index) += t.coeff;
  return out;
}

namespace {

// Sparse product sum_k c_k (b_k * y) with y sparse.
SparseVector sparse_mul(const std::vector<std::vector<SparseVector>>& products, const SparseVector& x,
                        const SparseVector& y) {
  std::map<std::size_t, Scalar> acc;
  for (const auto& a : x) {
    for (const auto& b : y) {
      const Scalar ab = a.coeff * b.coeff;
      for (const auto& t : products[a.index][b.index]) {
        auto [it, inserted] = acc.try_emplace(t.index, ab * t.coeff);
        if (!inserted) it->second += ab * t.coeff;
      }
    }
  }
  SparseVector out;
  for (auto& [k, c] : acc)
    if (!c.is_zero()) out.push_back({k, std::move(c)});
  return out;
}

bool same(const SparseVector& a, const SparseVector& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].index != b[i].index || !(a[i].coeff == b[i].coeff)) return false;
  return true;
}

}  // namespace

Algebra::Algebra(Field field, std::vector<std::string> labels, std::vector<std::vector<SparseVector>> products,
                 std::optional<Vector> identity)
    : field_(field), labels_(std::move(labels)), products_(std::move(products)) {
  const std::size_t d = labels_.size();
  if (products_.size() != d) throw Error(ErrorCode::InvalidAlgebra, "structure table has wrong size");
  for (auto& row : products_) {
    if (row.size() != d) throw Error(ErrorCode::InvalidAlgebra, "structure table has wrong size");
    for (auto& entry : row) {
      std::sort(entry.begin(), entry.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
      SparseVector cleaned;
      for (auto& t : entry) {
        if (t.index >= d) throw Error(ErrorCode::InvalidAlgebra, "structure constant index out of range");
        if (!(t.coeff.field() == field_)) throw Error(ErrorCode::FieldMismatch, "structure constant field");
        if (!cleaned.empty() && cleaned.back().index == t.index) {
          cleaned.back().coeff += t.coeff;
        } else {
          cleaned.push_back(t);
        }
      }
      std::erase_if(cleaned, [](const Term& t) { return t.coeff.is_zero(); });
      entry = std::move(cleaned);
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        const SparseVector bk{{k, field_.one()}};
        const SparseVector bi{{i, field_.one()}};
        if (!same(sparse_mul(products_, products_[i][j], bk), sparse_mul(products_, bi, products_[j][k])))
          throw Error(ErrorCode::InvalidAlgebra, "not associative at (" + labels_[i] + "," + labels_[j] + "," +
                                                     labels_[k] + ")");
      }
    }
  }
  auto is_identity = [&](const Vector& u) {
    for (std::size_t i = 0; i < d; ++i) {
      const Vector bi = basis(i);
      if (!(mul(u, bi) == bi) || !(mul(bi, u) == bi)) return false;
    }
    return true;
  };
  if (identity) {
    if (identity->size() != d || !is_identity(*identity))
      throw Error(ErrorCode::InvalidAlgebra, "declared identity is not a two-sided identity");
    identity_ = std::move(identity);
  } else if (d > 0) {
    // u b_i = b_i and b_i u = b_i, linear in the coordinates of u.
    Matrix m;
    Vector rhs;
    for (std::size_t i = 0; i < d; ++i) {
      for (int side = 0; side < 2; ++side) {
        for (std::size_t k = 0; k < d; ++k) {
          Vector row = zero_vector(field_, d);
          for (std::size_t j = 0; j < d; ++j)
            for (const auto& t : side == 0 ? products_[j][i] : products_[i][j])
              if (t.index == k) row[j] += t.coeff;
          m.push_back(std::move(row));
          rhs.push_back(k == i ? field_.one() : field_.zero());
        }
      }
    }
    identity_ = solve(m, rhs, d, field_);
  }
}

Algebra Algebra::from_constants(Field field, std::size_t dim, const std::vector<StructureConstant>& constants,
                                std::vector<std::string> labels) {
  if (labels.empty())
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("b" + std::to_string(i));
  if (labels.size() != dim) throw Error(ErrorCode::InvalidAlgebra, "label count does not match dimension");
  std::vector<std::vector<SparseVector>> products(dim, std::vector<SparseVector>(dim));
  for (const auto& [i, j, k, c] : constants) {
    if (i >= dim || j >= dim || k >= dim) throw Error(ErrorCode::InvalidAlgebra, "structure constant index out of range");
    products[i][j].push_back({k, c});
  }
  return Algebra(field, std::move(labels), std::move(products));
}

Vector Algebra::mul(const Vector& x, const Vector& y) const {
  const std::size_t d = dim();
  if (x.size() != d || y.size() != d) throw Error(ErrorCode::DimensionMismatch, "algebra_mul operand length");
  Vector out = zero();
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar xy = x[i] * y[j];
      for (const auto& t : products_[i][j]) out[t.index] += xy * t.coeff;
    }
  }
  return out;
}

Vector Algebra::one() const {
  if (!identity_) throw Error(ErrorCode::NotUnital, "algebra has no identity");
  return *identity_;
}

std::vector<Vector> Algebra::spanning_set() const {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis(i));
  return out;
}

std::string Algebra::format(const Vector& x) const {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (!x[i].is_one()) out += x[i].to_string() + "*";
    out += labels_[i];
  }
  return out.empty() ? "0" : out;
}

bool Algebra::is_commutative() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      if (!same(products_[i][j], products_[j][i])) return false;
  return true;
}

Matrix Algebra::left_multiplication(const Vector& x) const {
  const std::size_t d = dim();
  Matrix m(d, Vector(d, field_.zero()));
  for (std::size_t j = 0; j < d; ++j) {
    const Vector col = mul(x, basis(j));
    for (std::size_t i = 0; i < d; ++i) m[i][j] = col[i];
  }
  return m;
}

Matrix Algebra::right_multiplication(const Vector& x) const {
  const std::size_t d = dim();
  Matrix m(d, Vector(d, field_.zero()));
  for (std::size_t j = 0; j < d; ++j) {
    const Vector col = mul(basis(j), x);
    for (std::size_t i = 0; i < d; ++i) m[i][j] = col[i];
  }
  return m;
}

Algebra& Algebra::set_split_idempotents(std::vector<Vector> idempotents) {
  if (idempotents.size() != dim()) throw Error(ErrorCode::InvalidAlgebra, "split data needs one idempotent per dimension");
  if (!is_commutative()) throw Error(ErrorCode::InvalidAlgebra, "split product must be commutative");
  Vector sum = zero();
  for (std::size_t i = 0; i < idempotents.size(); ++i) {
    if (!(mul(idempotents[i], idempotents[i]) == idempotents[i]) || grl::is_zero(idempotents[i]))
      throw Error(ErrorCode::InvalidAlgebra, "split data contains a non-idempotent");
    for (std::size_t j = i + 1; j < idempotents.size(); ++j)
      if (!grl::is_zero(mul(idempotents[i], idempotents[j])))
        throw Error(ErrorCode::InvalidAlgebra, "split idempotents are not orthogonal");
    sum += idempotents[i];
  }
  if (!identity_ || !(sum == *identity_)) throw Error(ErrorCode::InvalidAlgebra, "split idempotents do not sum to 1");
  split_ = std::move(idempotents);
  return *this;
}

Algebra Algebra::rebase(const std::vector<Vector>& new_basis, std::vector<std::string> labels) const {
  const std::size_t d = dim();
  if (new_basis.size() != d || labels.size() != d)
    throw Error(ErrorCode::DimensionMismatch, "rebase needs exactly dim() vectors and labels");
  if (rank(new_basis, d) != d) throw Error(ErrorCode::InvalidAlgebra, "new basis is not linearly independent");
  auto express = [&](const Vector& v) { return *coordinates(new_basis, v, field_); };
  std::vector<std::vector<SparseVector>> products(d, std::vector<SparseVector>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) products[i][j] = to_sparse(express(mul(new_basis[i], new_basis[j])));
  std::optional<Vector> id;
  if (identity_) id = express(*identity_);
  Algebra out(field_, std::move(labels), std::move(products), id);
  if (split_) {
    std::vector<Vector> split;
    for (const auto& e : *split_) split.push_back(express(e));
    out.set_split_idempotents(std::move(split));
  }
  out.prime_ = prime_;
  out.description_ = description_ + " (rebased)";
  return out;
}

Algebra Algebra::opposite() const {
  const std::size_t d = dim();
  std::vector<std::vector<SparseVector>> products(d, std::vector<SparseVector>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) products[i][j] = products_[j][i];
  Algebra out(field_, labels_, std::move(products), identity_);
  out.split_ = split_;
  out.prime_ = prime_;
  out.description_ = description_ + "^op";
  return out;
}

Algebra matrix_algebra(const Field& field, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidSpec, "matrix size must be positive");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  const std::size_t d = n * n;
  std::vector<std::vector<SparseVector>> products(d, std::vector<SparseVector>(d));
  Vector id = zero_vector(field, d);
  for (std::size_t i = 0; i < n; ++i) {
    id[i * n + i] = field.one();
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) products[i * n + j][j * n + l] = {{i * n + l, field.one()}};
  }
  Algebra a(field, labels, products, id);
  a.set_declared_prime(true).set_description("M" + std::to_string(n) + "(" + field.name() + ")");
  if (n == 1) a.set_split_idempotents({id});
  return a;
}

Algebra product_algebra(const Field& field, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidSpec, "product size must be positive");
  std::vector<std::string> labels;
  std::vector<std::vector<SparseVector>> products(n, std::vector<SparseVector>(n));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("e" + std::to_string(i + 1));
    products[i][i] = {{i, field.one()}};
  }
  Algebra a(field, labels, products, Vector(n, field.one()));
  std::vector<Vector> split;
  for (std::size_t i = 0; i < n; ++i) split.push_back(a.basis(i));
  a.set_split_idempotents(std::move(split));
  a.set_declared_prime(n == 1).set_description(field.name() + "^" + std::to_string(n));
  return a;
}

Algebra truncated_monomials(const Field& field, const std::vector<std::size_t>& bounds) {
  std::size_t d = 1;
  for (std::size_t b : bounds) {
    if (b == 0) throw Error(ErrorCode::InvalidSpec, "truncation bound must be positive");
    d *= b;
  }
  // Mixed-radix exponent vectors, first variable slowest.
  auto exponents = [&](std::size_t idx) {
    std::vector<std::size_t> e(bounds.size());
    for (std::size_t v = bounds.size(); v-- > 0;) {
      e[v] = idx % bounds[v];
      idx /= bounds[v];
    }
    return e;
  };
  auto var_name = [&](std::size_t v) {
    static const char* vars[] = {"x", "y", "z", "w"};
    if (bounds.size() == 1) return std::string("t");
    return v < 4 ? std::string(vars[v]) : "x" + std::to_string(v);
  };
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) {
    std::string label;
    const auto e = exponents(i);
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      label += var_name(v) + (e[v] > 1 ? "^" + std::to_string(e[v]) : "");
    }
    labels.push_back(label.empty() ? "1" : label);
  }
  std::vector<std::vector<SparseVector>> products(d, std::vector<SparseVector>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const auto a = exponents(i), b = exponents(j);
      std::size_t idx = 0;
      bool vanishes = false;
      for (std::size_t v = 0; v < bounds.size(); ++v) {
        const std::size_t s = a[v] + b[v];
        if (s >= bounds[v]) vanishes = true;
        idx = idx * bounds[v] + (vanishes ? 0 : s);
      }
      if (!vanishes) products[i][j] = {{idx, field.one()}};
    }
  }
  Algebra out(field, labels, products, unit_vector(field, d, 0));
  out.set_declared_prime(d == 1);
  if (d == 1) out.set_split_idempotents({unit_vector(field, 1, 0)});
  std::string desc = field.name() + "[";
  for (std::size_t v = 0; v < bounds.size(); ++v)
    desc += (v ? "," : "") + var_name(v) + "<" + std::to_string(bounds[v]);
  out.set_description(desc + "]");
  return out;
}

Algebra truncated_poly(const Field& field, std::size_t n) { return truncated_monomials(field, {n}); }

Algebra group_algebra(const Field& field, const Group& group) {
  const auto elems = group.elements();
  const std::size_t d = elems.size();
  std::vector<std::string> labels;
  for (const auto& g : elems) labels.push_back("u_" + group.format(g));
  std::vector<std::vector<SparseVector>> products(d, std::vector<SparseVector>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) products[i][j] = {{group.mul(elems[i], elems[j]).index(), field.one()}};
  Algebra out(field, labels, products, unit_vector(field, d, group.identity().index()));
  if (d == 1) out.set_split_idempotents({out.one()}).set_declared_prime(true);
  out.set_description(field.name() + "[" + group.name() + "]");
  return out;
}

Algebra upper_triangular(const Field& field, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidSpec, "matrix size must be positive");
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      cells.emplace_back(i, j);
      labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  const std::size_t d = cells.size();
  std::vector<std::vector<SparseVector>> products(d, std::vector<SparseVector>(d));
  Vector id = zero_vector(field, d);
  for (std::size_t a = 0; a < d; ++a) {
    if (cells[a].first == cells[a].second) id[a] = field.one();
    for (std::size_t b = 0; b < d; ++b) {
      if (cells[a].second != cells[b].first) continue;
      const auto target = std::make_pair(cells[a].first, cells[b].second);
      products[a][b] = {{static_cast<std::size_t>(std::find(cells.begin(), cells.end(), target) - cells.begin()),
                         field.one()}};
    }
  }
  Algebra out(field, labels, products, id);
  out.set_declared_prime(n == 1).set_description("T" + std::to_string(n) + "(" + field.name() + ")");
  if (n == 1) out.set_split_idempotents({id});
  return out;
}

Algebra triangular_truncated(const Field& field, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidSpec, "truncation must be positive");
  // (kind, k): kind 0 = E11, 1 = E12 t^k, 2 = E22 t^k; ordered by degree.
  std::vector<std::pair<int, std::size_t>> cells{{0, 0}, {2, 0}};
  for (std::size_t k = 1; k < n; ++k) {
    cells.emplace_back(1, k - 1);
    cells.emplace_back(2, k);
  }
  cells.emplace_back(1, n - 1);
  auto power = [](std::size_t k) { return k == 0 ? std::string() : k == 1 ? std::string("t") : "t^" + std::to_string(k); };
  std::vector<std::string> labels;
  for (const auto& [kind, k] : cells) labels.push_back((kind == 0 ? "E11" : kind == 1 ? "E12" : "E22") + power(k));
  auto find = [&](int kind, std::size_t k) -> std::optional<std::size_t> {
    if (k >= n) return std::nullopt;
    return static_cast<std::size_t>(std::find(cells.begin(), cells.end(), std::make_pair(kind, k)) - cells.begin());
  };
  const std::size_t d = cells.size();
  std::vector<std::vector<SparseVector>> products(d, std::vector<SparseVector>(d));
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      const auto [ka, ea] = cells[a];
      const auto [kb, eb] = cells[b];
      std::optional<std::size_t> target;
      if (ka == 0 && kb == 0) target = find(0, 0);
      if (ka == 0 && kb == 1) target = find(1, eb);
      if (ka == 1 && kb == 2) target = find(1, ea + eb);
      if (ka == 2 && kb == 2) target = find(2, ea + eb);
      if (target) products[a][b] = {{*target, field.one()}};
    }
  }
  Vector id = zero_vector(field, d);
  id[0] = field.one();
  id[1] = field.one();
  Algebra out(field, labels, products, id);
  out.set_declared_prime(false).set_description("Tri(" + field.name() + ",t<" + std::to_string(n) + ")");
  return out;
}

std::vector<Vector> center_of_algebra(const Algebra& a) {
  const std::size_t d = a.dim();
  Matrix m;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      Vector row = zero_vector(a.field(), d);
      bool any = false;
      for (std::size_t j = 0; j < d; ++j) {
        for (const auto& t : a.product(j, i))
          if (t.index == k) row[j] += t.coeff;
        for (const auto& t : a.product(i, j))
          if (t.index == k) row[j] -= t.coeff;
        any = any || !row[j].is_zero();
      }
      if (any) m.push_back(std::move(row));
    }
  }
  return kernel(m, d, a.field());
}

}  // namespace grl

#include "grl/linalg.hpp"

#include <utility>

#include "grl/error.hpp"

namespace grl {

Vector zero_vector(const Field& field, std::size_t n) { return Vector(n, field.zero()); }

Vector unit_vector(const Field& field, std::size_t n, std::size_t i) {
  Vector v = zero_vector(field, n);
  v.at(i) = field.one();
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vector operator+(const Vector& a, const Vector& b) {
  Vector out(a);
  return out += b;
}

Vector& operator+=(Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector lengths differ");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vector operator-(const Vector& a) {
  Vector out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(-x);
  return out;
}

Vector operator-(const Vector& a, const Vector& b) { return a + (-b); }

Vector operator*(const Scalar& s, const Vector& v) {
  Vector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(s * x);
  return out;
}

std::string format(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].to_string();
  }
  return out + ")";
}

Echelon row_echelon(Matrix m, std::size_t cols) {
  Echelon out;
  if (m.empty()) return out;
  for (const auto& row : m)
    if (row.size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged matrix");
  const Field field = m[0].empty() ? Field::rationals() : m[0][0].field();
  Scalar previous = field.one();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    const Scalar pivot = m[r][c];
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      const Scalar factor = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = (pivot * m[i][j] - factor * m[r][j]) / previous;
    }
    previous = pivot;
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m, std::size_t cols) { return row_echelon(m, cols).pivots.size(); }

namespace {

// Fills the pivot variables of `x` (free ones already set) from an echelon form.
void back_substitute(const Echelon& e, Vector& x, std::size_t cols, const Vector* rhs) {
  for (std::size_t k = e.rows.size(); k-- > 0;) {
    const std::size_t c = e.pivots[k];
    Scalar acc = rhs ? (*rhs)[k] : x[c] - x[c];
    for (std::size_t j = c + 1; j < cols; ++j)
      if (!e.rows[k][j].is_zero()) acc -= e.rows[k][j] * x[j];
    x[c] = acc / e.rows[k][c];
  }
}

}  // namespace

std::vector<Vector> kernel(const Matrix& m, std::size_t cols, const Field& field) {
  const Echelon e = row_echelon(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector x = unit_vector(field, cols, f);
    back_substitute(e, x, cols, nullptr);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b, std::size_t cols, const Field& field) {
  if (m.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length");
  Matrix aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i) {
    if (aug[i].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged matrix");
    aug[i].push_back(b[i]);
  }
  const Echelon e = row_echelon(std::move(aug), cols + 1);
  if (!e.pivots.empty() && e.pivots.back() == cols) return std::nullopt;
  Echelon coeffs;
  Vector rhs;
  for (std::size_t k = 0; k < e.rows.size(); ++k) {
    coeffs.rows.emplace_back(e.rows[k].begin(), e.rows[k].begin() + static_cast<std::ptrdiff_t>(cols));
    coeffs.pivots.push_back(e.pivots[k]);
    rhs.push_back(e.rows[k][cols]);
  }
  Vector x = zero_vector(field, cols);
  back_substitute(coeffs, x, cols, &rhs);
  return x;
}

std::optional<Vector> coordinates(const std::vector<Vector>& basis, const Vector& v, const Field& field) {
  Matrix m(v.size(), Vector{});
  for (std::size_t i = 0; i < v.size(); ++i)
    for (const auto& b : basis) m[i].push_back(b.at(i));
  return solve(m, v, basis.size(), field);
}

std::optional<Matrix> inverse(const Matrix& m, const Field& field) {
  const std::size_t n = m.size();
  if (rank(m, n) != n) return std::nullopt;
  Matrix columns;
  for (std::size_t j = 0; j < n; ++j) columns.push_back(*solve(m, unit_vector(field, n, j), n, field));
  Matrix out(n, Vector(n, field.zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = columns[j][i];
  return out;
}

Vector apply(const Matrix& m, const Vector& v) {
  Vector out;
  out.reserve(m.size());
  for (const auto& row : m) {
    if (row.size() != v.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape");
    Scalar acc = v.empty() ? Field::rationals().zero() : v[0] - v[0];
    for (std::size_t j = 0; j < v.size(); ++j) acc += row[j] * v[j];
    out.push_back(std::move(acc));
  }
  return out;
}

Matrix compose(const Matrix& a, const Matrix& b) {
  const std::size_t n = b.empty() ? 0 : b[0].size();
  Matrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector column;
      for (const auto& row : b) column.push_back(row[j]);
      out[i].push_back(grl::apply(Matrix{a[i]}, column)[0]);
    }
  }
  return out;
}

Matrix identity_matrix(const Field& field, std::size_t n) {
  Matrix out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(unit_vector(field, n, i));
  return out;
}

}  // namespace grl

#pragma once

#include <functional>
#include <set>
#include <string>

#include "grl/graded.hpp"

// Brute-force helpers shared by the unit tests.
namespace oracle {

// Calls f on every vector of F_p^dim.
inline void each_vector(const grl::Field& field, std::size_t dim, const std::function<void(const grl::Vector&)>& f) {
  const std::uint32_t p = field.characteristic();
  std::vector<std::uint32_t> digits(dim, 0);
  while (true) {
    grl::Vector v;
    for (auto d : digits) v.push_back(field.residue(d));
    f(v);
    std::size_t i = 0;
    while (i < dim && ++digits[i] == p) digits[i++] = 0;
    if (i == dim) return;
  }
}

// Every vector supported on the given coordinates.
inline void each_vector_on(const grl::Field& field, std::size_t dim, const std::vector<std::size_t>& coords,
                           const std::function<void(const grl::Vector&)>& f) {
  each_vector(field, coords.size(), [&](const grl::Vector& small) {
    grl::Vector v = grl::zero_vector(field, dim);
    for (std::size_t i = 0; i < coords.size(); ++i) v[coords[i]] = small[i];
    f(v);
  });
}

inline bool commutes_with_basis(const grl::Algebra& a, const grl::Vector& x) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.mul(x, a.basis(i)) != a.mul(a.basis(i), x)) return false;
  return true;
}

// Keyed by grl::format so results compare as sets.
inline std::set<std::string> central_idempotents(const grl::Algebra& a) {
  std::set<std::string> out;
  each_vector(a.field(), a.dim(), [&](const grl::Vector& x) {
    if (a.mul(x, x) == x && commutes_with_basis(a, x)) out.insert(grl::format(x));
  });
  return out;
}

}  // namespace oracle

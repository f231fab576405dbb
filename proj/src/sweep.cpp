#include <algorithm>

#include "grl/constructions.hpp"
#include "grl/error.hpp"
#include "grl/harness.hpp"

namespace grl {

namespace {

GroupElement lattice(std::vector<std::int64_t> c) { return GroupElement::lattice(std::move(c)); }

void group_rings(const SweepOptions& opt, std::vector<Instance>& out) {
  for (const auto& name : Group::builtin_names(opt.max_order))
    for (const auto& f : opt.fields) {
      if (!f.is_prime()) continue;
      out.push_back(make_ring_instance(f.name() + "[" + name + "]", GroupRing<Algebra>(product_algebra(f, 1),
                                                                                     Group::builtin(name))));
    }
}

void crossed_products(const SweepOptions& opt, std::vector<Instance>& out) {
  for (const auto& f : opt.fields) {
    if (!f.is_prime()) continue;
    for (std::uint32_t c = 1; c < f.characteristic(); ++c) {
      const Scalar sigma = f.residue(c);
      // Trivial action on F, sigma(a^i, a^j) = c when i + j wraps around.
      for (std::size_t n = 2; n <= opt.max_order; ++n) {
        const Group g = Group::cyclic(n);
        std::vector<std::tuple<GroupElement, GroupElement, Vector>> cocycle;
        if (!sigma.is_one())
          for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = n - i; j < n; ++j)
              cocycle.emplace_back(GroupElement::finite(i), GroupElement::finite(j), Vector{sigma});
        out.push_back(make_ring_instance(f.name() + "*C" + std::to_string(n) + " carry " + sigma.to_string(),
                                         make_crossed_product(product_algebra(f, 1), g, {}, cocycle)));
      }
      // F x F with the swap action of C2 and sigma(a, a) = (c, c).
      const Group c2 = Group::cyclic(2);
      const GroupElement a = c2.parse_label("a");
      const Matrix swap{{f.zero(), f.one()}, {f.one(), f.zero()}};
      out.push_back(make_ring_instance(f.name() + "x" + f.name() + "*C2 swap " + sigma.to_string(),
                                       make_crossed_product(product_algebra(f, 2), c2, {{a, swap}},
                                                            {{a, a, Vector{sigma, sigma}}})));
    }
  }
}

std::vector<std::vector<std::int64_t>> single(const std::vector<std::int64_t>& d) {
  std::vector<std::vector<std::int64_t>> out;
  for (auto x : d) out.push_back({x});
  return out;
}

void zk_graded(const SweepOptions& opt, std::vector<Instance>& out) {
  const Group z = Group::free_abelian(1);
  for (const auto& f : opt.fields) {
    if (!f.is_prime()) {
      for (std::size_t n = 1; n <= std::min<std::size_t>(opt.max_dim, 4); ++n) {
        Algebra a = product_algebra(f, n);
        out.push_back(make_graded_instance(f.name() + "^" + std::to_string(n) + " trivially Z-graded",
                                           GradedAlgebra(a, z, std::vector<GroupElement>(n, lattice({0})))));
        out.push_back(make_graded_instance(
            f.name() + "^" + std::to_string(n) + " trivially Z^2-graded",
            GradedAlgebra(a, Group::free_abelian(2), std::vector<GroupElement>(n, lattice({0, 0})))));
      }
      continue;
    }
    const std::string F = f.name();
    for (std::size_t n = 2; n <= opt.max_dim; ++n) {
      std::vector<std::int64_t> d;
      for (std::size_t i = 0; i < n; ++i) d.push_back(static_cast<std::int64_t>(i));
      out.push_back(make_graded_instance(F + "[t]/(t^" + std::to_string(n) + ")",
                                         monoid_to_group_regrade(truncated_poly(f, n), 1, single(d))));
    }
    for (std::size_t b1 = 2; b1 <= opt.max_dim; ++b1)
      for (std::size_t b2 = b1; b1 * b2 <= opt.max_dim; ++b2) {
        const Algebra a = truncated_monomials(f, {b1, b2});
        std::vector<std::vector<std::int64_t>> two, total;
        for (std::size_t i = 0; i < a.dim(); ++i) {
          const auto x = static_cast<std::int64_t>(i / b2), y = static_cast<std::int64_t>(i % b2);
          two.push_back({x, y});
          total.push_back({x + y});
        }
        const std::string base = F + "[x,y]/(x^" + std::to_string(b1) + ",y^" + std::to_string(b2) + ")";
        out.push_back(make_graded_instance(base + " Z^2", monoid_to_group_regrade(a, 2, two)));
        out.push_back(make_graded_instance(base + " total degree", monoid_to_group_regrade(a, 1, total)));
      }
    for (std::size_t n = 1; n <= 3 && 2 * n + 1 <= opt.max_dim; ++n) {
      std::vector<std::int64_t> d{0, 0};
      for (std::size_t k = 1; k < n; ++k) {
        d.push_back(static_cast<std::int64_t>(k));
        d.push_back(static_cast<std::int64_t>(k));
      }
      d.push_back(static_cast<std::int64_t>(n));
      const GradedAlgebra r = monoid_to_group_regrade(triangular_truncated(f, n), 1, single(d));
      const std::string name = "triangular " + F + " t^" + std::to_string(n);
      out.push_back(make_graded_instance(name, r));
      out.push_back(make_graded_instance(name + " opposite", opposite(r)));
    }
    {
      const Algebra m = matrix_algebra(f, 2);
      std::vector<GroupElement> d;
      for (std::int64_t i = 0; i < 2; ++i)
        for (std::int64_t j = 0; j < 2; ++j) d.push_back(lattice({i - j}));
      out.push_back(make_graded_instance("M2(" + F + ") by i-j", GradedAlgebra(m, z, d)));
    }
    for (std::int64_t n = 2; n <= 3; ++n) {
      const Algebra t = upper_triangular(f, static_cast<std::size_t>(n));
      if (t.dim() > opt.max_dim) continue;
      std::vector<GroupElement> d;
      for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = i; j < n; ++j) d.push_back(lattice({j - i}));
      out.push_back(make_graded_instance("T" + std::to_string(n) + "(" + F + ") by j-i", GradedAlgebra(t, z, d)));
    }
  }
}

}  // namespace

std::vector<std::string> sweep_families() { return {"crossed_products", "group_rings", "zk_graded"}; }

std::vector<Instance> sweep_corpus(const SweepOptions& options) {
  SweepOptions opt = options;
  if (opt.families.empty()) opt.families = sweep_families();
  if (opt.fields.empty()) opt.fields = {Field::prime(2), Field::prime(3), Field::prime(5)};
  std::vector<Instance> out;
  for (const auto& family : opt.families) {
    if (family == "group_rings") group_rings(opt, out);
    else if (family == "crossed_products") crossed_products(opt, out);
    else if (family == "zk_graded") zk_graded(opt, out);
    else throw Error(ErrorCode::InvalidSpec, "unknown sweep family '" + family + "'");
  }
  std::stable_sort(out.begin(), out.end(), [](const Instance& a, const Instance& b) { return a.name < b.name; });
  return out;
}

VerificationReport corpus_sweep(const SweepOptions& options, const VerifyOptions& verify) {
  VerificationReport rep;
  rep.title = "corpus sweep";
  for (const auto& inst : sweep_corpus(options)) rep.instances.push_back(verify_theorems(inst, verify));
  return rep;
}

}  // namespace grl

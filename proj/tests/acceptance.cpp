// Acceptance run: one PASS/FAIL line per criterion.
// Usage: acceptance <path-to-grl> <scratch-dir>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "grl/constructions.hpp"
#include "grl/error.hpp"
#include "grl/harness.hpp"

using namespace grl;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string grl_path;
std::string scratch;

const std::vector<Field> kFields{Field::prime(2), Field::prime(3), Field::prime(5), Field::rationals()};

Outcome infinite_dihedral() {
  const auto start = Clock::now();
  Outcome o;
  const Instance inst = fixture_instance("dinf-q4");
  const GradedAlgebra& r = *inst.graded;
  const Algebra& A = r.algebra();
  const Group& G = r.group();
  const Field q = r.field();
  const Vector one = A.one(), a = A.basis(1), b = A.basis(2), c = A.basis(3);
  const Scalar half = q.parse("1/2");
  const Vector f = half * one + half * b + half * c;
  // Back to the standard basis of Q^4: 1 = (1,1,1,1), b = (1,-1,0,0), c = (0,0,1,-1).
  const Vector standard = half * Vector{q.one(), q.one(), q.one(), q.one()} +
                          half * Vector{q.one(), -q.one(), q.zero(), q.zero()} +
                          half * Vector{q.zero(), q.zero(), q.one(), -q.one()};
  o.require(standard == Vector{q.one(), q.zero(), q.one(), q.zero()}, "f is not (1,0,1,0)");
  const GradedElement fe = r.element(f);
  o.require(A.mul(f, f) == f, "f^2 != f");
  o.require(is_central(r, fe), "f not central");
  o.require(G.format(support(r, fe)) == "{e, s, t}", "Supp(f) = " + G.format(support(r, fe)));
  o.require(!support_group(r, fe, 100), "support group within cap 100");
  for (Side side : {Side::Left, Side::Right}) {
    const ConditionResult cr = check_condition(r, side);
    o.require(!cr.holds && G.format(cr.witness->g) == "s" && r.dense(cr.witness->r) == c,
              std::string("condition ") + to_string(side) + " witness is not (s, c)");
  }
  o.require(A.mul(b, b) == half * (one + a), "b^2");
  o.require(A.mul(c, c) == half * (one - a), "c^2");
  o.require(is_zero(A.mul(b, c)), "bc");
  const double t = seconds_since(start);
  o.require(t < 1.0, "took " + std::to_string(t) + " s");
  if (o.pass) o.detail = "exact in " + std::to_string(t) + " s";
  return o;
}

Outcome matrix_over_z() {
  Outcome o;
  const Instance inst = fixture_instance("m2-z");
  const auto& ring = *inst.ring;
  const auto& f = inst.ring_elements.front().second;
  o.require(ring.is_idempotent(f), "f not idempotent");
  o.require(!ring.is_central(f), "f central");
  o.require(ring.support(f) == ElementSet{GroupElement::lattice({0}), GroupElement::lattice({1})}, "Supp(f)");
  for (std::size_t cap : {2, 3, 4, 8, 16, 100, 1000, 10000})
    o.require(!ring.support_group(f, cap), "support group fits in cap " + std::to_string(cap));
  if (o.pass) o.detail = "caps 2..10000 all exceeded";
  return o;
}

Outcome s3_subgroup() {
  Outcome o;
  const Instance inst = fixture_instance("s3-k");
  const GradedAlgebra& r = *inst.graded;
  const Group& G = r.group();
  const GradedElement f = r.element(inst.elements.front().second);
  o.require(!f.is_zero() && is_idempotent(r, f) && is_central(r, f), "f is not a nonzero central idempotent");
  const ElementSet k{G.identity(), G.parse_label("(12)")};
  const auto sg = support_group(r, f, 1000);
  o.require(sg && *sg == k && sg->size() == 2, "support group is not {e,(12)}");
  try {
    quotient_group(G, k);
    o.require(false, "quotient_group accepted K");
  } catch (const Error& e) {
    o.require(e.code() == ErrorCode::NotNormal, std::string("wrong error ") + e.what());
  }
  return o;
}

Outcome triangular() {
  Outcome o;
  const Instance inst = fixture_instance("triangular-z");
  const GradedAlgebra& r = *inst.graded;
  o.require(r.algebra().labels().back() == "E12t^3", "truncation is not N = 4");
  const ConditionResult left = check_condition(r, Side::Left, inst.window);
  o.require(!left.holds, "condition (i) holds");
  if (!left.holds) {
    o.require(r.group().format(left.witness->g) == "1", "witness g = " + r.group().format(left.witness->g));
    o.require(r.group().format(left.witness->h) == "0", "witness r not in R_0");
    o.require(r.dense(left.witness->r) == r.algebra().basis(0), "witness r = " + r.format(left.witness->r));
    // R_1 r = 0 directly.
    for (std::size_t i : r.component_basis(GroupElement::lattice({1})))
      o.require(is_zero(r.algebra().mul(r.algebra().basis(i), r.algebra().basis(0))), "R_1 E11 != 0");
  }
  o.require(check_condition(r, Side::Right, inst.window).holds, "condition (ii) fails inside the truncation");
  return o;
}

bool in_principal(const GradedAlgebra& r, const GradedElement& f) {
  for (const auto& g : support(r, f))
    if (g != r.group().identity()) return false;
  return true;
}

Outcome torsion_free_sweep() {
  const auto start = Clock::now();
  Outcome o;
  SweepOptions opt;
  opt.families = {"zk_graded"};
  opt.max_dim = 8;
  opt.fields = kFields;
  std::size_t instances = 0, idempotents = 0;
  const VerificationReport rep = corpus_sweep(opt);
  for (const auto& inst : sweep_corpus(opt)) {
    const GradedAlgebra& r = *inst.graded;
    if (r.group().kind() != GroupKind::FreeAbelian) continue;
    ++instances;
    std::vector<GradedElement> ids;
    try {
      ids = central_idempotents(r, 1000000);
    } catch (const Error& e) {
      o.require(false, inst.name + ": " + e.what());
      continue;
    }
    for (const auto& f : ids) {
      ++idempotents;
      o.require(in_principal(r, f), inst.name + ": " + r.format(f) + " outside R_e");
    }
  }
  o.require(rep.failures() == 0, std::to_string(rep.failures()) + " report failures");
  const double t = seconds_since(start);
  o.require(t < 60.0, "took " + std::to_string(t) + " s");
  if (o.pass)
    o.detail = std::to_string(idempotents) + " idempotents in " + std::to_string(instances) + " instances, all in R_e, " +
               std::to_string(t) + " s";
  return o;
}

std::vector<Instance> full_corpus() {
  SweepOptions opt;
  opt.max_order = 8;
  opt.max_dim = 8;
  opt.fields = kFields;
  return sweep_corpus(opt);
}

Outcome annihilator_sweep(const std::vector<Instance>& corpus) {
  Outcome o;
  std::size_t instances = 0, idempotents = 0;
  for (const auto& inst : corpus) {
    const GradedAlgebra& r = *inst.graded;
    if (!check_condition(r, Side::Left).holds && !check_condition(r, Side::Right).holds) continue;
    ++instances;
    try {
      for (const auto& f : central_idempotents(r, 1000000)) {
        if (f.is_zero()) continue;
        ++idempotents;
        o.require(support_group(r, f, 1000).has_value(), inst.name + ": " + r.format(f) + " has unbounded support group");
      }
    } catch (const Error& e) {
      o.require(false, inst.name + ": " + e.what());
    }
  }
  if (o.pass) o.detail = std::to_string(idempotents) + " idempotents in " + std::to_string(instances) + " instances, all finite";
  return o;
}

Outcome oracle_equivalence(const std::vector<Instance>& corpus) {
  Outcome o;
  std::size_t rings = 0, probes = 0, centers = 0;
  for (const auto& inst : corpus) {
    const GradedAlgebra& r = *inst.graded;
    const Algebra& a = r.algebra();
    for (const auto& z : center_of_algebra(a)) {
      ++centers;
      for (std::size_t i = 0; i < a.dim(); ++i)
        o.require(a.mul(z, a.basis(i)) == a.mul(a.basis(i), z), inst.name + ": center vector fails to commute");
    }
    if (!inst.ring) continue;
    ++rings;
    const auto& ring = *inst.ring;
    std::vector<Vector> test;
    try {
      for (const auto& f : central_idempotents(r, 1000000)) test.push_back(r.dense(f));
    } catch (const Error& e) {
      o.require(false, inst.name + ": " + e.what());
    }
    for (std::size_t i = 0; i < r.dim(); ++i) test.push_back(a.basis(i));
    for (const auto& v : test) {
      ++probes;
      o.require(is_central(r, r.element(v)) == ring.is_central(from_graded_coordinates(ring, v)),
                inst.name + ": centrality disagrees at " + a.format(v));
    }
  }
  if (o.pass)
    o.detail = std::to_string(rings) + " finite-G rings, " + std::to_string(probes) + " probes, " +
               std::to_string(centers) + " center vectors verified";
  return o;
}

Outcome construction_laws() {
  Outcome o;
  std::size_t fixtures = 0, total = 0;
  for (const auto& name : fixture_names()) {
    const Instance inst = fixture_instance(name);
    ++fixtures;
    const LawTally phi = phi_laws(inst, 500, 20240601);
    const LawTally dorroh = dorroh_laws(inst, 500, 20240601, 1000000);
    o.require(phi.checks >= 500 && phi.failures == 0,
              name + ": phi " + std::to_string(phi.failures) + "/" + std::to_string(phi.checks) +
                  (phi.messages.empty() ? "" : " " + phi.messages.front()));
    o.require(dorroh.checks >= 500 && dorroh.failures == 0,
              name + ": dorroh " + std::to_string(dorroh.failures) + "/" + std::to_string(dorroh.checks) +
                  (dorroh.messages.empty() ? "" : " " + dorroh.messages.front()));
    total += phi.checks + dorroh.checks;
    if (inst.graded && inst.graded->group().is_abelian()) {
      const LawTally c = componentwise_centrality(inst, 500, 20240601);
      o.require(c.checks >= 500 && c.failures == 0, name + ": componentwise centrality");
      total += c.checks;
    }
  }
  if (o.pass) o.detail = std::to_string(total) + " exact checks over " + std::to_string(fixtures) + " fixtures";
  return o;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism() {
  Outcome o;
  std::string runs[2];
  for (int i = 0; i < 2; ++i) {
    const std::string path = scratch + "/sweep_" + std::to_string(i) + ".json";
    const std::string cmd = "\"" + grl_path + "\" sweep --family group_rings --family crossed_products --family zk_graded "
                            "--max-order 6 --field F2 --field F3 --json \"" + path + "\" > /dev/null";
    const int rc = std::system(cmd.c_str());
    o.require(rc == 0, "grl sweep exited with " + std::to_string(rc));
    runs[i] = slurp(path);
  }
  o.require(!runs[0].empty(), "empty report");
  o.require(runs[0] == runs[1], "reports differ");
  if (o.pass) o.detail = std::to_string(runs[0].size()) + " identical bytes";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <grl> <scratch-dir>\n";
    return 3;
  }
  grl_path = argv[1];
  scratch = argv[2];
  const std::vector<Instance> corpus = full_corpus();
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria{
      {1, infinite_dihedral},
      {2, matrix_over_z},
      {3, s3_subgroup},
      {4, triangular},
      {5, torsion_free_sweep},
      {6, [&] { return annihilator_sweep(corpus); }},
      {7, [&] { return oracle_equivalence(corpus); }},
      {8, construction_laws},
      {9, determinism},
  };
  int failed = 0;
  for (const auto& [n, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL");
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << "\n";
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}

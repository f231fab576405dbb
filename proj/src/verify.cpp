#include <algorithm>
#include <sstream>

#include "grl/constructions.hpp"
#include "grl/error.hpp"
#include "grl/harness.hpp"

namespace grl {

using json = nlohmann::ordered_json;

namespace {

const char* yes(bool b) { return b ? "yes" : "no"; }

std::string describe(const GradedAlgebra& r, Side side, const ConditionResult& c) {
  if (c.holds) return "holds";
  const auto& w = *c.witness;
  const Group& g = r.group();
  const std::string comp = "R_" + g.format(w.g);
  const std::string elt = r.format(w.r);
  return "fails: " + (side == Side::Left ? comp + " r = 0" : "r " + comp + " = 0") + " for r = " + elt + " in R_" +
         g.format(w.h);
}

std::string closure_text(const Group& g, const std::optional<ElementSet>& s, std::size_t cap) {
  return s ? g.format(*s) : "exceeds cap " + std::to_string(cap);
}

const char* const kTorsionFreeClaim =
    "torsion-free abelian grading: every central idempotent lies in the principal component";

struct Conclusion {
  std::string id;
  std::string claim;
};

// One aggregated check: every verdict must be finite, and inside the
// principal component when the group is torsion-free.
Check finiteness_check(const Conclusion& c, const Group& g, const std::vector<IdempotentVerdict>& verdicts,
                       const std::vector<ElementSet>& supports) {
  Check out{c.id, c.claim, true, ""};
  std::size_t bad = 0;
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    bool ok = verdicts[i].finite;
    if (g.is_torsion_free() && g.is_abelian())
      ok = ok && std::all_of(supports[i].begin(), supports[i].end(), [&](const auto& x) { return x == g.identity(); });
    if (!ok) {
      if (bad++ == 0) out.observed = "counterexample " + verdicts[i].element + "; ";
      out.pass = false;
    }
  }
  out.observed += std::to_string(verdicts.size() - bad) + "/" + std::to_string(verdicts.size()) +
                  " nonzero central idempotents conform";
  return out;
}

void append_laws(const Instance& inst, const VerifyOptions& opt, InstanceReport& rep) {
  if (inst.dorroh) {
    const LawTally t = dorroh_laws(inst, opt.law_samples, opt.seed, opt.budget);
    rep.checks.push_back({"dorroh_laws",
                          "the unitization is a unital ring, psi is an injective homomorphism, and psi preserves and "
                          "reflects centrality, idempotency and support groups",
                          t.failures == 0,
                          std::to_string(t.checks) + " checks" + (t.messages.empty() ? "" : "; " + t.messages.front())});
  }
  if (inst.phi) {
    const LawTally t = phi_laws(inst, opt.law_samples, opt.seed);
    rep.checks.push_back({"phi_laws",
                          "phi into R[G] is an injective identity-preserving homomorphism with Supp(phi(r)) = Supp(r)",
                          t.failures == 0,
                          std::to_string(t.checks) + " checks" + (t.messages.empty() ? "" : "; " + t.messages.front())});
  }
}

InstanceReport ring_only_report(const Instance& inst, const VerifyOptions& opt) {
  const auto& ring = *inst.ring;
  const Group& g = ring.group();
  InstanceReport rep;
  rep.name = inst.name;
  rep.kind = to_string(inst.kind);
  rep.group = g.name();
  rep.field = ring.coefficients().field().name();
  rep.dim = ring.coefficients().dim();
  rep.hypotheses = {{"abelian", yes(g.is_abelian())},
                    {"torsion_free", yes(g.is_torsion_free())},
                    {"homogeneous_units", "yes"}};
  rep.enumeration = "unavailable";
  rep.enumeration_detail = "central idempotents are enumerated over finite groups only";
  for (const auto& [name, x] : inst.ring_elements) {
    const auto sg = ring.support_group(x, opt.cap);
    rep.elements.push_back({name, ring.format(x), ring.is_idempotent(x), ring.is_central(x),
                            g.format(ring.support(x)), closure_text(g, sg, opt.cap)});
  }
  rep.note = "no enumeration; element facts only";
  append_laws(inst, opt, rep);
  return rep;
}

}  // namespace

InstanceReport verify_theorems(const Instance& inst, const VerifyOptions& opt) {
  if (!inst.graded) {
    if (!inst.ring) throw Error(ErrorCode::InvalidSpec, "empty instance");
    return ring_only_report(inst, opt);
  }
  const GradedAlgebra& r = *inst.graded;
  const Group& g = r.group();
  InstanceReport rep;
  rep.name = inst.name;
  rep.kind = to_string(inst.kind);
  rep.group = g.name();
  rep.field = r.field().name();
  rep.dim = r.dim();

  const std::optional<DegreeWindow> window = g.kind() == GroupKind::FreeAbelian ? inst.window : std::nullopt;
  const ConditionResult left = check_condition(r, Side::Left, window);
  const ConditionResult right = check_condition(r, Side::Right, window);
  const StrongGradingResult strong = check_strongly_graded(r);
  const bool unital = r.unit().has_value();
  const NonDegeneracyResult nd_right = check_non_degenerate(r, Side::Right);
  const NonDegeneracyResult nd_left = check_non_degenerate(r, Side::Left);
  const PrimeResult prime = is_prime_principal(r, opt.budget);
  const bool ring_kind = inst.kind != Instance::Kind::Graded;

  auto nd_text = [&](const NonDegeneracyResult& n) {
    return n.holds ? std::string("holds") : "fails at g = " + g.format(*n.g) + " with r = " + r.format(*n.r);
  };
  std::string prime_text = to_string(prime.status);
  if (prime.a) prime_text += ": a = " + r.format(*prime.a) + ", b = " + r.format(*prime.b);
  else if (!prime.reason.empty()) prime_text += " (" + prime.reason + ")";
  std::string strong_text = to_string(strong.status);
  if (strong.g) strong_text += " at (" + g.format(*strong.g) + ", " + g.format(*strong.h) + ")";

  rep.hypotheses = {
      {"abelian", yes(g.is_abelian())},
      {"torsion_free", yes(g.is_torsion_free())},
      {"support", g.format(ElementSet(r.support().begin(), r.support().end()))},
      {"condition_left", describe(r, Side::Left, left)},
      {"condition_right", describe(r, Side::Right, right)},
      {"strong_grading", strong_text},
      {"unital", yes(unital)},
      {"s_unital", yes(unital)},
      {"non_degenerate_right", nd_text(nd_right)},
      {"non_degenerate_left", nd_text(nd_left)},
      {"prime_principal", prime_text},
      {"homogeneous_units", yes(ring_kind)},
  };
  if (window) rep.hypotheses.emplace_back("degree_window", "total degree <= " + std::to_string(window->max_total_degree));

  std::vector<Conclusion> conclusions;
  if (g.is_abelian())
    conclusions.push_back({"abelian_torsion",
                           "abelian grading: every nonzero central idempotent has finite support group inside the "
                           "torsion subgroup"});
  if (g.is_abelian() && g.is_torsion_free())
    conclusions.push_back({"torsion_free_principal", kTorsionFreeClaim});
  if (left.holds || right.holds)
    conclusions.push_back({"annihilator_conditions",
                           "no component annihilates a nonzero homogeneous element on one side: every nonzero "
                           "central idempotent has finite support group"});
  if (strong.status == StrongGradingResult::Status::StronglyGradedOnSupport && unital)
    conclusions.push_back({"strongly_graded", "s-unital strongly graded ring: finite support groups"});
  if (ring_kind)
    conclusions.push_back({"crossed_product", "crossed product with invertible homogeneous units: finite support groups"});
  if ((nd_right.holds || nd_left.holds) && prime.status == PrimeResult::Status::Prime)
    conclusions.push_back({"nondegenerate_prime",
                           "non-degenerate grading with prime principal component: finite support groups"});
  if (inst.kind == Instance::Kind::GroupRing)
    conclusions.push_back({"group_ring", "group ring over a unital ring: finite support groups"});
  for (const auto& c : conclusions) rep.applicable.push_back(c.id);

  // Post-hoc center check.
  {
    const auto center = center_of_algebra(r.algebra());
    bool ok = true;
    for (const auto& z : center) {
      for (std::size_t i = 0; i < r.dim() && ok; ++i) {
        const Vector b = r.algebra().basis(i);
        ok = r.algebra().mul(z, b) == r.algebra().mul(b, z);
      }
    }
    rep.checks.push_back({"center_commutes", "every center basis vector commutes with every basis element", ok,
                          "center dimension " + std::to_string(center.size())});
  }

  std::vector<GradedElement> idempotents;
  try {
    idempotents = central_idempotents(r, opt.budget);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::BudgetExceeded) rep.enumeration = "budget exceeded";
    else if (e.code() == ErrorCode::Unsupported) rep.enumeration = "unsupported";
    else throw;
    rep.enumeration_detail = e.what();
  }

  std::vector<ElementSet> supports;
  for (const auto& f : idempotents) {
    if (f.is_zero()) continue;
    const auto sg = support_group(r, f, opt.cap);
    supports.push_back(support(r, f));
    rep.idempotents.push_back({r.format(f), g.format(supports.back()), closure_text(g, sg, opt.cap), sg.has_value()});
  }
  if (rep.enumeration == "complete") {
    rep.enumeration_detail = std::to_string(idempotents.size()) + " central idempotents";
    for (const auto& c : conclusions) {
      if (c.id == "torsion_free_principal") continue;
      Check check = finiteness_check(c, g, rep.idempotents, supports);
      if (c.id == "abelian_torsion") {
        for (const auto& s : supports)
          for (const auto& x : s)
            if (!torsion_check(g, x, opt.cap)) {
              check.pass = false;
              check.observed += "; " + g.format(x) + " has infinite order";
            }
      }
      rep.checks.push_back(std::move(check));
      if (c.id == "annihilator_conditions") {
        Check fc{"fc_support_group", "support groups of nonzero central idempotents are FC-groups", true, ""};
        std::size_t classes = 0;
        for (const auto& s : supports) {
          const auto h = subgroup_closure(g, s, opt.cap);
          if (!h) {
            fc.pass = false;
            continue;
          }
          for (const auto& x : *h) {
            ++classes;
            if (conjugacy_class_within(g, *h, x).size() > h->size()) fc.pass = false;
          }
        }
        fc.observed = std::to_string(classes) + " conjugacy classes inspected";
        rep.checks.push_back(std::move(fc));
      }
    }
    if (g.is_abelian() && g.is_torsion_free()) {
      Check a{"torsion_free_principal", kTorsionFreeClaim, true, ""};
      std::size_t inside = 0;
      for (const auto& f : idempotents) {
        const ElementSet s = support(r, f);
        if (std::all_of(s.begin(), s.end(), [&](const auto& x) { return x == g.identity(); })) ++inside;
        else if (a.pass) {
          a.pass = false;
          a.observed = "counterexample " + r.format(f) + "; ";
        }
      }
      a.observed += std::to_string(inside) + "/" + std::to_string(idempotents.size()) + " in R_e";
      rep.checks.push_back(std::move(a));
    }
    if (g.is_abelian()) {
      Check c{"componentwise_central", "abelian grading: components of a central element are central", true, ""};
      std::size_t count = 0;
      for (const auto& f : idempotents)
        for (const auto& x : support(r, f)) {
          ++count;
          if (!is_central(r, component(r, f, x))) {
            c.pass = false;
            c.observed = "component " + g.format(x) + " of " + r.format(f) + " is not central; ";
          }
        }
      c.observed += std::to_string(count) + " components checked";
      rep.checks.push_back(std::move(c));

      Check p{"unitization_embedding",
              "Dorroh unitization followed by the embedding into D[G] keeps central idempotents central with the "
              "same support",
              true, ""};
      const DorrohRing d(r);
      const auto target = phi_target(d);
      std::size_t n = 0;
      for (const auto& f : idempotents) {
        if (f.is_zero()) continue;
        ++n;
        const auto image = embed_phi(d, d.psi(r.dense(f)));
        if (!target.is_central(image) || !target.is_idempotent(image) || target.support(image) != support(r, f)) {
          p.pass = false;
          p.observed = "fails for " + r.format(f) + "; ";
        }
      }
      p.observed += std::to_string(n) + " idempotents pushed through";
      rep.checks.push_back(std::move(p));
    }
    if (inst.ring) {
      const auto& ring = *inst.ring;
      Check o{"centrality_oracle", "group-ring centrality agrees with centrality in the graded form", true, ""};
      std::vector<Vector> probes;
      for (const auto& f : idempotents) probes.push_back(r.dense(f));
      for (std::size_t i = 0; i < r.dim(); ++i) probes.push_back(r.algebra().basis(i));
      for (std::size_t i = 0; i < r.dim(); ++i)
        for (std::size_t j = i + 1; j < r.dim() && probes.size() < idempotents.size() + r.dim() + 64; ++j)
          probes.push_back(r.algebra().basis(i) + r.algebra().basis(j));
      std::size_t central = 0;
      for (const auto& v : probes) {
        const bool a = is_central(r, r.element(v));
        const bool b = ring.is_central(from_graded_coordinates(ring, v));
        central += a;
        if (a != b) {
          o.pass = false;
          o.observed = "disagreement at " + r.algebra().format(v) + "; ";
        }
      }
      o.observed += std::to_string(probes.size()) + " probes, " + std::to_string(central) + " central";
      rep.checks.push_back(std::move(o));
    }
  }

  append_laws(inst, opt, rep);

  for (const auto& [name, v] : inst.elements) {
    const GradedElement x = r.element(v);
    rep.elements.push_back({name, r.format(x), is_idempotent(r, x), is_central(r, x), g.format(support(r, x)),
                            closure_text(g, support_group(r, x, opt.cap), opt.cap)});
  }

  if (conclusions.empty() && rep.enumeration != "complete") {
    rep.note = "no theorem applies; enumeration " + rep.enumeration;
  } else if (conclusions.empty()) {
    std::size_t unbounded = 0;
    for (const auto& v : rep.idempotents) unbounded += !v.finite;
    rep.note = "no theorem applies; observed " + std::to_string(unbounded) + " nonzero central idempotent(s) whose "
               "support group exceeds the cap";
  }
  return rep;
}

std::size_t InstanceReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

json InstanceReport::to_json() const {
  json j;
  j["name"] = name;
  j["kind"] = kind;
  j["group"] = group;
  j["field"] = field;
  j["dim"] = dim;
  json h = json::object();
  for (const auto& [k, v] : hypotheses) h[k] = v;
  j["hypotheses"] = h;
  j["applicable"] = applicable;
  j["enumeration"] = {{"status", enumeration}, {"detail", enumeration_detail}};
  json ids = json::array();
  for (const auto& v : idempotents)
    ids.push_back({{"element", v.element}, {"support", v.support}, {"support_group", v.support_group}, {"finite", v.finite}});
  j["central_idempotents"] = ids;
  json els = json::array();
  for (const auto& e : elements)
    els.push_back({{"name", e.name},
                   {"value", e.value},
                   {"idempotent", e.idempotent},
                   {"central", e.central},
                   {"support", e.support},
                   {"support_group", e.support_group}});
  j["elements"] = els;
  json cs = json::array();
  for (const auto& c : checks)
    cs.push_back({{"id", c.id}, {"claim", c.claim}, {"status", c.pass ? "PASS" : "FAIL"}, {"observed", c.observed}});
  j["checks"] = cs;
  j["note"] = note;
  return j;
}

std::string InstanceReport::to_text() const {
  std::ostringstream out;
  out << "== " << name << " (" << kind << ", " << field << ", dim " << dim << ", graded by " << group << ")\n";
  for (const auto& [k, v] : hypotheses) out << "  " << k << ": " << v << "\n";
  out << "  applicable: ";
  if (applicable.empty()) out << "none";
  for (std::size_t i = 0; i < applicable.size(); ++i) out << (i ? ", " : "") << applicable[i];
  out << "\n  enumeration: " << enumeration;
  if (!enumeration_detail.empty()) out << " (" << enumeration_detail << ")";
  out << "\n";
  for (const auto& v : idempotents)
    out << "    f = " << v.element << "  Supp " << v.support << "  support group " << v.support_group << "\n";
  for (const auto& e : elements)
    out << "  element " << e.name << " = " << e.value << ": idempotent " << yes(e.idempotent) << ", central "
        << yes(e.central) << ", Supp " << e.support << ", support group " << e.support_group << "\n";
  for (const auto& c : checks)
    out << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.id << ": " << c.claim << " -- " << c.observed << "\n";
  if (!note.empty()) out << "  note: " << note << "\n";
  return out.str();
}

std::size_t VerificationReport::checks() const {
  std::size_t n = 0;
  for (const auto& i : instances) n += i.checks.size();
  return n;
}

std::size_t VerificationReport::failures() const {
  std::size_t n = 0;
  for (const auto& i : instances) n += i.failures();
  return n;
}

std::size_t VerificationReport::budget_exceeded() const {
  return static_cast<std::size_t>(std::count_if(instances.begin(), instances.end(), [](const InstanceReport& i) {
    return i.enumeration == "budget exceeded";
  }));
}

int VerificationReport::exit_code() const {
  if (failures()) return 2;
  if (budget_exceeded()) return 4;
  return 0;
}

json VerificationReport::to_json() const {
  json j;
  j["title"] = title;
  j["summary"] = {{"instances", instances.size()},
                  {"checks", checks()},
                  {"failures", failures()},
                  {"budget_exceeded", budget_exceeded()}};
  json is = json::array();
  for (const auto& i : instances) is.push_back(i.to_json());
  j["instances"] = is;
  return j;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  if (!title.empty()) out << title << "\n";
  for (const auto& i : instances) out << i.to_text();
  out << "summary: " << instances.size() << " instances, " << checks() << " checks, " << failures() << " failures, "
      << budget_exceeded() << " over budget\n";
  return out.str();
}

}  // namespace grl

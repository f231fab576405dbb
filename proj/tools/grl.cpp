#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "grl/constructions.hpp"
#include "grl/error.hpp"
#include "grl/harness.hpp"

namespace {

constexpr int kInputError = 3;
constexpr int kBudgetExceeded = 4;

void write_json(const std::string& path, const nlohmann::ordered_json& j) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw grl::Error(grl::ErrorCode::Parse, "cannot write " + path);
  out << j.dump(2) << "\n";
}

int finish(const grl::VerificationReport& rep, const std::string& json_path) {
  std::cout << rep.to_text();
  write_json(json_path, rep.to_json());
  return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graded ring central idempotent verifier"};
  app.require_subcommand(1);

  grl::VerifyOptions vo;
  std::string json_path;

  auto* examples = app.add_subcommand("verify-examples", "run the built-in fixtures");
  std::vector<std::string> only;
  examples->add_option("--only", only, "fixture name (repeatable)");
  examples->add_option("--json", json_path, "write the JSON report here");

  auto* check = app.add_subcommand("check", "verify the theorems on an instance file");
  std::string file;
  std::vector<std::string> transforms;
  check->add_option("instance", file, "instance JSON")->required();
  check->add_option("--cap", vo.cap, "subgroup closure cap");
  check->add_option("--budget", vo.budget, "enumeration budget");
  check->add_option("--transform", transforms, "dorroh | phi | quotient:N=<gens> | restrict:H=<gens>");
  check->add_option("--samples", vo.law_samples, "randomized law samples");
  check->add_option("--seed", vo.seed, "law sampling seed");
  check->add_option("--json", json_path, "write the JSON report here");

  auto* enumerate = app.add_subcommand("enumerate", "list the central idempotents of an instance");
  enumerate->add_option("instance", file, "instance JSON")->required();
  enumerate->add_option("--cap", vo.cap, "subgroup closure cap");
  enumerate->add_option("--budget", vo.budget, "enumeration budget");

  auto* sweep = app.add_subcommand("sweep", "verify a generated corpus");
  grl::SweepOptions so;
  std::vector<std::string> fields;
  sweep->add_option("--family", so.families, "group_rings | crossed_products | zk_graded (repeatable)");
  sweep->add_option("--max-order", so.max_order, "largest group order");
  sweep->add_option("--max-dim", so.max_dim, "largest algebra dimension");
  sweep->add_option("--field", fields, "F<p> or Q (repeatable)");
  sweep->add_option("--cap", vo.cap, "subgroup closure cap");
  sweep->add_option("--budget", vo.budget, "enumeration budget");
  sweep->add_option("--json", json_path, "write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*examples) {
      grl::VerificationReport rep;
      rep.title = "fixtures";
      for (const auto& name : only.empty() ? grl::fixture_names() : only)
        rep.instances.push_back(grl::run_fixture(name, vo));
      return finish(rep, json_path);
    }
    if (*check) {
      grl::Instance inst = grl::load_instance(file);
      for (const auto& t : transforms) grl::apply_transform(inst, t, vo.cap);
      grl::VerificationReport rep;
      rep.instances.push_back(grl::verify_theorems(inst, vo));
      return finish(rep, json_path);
    }
    if (*enumerate) {
      const grl::Instance inst = grl::load_instance(file);
      if (!inst.graded) throw grl::Error(grl::ErrorCode::InfiniteGroup, "enumeration needs a finite-dimensional graded form");
      const auto& r = *inst.graded;
      const auto& g = r.group();
      const auto ids = grl::central_idempotents(r, vo.budget);
      std::cout << ids.size() << " central idempotents of " << inst.name << "\n";
      for (const auto& f : ids) {
        const auto sg = grl::support_group(r, f, vo.cap);
        std::cout << "  " << r.format(f) << "  Supp " << g.format(grl::support(r, f)) << "  support group "
                  << (sg ? g.format(*sg) : "exceeds cap " + std::to_string(vo.cap)) << "\n";
      }
      return 0;
    }
    if (*sweep) {
      for (const auto& f : fields) so.fields.push_back(grl::parse_field(nlohmann::ordered_json(f)));
      return finish(grl::corpus_sweep(so, vo), json_path);
    }
  } catch (const grl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == grl::ErrorCode::BudgetExceeded ? kBudgetExceeded : kInputError;
  }
  return 0;
}

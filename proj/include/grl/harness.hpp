#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "grl/instance.hpp"

namespace grl {

struct Check {
  std::string id;
  std::string claim;
  bool pass = false;
  std::string observed;
};

struct IdempotentVerdict {
  std::string element;
  std::string support;
  std::string support_group;  // the subgroup, or "exceeds cap N"
  bool finite = false;
};

struct ElementFacts {
  std::string name;
  std::string value;
  bool idempotent = false;
  bool central = false;
  std::string support;
  std::string support_group;
};

struct InstanceReport {
  std::string name;
  std::string kind;
  std::string group;
  std::string field;
  std::size_t dim = 0;
  std::vector<std::pair<std::string, std::string>> hypotheses;
  std::vector<std::string> applicable;
  std::string enumeration = "complete";  // complete | budget exceeded | unsupported | unavailable
  std::string enumeration_detail;
  std::vector<IdempotentVerdict> idempotents;
  std::vector<ElementFacts> elements;
  std::vector<Check> checks;
  std::string note;

  std::size_t failures() const;
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

struct VerificationReport {
  std::string title;
  std::vector<InstanceReport> instances;

  std::size_t checks() const;
  std::size_t failures() const;
  std::size_t budget_exceeded() const;
  // 0 all pass, 2 a conclusion failed, 4 an enumeration ran out of budget.
  int exit_code() const;
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

struct VerifyOptions {
  std::size_t cap = 1000;
  std::uint64_t budget = 1000000;
  std::size_t law_samples = 500;
  std::uint64_t seed = 20240601;
};

// Decides which hypotheses hold, enumerates central idempotents and checks
// every applicable conclusion.
InstanceReport verify_theorems(const Instance& inst, const VerifyOptions& options = {});

std::vector<std::string> fixture_names();
Instance fixture_instance(const std::string& name);  // throws UnknownFixture
InstanceReport run_fixture(const std::string& name, const VerifyOptions& options = {});

struct SweepOptions {
  std::vector<std::string> families;  // group_rings, crossed_products, zk_graded
  std::size_t max_order = 8;
  std::size_t max_dim = 8;
  std::vector<Field> fields;
};
std::vector<std::string> sweep_families();
// Sorted by instance name.
std::vector<Instance> sweep_corpus(const SweepOptions& options);
VerificationReport corpus_sweep(const SweepOptions& options, const VerifyOptions& verify = {});

// Randomized exact law checks; each evaluated identity counts once.
struct LawTally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> messages;  // first few failures

  void record(bool ok, const std::string& what);
};
LawTally phi_laws(const Instance& inst, std::size_t samples, std::uint64_t seed);
LawTally dorroh_laws(const Instance& inst, std::size_t samples, std::uint64_t seed, std::uint64_t budget);
LawTally componentwise_centrality(const Instance& inst, std::size_t samples, std::uint64_t seed);

}  // namespace grl

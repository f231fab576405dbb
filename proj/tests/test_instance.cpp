#include "doctest.h"

#include <filesystem>

#include "grl/error.hpp"
#include "grl/harness.hpp"

using namespace grl;
using json = nlohmann::ordered_json;

namespace {

std::string data(const std::string& file) { return std::string(GRL_DATA_DIR) + "/" + file; }

ErrorCode code_of(const json& j) {
  try {
    parse_instance(j);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Parse;
}

}  // namespace

TEST_CASE("every sample instance loads and verifies without failures") {
  for (const auto& entry : std::filesystem::directory_iterator(GRL_DATA_DIR)) {
    CAPTURE(entry.path().string());
    const Instance inst = load_instance(entry.path().string());
    const InstanceReport rep = verify_theorems(inst);
    CHECK(rep.failures() == 0);
  }
}

TEST_CASE("the infinite dihedral instance file matches the fixture") {
  const Instance file = load_instance(data("dinf_q4.json"));
  const Instance fixture = fixture_instance("dinf-q4");
  CHECK(file.graded->dim() == 4);
  CHECK(file.graded->degrees() == fixture.graded->degrees());
  CHECK(file.elements[0].second == fixture.elements[0].second);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(file.graded->algebra().product(i, j).size() == fixture.graded->algebra().product(i, j).size());
}

TEST_CASE("group ring files keep their elements") {
  const Instance m = load_instance(data("m2_z.json"));
  CHECK(m.kind == Instance::Kind::GroupRing);
  CHECK(!m.graded);
  REQUIRE(m.ring_elements.size() == 1);
  CHECK(m.ring->is_idempotent(m.ring_elements[0].second));
  const Instance c = load_instance(data("crossed_f5_c2.json"));
  CHECK(c.kind == Instance::Kind::CrossedProduct);
  CHECK(c.graded->dim() == 2);
}

TEST_CASE("field, group and element readers") {
  CHECK(parse_field(json("Q")) == Field::rationals());
  CHECK(parse_field(json("F7")) == Field::prime(7));
  CHECK(parse_field(json{{"kind", "Fp"}, {"p", 3}}) == Field::prime(3));
  CHECK_THROWS_WITH_AS(parse_field(json("F4")), doctest::Contains("InvalidField"), Error);
  CHECK_THROWS_AS(parse_field(json("R")), Error);

  const Group d = parse_group(json{{"kind", "Dinf"}});
  CHECK(parse_element_text(d, "ts") == d.mul(GroupElement::dihedral(1, true), GroupElement::dihedral(0, true)));
  CHECK(parse_element(d, json{{"n", 2}, {"flip", true}}) == GroupElement::dihedral(2, true));
  const Group z2 = parse_group(json{{"kind", "Zk"}, {"k", 2}});
  CHECK(parse_element_text(z2, "(1,-3)") == GroupElement::lattice({1, -3}));
  CHECK(parse_element(z2, json{1, -3}) == GroupElement::lattice({1, -3}));
  CHECK_THROWS_AS(parse_element_text(z2, "4"), Error);
  CHECK_THROWS_AS(parse_element_text(d, "sx"), Error);
  const Group c3 = parse_group(json{{"kind", "finite"},
                                   {"labels", {"e", "r", "rr"}},
                                   {"table", {{"e", "r", "rr"}, {"r", "rr", "e"}, {"rr", "e", "r"}}}});
  CHECK(c3.order() == 3u);
  CHECK(parse_element(c3, json("rr")) == GroupElement::finite(2));
}

TEST_CASE("malformed instances report the failing part") {
  CHECK(code_of(json{{"kind", "graded"}, {"group", "C2"}}) == ErrorCode::Parse);
  CHECK(code_of(json{{"kind", "mystery"}}) == ErrorCode::Parse);
  const json bad_degree{{"kind", "graded"},
                        {"field", "F3"},
                        {"group", {{"kind", "Zk"}}},
                        {"algebra", {{"builtin", "truncated_poly"}, {"n", 3}}},
                        {"degrees", {0, 1, 5}}};
  CHECK(code_of(bad_degree) == ErrorCode::InvalidGrading);
  json wrong_count = bad_degree;
  wrong_count["degrees"] = {0, 1};
  CHECK(code_of(wrong_count) == ErrorCode::Parse);
  const json twist{{"kind", "crossed_product"},
                   {"field", "F5"},
                   {"group", "C2"},
                   {"coeff", {{"builtin", "product"}, {"n", 1}}},
                   {"cocycle", {{"a", "a", "0"}}}};
  CHECK(code_of(twist) == ErrorCode::InvalidTwist);
  CHECK_THROWS_WITH_AS(load_instance(data("missing.json")), doctest::Contains("Parse"), Error);
}

TEST_CASE("transforms") {
  Instance inst = load_instance(data("dinf_q4.json"));
  apply_transform(inst, "restrict:H=s", 100);
  CHECK(inst.graded->dim() == 3);
  CHECK(inst.elements[0].second.size() == 3);
  CHECK(inst.name.find("[restrict:H=s]") != std::string::npos);

  Instance ring = load_instance(data("f2_s3.json"));
  apply_transform(ring, "quotient:N=(123)", 100);
  CHECK(ring.graded->group().order() == 2u);
  CHECK(!ring.ring);

  Instance d = load_instance(data("nilpotent_z.json"));
  apply_transform(d, "dorroh", 100);
  apply_transform(d, "phi", 100);
  CHECK(d.dorroh);
  CHECK(d.phi);
  const InstanceReport rep = verify_theorems(d);
  CHECK(rep.failures() == 0);

  Instance bad = load_instance(data("f2_s3.json"));
  CHECK_THROWS_AS(apply_transform(bad, "quotient:N=(12)", 100), Error);
  CHECK_THROWS_AS(apply_transform(bad, "rotate", 100), Error);
  CHECK_THROWS_AS(apply_transform(bad, "restrict:(12)", 100), Error);
  Instance dinf = load_instance(data("dinf_q4.json"));
  CHECK_THROWS_AS(apply_transform(dinf, "restrict:H=s;t", 100), Error);
}

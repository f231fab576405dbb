#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "grl/graded.hpp"
#include "grl/group_ring.hpp"

namespace grl {

using RingElement = GroupRing<Algebra>::Element;

// A loaded problem: a graded algebra, a group ring / crossed product, or
// both (a group ring over a finite group is also given its canonical graded
// form). Named elements are kept in insertion order.
struct Instance {
  enum class Kind { Graded, GroupRing, CrossedProduct };

  std::string name;
  Kind kind = Kind::Graded;
  std::optional<GradedAlgebra> graded;
  std::optional<GroupRing<Algebra>> ring;
  std::vector<std::pair<std::string, Vector>> elements;  // graded coordinates
  std::vector<std::pair<std::string, RingElement>> ring_elements;
  std::optional<DegreeWindow> window;
  bool dorroh = false;  // verify through the Dorroh unitization
  bool phi = false;     // verify the embedding into R[G]
};

const char* to_string(Instance::Kind kind);

Instance make_graded_instance(std::string name, GradedAlgebra r);
Instance make_ring_instance(std::string name, GroupRing<Algebra> ring);

// JSON readers; all throw Error(Parse) or the construction's own error.
Field parse_field(const nlohmann::ordered_json& j);
Group parse_group(const nlohmann::ordered_json& j);
GroupElement parse_element(const Group& g, const nlohmann::ordered_json& j);
// Text forms used on the command line: a label, an integer or "(a,b)", or a
// word in s and t for the infinite dihedral group.
GroupElement parse_element_text(const Group& g, const std::string& text);
Algebra parse_algebra(const nlohmann::ordered_json& j, const Field& field);
Vector parse_vector(const nlohmann::ordered_json& j, const Field& field, std::size_t dim);
Instance parse_instance(const nlohmann::ordered_json& j);
Instance load_instance(const std::string& path);

// Applies a --transform argument: dorroh, phi, quotient:N=<gens>, restrict:H=<gens>,
// where <gens> are element texts separated by ';' and the subgroup is their closure.
void apply_transform(Instance& inst, const std::string& spec, std::size_t cap);

}  // namespace grl

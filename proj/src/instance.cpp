#include "grl/instance.hpp"

#include <fstream>
#include <sstream>

#include "grl/constructions.hpp"
#include "grl/error.hpp"

namespace grl {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::Parse, what); }

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing key '") + key + "'");
  return j.at(key);
}

std::size_t need_size(const json& j, const char* key) {
  const json& v = need(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) fail(std::string("'") + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

Scalar parse_scalar(const json& j, const Field& field) {
  if (j.is_string()) return field.parse(j.get<std::string>());
  if (j.is_number_integer()) return field.from_int(j.get<long>());
  fail("scalars must be strings or integers, got " + j.dump());
}

std::int64_t parse_int(const std::string& text) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    fail("not an integer: '" + text + "'");
  }
  if (used != text.size()) fail("not an integer: '" + text + "'");
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, sep))
    if (!trim(part).empty()) out.push_back(trim(part));
  return out;
}

Matrix parse_matrix(const json& j, const Field& field, std::size_t n) {
  if (!j.is_array() || j.size() != n) fail("expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  Matrix m;
  for (const auto& row : j) m.push_back(parse_vector(row, field, n));
  return m;
}

std::vector<std::pair<std::string, Vector>> graded_elements_of(const GroupRing<Algebra>& ring,
                                                               const std::vector<std::pair<std::string, RingElement>>& xs) {
  std::vector<std::pair<std::string, Vector>> out;
  for (const auto& [name, x] : xs) out.emplace_back(name, to_graded_coordinates(ring, x));
  return out;
}

}  // namespace

const char* to_string(Instance::Kind kind) {
  switch (kind) {
    case Instance::Kind::Graded: return "graded";
    case Instance::Kind::GroupRing: return "group_ring";
    case Instance::Kind::CrossedProduct: return "crossed_product";
  }
  return "?";
}

Instance make_graded_instance(std::string name, GradedAlgebra r) {
  Instance inst;
  inst.name = std::move(name);
  inst.graded = std::move(r);
  return inst;
}

Instance make_ring_instance(std::string name, GroupRing<Algebra> ring) {
  Instance inst;
  inst.name = std::move(name);
  inst.kind = ring.is_twisted() ? Instance::Kind::CrossedProduct : Instance::Kind::GroupRing;
  if (ring.group().order()) inst.graded = as_graded_algebra(ring);
  inst.ring = std::move(ring);
  return inst;
}

Field parse_field(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "Q") return Field::rationals();
    if (s.size() > 1 && s[0] == 'F') return Field::prime(static_cast<std::uint32_t>(parse_int(s.substr(1))));
    fail("unknown field '" + s + "'");
  }
  const auto kind = need(j, "kind").get<std::string>();
  if (kind == "Q") return Field::rationals();
  if (kind == "Fp") return Field::prime(static_cast<std::uint32_t>(need_size(j, "p")));
  fail("unknown field kind '" + kind + "'");
}

Group parse_group(const json& j) {
  if (j.is_string()) return Group::builtin(j.get<std::string>());
  const auto kind = need(j, "kind").get<std::string>();
  if (kind == "Zk") return Group::free_abelian(j.contains("k") ? need_size(j, "k") : 1);
  if (kind == "Dinf") return Group::infinite_dihedral();
  if (kind != "finite") fail("unknown group kind '" + kind + "'");
  if (!j.contains("table")) return Group::builtin(need(j, "name").get<std::string>());
  const auto labels = need(j, "labels").get<std::vector<std::string>>();
  std::vector<std::vector<std::size_t>> table;
  for (const auto& row : need(j, "table")) {
    std::vector<std::size_t> r;
    for (const auto& x : row) {
      if (x.is_string()) {
        const auto it = std::find(labels.begin(), labels.end(), x.get<std::string>());
        if (it == labels.end()) fail("table entry '" + x.get<std::string>() + "' is not a label");
        r.push_back(static_cast<std::size_t>(it - labels.begin()));
      } else {
        r.push_back(x.get<std::size_t>());
      }
    }
    table.push_back(std::move(r));
  }
  std::vector<std::size_t> gens;
  if (j.contains("generators"))
    for (const auto& g : j.at("generators")) {
      const auto it = std::find(labels.begin(), labels.end(), g.get<std::string>());
      if (it == labels.end()) fail("generator '" + g.get<std::string>() + "' is not a label");
      gens.push_back(static_cast<std::size_t>(it - labels.begin()));
    }
  return Group::finite(j.value("name", "G"), labels, table, gens);
}

GroupElement parse_element(const Group& g, const json& j) {
  switch (g.kind()) {
    case GroupKind::Finite:
      if (!j.is_string()) fail("finite group elements are labels, got " + j.dump());
      return g.parse_label(j.get<std::string>());
    case GroupKind::FreeAbelian: {
      std::vector<std::int64_t> c;
      if (j.is_number_integer()) c.push_back(j.get<std::int64_t>());
      else if (j.is_array()) c = j.get<std::vector<std::int64_t>>();
      else fail("Z^k elements are integer arrays, got " + j.dump());
      if (c.size() != g.rank()) fail("element " + j.dump() + " has the wrong rank");
      return GroupElement::lattice(std::move(c));
    }
    case GroupKind::InfiniteDihedral:
      if (j.is_string()) return parse_element_text(g, j.get<std::string>());
      return GroupElement::dihedral(need(j, "n").get<std::int64_t>(), need(j, "flip").get<bool>());
  }
  fail("unreachable");
}

GroupElement parse_element_text(const Group& g, const std::string& raw) {
  const std::string text = trim(raw);
  switch (g.kind()) {
    case GroupKind::Finite: return g.parse_label(text);
    case GroupKind::FreeAbelian: {
      std::string body = text;
      if (body.size() >= 2 && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
      std::vector<std::int64_t> c;
      for (const auto& part : split(body, ',')) c.push_back(parse_int(part));
      if (c.size() != g.rank()) fail("element '" + text + "' has the wrong rank");
      return GroupElement::lattice(std::move(c));
    }
    case GroupKind::InfiniteDihedral: {
      GroupElement out = g.identity();
      if (text == "e") return out;
      for (char ch : text) {
        if (ch == 's') out = g.mul(out, GroupElement::dihedral(0, true));
        else if (ch == 't') out = g.mul(out, GroupElement::dihedral(1, true));
        else fail("infinite dihedral elements are words in s and t, got '" + text + "'");
      }
      return out;
    }
  }
  fail("unreachable");
}

Vector parse_vector(const json& j, const Field& field, std::size_t dim) {
  if (!j.is_array()) fail("expected an array of scalars, got " + j.dump());
  if (j.size() != dim) fail("expected " + std::to_string(dim) + " scalars, got " + std::to_string(j.size()));
  Vector v;
  for (const auto& x : j) v.push_back(parse_scalar(x, field));
  return v;
}

Algebra parse_algebra(const json& j, const Field& outer) {
  const Field field = j.contains("field") ? parse_field(j.at("field")) : outer;
  std::optional<Algebra> a;
  if (j.contains("builtin")) {
    const auto name = j.at("builtin").get<std::string>();
    if (name == "matrix") a = matrix_algebra(field, need_size(j, "n"));
    else if (name == "product") a = product_algebra(field, need_size(j, "n"));
    else if (name == "truncated_poly") a = truncated_poly(field, need_size(j, "n"));
    else if (name == "truncated_monomials") a = truncated_monomials(field, need(j, "bounds").get<std::vector<std::size_t>>());
    else if (name == "group_algebra") a = group_algebra(field, parse_group(need(j, "group")));
    else if (name == "upper_triangular") a = upper_triangular(field, need_size(j, "n"));
    else if (name == "triangular") a = triangular_truncated(field, need_size(j, "n"));
    else fail("unknown built-in algebra '" + name + "'");
  } else {
    const std::size_t dim = need_size(j, "dim");
    std::vector<StructureConstant> constants;
    for (const auto& c : need(j, "constants")) {
      if (!c.is_array() || c.size() != 4) fail("structure constants are [i, j, k, \"c\"]");
      constants.emplace_back(c[0].get<std::size_t>(), c[1].get<std::size_t>(), c[2].get<std::size_t>(),
                             parse_scalar(c[3], field));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    a = Algebra::from_constants(field, dim, constants, labels);
    if (j.contains("identity")) {
      const Vector id = parse_vector(j.at("identity"), field, dim);
      if (!a->identity() || !(*a->identity() == id)) throw Error(ErrorCode::InvalidAlgebra, "declared identity is not an identity");
    }
  }
  if (j.contains("rebase")) {
    const json& r = j.at("rebase");
    std::vector<Vector> basis;
    for (const auto& v : need(r, "basis")) basis.push_back(parse_vector(v, field, a->dim()));
    a = a->rebase(basis, need(r, "labels").get<std::vector<std::string>>());
  }
  if (j.contains("split_idempotents")) {
    std::vector<Vector> split;
    for (const auto& v : j.at("split_idempotents")) split.push_back(parse_vector(v, field, a->dim()));
    a->set_split_idempotents(std::move(split));
  }
  if (j.contains("declared_prime")) a->set_declared_prime(j.at("declared_prime").get<bool>());
  if (j.contains("description")) a->set_description(j.at("description").get<std::string>());
  return std::move(*a);
}

Instance parse_instance(const json& j) {
  const std::string kind = j.value("kind", "graded");
  const std::string name = j.value("name", "instance");
  const Field field = j.contains("field") ? parse_field(j.at("field")) : Field::rationals();
  Instance inst;
  if (kind == "graded") {
    Group group = parse_group(need(j, "group"));
    Algebra algebra = parse_algebra(need(j, "algebra"), field);
    std::vector<GroupElement> degrees;
    for (const auto& d : need(j, "degrees")) degrees.push_back(parse_element(group, d));
    if (degrees.size() != algebra.dim()) fail("one degree per basis vector is required");
    inst = make_graded_instance(name, GradedAlgebra(std::move(algebra), std::move(group), std::move(degrees)));
    if (j.contains("elements"))
      for (const auto& [key, v] : j.at("elements").items())
        inst.elements.emplace_back(key, parse_vector(v, inst.graded->field(), inst.graded->dim()));
  } else if (kind == "group_ring" || kind == "crossed_product") {
    Algebra coeff = parse_algebra(need(j, "coeff"), field);
    Group group = parse_group(need(j, "group"));
    std::optional<GroupRing<Algebra>> ring;
    if (kind == "group_ring") {
      ring.emplace(std::move(coeff), std::move(group));
    } else {
      std::map<GroupElement, Matrix> action;
      if (j.contains("action"))
        for (const auto& [key, m] : j.at("action").items())
          action.emplace(parse_element_text(group, key), parse_matrix(m, coeff.field(), coeff.dim()));
      std::vector<std::tuple<GroupElement, GroupElement, Vector>> cocycle;
      if (j.contains("cocycle"))
        for (const auto& c : j.at("cocycle")) {
          if (!c.is_array() || c.size() != 3) fail("cocycle entries are [g, h, value]");
          Vector value = c[2].is_array() ? parse_vector(c[2], coeff.field(), coeff.dim())
                                         : Vector{parse_scalar(c[2], coeff.field())};
          cocycle.emplace_back(parse_element(group, c[0]), parse_element(group, c[1]), std::move(value));
        }
      ring.emplace(make_crossed_product(std::move(coeff), std::move(group), action, cocycle));
    }
    inst = make_ring_instance(name, std::move(*ring));
    if (j.contains("elements")) {
      for (const auto& [key, terms] : j.at("elements").items()) {
        RingElement x;
        for (const auto& t : terms) {
          const auto& a = inst.ring->coefficients();
          x = inst.ring->add(x, inst.ring->monomial(parse_vector(need(t, "coeff"), a.field(), a.dim()),
                                                     parse_element(inst.ring->group(), need(t, "g"))));
        }
        inst.ring_elements.emplace_back(key, std::move(x));
      }
      if (inst.graded) inst.elements = graded_elements_of(*inst.ring, inst.ring_elements);
    }
  } else {
    fail("unknown instance kind '" + kind + "'");
  }
  if (j.contains("window")) inst.window = DegreeWindow{need(j.at("window"), "max_total_degree").get<std::int64_t>()};
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, path + ": " + e.what());
  }
  try {
    return parse_instance(j);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, path + ": " + e.what());
  }
}

void apply_transform(Instance& inst, const std::string& spec, std::size_t cap) {
  if (spec == "dorroh") {
    inst.dorroh = true;
    return;
  }
  if (spec == "phi") {
    inst.phi = true;
    return;
  }
  const auto colon = spec.find(':');
  const std::string op = spec.substr(0, colon);
  if ((op != "quotient" && op != "restrict") || colon == std::string::npos)
    throw Error(ErrorCode::InvalidSpec, "unknown transform '" + spec + "'");
  const std::string arg = spec.substr(colon + 1);
  const std::string key = op == "quotient" ? "N=" : "H=";
  if (arg.rfind(key, 0) != 0) throw Error(ErrorCode::InvalidSpec, op + " expects " + key + "<generators>");
  if (!inst.graded) throw Error(ErrorCode::InvalidSpec, op + " needs a graded instance");
  const Group& g = inst.graded->group();
  ElementSet gens;
  for (const auto& part : split(arg.substr(2), ';')) gens.insert(parse_element_text(g, part));
  const auto sub = subgroup_closure(g, gens, cap);
  if (!sub) throw Error(ErrorCode::InvalidSpec, "generated subgroup exceeds cap " + std::to_string(cap));

  if (op == "quotient") {
    inst.graded = quotient_regrade(*inst.graded, *sub);
    inst.window.reset();
  } else {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < inst.graded->dim(); ++i)
      if (sub->count(inst.graded->degree(i))) keep.push_back(i);
    GradedAlgebra restricted = restrict_to_subgroup(*inst.graded, *sub);
    for (auto& [name, v] : inst.elements) {
      Vector w;
      for (std::size_t i : keep) w.push_back(v[i]);
      v = std::move(w);
    }
    inst.graded = std::move(restricted);
    inst.window.reset();
  }
  inst.name += " [" + spec + "]";
  inst.kind = Instance::Kind::Graded;
  inst.ring.reset();
  inst.ring_elements.clear();
}

}  // namespace grl

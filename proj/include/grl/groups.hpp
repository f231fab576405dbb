#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace grl {

enum class GroupKind { Finite, FreeAbelian, InfiniteDihedral };

const char* to_string(GroupKind kind);

// Normal form of a group element, tagged with the family it belongs to.
//   Finite:           {index into the element table}
//   FreeAbelian(k):   the k integer coordinates
//   InfiniteDihedral: {n, flip} standing for r^n s^flip, r = ts
class GroupElement {
 public:
  GroupElement() = default;

  static GroupElement finite(std::size_t index);
  static GroupElement lattice(std::vector<std::int64_t> coords);
  static GroupElement dihedral(std::int64_t n, bool flip);

  GroupKind kind() const { return kind_; }
  std::size_t index() const;
  const std::vector<std::int64_t>& coords() const { return data_; }
  std::int64_t shift() const;
  bool flip() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

 private:
  GroupElement(GroupKind kind, std::vector<std::int64_t> data)
      : kind_(kind), data_(std::move(data)) {}

  GroupKind kind_ = GroupKind::Finite;
  std::vector<std::int64_t> data_{0};
};

using ElementSet = std::set<GroupElement>;

class Group {
 public:
  // Validates the Cayley table (Latin square, identity, inverses,
  // associativity) and that `generators` generate the whole group. An empty
  // generator list means "use every element".
  static Group finite(std::string name, std::vector<std::string> labels,
                      std::vector<std::vector<std::size_t>> table,
                      std::vector<std::size_t> generators = {});

  static Group cyclic(std::size_t n);
  static Group dihedral(std::size_t n);  // order 2n
  static Group symmetric3();
  static Group klein_four();
  static Group quaternion();
  static Group direct_product(const Group& a, const Group& b);
  static Group free_abelian(std::size_t k);
  static Group infinite_dihedral();

  // Built-in finite groups by name: C<n>, D<n>, S3, V4, Q8, and products
  // joined by 'x' (e.g. C2xC4).
  static Group builtin(const std::string& name);
  static std::vector<std::string> builtin_names(std::size_t max_order);

  // The finite subgroup `elements` of `parent` as a standalone table group,
  // keeping the parent's labels.
  static Group from_subgroup(const Group& parent, const ElementSet& elements);

  GroupKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  std::size_t rank() const { return rank_; }
  std::optional<std::size_t> order() const;
  bool is_abelian() const { return abelian_; }
  bool is_torsion_free() const { return torsion_free_; }

  GroupElement identity() const;
  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  GroupElement pow(const GroupElement& a, std::int64_t n) const;
  GroupElement conjugate(const GroupElement& by, const GroupElement& g) const;

  bool contains(const GroupElement& a) const;
  const std::vector<GroupElement>& generators() const { return generators_; }
  // Finite groups only; index order.
  std::vector<GroupElement> elements() const;

  std::string format(const GroupElement& a) const;
  std::string format(const ElementSet& s) const;
  // Finite groups: parse an element label.
  GroupElement parse_label(const std::string& label) const;
  const std::vector<std::string>& labels() const { return labels_; }

  friend bool operator==(const Group& a, const Group& b);

 private:
  Group() = default;
  void require(const GroupElement& a) const;

  GroupKind kind_ = GroupKind::Finite;
  std::string name_;
  std::size_t rank_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
  std::vector<GroupElement> generators_;
  bool abelian_ = true;
  bool torsion_free_ = true;
};

// nullopt means the closure grew past `cap`; that is evidence of size > cap,
// not a proof of infiniteness.
std::optional<ElementSet> subgroup_closure(const Group& g, const ElementSet& gens,
                                           std::size_t cap);

std::optional<ElementSet> conjugacy_class(const Group& g, const GroupElement& x,
                                          std::size_t cap);

// Class of `x` under conjugation by members of the finite subgroup `within`.
ElementSet conjugacy_class_within(const Group& g, const ElementSet& within,
                                  const GroupElement& x);

struct Quotient {
  Group group;
  // projection[i] = coset index of element i of the parent group
  std::vector<std::size_t> projection;

  GroupElement project(const GroupElement& a) const {
    return GroupElement::finite(projection.at(a.index()));
  }
};

// Throws NotSubgroup / NotNormal.
Quotient quotient_group(const Group& g, const ElementSet& normal);

bool is_subgroup(const Group& g, const ElementSet& h);

// Smallest n with x^n = e; nullopt when x has been shown to have infinite
// order (or, for infinite kinds only, no such n <= cap exists).
std::optional<std::uint64_t> torsion_check(const Group& g, const GroupElement& x,
                                           std::uint64_t cap);

}  // namespace grl

#include "grl/groups.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <sstream>

#include "grl/error.hpp"

namespace grl {

const char* to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::Finite: return "finite";
    case GroupKind::FreeAbelian: return "Zk";
    case GroupKind::InfiniteDihedral: return "Dinf";
  }
  return "?";
}

GroupElement GroupElement::finite(std::size_t index) {
  return GroupElement(GroupKind::Finite, {static_cast<std::int64_t>(index)});
}

GroupElement GroupElement::lattice(std::vector<std::int64_t> coords) {
  return GroupElement(GroupKind::FreeAbelian, std::move(coords));
}

GroupElement GroupElement::dihedral(std::int64_t n, bool flip) {
  return GroupElement(GroupKind::InfiniteDihedral, {n, flip ? 1 : 0});
}

std::size_t GroupElement::index() const {
  if (kind_ != GroupKind::Finite) throw Error(ErrorCode::KindMismatch, "index() on non-finite element");
  return static_cast<std::size_t>(data_[0]);
}

std::int64_t GroupElement::shift() const {
  if (kind_ != GroupKind::InfiniteDihedral) throw Error(ErrorCode::KindMismatch, "shift() on non-dihedral element");
  return data_[0];
}

bool GroupElement::flip() const {
  if (kind_ != GroupKind::InfiniteDihedral) throw Error(ErrorCode::KindMismatch, "flip() on non-dihedral element");
  return data_[1] != 0;
}

namespace {

using Table = std::vector<std::vector<std::size_t>>;

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string power_label(const std::string& base, std::size_t k) {
  if (k == 0) return "e";
  if (k == 1) return base;
  return base + "^" + std::to_string(k);
}

// Permutations of {0,1,2} composed right-to-left, labelled in cycle notation.
std::string cycle_label(const std::array<int, 3>& perm) {
  std::vector<bool> seen(3, false);
  std::string out;
  for (int start = 0; start < 3; ++start) {
    if (seen[start] || perm[start] == start) continue;
    std::string cyc = "(";
    for (int x = start; !seen[x]; x = perm[x]) {
      seen[x] = true;
      cyc += std::to_string(x + 1);
    }
    out += cyc + ")";
  }
  return out.empty() ? "e" : out;
}

}  // namespace

Group Group::finite(std::string name, std::vector<std::string> labels, Table table,
                    std::vector<std::size_t> generators) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorCode::InvalidGroup, "empty Cayley table");
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
  }
  if (labels.size() != n) throw Error(ErrorCode::InvalidGroup, "label count does not match table size");
  {
    std::set<std::string> distinct(labels.begin(), labels.end());
    if (distinct.size() != n) throw Error(ErrorCode::InvalidGroup, "duplicate element labels");
  }
  for (const auto& row : table) {
    if (row.size() != n) throw Error(ErrorCode::InvalidGroup, "Cayley table is not square");
    std::vector<bool> seen(n, false);
    for (std::size_t x : row) {
      if (x >= n || seen[x]) throw Error(ErrorCode::InvalidGroup, "Cayley table is not a Latin square");
      seen[x] = true;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[table[i][j]]) throw Error(ErrorCode::InvalidGroup, "Cayley table is not a Latin square");
      seen[table[i][j]] = true;
    }
  }
  std::optional<std::size_t> identity;
  for (std::size_t i = 0; i < n && !identity; ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) ok = table[i][j] == j && table[j][i] == j;
    if (ok) identity = i;
  }
  if (!identity) throw Error(ErrorCode::InvalidGroup, "no identity element");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw Error(ErrorCode::InvalidGroup, "multiplication is not associative");

  Group g;
  g.kind_ = GroupKind::Finite;
  g.name_ = std::move(name);
  g.labels_ = std::move(labels);
  g.table_ = std::move(table);
  g.identity_ = *identity;
  g.inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (g.table_[a][b] == g.identity_) g.inverse_[a] = b;
  for (std::size_t a = 0; a < n && g.abelian_; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (g.table_[a][b] != g.table_[b][a]) {
        g.abelian_ = false;
        break;
      }
  g.torsion_free_ = n == 1;

  if (generators.empty()) {
    // Greedy: keep an element when it is not already generated.
    ElementSet current{g.identity()};
    for (std::size_t i = 0; i < n; ++i) {
      if (current.count(GroupElement::finite(i))) continue;
      generators.push_back(i);
      ElementSet gens;
      for (std::size_t j : generators) gens.insert(GroupElement::finite(j));
      current = *subgroup_closure(g, gens, n);
    }
  }
  ElementSet gens;
  for (std::size_t i : generators) {
    if (i >= n) throw Error(ErrorCode::InvalidGroup, "generator index out of range");
    g.generators_.push_back(GroupElement::finite(i));
    gens.insert(GroupElement::finite(i));
  }
  if (subgroup_closure(g, gens, n)->size() != n)
    throw Error(ErrorCode::InvalidGroup, "declared generators do not generate the group");
  return g;
}

Group Group::cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidGroup, "cyclic group of order 0");
  Table t(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(power_label("a", i));
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  }
  std::vector<std::size_t> gens;
  if (n > 1) gens.push_back(1);
  return finite("C" + std::to_string(n), labels, t, gens);
}

Group Group::dihedral(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidGroup, "dihedral group D0");
  // index k: r^k, index n+k: s r^k; r^k s = s r^-k
  const std::size_t order = 2 * n;
  Table t(order, std::vector<std::size_t>(order));
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) labels.push_back(power_label("r", k));
  for (std::size_t k = 0; k < n; ++k) labels.push_back(k == 0 ? "s" : "s" + power_label("r", k));
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t a = x / n, k = x % n, b = y / n, m = y % n;
      const std::size_t rot = b ? (n - k + m) % n : (k + m) % n;
      t[x][y] = ((a + b) % 2) * n + rot;
    }
  }
  std::vector<std::size_t> gens;
  if (n > 1) gens.push_back(1);
  gens.push_back(n);
  return finite("D" + std::to_string(n), labels, t, gens);
}

Group Group::symmetric3() {
  const std::vector<std::array<int, 3>> perms = {
      {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::string> labels;
  for (const auto& p : perms) labels.push_back(cycle_label(p));
  Table t(6, std::vector<std::size_t>(6));
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[i][perms[j][x]];
      t[i][j] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return finite("S3", labels, t, {1, 4});
}

Group Group::klein_four() {
  Table t(4, std::vector<std::size_t>(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) t[i][j] = i ^ j;
  return finite("V4", {"e", "a", "b", "ab"}, t, {1, 2});
}

Group Group::quaternion() {
  // index = 2*unit + sign, unit in {1,i,j,k}
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  const char* names[4] = {"1", "i", "j", "k"};
  std::vector<std::string> labels;
  for (int u = 0; u < 4; ++u) {
    labels.push_back(names[u]);
    labels.push_back(std::string("-") + names[u]);
  }
  Table t(8, std::vector<std::size_t>(8));
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const int u = x / 2, v = y / 2;
      const int sign = (x % 2) ^ (y % 2) ^ sign_mul[u][v];
      t[x][y] = static_cast<std::size_t>(2 * unit_mul[u][v] + sign);
    }
  }
  return finite("Q8", labels, t, {2, 4});
}

Group Group::direct_product(const Group& a, const Group& b) {
  if (a.kind_ != GroupKind::Finite || b.kind_ != GroupKind::Finite)
    throw Error(ErrorCode::Unsupported, "direct products of infinite groups");
  const std::size_t na = a.table_.size(), nb = b.table_.size();
  Table t(na * nb, std::vector<std::size_t>(na * nb));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) labels.push_back("(" + a.labels_[i] + "," + b.labels_[j] + ")");
  for (std::size_t x = 0; x < na * nb; ++x)
    for (std::size_t y = 0; y < na * nb; ++y)
      t[x][y] = a.table_[x / nb][y / nb] * nb + b.table_[x % nb][y % nb];
  std::vector<std::size_t> gens;
  for (const auto& g : a.generators_) gens.push_back(g.index() * nb + b.identity_);
  for (const auto& h : b.generators_) gens.push_back(a.identity_ * nb + h.index());
  return finite(a.name_ + "x" + b.name_, labels, t, gens);
}

Group Group::free_abelian(std::size_t k) {
  Group g;
  g.kind_ = GroupKind::FreeAbelian;
  g.rank_ = k;
  g.name_ = k == 1 ? "Z" : "Z^" + std::to_string(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::int64_t> v(k, 0);
    v[i] = 1;
    g.generators_.push_back(GroupElement::lattice(v));
  }
  g.abelian_ = true;
  g.torsion_free_ = true;
  return g;
}

Group Group::infinite_dihedral() {
  Group g;
  g.kind_ = GroupKind::InfiniteDihedral;
  g.name_ = "Dinf";
  g.generators_ = {GroupElement::dihedral(0, true), GroupElement::dihedral(1, true)};
  g.abelian_ = false;
  g.torsion_free_ = false;
  return g;
}

Group Group::builtin(const std::string& name) {
  const auto x = name.find('x');
  if (x != std::string::npos)
    return direct_product(builtin(name.substr(0, x)), builtin(name.substr(x + 1)));
  if (name == "S3") return symmetric3();
  if (name == "V4" || name == "K4") return klein_four();
  if (name == "Q8") return quaternion();
  if (name.size() >= 2 && (name[0] == 'C' || name[0] == 'D' || name[0] == 'Z')) {
    const std::string digits = name.substr(1);
    if (std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      const std::size_t n = std::stoul(digits);
      if (n >= 1 && n <= 64) return name[0] == 'D' ? dihedral(n) : cyclic(n);
    }
  }
  throw Error(ErrorCode::InvalidSpec, "unknown built-in group '" + name + "'");
}

std::vector<std::string> Group::builtin_names(std::size_t max_order) {
  std::vector<std::pair<std::size_t, std::string>> all;
  for (std::size_t n = 1; n <= max_order; ++n) all.emplace_back(n, "C" + std::to_string(n));
  all.emplace_back(4, "V4");
  all.emplace_back(6, "S3");
  all.emplace_back(8, "C2xC4");
  all.emplace_back(8, "C2xC2xC2");
  all.emplace_back(8, "D4");
  all.emplace_back(8, "Q8");
  std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::string> out;
  for (const auto& [order, n] : all)
    if (order <= max_order) out.push_back(n);
  return out;
}

Group Group::from_subgroup(const Group& parent, const ElementSet& elements) {
  if (!is_subgroup(parent, elements)) throw Error(ErrorCode::NotSubgroup, "not a subgroup of " + parent.name_);
  if (parent.kind_ != GroupKind::Finite) {
    // A finite subgroup of an infinite group still gets a table.
    std::vector<GroupElement> elems(elements.begin(), elements.end());
    std::vector<std::string> labels;
    for (const auto& e : elems) labels.push_back(parent.format(e));
    const auto id = std::find(elems.begin(), elems.end(), parent.identity()) - elems.begin();
    std::rotate(elems.begin(), elems.begin() + id, elems.begin() + id + 1);
    std::rotate(labels.begin(), labels.begin() + id, labels.begin() + id + 1);
    Table t(elems.size(), std::vector<std::size_t>(elems.size()));
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = 0; j < elems.size(); ++j)
        t[i][j] = std::find(elems.begin(), elems.end(), parent.mul(elems[i], elems[j])) - elems.begin();
    return finite(parent.name_ + "{" + join(labels, ",") + "}", labels, t);
  }
  std::vector<std::size_t> idx;
  for (const auto& e : elements) idx.push_back(e.index());
  std::vector<std::string> labels;
  for (std::size_t i : idx) labels.push_back(parent.labels_[i]);
  Table t(idx.size(), std::vector<std::size_t>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j)
      t[i][j] = std::find(idx.begin(), idx.end(), parent.table_[idx[i]][idx[j]]) - idx.begin();
  return finite(parent.name_ + "{" + join(labels, ",") + "}", labels, t);
}

std::optional<std::size_t> Group::order() const {
  if (kind_ == GroupKind::Finite) return table_.size();
  return std::nullopt;
}

GroupElement Group::identity() const {
  switch (kind_) {
    case GroupKind::Finite: return GroupElement::finite(identity_);
    case GroupKind::FreeAbelian: return GroupElement::lattice(std::vector<std::int64_t>(rank_, 0));
    case GroupKind::InfiniteDihedral: return GroupElement::dihedral(0, false);
  }
  return {};
}

bool Group::contains(const GroupElement& a) const {
  if (a.kind() != kind_) return false;
  switch (kind_) {
    case GroupKind::Finite: return a.index() < table_.size();
    case GroupKind::FreeAbelian: return a.coords().size() == rank_;
    case GroupKind::InfiniteDihedral: return a.coords().size() == 2;
  }
  return false;
}

void Group::require(const GroupElement& a) const {
  if (a.kind() != kind_)
    throw Error(ErrorCode::KindMismatch, std::string(to_string(a.kind())) + " element used in " + name_);
  if (!contains(a)) throw Error(ErrorCode::NotMember, "element is not a member of " + name_);
}

GroupElement Group::mul(const GroupElement& a, const GroupElement& b) const {
  require(a);
  require(b);
  switch (kind_) {
    case GroupKind::Finite: return GroupElement::finite(table_[a.index()][b.index()]);
    case GroupKind::FreeAbelian: {
      std::vector<std::int64_t> v(rank_);
      for (std::size_t i = 0; i < rank_; ++i) v[i] = a.coords()[i] + b.coords()[i];
      return GroupElement::lattice(std::move(v));
    }
    case GroupKind::InfiniteDihedral:
      return GroupElement::dihedral(a.shift() + (a.flip() ? -b.shift() : b.shift()), a.flip() != b.flip());
  }
  return {};
}

GroupElement Group::inverse(const GroupElement& a) const {
  require(a);
  switch (kind_) {
    case GroupKind::Finite: return GroupElement::finite(inverse_[a.index()]);
    case GroupKind::FreeAbelian: {
      std::vector<std::int64_t> v(a.coords());
      for (auto& x : v) x = -x;
      return GroupElement::lattice(std::move(v));
    }
    case GroupKind::InfiniteDihedral:
      return a.flip() ? a : GroupElement::dihedral(-a.shift(), false);
  }
  return {};
}

GroupElement Group::pow(const GroupElement& a, std::int64_t n) const {
  GroupElement base = n < 0 ? inverse(a) : a;
  std::uint64_t k = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  GroupElement result = identity();
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

GroupElement Group::conjugate(const GroupElement& by, const GroupElement& g) const {
  return mul(mul(by, g), inverse(by));
}

std::vector<GroupElement> Group::elements() const {
  if (kind_ != GroupKind::Finite) throw Error(ErrorCode::InfiniteGroup, name_ + " is infinite");
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < table_.size(); ++i) out.push_back(GroupElement::finite(i));
  return out;
}

std::string Group::format(const GroupElement& a) const {
  require(a);
  switch (kind_) {
    case GroupKind::Finite: return labels_[a.index()];
    case GroupKind::FreeAbelian: {
      if (rank_ == 1) return std::to_string(a.coords()[0]);
      std::vector<std::string> parts;
      for (auto x : a.coords()) parts.push_back(std::to_string(x));
      return "(" + join(parts, ",") + ")";
    }
    case GroupKind::InfiniteDihedral: {
      const auto n = a.shift();
      if (n == 0) return a.flip() ? "s" : "e";
      if (n == 1 && a.flip()) return "t";
      const std::string rot = n == 1 ? "(ts)" : "(ts)^" + std::to_string(n);
      return a.flip() ? rot + "s" : rot;
    }
  }
  return "?";
}

std::string Group::format(const ElementSet& s) const {
  std::vector<std::string> parts;
  for (const auto& x : s) parts.push_back(format(x));
  return "{" + join(parts, ", ") + "}";
}

GroupElement Group::parse_label(const std::string& label) const {
  if (kind_ != GroupKind::Finite) throw Error(ErrorCode::KindMismatch, "labels exist only for finite groups");
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error(ErrorCode::NotMember, "no element labelled '" + label + "' in " + name_);
  return GroupElement::finite(static_cast<std::size_t>(it - labels_.begin()));
}

bool operator==(const Group& a, const Group& b) {
  return a.kind_ == b.kind_ && a.rank_ == b.rank_ && a.table_ == b.table_ && a.labels_ == b.labels_;
}

std::optional<ElementSet> subgroup_closure(const Group& g, const ElementSet& gens, std::size_t cap) {
  if (cap == 0) throw Error(ErrorCode::InvalidSpec, "closure cap must be positive");
  std::vector<GroupElement> steps;
  for (const auto& x : gens) {
    if (!g.contains(x)) throw Error(ErrorCode::NotMember, "generator outside " + g.name());
    steps.push_back(x);
    steps.push_back(g.inverse(x));
  }
  ElementSet result{g.identity()};
  std::deque<GroupElement> queue{g.identity()};
  while (!queue.empty()) {
    const GroupElement x = queue.front();
    queue.pop_front();
    for (const auto& s : steps) {
      GroupElement y = g.mul(x, s);
      if (result.insert(y).second) {
        if (result.size() > cap) return std::nullopt;
        queue.push_back(std::move(y));
      }
    }
  }
  return result;
}

std::optional<ElementSet> conjugacy_class(const Group& g, const GroupElement& x, std::size_t cap) {
  if (!g.contains(x)) throw Error(ErrorCode::NotMember, "element outside " + g.name());
  ElementSet out;
  switch (g.kind()) {
    case GroupKind::Finite:
      for (const auto& h : g.elements()) out.insert(g.conjugate(h, x));
      break;
    case GroupKind::FreeAbelian:
      out.insert(x);
      break;
    case GroupKind::InfiniteDihedral:
      // r^n is conjugate only to r^-n; r^n s is conjugate to every r^(n+2k) s.
      if (x.flip()) return std::nullopt;
      out.insert(x);
      out.insert(g.inverse(x));
      break;
  }
  if (out.size() > cap) return std::nullopt;
  return out;
}

ElementSet conjugacy_class_within(const Group& g, const ElementSet& within, const GroupElement& x) {
  ElementSet out;
  for (const auto& h : within) out.insert(g.conjugate(h, x));
  return out;
}

bool is_subgroup(const Group& g, const ElementSet& h) {
  if (!h.count(g.identity())) return false;
  for (const auto& a : h) {
    if (!g.contains(a) || !h.count(g.inverse(a))) return false;
    for (const auto& b : h)
      if (!h.count(g.mul(a, b))) return false;
  }
  return true;
}

Quotient quotient_group(const Group& g, const ElementSet& normal) {
  if (g.kind() != GroupKind::Finite) throw Error(ErrorCode::InfiniteGroup, "quotients need a finite group");
  for (const auto& x : normal)
    if (!g.contains(x)) throw Error(ErrorCode::NotMember, "subgroup element outside " + g.name());
  if (!is_subgroup(g, normal)) throw Error(ErrorCode::NotSubgroup, g.format(normal) + " is not closed");
  for (const auto& x : g.elements())
    for (const auto& n : normal)
      if (!normal.count(g.conjugate(x, n)))
        throw Error(ErrorCode::NotNormal, g.format(normal) + " is not normal in " + g.name());

  const std::size_t order = *g.order();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> coset(order, unset);
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < order; ++i) {
    if (coset[i] != unset) continue;
    const auto gi = GroupElement::finite(i);
    for (const auto& n : normal) coset[g.mul(gi, n).index()] = reps.size();
    reps.push_back(i);
  }
  const std::size_t m = reps.size();
  std::vector<std::vector<std::size_t>> table(m, std::vector<std::size_t>(m));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) {
    labels.push_back("[" + g.labels()[reps[a]] + "]");
    for (std::size_t b = 0; b < m; ++b)
      table[a][b] = coset[g.mul(GroupElement::finite(reps[a]), GroupElement::finite(reps[b])).index()];
  }
  std::vector<std::size_t> gens;
  for (const auto& x : g.generators()) {
    const std::size_t c = coset[x.index()];
    if (c != coset[g.identity().index()] && std::find(gens.begin(), gens.end(), c) == gens.end())
      gens.push_back(c);
  }
  Group q = Group::finite(g.name() + "/" + g.format(normal), labels, table, gens);
  return Quotient{std::move(q), std::move(coset)};
}

std::optional<std::uint64_t> torsion_check(const Group& g, const GroupElement& x, std::uint64_t cap) {
  if (cap == 0) throw Error(ErrorCode::InvalidSpec, "torsion cap must be positive");
  if (!g.contains(x)) throw Error(ErrorCode::NotMember, "element outside " + g.name());
  const GroupElement e = g.identity();
  switch (g.kind()) {
    case GroupKind::Finite: {
      // Exhaustive: the order divides |G|, so the cap never truncates the search.
      GroupElement y = x;
      for (std::uint64_t n = 1; n <= *g.order(); ++n) {
        if (y == e) return n;
        y = g.mul(y, x);
      }
      return std::nullopt;
    }
    case GroupKind::FreeAbelian:
      if (x == e) return 1;
      return std::nullopt;
    case GroupKind::InfiniteDihedral:
      if (x == e) return 1;
      if (x.flip()) return 2;
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace grl

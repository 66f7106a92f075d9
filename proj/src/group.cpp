#include "latdim/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "latdim/error.hpp"

namespace latdim {

struct FiniteGroup::Data {
  std::size_t order = 0;
  std::vector<Element> table;  // row-major
  Element identity = 0;
  std::vector<Element> inverse;
  std::string label;
  std::vector<std::size_t> radices;
  bool abelian = true;
};

namespace {

std::string triple_text(std::size_t x, std::size_t y, std::size_t z) {
  std::ostringstream os;
  os << "(" << x << "," << y << "," << z << ")";
  return os.str();
}

}  // namespace

FiniteGroup make_group_unchecked(std::vector<Element> flat, std::size_t order, std::string label,
                                 std::vector<std::size_t> radices) {
  auto data = std::make_shared<FiniteGroup::Data>();
  data->order = order;
  data->table = std::move(flat);
  data->label = std::move(label);
  data->radices = radices.empty() ? std::vector<std::size_t>{order} : std::move(radices);

  bool found = false;
  for (std::size_t e = 0; e < order && !found; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < order && ok; ++x)
      ok = data->table[e * order + x] == x && data->table[x * order + e] == x;
    if (ok) {
      data->identity = static_cast<Element>(e);
      found = true;
    }
  }
  if (!found) throw Error(ErrorCode::NoIdentity, "no two-sided identity in table '" + data->label + "'");

  data->inverse.assign(order, 0);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y)
      if (data->table[x * order + y] == data->identity) data->inverse[x] = static_cast<Element>(y);

  for (std::size_t x = 0; x < order && data->abelian; ++x)
    for (std::size_t y = x + 1; y < order; ++y)
      if (data->table[x * order + y] != data->table[y * order + x]) {
        data->abelian = false;
        break;
      }
  return FiniteGroup(std::move(data));
}

FiniteGroup FiniteGroup::from_cayley_table(const std::vector<std::vector<Element>>& table,
                                           std::string label) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorCode::InvalidInput, "empty Cayley table");
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (table[r].size() != n) {
      std::ostringstream os;
      os << "row " << r << " has " << table[r].size() << " entries, expected " << n;
      throw Error(ErrorCode::InvalidInput, os.str());
    }
    for (Element v : table[r]) {
      if (v >= n) {
        std::ostringstream os;
        os << "row " << r << " contains out-of-range index " << v;
        throw Error(ErrorCode::NotLatinSquare, os.str());
      }
      flat.push_back(v);
    }
  }
  // Latin square: rows first, then columns.
  std::vector<char> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < n; ++c) {
      if (seen[flat[r * n + c]]) {
        std::ostringstream os;
        os << "row " << r << " repeats entry " << flat[r * n + c];
        throw Error(ErrorCode::NotLatinSquare, os.str());
      }
      seen[flat[r * n + c]] = 1;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < n; ++r) {
      if (seen[flat[r * n + c]]) {
        std::ostringstream os;
        os << "column " << c << " repeats entry " << flat[r * n + c];
        throw Error(ErrorCode::NotLatinSquare, os.str());
      }
      seen[flat[r * n + c]] = 1;
    }
  }
  bool has_identity = false;
  for (std::size_t e = 0; e < n && !has_identity; ++e) {
    has_identity = true;
    for (std::size_t x = 0; x < n && has_identity; ++x)
      has_identity = flat[e * n + x] == x && flat[x * n + e] == x;
  }
  if (!has_identity) throw Error(ErrorCode::NoIdentity, "no two-sided identity in table '" + label + "'");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const auto xy = flat[x * n + y];
        const auto yz = flat[y * n + z];
        if (flat[xy * n + z] != flat[x * n + yz])
          throw Error(ErrorCode::NotAssociative, "associativity fails at " + triple_text(x, y, z));
      }
  return make_group_unchecked(std::move(flat), n, std::move(label), {});
}

std::size_t FiniteGroup::order() const noexcept { return data_->order; }
Element FiniteGroup::identity() const noexcept { return data_->identity; }
Element FiniteGroup::mul(Element x, Element y) const noexcept { return data_->table[x * data_->order + y]; }
Element FiniteGroup::inv(Element x) const noexcept { return data_->inverse[x]; }
Element FiniteGroup::conjugate(Element x, Element y) const noexcept { return mul(mul(inv(y), x), y); }
bool FiniteGroup::commute(Element x, Element y) const noexcept { return mul(x, y) == mul(y, x); }
bool FiniteGroup::is_abelian() const noexcept { return data_->abelian; }
const std::string& FiniteGroup::label() const noexcept { return data_->label; }
const std::vector<std::size_t>& FiniteGroup::radices() const noexcept { return data_->radices; }

std::size_t FiniteGroup::element_order(Element x) const {
  std::size_t k = 1;
  for (Element p = x; p != identity(); p = mul(p, x)) ++k;
  return k;
}

std::vector<std::vector<Element>> FiniteGroup::cayley() const {
  const std::size_t n = order();
  std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) rows[x][y] = data_->table[x * n + y];
  return rows;
}

std::vector<std::size_t> FiniteGroup::coordinates(Element x) const {
  const auto& r = radices();
  std::vector<std::size_t> c(r.size());
  std::size_t rest = x;
  for (std::size_t i = r.size(); i-- > 0;) {
    c[i] = rest % r[i];
    rest /= r[i];
  }
  return c;
}

Element FiniteGroup::from_coordinates(std::span<const std::size_t> coords) const {
  const auto& r = radices();
  if (coords.size() != r.size()) {
    std::ostringstream os;
    os << "tuple has " << coords.size() << " coordinates, group '" << label() << "' uses "
       << r.size();
    throw Error(ErrorCode::InvalidInput, os.str());
  }
  std::size_t index = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (coords[i] >= r[i]) {
      std::ostringstream os;
      os << "coordinate " << i << " = " << coords[i] << " out of range (radix " << r[i] << ")";
      throw Error(ErrorCode::InvalidInput, os.str());
    }
    index = index * r[i] + coords[i];
  }
  return static_cast<Element>(index);
}

// ---------------------------------------------------------------------------
// Subgroups

struct Subgroup::Data {
  FiniteGroup parent;
  std::vector<Element> elements;
  std::vector<Element> transversal;
  std::vector<Element> right_transversal;
  std::vector<std::int64_t> position;
  FiniteGroup local;
};

namespace {

std::vector<Element> coset_representatives(const FiniteGroup& g, const std::vector<Element>& h,
                                           bool left) {
  std::vector<char> covered(g.order(), 0);
  std::vector<Element> reps;
  for (Element x = 0; x < g.order(); ++x) {
    if (covered[x]) continue;
    reps.push_back(x);
    for (Element y : h) covered[left ? g.mul(x, y) : g.mul(y, x)] = 1;
  }
  return reps;
}

}  // namespace

Subgroup::Subgroup(FiniteGroup parent, std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  const std::size_t n = parent.order();
  std::vector<std::int64_t> position(n, -1);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] >= n) throw Error(ErrorCode::InvalidInput, "subgroup element out of range");
    position[elements[i]] = static_cast<std::int64_t>(i);
  }
  if (position[parent.identity()] < 0)
    throw Error(ErrorCode::InvalidInput, "subgroup does not contain the identity");
  for (Element x : elements)
    for (Element y : elements)
      if (position[parent.mul(x, y)] < 0) {
        std::ostringstream os;
        os << "subset not closed: " << x << "*" << y << " = " << parent.mul(x, y);
        throw Error(ErrorCode::InvalidInput, os.str());
      }

  const std::size_t k = elements.size();
  std::vector<Element> flat(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      flat[i * k + j] = static_cast<Element>(position[parent.mul(elements[i], elements[j])]);

  std::ostringstream label;
  label << parent.label() << "[";
  for (std::size_t i = 0; i < k; ++i) label << (i ? "," : "") << elements[i];
  label << "]";

  auto local = make_group_unchecked(std::move(flat), k, label.str(), {});
  auto transversal = coset_representatives(parent, elements, true);
  auto right = coset_representatives(parent, elements, false);
  data_ = std::make_shared<Data>(Data{std::move(parent), std::move(elements), std::move(transversal),
                                      std::move(right), std::move(position), std::move(local)});
}

const FiniteGroup& Subgroup::parent() const noexcept { return data_->parent; }
const std::vector<Element>& Subgroup::elements() const noexcept { return data_->elements; }
const std::vector<Element>& Subgroup::transversal() const noexcept { return data_->transversal; }
const std::vector<Element>& Subgroup::right_transversal() const noexcept {
  return data_->right_transversal;
}
const FiniteGroup& Subgroup::as_group() const noexcept { return data_->local; }
bool Subgroup::contains(Element x) const noexcept {
  return x < data_->position.size() && data_->position[x] >= 0;
}
std::optional<std::size_t> Subgroup::local_index(Element x) const noexcept {
  if (!contains(x)) return std::nullopt;
  return static_cast<std::size_t>(data_->position[x]);
}

namespace {

/// Elements of the subgroup generated by `gens` (unsorted closure).
std::vector<Element> closure(const FiniteGroup& g, std::span<const Element> gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Element> members{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t head = 0; head < members.size(); ++head) {
    const Element x = members[head];
    for (Element s : gens) {
      const Element y = g.mul(x, s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  return members;
}

}  // namespace

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Element> gens) {
  for (Element s : gens)
    if (s >= g.order()) throw Error(ErrorCode::InvalidInput, "generator out of range");
  return Subgroup(g, closure(g, gens));
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup(g, {g.identity()}); }

Subgroup whole_group(const FiniteGroup& g) {
  std::vector<Element> all(g.order());
  std::iota(all.begin(), all.end(), Element{0});
  return Subgroup(g, std::move(all));
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, std::size_t bound) {
  if (g.order() > bound) {
    std::ostringstream os;
    os << "group order " << g.order() << " exceeds subgroup enumeration bound " << bound;
    throw Error(ErrorCode::BoundExceeded, os.str());
  }
  // Layered extension: every subgroup is <H, x> for a smaller subgroup H.
  struct Found {
    std::vector<Element> elements;  // sorted
    std::vector<Element> gens;
  };
  std::map<std::vector<Element>, std::size_t> index;
  std::vector<Found> found;
  found.push_back({{g.identity()}, {}});
  index.emplace(found.back().elements, 0);
  for (std::size_t head = 0; head < found.size(); ++head) {
    const Found current = found[head];
    std::vector<char> in(g.order(), 0);
    for (Element x : current.elements) in[x] = 1;
    for (Element x = 0; x < g.order(); ++x) {
      if (in[x]) continue;
      auto gens = current.gens;
      gens.push_back(x);
      auto elems = closure(g, gens);
      std::sort(elems.begin(), elems.end());
      if (index.emplace(elems, found.size()).second) found.push_back({std::move(elems), std::move(gens)});
    }
  }
  std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  });
  std::vector<Subgroup> result;
  result.reserve(found.size());
  for (auto& f : found) result.emplace_back(g, std::move(f.elements));
  return result;
}

Subgroup centralizer(const FiniteGroup& g, Element x) {
  std::vector<Element> members;
  for (Element y = 0; y < g.order(); ++y)
    if (g.commute(x, y)) members.push_back(y);
  return Subgroup(g, std::move(members));
}

ConjugacyData conjugacy(const FiniteGroup& g) {
  const std::size_t n = g.order();
  ConjugacyData data;
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  data.class_of.assign(n, kUnassigned);
  for (Element x = 0; x < n; ++x) {
    if (data.class_of[x] != kUnassigned) continue;
    std::set<Element> orbit;
    for (Element y = 0; y < n; ++y) orbit.insert(g.conjugate(x, y));
    const std::size_t id = data.classes.size();
    for (Element z : orbit) data.class_of[z] = id;
    data.classes.emplace_back(orbit.begin(), orbit.end());
    data.centralizers.push_back(centralizer(g, x));
  }
  return data;
}

std::vector<Element> centralizer_transversal(const FiniteGroup& g, Element gamma) {
  return centralizer(g, gamma).right_transversal();
}

// ---------------------------------------------------------------------------
// Builders

FiniteGroup build_cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "cyclic group order must be positive");
  std::vector<Element> flat(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = static_cast<Element>((i + j) % n);
  return make_group_unchecked(std::move(flat), n, "Z" + std::to_string(n), {n});
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t a = g.order(), b = h.order(), n = a * b;
  std::vector<Element> flat(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto gx = static_cast<Element>(x / b), hx = static_cast<Element>(x % b);
      const auto gy = static_cast<Element>(y / b), hy = static_cast<Element>(y % b);
      flat[x * n + y] = static_cast<Element>(g.mul(gx, gy) * b + h.mul(hx, hy));
    }
  auto radices = g.radices();
  radices.insert(radices.end(), h.radices().begin(), h.radices().end());
  return make_group_unchecked(std::move(flat), n, g.label() + "x" + h.label(), std::move(radices));
}

FiniteGroup build_dihedral(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "dihedral parameter must be positive");
  const std::size_t order = 2 * n;
  std::vector<Element> flat(order * order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t fx = x / n, kx = x % n, fy = y / n, ky = y % n;
      // s^fx r^kx s^fy r^ky = s^(fx+fy) r^((-1)^fy kx + ky)
      const std::size_t k = (fy ? (n - kx) % n : kx) + ky;
      flat[x * order + y] = static_cast<Element>(((fx + fy) % 2) * n + k % n);
    }
  return make_group_unchecked(std::move(flat), order, "D" + std::to_string(n), {order});
}

FiniteGroup build_symmetric(std::size_t n) {
  if (n == 0 || n > 5) throw Error(ErrorCode::InvalidInput, "symmetric group degree must be in 1..5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, Element> id;
  for (std::size_t i = 0; i < perms.size(); ++i) id[perms[i]] = static_cast<Element>(i);
  const std::size_t order = perms.size();
  std::vector<Element> flat(order * order);
  std::vector<int> c(n);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      // (x*y)(i) = x(y(i))
      for (std::size_t i = 0; i < n; ++i) c[i] = perms[x][perms[y][i]];
      flat[x * order + y] = id[c];
    }
  return make_group_unchecked(std::move(flat), order, "S" + std::to_string(n), {order});
}

FiniteGroup build_quaternion() {
  // basis 1,i,j,k -> 0..3; products b_a b_b = sign * b_c
  static constexpr int kBasis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<Element> flat(64);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int bx = x / 2, by = y / 2;
      int sign = (x % 2 ? -1 : 1) * (y % 2 ? -1 : 1) * kSign[bx][by];
      flat[x * 8 + y] = static_cast<Element>(2 * kBasis[bx][by] + (sign < 0 ? 1 : 0));
    }
  return make_group_unchecked(std::move(flat), 8, "Q8", {8});
}

namespace {

FiniteGroup build_factor(const std::string& name) {
  auto number = [&](std::size_t from) -> std::size_t {
    if (from >= name.size()) throw Error(ErrorCode::InvalidInput, "missing size in group name '" + name + "'");
    std::size_t value = 0;
    for (std::size_t i = from; i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9')
        throw Error(ErrorCode::InvalidInput, "bad group name '" + name + "'");
      value = value * 10 + static_cast<std::size_t>(name[i] - '0');
      if (value > 4096) throw Error(ErrorCode::InvalidInput, "group name '" + name + "' too large");
    }
    return value;
  };
  if (name.empty()) throw Error(ErrorCode::InvalidInput, "empty group factor name");
  switch (name[0]) {
    case 'Z': return build_cyclic(number(1));
    case 'S': return build_symmetric(number(1));
    case 'D': return build_dihedral(number(1));
    case 'Q':
      if (name == "Q8") return build_quaternion();
      break;
    default: break;
  }
  throw Error(ErrorCode::InvalidInput, "unknown group name '" + name + "'");
}

}  // namespace

FiniteGroup build_named(const std::string& name) {
  std::vector<std::string> parts;
  std::string current;
  for (char ch : name) {
    if (ch == 'x' || ch == '*') {
      parts.push_back(current);
      current.clear();
    } else if (ch != ' ') {
      current.push_back(ch);
    }
  }
  parts.push_back(current);
  FiniteGroup g = build_factor(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) g = direct_product(g, build_factor(parts[i]));
  return g;
}

}  // namespace latdim

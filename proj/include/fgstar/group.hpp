#pragma once

// Finite groups as validated Cayley tables, plus the structural predicates
// (center, commutators, LC property, Hamiltonian 2-groups) that the rest of
// the library quantifies over. Elements are dense indices 0..n-1 and every
// operation is a table lookup, which is all we need at order <= 32.

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fgstar {

// Thrown when a multiplication table fails one of the group axioms.
// `kind` says which axiom broke; `detail` locates the failure:
//   NotLatinSquare -> {axis, index, -1} with axis 0 = row, 1 = column
//   NoIdentity     -> unused
//   NotAssociative -> the witness triple {x, y, z}
class ValidationError : public std::runtime_error {
public:
  enum class Kind { NotLatinSquare, NoIdentity, NotAssociative };

  ValidationError(Kind kind, const std::string& msg,
                  std::array<int, 3> detail = {-1, -1, -1})
      : std::runtime_error(msg), kind(kind), detail(detail) {}

  Kind kind;
  std::array<int, 3> detail;
};

class FiniteGroup {
public:
  // Validates the table on construction: entries in range, Latin square,
  // two-sided identity, associativity over all n^3 triples. Inverses are
  // derived afterwards, so a constructed group satisfies every axiom.
  FiniteGroup(std::string label, const std::vector<std::vector<int>>& table,
              std::vector<std::string> names)
      : label_(std::move(label)), names_(std::move(names)) {
    order_ = static_cast<int>(table.size());
    if (order_ <= 0)
      throw std::invalid_argument("group table must be non-empty");
    if (static_cast<int>(names_.size()) != order_)
      throw std::invalid_argument("expected " + std::to_string(order_) +
                                  " element names, got " +
                                  std::to_string(names_.size()));
    table_.resize(static_cast<size_t>(order_) * order_);
    for (int i = 0; i < order_; ++i) {
      if (static_cast<int>(table[i].size()) != order_)
        throw std::invalid_argument("table row " + std::to_string(i) +
                                    " has wrong length");
      for (int j = 0; j < order_; ++j) {
        int v = table[i][j];
        if (v < 0 || v >= order_)
          throw std::invalid_argument("table entry (" + std::to_string(i) +
                                      "," + std::to_string(j) +
                                      ") out of range");
        table_[static_cast<size_t>(i) * order_ + j] = v;
      }
    }
    check_latin_square();
    find_identity();
    check_associativity();
    build_inverses();
  }

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const {
    return table_[static_cast<size_t>(a) * order_ + b];
  }
  int inv(int a) const { return inverses_[a]; }
  // a^-1 g a
  int conjugate(int a, int g) const { return mul(mul(inv(a), g), a); }

  const std::string& label() const { return label_; }
  const std::string& element_name(int g) const { return names_[g]; }
  const std::vector<std::string>& element_names() const { return names_; }

  int element_by_name(const std::string& name) const {
    for (int i = 0; i < order_; ++i)
      if (names_[i] == name)
        return i;
    throw std::invalid_argument("no element named '" + name + "' in " +
                                label_);
  }

  int element_order(int g) const {
    int acc = g;
    int k = 1;
    while (acc != identity_) {
      acc = mul(acc, g);
      ++k;
    }
    return k;
  }

  bool is_abelian() const {
    for (int a = 0; a < order_; ++a)
      for (int b = a + 1; b < order_; ++b)
        if (mul(a, b) != mul(b, a))
          return false;
    return true;
  }

private:
  void check_latin_square() {
    std::vector<char> seen(order_);
    for (int i = 0; i < order_; ++i) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int j = 0; j < order_; ++j)
        seen[mul(i, j)] = 1;
      if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw ValidationError(ValidationError::Kind::NotLatinSquare,
                              "row " + std::to_string(i) +
                                  " is not a permutation",
                              {0, i, -1});
    }
    for (int j = 0; j < order_; ++j) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int i = 0; i < order_; ++i)
        seen[mul(i, j)] = 1;
      if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw ValidationError(ValidationError::Kind::NotLatinSquare,
                              "column " + std::to_string(j) +
                                  " is not a permutation",
                              {1, j, -1});
    }
  }

  void find_identity() {
    identity_ = -1;
    for (int e = 0; e < order_; ++e) {
      bool ok = true;
      for (int i = 0; i < order_ && ok; ++i)
        ok = mul(e, i) == i && mul(i, e) == i;
      if (ok) {
        identity_ = e;
        return;
      }
    }
    throw ValidationError(ValidationError::Kind::NoIdentity,
                          "table has no two-sided identity");
  }

  void check_associativity() {
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b)
        for (int c = 0; c < order_; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw ValidationError(
                ValidationError::Kind::NotAssociative,
                "associativity fails at (" + std::to_string(a) + "," +
                    std::to_string(b) + "," + std::to_string(c) + ")",
                {a, b, c});
  }

  void build_inverses() {
    inverses_.assign(order_, -1);
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b)
        if (mul(a, b) == identity_ && mul(b, a) == identity_)
          inverses_[a] = b;
    // a Latin square with identity and associativity always yields these
    for (int a = 0; a < order_; ++a)
      if (inverses_[a] < 0)
        throw ValidationError(ValidationError::Kind::NotLatinSquare,
                              "element " + std::to_string(a) +
                                  " has no two-sided inverse",
                              {0, a, -1});
  }

  std::string label_;
  int order_ = 0;
  int identity_ = 0;
  std::vector<int> table_;
  std::vector<int> inverses_;
  std::vector<std::string> names_;
};

inline FiniteGroup validate_group(const std::vector<std::vector<int>>& table,
                                  std::vector<std::string> names,
                                  std::string label = "imported") {
  return FiniteGroup(std::move(label), table, std::move(names));
}

// ---- constructors for the built-in families ----

inline FiniteGroup cyclic_group(int n) {
  if (n < 1)
    throw std::invalid_argument("cyclic group needs n >= 1");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t[i][j] = (i + j) % n;
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i)
    names[i] = i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i));
  return FiniteGroup("C" + std::to_string(n), t, std::move(names));
}

// D_n of order 2n: rotations r^i at indices 0..n-1, reflections r^i s at
// indices n..2n-1, with s r = r^-1 s.
inline FiniteGroup dihedral_group(int n) {
  if (n < 1)
    throw std::invalid_argument("dihedral group needs n >= 1");
  int order = 2 * n;
  auto idx = [n](int i, int a) { return ((i % n) + n) % n + (a ? n : 0); };
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < 2; ++a)
      for (int j = 0; j < n; ++j)
        for (int b = 0; b < 2; ++b)
          t[idx(i, a)][idx(j, b)] = idx(a ? i - j : i + j, a ^ b);
  std::vector<std::string> names(order);
  for (int i = 0; i < n; ++i) {
    std::string ri = i == 0 ? "" : (i == 1 ? "r" : "r^" + std::to_string(i));
    names[i] = i == 0 ? "1" : ri;
    names[n + i] = ri + "s";
  }
  return FiniteGroup("D" + std::to_string(n), t, std::move(names));
}

// Generalized quaternion group of order 2^k (k >= 3):
//   < x, y : x^(2^(k-1)) = 1, y^2 = x^(2^(k-2)), y^-1 x y = x^-1 >
// Powers x^i at indices 0..m-1 (m = 2^(k-1)), x^i y at indices m..2m-1.
inline FiniteGroup quaternion_group(int order) {
  if (order < 8 || (order & (order - 1)) != 0)
    throw std::invalid_argument(
        "quaternion group order must be a power of 2, at least 8");
  int m = order / 2;
  auto idx = [m](int i, int a) { return ((i % m) + m) % m + (a ? m : 0); };
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int i = 0; i < m; ++i)
    for (int a = 0; a < 2; ++a)
      for (int j = 0; j < m; ++j)
        for (int b = 0; b < 2; ++b) {
          // (x^i y^a)(x^j y^b); moving y past x^j flips the exponent,
          // and y^2 contributes x^(m/2).
          int e = a ? i - j : i + j;
          if (a && b)
            e += m / 2;
          t[idx(i, a)][idx(j, b)] = idx(e, a ^ b);
        }
  std::vector<std::string> names(order);
  for (int i = 0; i < m; ++i) {
    std::string xi = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
    names[i] = i == 0 ? "1" : xi;
    names[m + i] = xi + "y";
  }
  return FiniteGroup("Q" + std::to_string(order), t, std::move(names));
}

// (C2)^k with elements as bitmasks; the product is xor.
inline FiniteGroup elementary_abelian_2_group(int k) {
  if (k < 1 || k > 5)
    throw std::invalid_argument("elementary abelian rank must be in 1..5");
  int order = 1 << k;
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j)
      t[i][j] = i ^ j;
  std::vector<std::string> names(order);
  for (int b = 0; b < order; ++b) {
    if (b == 0) {
      names[b] = "1";
      continue;
    }
    std::string s;
    for (int bit = 0; bit < k; ++bit)
      if (b & (1 << bit))
        s += "e" + std::to_string(bit + 1);
    names[b] = s;
  }
  return FiniteGroup("C2^" + std::to_string(k), t, std::move(names));
}

// Componentwise product; (a, b) lives at index a*|H| + b.
inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  int n = g.order() * h.order();
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < h.order(); ++b) {
      int i = a * h.order() + b;
      names[i] = "(" + g.element_name(a) + "," + h.element_name(b) + ")";
      for (int c = 0; c < g.order(); ++c)
        for (int d = 0; d < h.order(); ++d)
          t[i][c * h.order() + d] = g.mul(a, c) * h.order() + h.mul(b, d);
    }
  return FiniteGroup(g.label() + "x" + h.label(), t, std::move(names));
}

// ---- subgroups ----

// Immutable membership mask over a parent group. Construction checks the
// subgroup axioms (identity, closure; inverses follow by finiteness).
class SubgroupMask {
public:
  SubgroupMask(const FiniteGroup& parent, std::vector<char> members)
      : parent_(&parent), members_(std::move(members)) {
    if (static_cast<int>(members_.size()) != parent.order())
      throw std::invalid_argument("subgroup mask has wrong length");
    if (!members_[parent.identity()])
      throw std::invalid_argument("subgroup must contain the identity");
    size_ = 0;
    for (int a = 0; a < parent.order(); ++a) {
      if (!members_[a])
        continue;
      ++size_;
      for (int b = 0; b < parent.order(); ++b)
        if (members_[b] && !members_[parent.mul(a, b)])
          throw std::invalid_argument("subgroup not closed under products");
    }
  }

  const FiniteGroup& parent() const { return *parent_; }
  bool contains(int g) const { return members_[g] != 0; }
  int size() const { return size_; }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size_);
    for (int g = 0; g < parent_->order(); ++g)
      if (members_[g])
        out.push_back(g);
    return out;
  }

  bool operator==(const SubgroupMask& other) const {
    return parent_ == other.parent_ && members_ == other.members_;
  }

private:
  const FiniteGroup* parent_;
  std::vector<char> members_;
  int size_ = 0;
};

inline SubgroupMask center(const FiniteGroup& g) {
  std::vector<char> m(g.order(), 1);
  for (int z = 0; z < g.order(); ++z)
    for (int a = 0; a < g.order(); ++a)
      if (g.mul(z, a) != g.mul(a, z)) {
        m[z] = 0;
        break;
      }
  return SubgroupMask(g, std::move(m));
}

// g^-1 h^-1 g h
inline int commutator(const FiniteGroup& grp, int g, int h) {
  return grp.mul(grp.mul(grp.inv(g), grp.inv(h)), grp.mul(g, h));
}

// Smallest subgroup containing `gens`: saturate under products. Inverses
// come along automatically since every element has finite order.
inline SubgroupMask subgroup_closure(const FiniteGroup& g,
                                     const std::vector<int>& gens) {
  std::vector<char> m(g.order(), 0);
  m[g.identity()] = 1;
  for (int x : gens)
    m[x] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a = 0; a < g.order(); ++a) {
      if (!m[a])
        continue;
      for (int b = 0; b < g.order(); ++b) {
        if (!m[b])
          continue;
        int ab = g.mul(a, b);
        if (!m[ab]) {
          m[ab] = 1;
          grew = true;
        }
      }
    }
  }
  return SubgroupMask(g, std::move(m));
}

inline SubgroupMask commutator_subgroup(const FiniteGroup& g) {
  std::vector<int> comms;
  std::vector<char> seen(g.order(), 0);
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) {
      int c = commutator(g, a, b);
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  return subgroup_closure(g, comms);
}

// The single element s != 1 such that every commutator lies in {1, s},
// if there is one. Looks at commutator values, not the subgroup they
// generate, so two distinct non-identity commutators mean "absent".
inline std::optional<int> unique_nonidentity_commutator(const FiniteGroup& g) {
  int s = -1;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) {
      int c = commutator(g, a, b);
      if (c == g.identity())
        continue;
      if (s < 0)
        s = c;
      else if (s != c)
        return std::nullopt;
    }
  if (s < 0)
    return std::nullopt;
  return s;
}

// G is an LC-group when it is non-abelian and commuting g, h forces one of
// g, h, gh into the center.
inline bool is_LC(const FiniteGroup& g) {
  if (g.is_abelian())
    return false;
  SubgroupMask z = center(g);
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) {
      if (g.mul(a, b) != g.mul(b, a))
        continue;
      if (!z.contains(a) && !z.contains(b) && !z.contains(g.mul(a, b)))
        return false;
    }
  return true;
}

// True iff G/Z(G) is the Klein four-group: index 4 and every square falls
// into the center (order-4 groups of exponent 2 are Klein).
inline bool central_quotient_klein(const FiniteGroup& g) {
  SubgroupMask z = center(g);
  if (g.order() != 4 * z.size())
    return false;
  for (int a = 0; a < g.order(); ++a)
    if (!z.contains(g.mul(a, a)))
      return false;
  return true;
}

// Hamiltonian 2-group: non-abelian, order a power of 2, and every cyclic
// subgroup normal. Conjugates of a generator land back in the subgroup it
// generates, which extends to all powers.
inline bool is_hamiltonian_2_group(const FiniteGroup& g) {
  if (g.is_abelian())
    return false;
  int n = g.order();
  if ((n & (n - 1)) != 0)
    return false;
  for (int a = 0; a < n; ++a) {
    std::vector<char> cyc(n, 0);
    int p = g.identity();
    cyc[p] = 1;
    do {
      p = g.mul(p, a);
      cyc[p] = 1;
    } while (p != g.identity());
    for (int h = 0; h < n; ++h)
      if (!cyc[g.conjugate(h, a)])
        return false;
  }
  return true;
}

// A subgroup re-packaged as a standalone group, with index maps in both
// directions. Used to ask structural questions about the kernel N.
struct SubgroupView {
  FiniteGroup group;
  std::vector<int> to_parent;   // sub index -> parent index
  std::vector<int> from_parent; // parent index -> sub index, or -1
};

inline SubgroupView subgroup_as_group(const FiniteGroup& g,
                                      const SubgroupMask& m,
                                      const std::string& label) {
  std::vector<int> to_parent = m.elements();
  std::vector<int> from_parent(g.order(), -1);
  for (int i = 0; i < static_cast<int>(to_parent.size()); ++i)
    from_parent[to_parent[i]] = i;
  int k = static_cast<int>(to_parent.size());
  std::vector<std::vector<int>> t(k, std::vector<int>(k));
  std::vector<std::string> names(k);
  for (int i = 0; i < k; ++i) {
    names[i] = g.element_name(to_parent[i]);
    for (int j = 0; j < k; ++j)
      t[i][j] = from_parent[g.mul(to_parent[i], to_parent[j])];
  }
  return SubgroupView{FiniteGroup(label, t, std::move(names)),
                      std::move(to_parent), std::move(from_parent)};
}

} // namespace fgstar

#pragma once

// Group involutions (anti-automorphisms of order <= 2), orientations
// sigma: G -> {+1, -1}, exhaustive enumeration of both, and the
// compatibility condition g g* in ker(sigma) that makes the pair act as an
// algebra involution downstream.
//
// Involution and Orientation borrow the FiniteGroup they were built from;
// keep that object alive and at a stable address while they are in use.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "group.hpp"

namespace fgstar {

// Thrown by canonical_involution when the group does not have the required
// shape; the message names the predicate that failed.
class NotSLCShaped : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An anti-automorphism * with (gh)* = h* g* and (g*)* = g. Construction
// verifies both identities on all pairs, so an Involution object is always
// a genuine involution.
class Involution {
public:
  Involution(const FiniteGroup& g, std::vector<int> image)
      : group_(&g), image_(std::move(image)) {
    int n = g.order();
    if (static_cast<int>(image_.size()) != n)
      throw std::invalid_argument("involution image has wrong length");
    std::vector<char> hit(n, 0);
    for (int a = 0; a < n; ++a) {
      if (image_[a] < 0 || image_[a] >= n)
        throw std::invalid_argument("involution image out of range");
      hit[image_[a]] = 1;
    }
    for (int a = 0; a < n; ++a)
      if (!hit[a])
        throw std::invalid_argument("involution image is not a bijection");
    for (int a = 0; a < n; ++a) {
      if (image_[image_[a]] != a)
        throw std::invalid_argument("map is not of order <= 2 at " +
                                    g.element_name(a));
      for (int b = 0; b < n; ++b)
        if (image_[g.mul(a, b)] != g.mul(image_[b], image_[a]))
          throw std::invalid_argument("map is not an anti-homomorphism at (" +
                                      g.element_name(a) + ", " +
                                      g.element_name(b) + ")");
    }
  }

  const FiniteGroup& group() const { return *group_; }
  int operator()(int g) const { return image_[g]; }
  const std::vector<int>& image() const { return image_; }

  bool operator==(const Involution& other) const {
    return group_ == other.group_ && image_ == other.image_;
  }

private:
  const FiniteGroup* group_;
  std::vector<int> image_;
};

inline Involution classical_involution(const FiniteGroup& g) {
  std::vector<int> image(g.order());
  for (int a = 0; a < g.order(); ++a)
    image[a] = g.inv(a);
  return Involution(g, std::move(image));
}

// g* = g for central g, g* = s g otherwise, where s is the unique
// non-identity commutator. Defined exactly when the group is non-abelian
// with such an s and Klein central quotient.
inline Involution canonical_involution(const FiniteGroup& g) {
  if (g.is_abelian())
    throw NotSLCShaped("canonical involution on " + g.label() +
                       ": group is abelian");
  auto s = unique_nonidentity_commutator(g);
  if (!s)
    throw NotSLCShaped("canonical involution on " + g.label() +
                       ": no unique non-identity commutator");
  if (!central_quotient_klein(g))
    throw NotSLCShaped("canonical involution on " + g.label() +
                       ": central quotient is not Klein");
  SubgroupMask z = center(g);
  std::vector<int> image(g.order());
  for (int a = 0; a < g.order(); ++a)
    image[a] = z.contains(a) ? a : g.mul(*s, a);
  return Involution(g, std::move(image));
}

namespace detail {

// Greedy generator chain: pick the smallest element outside the current
// closure as the next generator, and remember how every element is first
// reached (parent * generator). Images of the generators then determine
// images of everything else, which is what both enumerators below exploit.
struct GenChain {
  std::vector<int> gens;
  std::vector<int> parent;                  // -1 for the identity
  std::vector<int> via;                     // generator index used
  std::vector<int> placed;                  // all elements in placement order
  std::vector<std::vector<int>> stage_elems; // elements first reached at stage t
};

inline GenChain build_gen_chain(const FiniteGroup& g) {
  int n = g.order();
  GenChain ch;
  ch.parent.assign(n, -1);
  ch.via.assign(n, -1);
  std::vector<char> known(n, 0);
  known[g.identity()] = 1;
  ch.placed.push_back(g.identity());
  while (static_cast<int>(ch.placed.size()) < n) {
    int gen = 0;
    while (known[gen])
      ++gen;
    ch.gens.push_back(gen);
    int t = static_cast<int>(ch.gens.size()) - 1;
    ch.stage_elems.emplace_back();
    for (size_t i = 0; i < ch.placed.size(); ++i) {
      int a = ch.placed[i];
      for (int j = 0; j <= t; ++j) {
        int e = g.mul(a, ch.gens[j]);
        if (!known[e]) {
          known[e] = 1;
          ch.parent[e] = a;
          ch.via[e] = j;
          ch.placed.push_back(e);
          ch.stage_elems[t].push_back(e);
        }
      }
    }
  }
  return ch;
}

struct AutSearch {
  const FiniteGroup& g;
  const GenChain& ch;
  std::vector<int> img;
  std::vector<char> taken;
  std::vector<int> placed_count; // how many elements are placed after stage t
  std::vector<std::vector<int>>& out;

  AutSearch(const FiniteGroup& g, const GenChain& ch,
            std::vector<std::vector<int>>& out)
      : g(g), ch(ch), img(g.order(), -1), taken(g.order(), 0), out(out) {
    img[g.identity()] = g.identity();
    taken[g.identity()] = 1;
  }

  int gen_image(int j, int t, int candidate) const {
    return j == t ? candidate : img[ch.gens[j]];
  }

  // Extend img over the elements first reached at stage t, assuming
  // generator t maps to `candidate`. Returns false on an image collision.
  bool propagate(int t, int candidate, std::vector<int>& touched) {
    for (int e : ch.stage_elems[t]) {
      int v = g.mul(img[ch.parent[e]], gen_image(ch.via[e], t, candidate));
      if (taken[v])
        return false;
      img[e] = v;
      taken[v] = 1;
      touched.push_back(e);
    }
    return true;
  }

  // Multiplicativity against every generator suffices: homomorphy on all
  // pairs follows by induction on word length once (a, gen) pairs check out.
  bool consistent(int t, int candidate) const {
    int upto = 0;
    for (int u = 0; u <= t; ++u)
      upto += static_cast<int>(ch.stage_elems[u].size());
    for (int i = 0; i <= upto; ++i) {
      int a = ch.placed[i];
      for (int j = 0; j <= t; ++j) {
        int gi = gen_image(j, t, candidate);
        if (img[g.mul(a, ch.gens[j])] != g.mul(img[a], gi))
          return false;
      }
    }
    return true;
  }

  void run(int t) {
    if (t == static_cast<int>(ch.gens.size())) {
      out.push_back(img);
      return;
    }
    int want = g.element_order(ch.gens[t]);
    for (int c = 0; c < g.order(); ++c) {
      if (taken[c] || g.element_order(c) != want)
        continue;
      std::vector<int> touched;
      if (propagate(t, c, touched) && consistent(t, c))
        run(t + 1);
      for (int e : touched) {
        taken[img[e]] = 0;
        img[e] = -1;
      }
    }
  }
};

} // namespace detail

// All automorphisms of g, as image arrays, in the order the backtracking
// search finds them. The order <= 32 bound keeps worst cases (elementary
// abelian groups) at a few seconds.
inline std::vector<std::vector<int>>
enumerate_automorphisms(const FiniteGroup& g, int max_order = 32) {
  if (g.order() > max_order)
    throw std::invalid_argument("automorphism enumeration refused: order " +
                                std::to_string(g.order()) + " exceeds bound " +
                                std::to_string(max_order));
  detail::GenChain ch = detail::build_gen_chain(g);
  std::vector<std::vector<int>> out;
  detail::AutSearch search(g, ch, out);
  search.run(0);
  return out;
}

// Every involution on g. Involutions correspond one-to-one to
// automorphisms psi with psi^2 = id via g* = psi(g)^-1, so we enumerate
// those and convert. Output is sorted by image array, so the order is
// deterministic and reproducible across runs.
inline std::vector<Involution> enumerate_involutions(const FiniteGroup& g,
                                                     int max_order = 32) {
  if (g.order() > max_order)
    throw std::invalid_argument("involution enumeration refused: order " +
                                std::to_string(g.order()) + " exceeds bound " +
                                std::to_string(max_order));
  std::vector<std::vector<int>> images;
  for (const std::vector<int>& psi : enumerate_automorphisms(g, max_order)) {
    bool order2 = true;
    for (int a = 0; a < g.order() && order2; ++a)
      order2 = psi[psi[a]] == a;
    if (!order2)
      continue;
    std::vector<int> star(g.order());
    for (int a = 0; a < g.order(); ++a)
      star[a] = g.inv(psi[a]);
    images.push_back(std::move(star));
  }
  std::sort(images.begin(), images.end());
  std::vector<Involution> out;
  out.reserve(images.size());
  for (std::vector<int>& im : images)
    out.emplace_back(g, std::move(im));
  return out;
}

// A homomorphism sigma: G -> {+1, -1}. Nontrivial orientations have a
// kernel of index exactly 2; the trivial one (all +1) is kept around as a
// flagged first-class value so both theorem families run in one pipeline.
class Orientation {
public:
  Orientation(const FiniteGroup& g, std::vector<int> sign)
      : group_(&g), sign_(std::move(sign)) {
    int n = g.order();
    if (static_cast<int>(sign_.size()) != n)
      throw std::invalid_argument("orientation sign array has wrong length");
    for (int a = 0; a < n; ++a)
      if (sign_[a] != 1 && sign_[a] != -1)
        throw std::invalid_argument("orientation signs must be +1 or -1");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (sign_[g.mul(a, b)] != sign_[a] * sign_[b])
          throw std::invalid_argument("orientation is not multiplicative at (" +
                                      g.element_name(a) + ", " +
                                      g.element_name(b) + ")");
    std::vector<char> members(n, 0);
    int count = 0;
    for (int a = 0; a < n; ++a)
      if (sign_[a] == 1) {
        members[a] = 1;
        ++count;
      }
    trivial_ = count == n;
    // the +1 part of a homomorphism into {+1,-1} has index 1 or 2
    kernel_.emplace(g, std::move(members));
  }

  const FiniteGroup& group() const { return *group_; }
  int sign(int g) const { return sign_[g]; }
  const std::vector<int>& signs() const { return sign_; }
  const SubgroupMask& kernel() const { return *kernel_; }
  bool trivial() const { return trivial_; }

  bool operator==(const Orientation& other) const {
    return group_ == other.group_ && sign_ == other.sign_;
  }

private:
  const FiniteGroup* group_;
  std::vector<int> sign_;
  std::optional<SubgroupMask> kernel_;
  bool trivial_ = false;
};

inline Orientation trivial_orientation(const FiniteGroup& g) {
  return Orientation(g, std::vector<int>(g.order(), 1));
}

// The trivial orientation followed by every nontrivial one, the latter
// sorted by sign array for a deterministic order. Signs are assigned on a
// generator chain and validated on all pairs, so the list is exactly the
// set of homomorphisms G -> {+1,-1}.
inline std::vector<Orientation> enumerate_orientations(const FiniteGroup& g) {
  detail::GenChain ch = detail::build_gen_chain(g);
  int k = static_cast<int>(ch.gens.size());
  std::vector<std::vector<int>> found;
  for (std::uint32_t bits = 0; bits < (1u << k); ++bits) {
    std::vector<int> sign(g.order(), 0);
    sign[g.identity()] = 1;
    for (int e : ch.placed) {
      if (e == g.identity())
        continue;
      int gs = (bits >> ch.via[e]) & 1 ? -1 : 1;
      // for generators themselves this reads sign[parent] = sign[identity]
      sign[e] = sign[ch.parent[e]] * gs;
    }
    bool ok = true;
    for (int a = 0; a < g.order() && ok; ++a)
      for (int b = 0; b < g.order() && ok; ++b)
        ok = sign[g.mul(a, b)] == sign[a] * sign[b];
    if (ok)
      found.push_back(std::move(sign));
  }
  std::vector<std::vector<int>> nontrivial;
  for (std::vector<int>& s : found)
    if (std::find(s.begin(), s.end(), -1) != s.end())
      nontrivial.push_back(std::move(s));
  std::sort(nontrivial.begin(), nontrivial.end());
  std::vector<Orientation> out;
  out.reserve(nontrivial.size() + 1);
  out.push_back(trivial_orientation(g));
  for (std::vector<int>& s : nontrivial)
    out.emplace_back(g, std::move(s));
  return out;
}

// The (*, sigma) pair. A spec is just the pair; whether it satisfies the
// compatibility condition is a separate query, and the algebra operations
// refuse incompatible specs.
struct OrientedInvolutionSpec {
  Involution involution;
  Orientation orientation;

  OrientedInvolutionSpec(Involution inv, Orientation ori)
      : involution(std::move(inv)), orientation(std::move(ori)) {
    if (&involution.group() != &orientation.group())
      throw std::invalid_argument(
          "involution and orientation live on different groups");
  }

  const FiniteGroup& group() const { return involution.group(); }
};

struct CompatibilityResult {
  bool compatible = false;
  int witness = -1; // element with g g* outside N when incompatible
};

// The oriented star is an algebra involution exactly when g g* lies in
// N = ker(sigma) for every g.
inline CompatibilityResult
check_compatibility(const OrientedInvolutionSpec& spec) {
  const FiniteGroup& g = spec.group();
  for (int a = 0; a < g.order(); ++a)
    if (!spec.orientation.kernel().contains(g.mul(a, spec.involution(a))))
      return {false, a};
  return {true, -1};
}

struct FixedElements {
  std::vector<int> g_plus; // {g : g* = g}
  std::vector<int> n_plus; // N intersect G+
};

inline FixedElements fixed_elements(const OrientedInvolutionSpec& spec) {
  FixedElements out;
  const FiniteGroup& g = spec.group();
  for (int a = 0; a < g.order(); ++a) {
    if (spec.involution(a) != a)
      continue;
    out.g_plus.push_back(a);
    if (spec.orientation.kernel().contains(a))
      out.n_plus.push_back(a);
  }
  return out;
}

// Restriction of an involution to a subgroup that is star-closed (the
// kernel of a compatible orientation always is).
inline Involution restrict_involution(const Involution& inv,
                                      const SubgroupView& view) {
  std::vector<int> image(view.group.order());
  for (int i = 0; i < view.group.order(); ++i) {
    int mapped = view.from_parent[inv(view.to_parent[i])];
    if (mapped < 0)
      throw std::invalid_argument(
          "involution does not map the subgroup into itself");
    image[i] = mapped;
  }
  return Involution(view.group, std::move(image));
}

} // namespace fgstar

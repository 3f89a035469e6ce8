#pragma once

// Exact group-algebra arithmetic: sparse elements of FG, the convolution
// product, the oriented involution on elements, Lie brackets, standard
// polynomials, and the two normality oracles (a polarized exhaustive check
// on basis pairs, and a randomized sampling check kept around as an
// independent cross-oracle).

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "group.hpp"
#include "morphisms.hpp"

namespace fgstar {

// Sparse coefficient vector over a field F; terms are kept sorted by
// element index with no explicit zeros, so equality is plain comparison
// and serialization order is canonical.
template <typename F>
class AlgebraElement {
public:
  using Scalar = typename F::Scalar;
  using Term = std::pair<int, Scalar>;

  AlgebraElement(const FiniteGroup& g, F field)
      : group_(&g), field_(std::move(field)) {}

  static AlgebraElement zero(const FiniteGroup& g, F field) {
    return AlgebraElement(g, std::move(field));
  }

  static AlgebraElement basis(const FiniteGroup& g, F field, int e) {
    AlgebraElement out(g, field);
    out.terms_.emplace_back(e, field.one());
    return out;
  }

  // Sorts, merges duplicate indices, and drops zero coefficients.
  static AlgebraElement from_terms(const FiniteGroup& g, F field,
                                   std::vector<Term> terms) {
    for (const Term& t : terms)
      if (t.first < 0 || t.first >= g.order())
        throw std::invalid_argument("term index out of range");
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    AlgebraElement out(g, field);
    for (Term& t : terms) {
      if (!out.terms_.empty() && out.terms_.back().first == t.first)
        out.terms_.back().second =
            field.add(out.terms_.back().second, t.second);
      else
        out.terms_.push_back(std::move(t));
      if (field.is_zero(out.terms_.back().second))
        out.terms_.pop_back();
    }
    return out;
  }

  const FiniteGroup& group() const { return *group_; }
  const F& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coeff(int e) const {
    for (const Term& t : terms_)
      if (t.first == e)
        return t.second;
    return field_.zero();
  }

  bool operator==(const AlgebraElement& other) const {
    if (group_ != other.group_ || !(field_ == other.field_) ||
        terms_.size() != other.terms_.size())
      return false;
    for (size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].first != other.terms_[i].first ||
          !field_.eq(terms_[i].second, other.terms_[i].second))
        return false;
    return true;
  }
  bool operator!=(const AlgebraElement& other) const {
    return !(*this == other);
  }

  std::string str() const {
    if (terms_.empty())
      return "0";
    std::string out;
    for (const Term& t : terms_) {
      std::string c = field_.str(t.second);
      if (out.empty()) {
        out = c;
      } else if (c[0] == '-') {
        out += " - " + c.substr(1);
      } else {
        out += " + " + c;
      }
      out += "*" + group_->element_name(t.first);
    }
    return out;
  }

private:
  const FiniteGroup* group_;
  F field_;
  std::vector<Term> terms_;
};

namespace detail {

template <typename F>
void require_same_algebra(const AlgebraElement<F>& a,
                          const AlgebraElement<F>& b) {
  if (&a.group() != &b.group())
    throw std::invalid_argument("elements live over different groups");
  if (!(a.field() == b.field()))
    throw std::invalid_argument("elements live over different fields");
}

} // namespace detail

template <typename F>
AlgebraElement<F> add(const AlgebraElement<F>& a, const AlgebraElement<F>& b) {
  detail::require_same_algebra(a, b);
  std::vector<typename AlgebraElement<F>::Term> terms = a.terms();
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return AlgebraElement<F>::from_terms(a.group(), a.field(), std::move(terms));
}

template <typename F>
AlgebraElement<F> neg(const AlgebraElement<F>& a) {
  std::vector<typename AlgebraElement<F>::Term> terms;
  for (const auto& t : a.terms())
    terms.emplace_back(t.first, a.field().neg(t.second));
  return AlgebraElement<F>::from_terms(a.group(), a.field(), std::move(terms));
}

template <typename F>
AlgebraElement<F> sub(const AlgebraElement<F>& a, const AlgebraElement<F>& b) {
  return add(a, neg(b));
}

template <typename F>
AlgebraElement<F> scale(const typename F::Scalar& c,
                        const AlgebraElement<F>& a) {
  std::vector<typename AlgebraElement<F>::Term> terms;
  for (const auto& t : a.terms())
    terms.emplace_back(t.first, a.field().mul(c, t.second));
  return AlgebraElement<F>::from_terms(a.group(), a.field(), std::move(terms));
}

// Convolution product: (ab)_k = sum over gh = k of a_g b_h. Accumulates
// into a dense scratch vector; group orders are tiny.
template <typename F>
AlgebraElement<F> mul(const AlgebraElement<F>& a, const AlgebraElement<F>& b) {
  detail::require_same_algebra(a, b);
  const FiniteGroup& g = a.group();
  const F& field = a.field();
  std::vector<typename F::Scalar> acc(g.order(), field.zero());
  std::vector<char> touched(g.order(), 0);
  for (const auto& [x, ax] : a.terms())
    for (const auto& [y, by] : b.terms()) {
      int k = g.mul(x, y);
      acc[k] = field.add(acc[k], field.mul(ax, by));
      touched[k] = 1;
    }
  std::vector<typename AlgebraElement<F>::Term> terms;
  for (int k = 0; k < g.order(); ++k)
    if (touched[k] && !field.is_zero(acc[k]))
      terms.emplace_back(k, std::move(acc[k]));
  return AlgebraElement<F>::from_terms(g, field, std::move(terms));
}

// alpha = sum a_g g  |->  sum a_g sigma(g) g*. Refuses specs that fail the
// compatibility condition, since the map is only an algebra involution
// when g g* lands in the kernel for every g.
template <typename F>
AlgebraElement<F> apply_oriented_star(const AlgebraElement<F>& a,
                                      const OrientedInvolutionSpec& spec) {
  if (&a.group() != &spec.group())
    throw std::invalid_argument("element and spec live over different groups");
  CompatibilityResult comp = check_compatibility(spec);
  if (!comp.compatible)
    throw std::invalid_argument(
        "incompatible spec: g g* leaves the kernel at g = " +
        spec.group().element_name(comp.witness));
  std::vector<typename AlgebraElement<F>::Term> terms;
  for (const auto& [g, c] : a.terms()) {
    typename F::Scalar v =
        spec.orientation.sign(g) == 1 ? c : a.field().neg(c);
    terms.emplace_back(spec.involution(g), std::move(v));
  }
  return AlgebraElement<F>::from_terms(a.group(), a.field(), std::move(terms));
}

// Left-normed iterated bracket [x1,...,xn] = [[x1,...,x(n-1)], xn] with
// [a, b] = ab - ba.
template <typename F>
AlgebraElement<F> lie_bracket_chain(const std::vector<AlgebraElement<F>>& xs) {
  if (xs.size() < 2)
    throw std::invalid_argument("bracket chain needs at least 2 elements");
  AlgebraElement<F> acc = xs[0];
  for (size_t i = 1; i < xs.size(); ++i)
    acc = sub(mul(acc, xs[i]), mul(xs[i], acc));
  return acc;
}

// St_n(x1,...,xn) = sum over permutations rho of sgn(rho) x_rho(1)...x_rho(n)
template <typename F>
AlgebraElement<F> standard_polynomial(int n,
                                      const std::vector<AlgebraElement<F>>& xs) {
  if (n < 1 || static_cast<int>(xs.size()) != n)
    throw std::invalid_argument("standard polynomial arity mismatch");
  if (n > 6)
    throw std::invalid_argument("standard polynomial limited to n <= 6");
  for (size_t i = 1; i < xs.size(); ++i)
    detail::require_same_algebra(xs[0], xs[i]);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i)
    perm[i] = i;
  AlgebraElement<F> acc = AlgebraElement<F>::zero(xs[0].group(), xs[0].field());
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j])
          ++inversions;
    AlgebraElement<F> prod = xs[perm[0]];
    for (int i = 1; i < n; ++i)
      prod = mul(prod, xs[perm[i]]);
    acc = inversions % 2 == 0 ? add(acc, prod) : sub(acc, prod);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

struct PlusCommutativityResult {
  bool commutative = true;
  int witness_g = -1; // pair whose spanning vectors fail to commute
  int witness_h = -1;
};

// FG+ is spanned by {g + sigma(g) g* : nonzero} in characteristic != 2,
// so commutativity of the symmetric part reduces to these pairwise checks.
template <typename F>
PlusCommutativityResult is_plus_commutative(const OrientedInvolutionSpec& spec,
                                            F field) {
  const FiniteGroup& grp = spec.group();
  std::vector<std::optional<AlgebraElement<F>>> span(grp.order());
  std::vector<int> idx;
  for (int g = 0; g < grp.order(); ++g) {
    typename F::Scalar s = field.from_int(spec.orientation.sign(g));
    AlgebraElement<F> v = AlgebraElement<F>::from_terms(
        grp, field, {{g, field.one()}, {spec.involution(g), s}});
    if (!v.is_zero()) {
      span[g] = std::move(v);
      idx.push_back(g);
    }
  }
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = i + 1; j < idx.size(); ++j) {
      const AlgebraElement<F>& u = *span[idx[i]];
      const AlgebraElement<F>& v = *span[idx[j]];
      if (!(mul(u, v) == mul(v, u)))
        return {false, idx[i], idx[j]};
    }
  return {true, -1, -1};
}

template <typename F>
struct NormalityVerdict {
  struct Witness {
    int g;
    int h;
    AlgebraElement<F> defect; // nonzero element certifying the failure
  };
  bool normal = true;
  std::optional<Witness> witness;
};

// Normality (alpha alpha* = alpha* alpha for every alpha) is a quadratic
// identity in the coefficients; in characteristic != 2 it is equivalent to
//   (i)  g (sigma(g) g*) = (sigma(g) g*) g for every g, and
//   (ii) sigma(h) g h* + sigma(g) h g* - sigma(g) g* h - sigma(h) h* g = 0
//        for every pair g != h,
// obtained by evaluating the identity at basis elements and at sums of two
// basis elements. The randomized oracle below exists to cross-check this
// reduction, and the two are compared on every catalog triple in the tests.
template <typename F>
NormalityVerdict<F> is_normal_polarized(const OrientedInvolutionSpec& spec,
                                        F field) {
  const FiniteGroup& grp = spec.group();
  CompatibilityResult comp = check_compatibility(spec);
  if (!comp.compatible)
    throw std::invalid_argument(
        "incompatible spec: g g* leaves the kernel at g = " +
        grp.element_name(comp.witness));
  for (int g = 0; g < grp.order(); ++g) {
    int gs = spec.involution(g);
    if (grp.mul(g, gs) != grp.mul(gs, g)) {
      int sg = spec.orientation.sign(g);
      auto defect = AlgebraElement<F>::from_terms(
          grp, field,
          {{grp.mul(g, gs), field.from_int(sg)},
           {grp.mul(gs, g), field.from_int(-sg)}});
      return {false, typename NormalityVerdict<F>::Witness{g, g, defect}};
    }
  }
  for (int g = 0; g < grp.order(); ++g)
    for (int h = g + 1; h < grp.order(); ++h) {
      int gs = spec.involution(g);
      int hs = spec.involution(h);
      int sg = spec.orientation.sign(g);
      int sh = spec.orientation.sign(h);
      auto defect = AlgebraElement<F>::from_terms(
          grp, field,
          {{grp.mul(g, hs), field.from_int(sh)},
           {grp.mul(h, gs), field.from_int(sg)},
           {grp.mul(gs, h), field.from_int(-sg)},
           {grp.mul(hs, g), field.from_int(-sh)}});
      if (!defect.is_zero())
        return {false, typename NormalityVerdict<F>::Witness{g, h, defect}};
    }
  return {true, std::nullopt};
}

template <typename F>
struct RandomizedNormality {
  bool normal = true;
  std::optional<AlgebraElement<F>> counterexample;
};

// Samples dense elements with integer coefficients in {-3..3} and tests
// alpha alpha* = alpha* alpha exactly. Deterministic for a fixed seed.
template <typename F>
RandomizedNormality<F> is_normal_randomized(const OrientedInvolutionSpec& spec,
                                            F field, int trials,
                                            std::uint64_t seed) {
  if (trials < 1)
    throw std::invalid_argument("trials must be >= 1");
  const FiniteGroup& grp = spec.group();
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    std::vector<typename AlgebraElement<F>::Term> terms;
    for (int g = 0; g < grp.order(); ++g) {
      int c = static_cast<int>(rng() % 7) - 3;
      if (c != 0)
        terms.emplace_back(g, field.from_int(c));
    }
    auto alpha =
        AlgebraElement<F>::from_terms(grp, field, std::move(terms));
    auto star = apply_oriented_star(alpha, spec);
    if (!(mul(alpha, star) == mul(star, alpha)))
      return {false, std::move(alpha)};
  }
  return {true, std::nullopt};
}

} // namespace fgstar

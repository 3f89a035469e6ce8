#include <catch2/catch_amalgamated.hpp>

#include <fgstar/algebra.hpp>
#include <fgstar/field.hpp>
#include <fgstar/group.hpp>
#include <fgstar/morphisms.hpp>

#include <random>

using namespace fgstar;
using boost::multiprecision::cpp_rational;

namespace {

template <typename F>
AlgebraElement<F> random_element(const FiniteGroup& g, F field,
                                 std::mt19937_64& rng) {
  std::vector<typename AlgebraElement<F>::Term> terms;
  for (int e = 0; e < g.order(); ++e) {
    int c = static_cast<int>(rng() % 7) - 3;
    if (c != 0)
      terms.emplace_back(e, field.from_int(c));
  }
  return AlgebraElement<F>::from_terms(g, field, std::move(terms));
}

} // namespace

TEST_CASE("basis elements multiply via the table") {
  FiniteGroup q8 = quaternion_group(8);
  Rationals q;
  for (int a = 0; a < q8.order(); ++a)
    for (int b = 0; b < q8.order(); ++b) {
      auto prod = mul(AlgebraElement<Rationals>::basis(q8, q, a),
                      AlgebraElement<Rationals>::basis(q8, q, b));
      CHECK(prod == AlgebraElement<Rationals>::basis(q8, q, q8.mul(a, b)));
    }
}

TEST_CASE("(1 + x)(1 - x) vanishes in QC2") {
  FiniteGroup c2 = cyclic_group(2);
  Rationals q;
  auto one = AlgebraElement<Rationals>::basis(c2, q, 0);
  auto x = AlgebraElement<Rationals>::basis(c2, q, 1);
  CHECK(mul(add(one, x), sub(one, x)).is_zero());
  CHECK(!mul(add(one, x), add(one, x)).is_zero());
}

TEST_CASE("x y differs from y x in QQ8") {
  FiniteGroup q8 = quaternion_group(8);
  Rationals q;
  auto x = AlgebraElement<Rationals>::basis(q8, q, q8.element_by_name("x"));
  auto y = AlgebraElement<Rationals>::basis(q8, q, q8.element_by_name("y"));
  CHECK(!sub(mul(x, y), mul(y, x)).is_zero());
}

TEST_CASE("ring axioms hold on random samples") {
  std::mt19937_64 rng(42);
  FiniteGroup d4 = dihedral_group(4);
  Rationals q;
  for (int t = 0; t < 200; ++t) {
    auto a = random_element(d4, q, rng);
    auto b = random_element(d4, q, rng);
    auto c = random_element(d4, q, rng);
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
    CHECK(mul(add(a, b), c) == add(mul(a, c), mul(b, c)));
  }
  FiniteGroup q8 = quaternion_group(8);
  PrimeField f5(5);
  for (int t = 0; t < 200; ++t) {
    auto a = random_element(q8, f5, rng);
    auto b = random_element(q8, f5, rng);
    auto c = random_element(q8, f5, rng);
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
  }
}

TEST_CASE("rational coefficients are exact") {
  FiniteGroup c4 = cyclic_group(4);
  Rationals q;
  // (1/2 + 1/3 g)^2 = 1/4 + 1/3 g + 1/9 g^2
  auto alpha = AlgebraElement<Rationals>::from_terms(
      c4, q, {{0, cpp_rational(1, 2)}, {1, cpp_rational(1, 3)}});
  auto sq = mul(alpha, alpha);
  CHECK(sq.coeff(0) == cpp_rational(1, 4));
  CHECK(sq.coeff(1) == cpp_rational(1, 3));
  CHECK(sq.coeff(2) == cpp_rational(1, 9));
  CHECK(sq.coeff(3) == 0);
  CHECK(q.str(sq.coeff(0)) == "1/4");
  CHECK(q.str(cpp_rational(-7)) == "-7");
}

TEST_CASE("mismatched operands are refused") {
  FiniteGroup a = cyclic_group(4);
  FiniteGroup b = cyclic_group(4); // equal table, different object
  Rationals q;
  CHECK_THROWS_AS(mul(AlgebraElement<Rationals>::basis(a, q, 1),
                      AlgebraElement<Rationals>::basis(b, q, 1)),
                  std::invalid_argument);
  PrimeField f3(3), f5(5);
  CHECK_THROWS_AS(add(AlgebraElement<PrimeField>::basis(a, f3, 1),
                      AlgebraElement<PrimeField>::basis(a, f5, 1)),
                  std::invalid_argument);
}

TEST_CASE("prime fields") {
  CHECK_THROWS_AS(PrimeField(2), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(9), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(-3), std::invalid_argument);
  PrimeField f7(7);
  CHECK(f7.from_int(-1) == 6);
  CHECK(f7.from_int(15) == 1);
  CHECK(f7.mul(3, 5) == 1);
  CHECK(f7.sub(2, 5) == 4);
  CHECK(f7.neg(0) == 0);
  CHECK(f7.str(3) == "3 mod 7");
  CHECK(f7.characteristic() == 7);
  CHECK(f7.name() == "fp:7");
}

TEST_CASE("oriented star on elements") {
  FiniteGroup d4 = dihedral_group(4);
  Rationals q;
  std::vector<Involution> invs = enumerate_involutions(d4);
  std::vector<Orientation> oris = enumerate_orientations(d4);

  // single term with sign -1 goes to minus the starred element
  OrientedInvolutionSpec cl(classical_involution(d4), oris[1]);
  REQUIRE(check_compatibility(cl).compatible);
  int g = -1;
  for (int e = 0; e < d4.order(); ++e)
    if (cl.orientation.sign(e) == -1)
      g = e;
  REQUIRE(g >= 0);
  auto starred =
      apply_oriented_star(AlgebraElement<Rationals>::basis(d4, q, g), cl);
  CHECK(starred.coeff(cl.involution(g)) == -1);
  CHECK(starred.terms().size() == 1);

  std::mt19937_64 rng(7);
  for (const Involution& inv : invs)
    for (const Orientation& ori : oris) {
      OrientedInvolutionSpec spec(inv, ori);
      if (!check_compatibility(spec).compatible)
        continue;
      for (int t = 0; t < 25; ++t) {
        auto a = random_element(d4, q, rng);
        auto b = random_element(d4, q, rng);
        // linearity, self-inverse, anti-homomorphism
        CHECK(apply_oriented_star(add(a, b), spec) ==
              add(apply_oriented_star(a, spec), apply_oriented_star(b, spec)));
        CHECK(apply_oriented_star(apply_oriented_star(a, spec), spec) == a);
        CHECK(apply_oriented_star(mul(a, b), spec) ==
              mul(apply_oriented_star(b, spec), apply_oriented_star(a, spec)));
      }
    }

  // incompatible specs are refused with the offending element named
  FiniteGroup v4 = elementary_abelian_2_group(2);
  OrientedInvolutionSpec badspec(Involution(v4, {0, 2, 1, 3}),
                                 Orientation(v4, {1, 1, -1, -1}));
  Rationals qq;
  try {
    apply_oriented_star(AlgebraElement<Rationals>::basis(v4, qq, 1), badspec);
    FAIL("expected rejection of incompatible spec");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("e1") != std::string::npos);
  }
}

TEST_CASE("oriented star over a prime field") {
  FiniteGroup q8 = quaternion_group(8);
  PrimeField f3(3);
  std::mt19937_64 rng(11);
  std::vector<Involution> invs = enumerate_involutions(q8);
  std::vector<Orientation> oris = enumerate_orientations(q8);
  for (const Involution& inv : invs)
    for (const Orientation& ori : oris) {
      OrientedInvolutionSpec spec(inv, ori);
      if (!check_compatibility(spec).compatible)
        continue;
      for (int t = 0; t < 10; ++t) {
        auto a = random_element(q8, f3, rng);
        auto b = random_element(q8, f3, rng);
        CHECK(apply_oriented_star(apply_oriented_star(a, spec), spec) == a);
        CHECK(apply_oriented_star(mul(a, b), spec) ==
              mul(apply_oriented_star(b, spec), apply_oriented_star(a, spec)));
      }
    }
}

TEST_CASE("lie brackets") {
  FiniteGroup q8 = quaternion_group(8);
  Rationals q;
  auto x = AlgebraElement<Rationals>::basis(q8, q, q8.element_by_name("x"));
  auto y = AlgebraElement<Rationals>::basis(q8, q, q8.element_by_name("y"));

  CHECK(lie_bracket_chain<Rationals>({x, x}).is_zero());
  CHECK(lie_bracket_chain<Rationals>({x, y}) ==
        sub(mul(x, y), mul(y, x)));
  // [x, y, y] = [ [x,y], y ]
  auto xy = sub(mul(x, y), mul(y, x));
  CHECK(lie_bracket_chain<Rationals>({x, y, y}) ==
        sub(mul(xy, y), mul(y, xy)));
  CHECK_THROWS_AS(lie_bracket_chain<Rationals>({x}), std::invalid_argument);
}

TEST_CASE("standard polynomials") {
  FiniteGroup q8 = quaternion_group(8);
  Rationals q;
  std::mt19937_64 rng(5);
  auto a = random_element(q8, q, rng);
  auto b = random_element(q8, q, rng);
  auto c = random_element(q8, q, rng);
  auto d = random_element(q8, q, rng);

  // St_2 is the plain bracket
  CHECK(standard_polynomial<Rationals>(2, {a, b}) ==
        lie_bracket_chain<Rationals>({a, b}));
  // alternating: repeated arguments kill the sum
  CHECK(standard_polynomial<Rationals>(4, {a, b, a, c}).is_zero());
  // antisymmetry under a transposition
  CHECK(standard_polynomial<Rationals>(3, {a, b, c}) ==
        neg(standard_polynomial<Rationals>(3, {b, a, c})));

  // commutative algebra: St_2 vanishes identically
  FiniteGroup c6 = cyclic_group(6);
  for (int t = 0; t < 20; ++t) {
    auto u = random_element(c6, q, rng);
    auto v = random_element(c6, q, rng);
    CHECK(standard_polynomial<Rationals>(2, {u, v}).is_zero());
  }

  CHECK_THROWS_AS(standard_polynomial<Rationals>(3, {a, b}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      standard_polynomial<Rationals>(7, {a, b, c, d, a, b, c}),
      std::invalid_argument);
}

TEST_CASE("plus-part commutativity") {
  Rationals q;

  // abelian: always commutative
  FiniteGroup c6 = cyclic_group(6);
  OrientedInvolutionSpec triv(classical_involution(c6),
                              trivial_orientation(c6));
  CHECK(is_plus_commutative(triv, q).commutative);

  // Q8 with the canonical involution: the symmetric part is commutative
  FiniteGroup q8 = quaternion_group(8);
  OrientedInvolutionSpec can(canonical_involution(q8),
                             trivial_orientation(q8));
  CHECK(is_plus_commutative(can, q).commutative);

  // D4 classical: two reflections are symmetric and do not commute
  FiniteGroup d4 = dihedral_group(4);
  OrientedInvolutionSpec cl(classical_involution(d4),
                            trivial_orientation(d4));
  PlusCommutativityResult res = is_plus_commutative(cl, q);
  CHECK(!res.commutative);
  REQUIRE(res.witness_g >= 0);
  // witness names the first bad pair: the reflections s and rs
  CHECK(d4.element_name(res.witness_g) == "s");
  CHECK(d4.element_name(res.witness_h) == "rs");
  // and their spanning vectors really do not commute
  auto vs = AlgebraElement<Rationals>::from_terms(
      d4, q, {{res.witness_g, q.one()},
              {cl.involution(res.witness_g),
               q.from_int(cl.orientation.sign(res.witness_g))}});
  auto vh = AlgebraElement<Rationals>::from_terms(
      d4, q, {{res.witness_h, q.one()},
              {cl.involution(res.witness_h),
               q.from_int(cl.orientation.sign(res.witness_h))}});
  CHECK(!(mul(vs, vh) == mul(vh, vs)));

  // spanning vectors are fixed by the oriented star
  for (const Orientation& ori : enumerate_orientations(d4)) {
    OrientedInvolutionSpec spec(classical_involution(d4), ori);
    if (!check_compatibility(spec).compatible)
      continue;
    for (int g = 0; g < d4.order(); ++g) {
      auto v = AlgebraElement<Rationals>::from_terms(
          d4, q, {{g, q.one()},
                  {spec.involution(g),
                   q.from_int(spec.orientation.sign(g))}});
      if (!v.is_zero())
        CHECK(apply_oriented_star(v, spec) == v);
    }
  }
}

TEST_CASE("polarized normality") {
  Rationals q;

  // abelian groups are normal under every compatible spec
  FiniteGroup c6 = cyclic_group(6);
  for (const Involution& inv : enumerate_involutions(c6))
    for (const Orientation& ori : enumerate_orientations(c6)) {
      OrientedInvolutionSpec spec(inv, ori);
      if (!check_compatibility(spec).compatible)
        continue;
      NormalityVerdict<Rationals> v = is_normal_polarized(spec, q);
      CHECK(v.normal);
      CHECK(!v.witness.has_value());
    }

  FiniteGroup q8 = quaternion_group(8);
  OrientedInvolutionSpec q8cl(classical_involution(q8),
                              trivial_orientation(q8));
  CHECK(is_normal_polarized(q8cl, q).normal);

  FiniteGroup d4 = dihedral_group(4);
  OrientedInvolutionSpec d4cl(classical_involution(d4),
                              trivial_orientation(d4));
  NormalityVerdict<Rationals> v = is_normal_polarized(d4cl, q);
  CHECK(!v.normal);
  REQUIRE(v.witness.has_value());
  // first failing pair in scan order is (r, s)
  CHECK(d4.element_name(v.witness->g) == "r");
  CHECK(d4.element_name(v.witness->h) == "s");
  CHECK(!v.witness->defect.is_zero());
  // reconstruct the defect independently from the pair
  int g = v.witness->g, h = v.witness->h;
  int gs = d4cl.involution(g), hs = d4cl.involution(h);
  auto expected = AlgebraElement<Rationals>::from_terms(
      d4, q,
      {{d4.mul(g, hs), q.from_int(d4cl.orientation.sign(h))},
       {d4.mul(h, gs), q.from_int(d4cl.orientation.sign(g))},
       {d4.mul(gs, h), q.from_int(-d4cl.orientation.sign(g))},
       {d4.mul(hs, g), q.from_int(-d4cl.orientation.sign(h))}});
  CHECK(v.witness->defect == expected);

  // incompatible specs are refused
  FiniteGroup v4 = elementary_abelian_2_group(2);
  OrientedInvolutionSpec badspec(Involution(v4, {0, 2, 1, 3}),
                                 Orientation(v4, {1, 1, -1, -1}));
  CHECK_THROWS_AS(is_normal_polarized(badspec, q), std::invalid_argument);
}

TEST_CASE("randomized normality oracle") {
  Rationals q;
  FiniteGroup d4 = dihedral_group(4);
  OrientedInvolutionSpec cl(classical_involution(d4),
                            trivial_orientation(d4));

  RandomizedNormality<Rationals> r = is_normal_randomized(cl, q, 100, 12345);
  CHECK(!r.normal);
  REQUIRE(r.counterexample.has_value());
  // the stored alpha really violates normality
  auto alpha = *r.counterexample;
  auto star = apply_oriented_star(alpha, cl);
  CHECK(!(mul(alpha, star) == mul(star, alpha)));

  // deterministic under a fixed seed
  RandomizedNormality<Rationals> r2 = is_normal_randomized(cl, q, 100, 12345);
  CHECK(r2.normal == r.normal);
  CHECK(*r2.counterexample == *r.counterexample);

  CHECK_THROWS_AS(is_normal_randomized(cl, q, 0, 1), std::invalid_argument);

  // sanity direction: a normal triple passes many random samples
  FiniteGroup q8 = quaternion_group(8);
  OrientedInvolutionSpec q8cl(classical_involution(q8),
                              trivial_orientation(q8));
  CHECK(is_normal_randomized(q8cl, q, 200, 99).normal);
}

TEST_CASE("polarized and randomized oracles agree") {
  Rationals q;
  PrimeField f3(3), f5(5), f7(7);
  std::vector<FiniteGroup> groups;
  groups.push_back(cyclic_group(4));
  groups.push_back(cyclic_group(6));
  groups.push_back(dihedral_group(3));
  groups.push_back(dihedral_group(4));
  groups.push_back(quaternion_group(8));
  groups.push_back(elementary_abelian_2_group(3));

  for (const FiniteGroup& g : groups) {
    INFO(g.label());
    std::vector<Involution> invs = enumerate_involutions(g);
    std::vector<Orientation> oris = enumerate_orientations(g);
    for (const Involution& inv : invs)
      for (const Orientation& ori : oris) {
        OrientedInvolutionSpec spec(inv, ori);
        if (!check_compatibility(spec).compatible)
          continue;
        bool pq = is_normal_polarized(spec, q).normal;
        CHECK(pq == is_normal_polarized(spec, f3).normal);
        CHECK(pq == is_normal_polarized(spec, f5).normal);
        CHECK(pq == is_normal_polarized(spec, f7).normal);
        CHECK(pq == is_normal_randomized(spec, q, 25, 777).normal);
        CHECK(pq == is_normal_randomized(spec, f3, 25, 777).normal);
      }
  }

  // one order-16 group over F3 to cover a larger case cheaply
  FiniteGroup q8c2 = direct_product(quaternion_group(8), cyclic_group(2));
  std::vector<Involution> invs = enumerate_involutions(q8c2);
  std::vector<Orientation> oris = enumerate_orientations(q8c2);
  for (const Involution& inv : invs)
    for (const Orientation& ori : oris) {
      OrientedInvolutionSpec spec(inv, ori);
      if (!check_compatibility(spec).compatible)
        continue;
      CHECK(is_normal_polarized(spec, f3).normal ==
            is_normal_randomized(spec, f3, 10, 31).normal);
    }
}

TEST_CASE("element rendering") {
  FiniteGroup d4 = dihedral_group(4);
  Rationals q;
  auto a = AlgebraElement<Rationals>::from_terms(
      d4, q, {{0, q.from_int(2)}, {4, q.from_int(-1)}});
  CHECK(a.str() == "2*1 - 1*s");
  CHECK(AlgebraElement<Rationals>::zero(d4, q).str() == "0");
  PrimeField f3(3);
  auto b = AlgebraElement<PrimeField>::from_terms(
      d4, f3, {{1, f3.from_int(-1)}});
  CHECK(b.str() == "2 mod 3*r");
}

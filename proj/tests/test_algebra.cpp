// Unit tests for the diagram classification, the central element
// constructions, the reflection groups, and the tensor space action.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tanabe/reflection_group.hpp"
#include "tanabe/tensor_action.hpp"
#include "tanabe/verify.hpp"

using namespace tanabe;

TEST_CASE("classification of simple diagrams") {
  AlgebraParams params{2, 2, 2};
  CHECK(classify(Diagram::parse("{1,1'};{2,2'}"), params) == DiagramClass::Pi);
  CHECK(classify(Diagram::parse("{1,1',2'};{2}"), params) ==
        DiagramClass::Lambda);
  CHECK(classify(Diagram::parse("{1};{2};{1'};{2'}"), params) ==
        DiagramClass::Theta);
  CHECK(classify(Diagram::parse("{1};{2};{1'};{2'}"), AlgebraParams{2, 1, 2}) ==
        DiagramClass::Outside);
  CHECK_THROWS_AS(classify(Diagram::identity(1), AlgebraParams{4, 3, 2}),
                  DimensionError);
}

TEST_CASE("spanning basis sizes at one point") {
  // A_1 has two diagrams; for r >= 2 only the strand is congruent and the
  // singleton pair is in the excess class when n = 1.
  TanabeBasis b = tanabeBasis(Level::integer(1), AlgebraParams{2, 2, 1});
  CHECK(b.full.size() == 2);
  CHECK(b.pi.size() == 1);
  TanabeBasis b2 = tanabeBasis(Level::integer(1), AlgebraParams{2, 1, 3});
  CHECK(b2.full.size() == 1);  // the singleton pair has only 2 blocks <= n
  CHECK(b2.pi.size() == 1);
}

TEST_CASE("block and split builders") {
  CHECK(blockWithStrands(3, {}) == Diagram::identity(3));
  CHECK(blockWithStrands(3, {1, 3}) == Diagram::parse("{1,3,1',3'};{2,2'}"));
  CHECK(splitBlockWithStrands(2, {1, 2}, {1, 3}) ==
        Diagram::parse("{1,1'};{2,2'}"));
  CHECK(splitBlockWithStrands(2, {1, 2}, {1, 2}) ==
        Diagram::parse("{1,2};{1',2'}"));
  CHECK_THROWS_AS(splitBlockWithStrands(2, {1}, {2}), DimensionError);
}

TEST_CASE("central element at one point collapses to a scalar") {
  // For r >= 2 the level-one element is (n-1)(n-2)/2 times the strand.
  for (long r : {2L, 3L, 4L})
    for (long n : {2L, 3L, 5L}) {
      DiagramVector z = buildZ(Level::integer(1), r, n);
      DiagramVector expected(1, BasisKind::Diagram);
      expected.add(Diagram::identity(1), Rational((n - 1) * (n - 2) / 2));
      CHECK(z == expected);
    }
}

TEST_CASE("Jucys-Murphy elements start with the identity and vanish next") {
  CHECK(buildM(Level::half(0), 3, 4) ==
        DiagramVector::unit(Diagram::identity(1), BasisKind::Diagram));
  // For r >= 2 the level-one element equals the half-level element, so their
  // difference vanishes.
  for (long r : {2L, 3L})
    CHECK(buildM(Level::integer(1), r, 4).isZeroVector());
}

TEST_CASE("central elements commute with the spanning basis") {
  for (long r : {2L, 3L}) {
    Level level = Level::integer(2);
    DiagramVector z = buildZ(level, r, 4);
    CHECK(isCentral(z, level, AlgebraParams{r, 1, 4}));
    CHECK(isCentral(z, level, AlgebraParams{r, r, 4}));
  }
}

TEST_CASE("group elements and closure orders") {
  // |G(r,p,n)| = r^n n! / p.
  auto order = [](long r, long p, long n) {
    return groupClosure(reflectionGenerators(AlgebraParams{r, p, n}), r).size();
  };
  CHECK(order(1, 1, 3) == 6);
  CHECK(order(2, 1, 2) == 8);
  CHECK(order(2, 2, 2) == 4);
  CHECK(order(3, 3, 3) == 54);
  CHECK(order(4, 2, 2) == 16);
  // Subgroup fixing the last point: r^n (n-1)! / p.
  auto orderFixed = [](long r, long p, long n) {
    return groupClosure(
               reflectionGenerators(AlgebraParams{r, p, n}, /*fixLast=*/true), r)
        .size();
  };
  CHECK(orderFixed(2, 1, 3) == 16);
  CHECK(orderFixed(3, 3, 3) == 18);
  CHECK(orderFixed(4, 2, 2) == 8);
}

TEST_CASE("representation matrices pin the conventions") {
  // The generator multiplying the first coordinate by zeta^p.
  AlgebraParams params{4, 2, 2};
  std::vector<GroupElement> gens = reflectionGenerators(params);
  Matrix<Cyclotomic> t = rho(gens[1], 4);  // after the transposition generator
  CHECK(t.at(0, 0) == Cyclotomic::zeta(4, 2));
  CHECK(t.at(1, 1) == Cyclotomic::fromRational(4, 1));
  // A transposition acts by the permutation matrix.
  Matrix<Cyclotomic> s = rho(gens[0], 4);
  CHECK(s.at(1, 0) == Cyclotomic::fromRational(4, 1));
  CHECK(s.at(0, 1) == Cyclotomic::fromRational(4, 1));
  CHECK(isZero(s.at(0, 0)));
  // Tensor powers are multiplicative over the group.
  GroupElement g = groupMultiply(gens[0], gens[1], 4);
  CHECK(tensorRho(g, 2, 4) == tensorRho(gens[0], 2, 4) * tensorRho(gens[1], 2, 4));
}

TEST_CASE("diagram action is a homomorphism on the diagram basis") {
  std::vector<Diagram> all = enumerateDiagrams(Level::integer(2));
  for (long n : {2L, 3L}) {
    for (size_t i = 0; i < all.size(); i += 3)
      for (size_t j = 0; j < all.size(); j += 4) {
        DiagramVector a = DiagramVector::unit(all[i], BasisKind::Diagram);
        DiagramVector b = DiagramVector::unit(all[j], BasisKind::Diagram);
        // Right action: matrices compose in order.
        CHECK(phiVector(multiplyDiagram(a, b, n), n) ==
              phiVector(a, n) * phiVector(b, n));
      }
  }
}

TEST_CASE("orbit action kernel is exactly the excess-block span") {
  for (long n : {2L, 3L, 4L}) {
    for (const Diagram& d : enumerateDiagrams(Level::integer(2)))
      CHECK(phiX(d, n).isZeroMatrix() == (d.blockCount() > n));
    for (const Diagram& d : enumerateDiagrams(Level::integer(3)))
      CHECK(phiX(d, n).isZeroMatrix() == (d.blockCount() > n));
  }
}

TEST_CASE("half-level action restricts the ambient action") {
  DiagramVector v = DiagramVector::unit(
      Diagram::parse("{1,1',2,2'}"), BasisKind::Diagram);
  Matrix<Rational> half = phiHalfVector(v, 3);
  CHECK(half.rows() == 3);
  // Joined block forces all indices equal to the pinned value.
  for (long i = 0; i < 3; ++i)
    for (long j = 0; j < 3; ++j)
      CHECK(half.at(i, j) == ((i == 2 && j == 2) ? Rational(1) : Rational(0)));
  CHECK_THROWS_AS(
      phiHalfVector(DiagramVector::unit(Diagram::parse("{1,2'};{2,1'}"),
                                        BasisKind::Diagram),
                    3),
      DimensionError);
}

TEST_CASE("pair sums act rationally and match the central elements") {
  for (long r : {1L, 2L, 3L})
    for (long n : {2L, 3L}) {
      CHECK(phiVector(buildZ(Level::integer(2), r, n), n) ==
            kappaMatrix(r, n, 2));
      CHECK(phiHalfVector(buildZ(Level::half(1), r, n), n) ==
            kappaHalfMatrix(r, n, 1));
    }
}

TEST_CASE("eigenvalue multiplicities") {
  // The all-ones 2x2 pattern minus identity has eigenvalues +1 and -1.
  Matrix<Rational> m = phiX(Diagram::parse("{1};{1'}"), 2);
  auto mults = eigMultiplicities(m, {Rational(1), Rational(-1), Rational(5)});
  CHECK(mults[0].second == 1);
  CHECK(mults[1].second == 1);
  CHECK(mults[2].second == 0);
}

TEST_CASE("fault injection is caught by the product oracle") {
  bool perturbed = false;
  auto perturb = [&](DiagramVector& v) {
    // Shift one structure constant by one.
    if (!v.terms().empty()) {
      v.add(v.terms().begin()->first, 1);
    } else {
      v.add(Diagram::identity(v.size()), 1);
    }
    perturbed = true;
  };
  std::vector<VerifyRecord> records = verifyProductOracle(perturb);
  CHECK(perturbed);
  bool sawFailure = false;
  for (const VerifyRecord& r : records)
    if (!r.pass && r.tag == "product-oracle") sawFailure = true;
  CHECK(sawFailure);
}

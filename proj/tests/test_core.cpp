// Unit tests for the exact scalar types, matrices, diagrams, and the two
// algebra products.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tanabe/cyclotomic.hpp"
#include "tanabe/diagram_vector.hpp"
#include "tanabe/matrix.hpp"

using namespace tanabe;

TEST_CASE("integer helpers") {
  CHECK(factorial(5) == 120);
  CHECK(binomial(7, 3) == 35);
  CHECK(multinomial(4, {2, 2}) == 6);
  CHECK(fallingFactorial(Integer(-1), 2) == 2);   // (-1)(-2)
  CHECK(fallingFactorial(Integer(3), 0) == 1);
  CHECK(fallingFactorial(Integer(0), 2) == 0);
  CHECK(bellNumber(2) == 2);
  CHECK(bellNumber(4) == 15);
  CHECK(bellNumber(6) == 203);
  CHECK(bellNumber(8) == 4140);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomicPolynomial(1) == std::vector<Integer>{-1, 1});
  CHECK(cyclotomicPolynomial(2) == std::vector<Integer>{1, 1});
  CHECK(cyclotomicPolynomial(4) == std::vector<Integer>{1, 0, 1});
  CHECK(cyclotomicPolynomial(6) == std::vector<Integer>{1, -1, 1});
  CHECK(cyclotomicPolynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
}

TEST_CASE("cyclotomic field arithmetic") {
  for (int r : {1, 2, 3, 4, 5, 6, 12}) {
    Cyclotomic z = Cyclotomic::zeta(r, 1);
    // zeta^r == 1.
    Cyclotomic power = Cyclotomic::fromRational(r, 1);
    for (int i = 0; i < r; ++i) power = power * z;
    CHECK(power == Cyclotomic::fromRational(r, 1));
    // Sum over all powers of a nontrivial root vanishes; of the trivial root
    // it collapses to r.
    for (long e = 0; e < r; ++e) {
      Cyclotomic sum(r);
      for (long l = 0; l < r; ++l) sum += Cyclotomic::zeta(r, l * e);
      if (e == 0)
        CHECK(sum == Cyclotomic::fromRational(r, r));
      else
        CHECK(sum.isZero());
    }
    // Field inverse.
    Cyclotomic a = Cyclotomic::zeta(r, 1) + Cyclotomic::fromRational(r, 3);
    CHECK(a * a.inverse() == Cyclotomic::fromRational(r, 1));
  }
}

TEST_CASE("dense matrix rank and nullspace") {
  Matrix<Rational> a(3, 3, Rational(0));
  // Rows: (1,2,3), (2,4,6), (1,0,1) -> rank 2.
  long vals[3][3] = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  for (long i = 0; i < 3; ++i)
    for (long j = 0; j < 3; ++j) a.at(i, j) = vals[i][j];
  CHECK(a.rank() == 2);
  CHECK(a.nullity() == 1);
  auto basis = a.nullspace();
  REQUIRE(basis.size() == 1);
  for (long i = 0; i < 3; ++i) {
    Rational s(0);
    for (long j = 0; j < 3; ++j) s += a.at(i, j) * basis[0][static_cast<size_t>(j)];
    CHECK(isZero(s));
  }
  CHECK(Matrix<Rational>::identity(4, Rational(1)).rank() == 4);
}

TEST_CASE("sparse rank agrees with dense rank") {
  Matrix<Rational> a(4, 5, Rational(0));
  long vals[4][5] = {{1, 0, 2, 0, 0},
                     {0, 1, 0, 0, 3},
                     {1, 1, 2, 0, 3},
                     {0, 0, 0, 7, 0}};
  std::vector<SparseRow<Rational>> rows;
  for (long i = 0; i < 4; ++i) {
    SparseRow<Rational> row;
    for (long j = 0; j < 5; ++j) {
      a.at(i, j) = vals[i][j];
      if (vals[i][j] != 0) row.emplace_back(j, Rational(vals[i][j]));
    }
    rows.push_back(row);
  }
  CHECK(sparseRank(std::move(rows)) == a.rank());
}

TEST_CASE("diagram canonical form, text grammar, identity") {
  Diagram d = Diagram::parse("{2'};{1,2,1'}");
  CHECK(d.str() == "{1,2,1'};{2'}");
  CHECK(Diagram::parse(d.str()) == d);
  CHECK(Diagram::identity(3).str() == "{1,1'};{2,2'};{3,3'}");
  CHECK_THROWS_AS(Diagram::parse("{1};{1}"), ParseError);
  CHECK_THROWS_AS(Diagram::parse("{1,3'}"), ParseError);  // 2, 3 uncovered
  CHECK_THROWS_AS(Diagram::parse(""), ParseError);
}

TEST_CASE("enumeration counts follow Bell numbers") {
  CHECK(enumerateDiagrams(Level::integer(0)).size() == 1);
  CHECK(enumerateDiagrams(Level::integer(1)).size() == 2);
  CHECK(enumerateDiagrams(Level::integer(2)).size() == 15);
  CHECK(enumerateDiagrams(Level::integer(3)).size() == 203);
  // Half level: diagrams of the next size with the last strand joined; the
  // joined pair acts as a single point, giving the odd Bell numbers.
  CHECK(enumerateDiagrams(Level::half(0)).size() == 1);
  CHECK(enumerateDiagrams(Level::half(1)).size() == 5);
  CHECK(enumerateDiagrams(Level::half(2)).size() == 52);
}

TEST_CASE("composition of the six-point worked example") {
  Diagram d1 = Diagram::parse("{1,2,1'};{3,5,3'};{4};{6,5'};{2',4'};{6'}");
  Diagram d2 = Diagram::parse("{1,5,2',3'};{2,4};{3};{6,6'};{1',4'};{5'}");
  CompositionResult c = compose(d1, d2);
  CHECK(c.result == Diagram::parse("{1,2,6,2',3'};{3,5};{4};{1',4'};{5'};{6'}"));
  CHECK(c.internalBlocks == 1);
  // The interface partitions of this pair differ ({2',4'} joined on one side,
  // {1,5} joined on the other), so the orbit-basis product vanishes.
  CHECK_FALSE(bottomMatchesTop(d1, d2));
  DiagramVector prod =
      multiplyX(DiagramVector::unit(d1, BasisKind::X),
                DiagramVector::unit(d2, BasisKind::X), 6);
  CHECK(prod.isZeroVector());
}

TEST_CASE("composition basics") {
  Diagram id = Diagram::identity(2);
  Diagram d = Diagram::parse("{1,2};{1',2'}");
  CHECK(compose(id, d).result == d);
  CHECK(compose(d, id).result == d);
  CHECK(compose(id, d).internalBlocks == 0);
  // Squaring the horizontal bar closes one middle loop.
  CompositionResult sq = compose(d, d);
  CHECK(sq.result == d);
  CHECK(sq.internalBlocks == 1);
}

TEST_CASE("coarsening order and enumeration") {
  Diagram fine = Diagram::parse("{1};{1'}");
  Diagram coarse = Diagram::parse("{1,1'}");
  CHECK(coarserOrEqual(coarse, fine));
  CHECK(coarserOrEqual(fine, fine));
  CHECK_FALSE(coarserOrEqual(fine, coarse));
  auto cs = coarsenings(fine);
  CHECK(cs.size() == 2);
  // Coarsenings of the all-singleton two-point diagram: Bell(4) = 15.
  CHECK(coarsenings(Diagram::parse("{1};{2};{1'};{2'}")).size() == 15);
}

TEST_CASE("basis change is a unitriangular bijection") {
  for (const Diagram& d : enumerateDiagrams(Level::integer(2))) {
    DiagramVector unitD = DiagramVector::unit(d, BasisKind::Diagram);
    DiagramVector x = changeBasis(unitD, BasisKind::X);
    CHECK(changeBasis(x, BasisKind::Diagram) == unitD);
    CHECK(x.terms().at(d) == 1);
    DiagramVector unitX = DiagramVector::unit(d, BasisKind::X);
    DiagramVector back = changeBasis(unitX, BasisKind::Diagram);
    CHECK(changeBasis(back, BasisKind::X) == unitX);
    CHECK(back.terms().at(d) == 1);
    // Supports stay inside the coarsening cone.
    for (const auto& [dd, c] : back.terms()) CHECK(coarserOrEqual(dd, d));
  }
}

TEST_CASE("orbit product of the one-point singleton pair") {
  // x_{{1},{1'}} squared = (n-2) x_{{1},{1'}} + (n-1) x_{{1,1'}}.
  Diagram s = Diagram::parse("{1};{1'}");
  for (long n : {2L, 3L, 4L, 7L}) {
    DiagramVector prod = multiplyX(DiagramVector::unit(s, BasisKind::X),
                                   DiagramVector::unit(s, BasisKind::X), n);
    DiagramVector expected(1, BasisKind::X);
    expected.add(s, n - 2);
    expected.add(Diagram::parse("{1,1'}"), n - 1);
    CHECK(prod == expected);
  }
}

TEST_CASE("vector text grammar round-trip") {
  DiagramVector v = DiagramVector::parse(
      "2 * {1,2};{1',2'} + -1/3 * {1,1'};{2,2'}", BasisKind::Diagram);
  CHECK(v.terms().size() == 2);
  CHECK(v.terms().at(Diagram::parse("{1,1'};{2,2'}")) == Rational(-1, 3));
  DiagramVector again = DiagramVector::parse(v.str(), BasisKind::Diagram);
  CHECK(again == v);
  CHECK_THROWS_AS(DiagramVector::parse("nonsense", BasisKind::Diagram),
                  ParseError);
}

TEST_CASE("embedding adds the last strand") {
  DiagramVector v(1, BasisKind::Diagram);
  v.add(Diagram::parse("{1};{1'}"), 3);
  DiagramVector e = embedIntoNext(v);
  CHECK(e.size() == 2);
  CHECK(e.terms().at(Diagram::parse("{1};{1'};{2,2'}")) == 3);
}

TEST_CASE("guards respect the override variable") {
  if (guardOverrideActive()) return;  // environment already lifted the guards
  CHECK_THROWS_AS(enumerateDiagrams(Level::integer(5)), GuardError);
}

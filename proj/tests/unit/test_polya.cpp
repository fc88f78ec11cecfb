#include <gtest/gtest.h>

#include "cayley8p/polya.hpp"

namespace cayley8p {
namespace {

CycleType CT(std::map<int, int> counts) { return CycleType(std::move(counts)); }

TEST(Monomial, Basics) {
  const Monomial m = Monomial::var(1, 10) * Monomial::var(2);
  EXPECT_EQ(m.to_string(), "x1^10·x2");
  EXPECT_EQ(m.weighted_degree(), 12);
  EXPECT_EQ(Monomial::var(3, 0), Monomial());
  EXPECT_EQ(Monomial::var(2) * Monomial::var(2), Monomial::var(2, 2));
  EXPECT_EQ(Monomial::from_cycle_type(CT({{1, 6}, {2, 3}})), Monomial::var(1, 6) * Monomial::var(2, 3));
}

TEST(CycleIndexPoly, AddMergesAndDropsZeros) {
  CycleIndexPoly poly(OddPrime(3));
  poly.add(Monomial::var(1, 12), Rational(1, 2));
  poly.add(Monomial::var(1, 12), Rational(1, 2));
  EXPECT_EQ(poly.terms().size(), 1u);
  EXPECT_EQ(poly.terms().at(Monomial::var(1, 12)), 1);
  poly.add(Monomial::var(1, 12), Rational(-1));
  EXPECT_TRUE(poly.terms().empty());
}

TEST(CycleIndexPoly, ValidateCatchesBadDegree) {
  CycleIndexPoly poly(OddPrime(3));
  poly.add(Monomial::var(1, 11), 1);
  EXPECT_THROW(poly.validate(), ConsistencyError);
}

TEST(CycleIndexBruteforce, IdentityTermP3) {
  const CycleIndexPoly poly = cycle_index_bruteforce(OddPrime(3));
  EXPECT_EQ(poly.terms().at(Monomial::var(1, 12)), Rational(1, 24));
  EXPECT_EQ(evaluate(poly, 1), 1);
  EXPECT_NO_THROW(poly.validate());
}

TEST(CycleIndexBruteforce, CountsOrbitsOfTwoColourings) {
  // Independently computed: exhaustive automorphism search plus orbit count
  // in a separate script.
  EXPECT_EQ(evaluate(cycle_index_bruteforce(OddPrime(3)), 2), 624);
  EXPECT_EQ(evaluate(cycle_index_bruteforce(OddPrime(5)), 2), 25152);
  EXPECT_EQ(evaluate(cycle_index_bruteforce(OddPrime(7)), 2), 2111232);
}

TEST(CycleIndexClosedForm, NormalizedAndWellFormed) {
  for (int q : {3, 5, 7, 11, 13, 17, 31, 101}) {
    const CycleIndexPoly poly = cycle_index_closed_form(OddPrime(q));
    EXPECT_NO_THROW(poly.validate()) << q;
    EXPECT_EQ(evaluate(poly, 1), 1) << q;
  }
}

TEST(CycleIndexClosedForm, AgreesWithCountFormula) {
  for (int q : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 97}) {
    const OddPrime p(q);
    EXPECT_EQ(evaluate(cycle_index_closed_form(p), 2), n_total(p)) << q;
  }
}

TEST(Evaluate, RejectsNonIntegralResult) {
  CycleIndexPoly poly(OddPrime(3));
  poly.add(Monomial::var(1, 12), Rational(1, 3));
  EXPECT_THROW(evaluate(poly, 2), ConsistencyError);
}

TEST(Counts, PublishedTable) {
  const int ps[] = {3, 5, 7, 11, 13};
  const char* total[] = {"432", "18144", "1824384", "41253667584", "7330997009984"};
  const char* circ[] = {"6", "12", "28", "216", "704"};
  const char* conn[] = {"388", "17992", "1823592", "41253620920", "7330996514360"};
  for (int i = 0; i < 5; ++i) {
    const OddPrime p(ps[i]);
    EXPECT_EQ(n_total(p), BigInt(total[i]));
    EXPECT_EQ(n_circulant(p), BigInt(circ[i]));
    EXPECT_EQ(n_connected(p), BigInt(conn[i]));
  }
}

TEST(Counts, BeyondTheTable) {
  const OddPrime p(17);
  EXPECT_EQ(n_total(p), BigInt("272337401140052832"));
  EXPECT_EQ(n_circulant(p), 8232);
  EXPECT_EQ(n_connected(p), BigInt("272337401072287000"));
}

TEST(Counts, LargePrimeStaysExact) {
  const OddPrime p(1009);
  const BigInt n = n_total(p);
  EXPECT_GT(msb(n), 4000u);
  EXPECT_EQ(n_connected(p), n - n_circulant(p) * n_circulant(p) - 8);
}

}  // namespace
}  // namespace cayley8p

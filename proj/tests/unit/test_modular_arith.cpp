#include <gtest/gtest.h>

#include <stdexcept>

#include "cayley8p/modular_arith.hpp"

namespace cayley8p {
namespace {

TEST(OddPrime, AcceptsOddPrimes) {
  for (int p : {3, 5, 7, 11, 13, 17, 31, 997}) EXPECT_EQ(OddPrime(p).value(), p);
}

TEST(OddPrime, RejectsEverythingElse) {
  for (long long n : {-3LL, 0LL, 1LL, 2LL, 4LL, 9LL, 15LL, 91LL}) {
    EXPECT_THROW(OddPrime{n}, std::invalid_argument) << n;
  }
}

TEST(OddPrime, ErrorMessageNamesTheValue) {
  try {
    OddPrime bad(4);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "p must be an odd prime (got 4)");
  }
}

TEST(EulerPhi, SmallValues) {
  EXPECT_EQ(euler_phi(1), 1);
  EXPECT_EQ(euler_phi(6), 2);
  EXPECT_EQ(euler_phi(12), 4);
  EXPECT_EQ(euler_phi(97), 96);
}

TEST(EulerPhi, MatchesCountOfCoprimeResidues) {
  for (int n = 1; n <= 200; ++n) {
    int coprime = 0;
    for (int k = 1; k <= n; ++k) coprime += gcd(k, n) == 1;
    EXPECT_EQ(euler_phi(n), coprime) << n;
  }
}

TEST(Divisors, Ascending) {
  EXPECT_EQ(divisors(1), (std::vector<std::int64_t>{1}));
  EXPECT_EQ(divisors(6), (std::vector<std::int64_t>{1, 2, 3, 6}));
  EXPECT_EQ(divisors(12), (std::vector<std::int64_t>{1, 2, 3, 4, 6, 12}));
}

TEST(Divisors, PhiSumsToN) {
  for (int n = 1; n <= 300; ++n) {
    std::int64_t total = 0;
    for (auto d : divisors(n)) total += euler_phi(d);
    EXPECT_EQ(total, n);
  }
}

TEST(MultOrder, Examples) {
  EXPECT_EQ(mult_order(1, 6), 1);
  EXPECT_EQ(mult_order(5, 6), 2);
  EXPECT_EQ(mult_order(3, 10), 4);
  EXPECT_THROW(mult_order(4, 10), std::invalid_argument);
}

TEST(UnitResidue, Validation) {
  const OddPrime p(5);
  EXPECT_NO_THROW(UnitResidue(3, p));
  EXPECT_THROW(UnitResidue(5, p), std::invalid_argument);
  EXPECT_THROW(UnitResidue(4, p), std::invalid_argument);
  EXPECT_THROW(UnitResidue(11, p), std::invalid_argument);
  EXPECT_THROW(UnitResidue(0, p), std::invalid_argument);
}

TEST(Units, CountIsPMinusOne) {
  for (int p : {3, 5, 7, 11, 13, 31}) EXPECT_EQ(units_2p(OddPrime(p)).size(), std::size_t(p - 1));
}

TEST(PrimitiveRoot, Examples) {
  EXPECT_EQ(primitive_root_2p(OddPrime(3)).value(), 5);
  EXPECT_EQ(primitive_root_2p(OddPrime(5)).value(), 3);
  EXPECT_EQ(primitive_root_2p(OddPrime(7)).value(), 3);
}

TEST(PrimitiveRoot, GeneratesTheUnitGroup) {
  for (int q : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 101}) {
    const OddPrime p(q);
    EXPECT_EQ(mult_order(primitive_root_2p(p).value(), p.twice()), q - 1);
  }
}

TEST(DiscreteLog, Examples) {
  const OddPrime p3(3), p5(5);
  EXPECT_EQ(discrete_log(UnitResidue(5, p3), UnitResidue(1, p3)), 0);
  EXPECT_EQ(discrete_log(UnitResidue(5, p3), UnitResidue(5, p3)), 1);
  EXPECT_EQ(discrete_log(UnitResidue(3, p5), UnitResidue(9, p5)), 2);
}

TEST(DiscreteLog, InvertsPowers) {
  for (int q : {5, 7, 11, 13, 31}) {
    const OddPrime p(q);
    const UnitResidue z = primitive_root_2p(p);
    for (int i = 0; i < q - 1; ++i) {
      const UnitResidue u(pow_mod(z.value(), i, p.twice()), p);
      EXPECT_EQ(discrete_log(z, u), i);
    }
  }
}

TEST(DiscreteLog, RejectsNonGenerator) {
  const OddPrime p(7);
  EXPECT_THROW(discrete_log(UnitResidue(1, p), UnitResidue(1, p)), std::invalid_argument);
}

TEST(UniqueX, Examples) {
  const OddPrime p3(3), p5(5);
  EXPECT_EQ(unique_x(UnitResidue(5, p3), 2).value(), 1);
  EXPECT_EQ(unique_x(UnitResidue(5, p3), 4).value(), 5);
  const int x = unique_x(UnitResidue(3, p5), 2).value();
  EXPECT_EQ(mod(x - 3 * x, 10), 2);
}

TEST(UniqueX, ExhaustiveUpTo31) {
  for (int q : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    const OddPrime p(q);
    for (const UnitResidue& alpha : units_2p(p)) {
      if (alpha.value() == 1) continue;
      for (int t = 2; t < p.twice(); t += 2) {
        int hits = 0;
        for (const UnitResidue& x : units_2p(p)) hits += mod(x.value() - alpha.value() * x.value(), p.twice()) == t;
        ASSERT_EQ(hits, 1) << "p=" << q << " alpha=" << alpha.value() << " t=" << t;
        const int x = unique_x(alpha, t).value();
        EXPECT_EQ(mod(x - alpha.value() * x, p.twice()), t);
      }
    }
  }
}

TEST(UniqueX, RejectsBadArguments) {
  const OddPrime p(5);
  EXPECT_THROW(unique_x(UnitResidue(1, p), 2), std::invalid_argument);
  EXPECT_THROW(unique_x(UnitResidue(3, p), 0), std::invalid_argument);
  EXPECT_THROW(unique_x(UnitResidue(3, p), 3), std::invalid_argument);
}

}  // namespace
}  // namespace cayley8p

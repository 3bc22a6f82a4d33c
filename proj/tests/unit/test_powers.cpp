#include <gtest/gtest.h>

#include "support/generators.hpp"

namespace monideal {
namespace {

using testing::I;
using testing::M;

const MonomialIdeal kTriangle = parse_ideal("(x1*x2, x1*x3, x2*x3)");
const MonomialIdeal kPath = parse_ideal("(x1*x2, x2*x3)");

std::vector<PrimeSupport> one_based(std::size_t dim, std::vector<std::vector<std::size_t>> sets) {
  std::vector<PrimeSupport> out;
  for (auto& s : sets) {
    for (auto& i : s) --i;
    out.emplace_back(dim, s);
  }
  return out;
}

TEST(SymbolicPower, TriangleSquare) {
  const MonomialIdeal sym = symbolic_power(kTriangle, 2);
  const MonomialIdeal ord = power(kTriangle, 2);
  const Monomial xyz = M("x1*x2*x3", 3);
  EXPECT_TRUE(sym.contains(xyz));
  EXPECT_FALSE(ord.contains(xyz));
  // Pointwise: m lies in (xi, xj)^2 iff m_i + m_j >= 2, for every pair.
  oracle::for_each_point({3, 2}, [&](const Monomial& m) {
    const bool expected = m[0] + m[1] >= 2 && m[0] + m[2] >= 2 && m[1] + m[2] >= 2;
    EXPECT_EQ(sym.contains(m), expected) << to_string(m);
  });
  EXPECT_EQ(to_string(sym), "(x1*x2*x3, x1^2*x2^2, x1^2*x3^2, x2^2*x3^2)");
  EXPECT_EQ(symbolic_power_general(kTriangle, 2), sym);
}

TEST(SymbolicPower, PrimesAndPrincipal) {
  const MonomialIdeal p = I("(x1, x2)");
  for (std::uint64_t k = 1; k <= 5; ++k) {
    EXPECT_EQ(symbolic_power(p, k), power(p, k));
    EXPECT_EQ(symbolic_power_general(p, k), power(p, k));
  }
  const MonomialIdeal principal = I("(x1*x2)");
  EXPECT_EQ(to_string(symbolic_power(principal, 3)), "(x1^3*x2^3)");
  EXPECT_EQ(symbolic_power(principal, 3), power(principal, 3));
}

TEST(SymbolicPower, NonSquarefreeDropsEmbeddedComponents) {
  // (x1^2, x1*x2) = (x1) /\ (x1^2, x2): only the (x1)-primary part survives.
  const MonomialIdeal a = I("(x1^2, x1*x2)");
  EXPECT_EQ(symbolic_power(a, 1), I("(x1)", 2));
  EXPECT_EQ(symbolic_power(a, 2), I("(x1^2)", 2));
  EXPECT_EQ(symbolic_power(I("(x1^2, x2^3)"), 2), power(I("(x1^2, x2^3)"), 2));
}

TEST(SymbolicPower, Errors) {
  EXPECT_THROW(symbolic_power(MonomialIdeal::zero(2), 2), DomainError);
  EXPECT_THROW(symbolic_power(kTriangle, 0), DomainError);
  EXPECT_THROW(symbolic_power_squarefree(I("(x1^2)"), 2), DomainError);
}

TEST(PowersEqual, Examples) {
  const PowerReport t = powers_equal(kTriangle, 2);
  EXPECT_FALSE(t.equal);
  EXPECT_FALSE(t.ass_condition);
  EXPECT_EQ(t.ass_ordinary, one_based(3, {{1, 2}, {1, 3}, {2, 3}, {1, 2, 3}}));
  EXPECT_EQ(t.min_ass_base, one_based(3, {{1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(t.ordinary, power(kTriangle, 2));

  const PowerReport p = powers_equal(kPath, 2);
  EXPECT_TRUE(p.equal);
  EXPECT_TRUE(p.ass_condition);
  EXPECT_EQ(p.min_ass_base, one_based(3, {{2}, {1, 3}}));

  for (std::uint64_t k = 1; k <= 6; ++k) {
    const PowerReport x = powers_equal(I("(x1)"), k);
    EXPECT_TRUE(x.equal);
    EXPECT_TRUE(x.ass_condition);
  }
  EXPECT_THROW(powers_equal(MonomialIdeal::zero(1), 1), DomainError);
}

TEST(IntegralClosure, WitnessNeedsSeventhPower) {
  // The only convex combination reaching (1,1,2) is (1/7, 2/7, 4/7).
  const MonomialIdeal a = I("(x1*x2^3, x1^3*x3, x2*x3^3)");
  const Monomial m = M("x1*x2*x3^2", 3);
  EXPECT_TRUE(integral_closure(a).contains(m));
  EXPECT_FALSE(oracle::closure_witness(a, m, 6).has_value());
  EXPECT_EQ(oracle::closure_witness(a, m, 12), 7U);
}

TEST(IntegralClosure, Examples) {
  const MonomialIdeal c = integral_closure(I("(x1^2, x2^2)"));
  EXPECT_EQ(to_string(c), "(x1^2, x1*x2, x2^2)");
  EXPECT_EQ(oracle::closure_witness(I("(x1^2, x2^2)"), M("x1*x2", 2), 6), 2U);
  EXPECT_EQ(integral_closure(I("(x1, x2)")), I("(x1, x2)"));
  EXPECT_EQ(integral_closure(I("(x1^3)")), I("(x1^3)"));
  // (x1^3, x2^3): segment points (2,1) and (1,2) join the closure.
  EXPECT_EQ(to_string(integral_closure(I("(x1^3, x2^3)"))), "(x1^3, x1^2*x2, x1*x2^2, x2^3)");
  EXPECT_THROW(integral_closure(MonomialIdeal::zero(2)), DomainError);
}

TEST(IntegralClosureProperties, ContainsIdempotentMonotone) {
  testing::Rng rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 1 + trial % 4;
    const MonomialIdeal a = testing::random_ideal(rng, d, 4, 3);
    const MonomialIdeal b = sum(a, testing::random_ideal(rng, d, 2, 3));
    const MonomialIdeal ca = integral_closure(a);
    EXPECT_TRUE(is_subideal(a, ca));
    EXPECT_EQ(integral_closure(ca), ca);
    EXPECT_TRUE(is_subideal(ca, integral_closure(b)));
  }
}

TEST(IntegralClosureProperties, WitnessesAgree) {
  testing::Rng rng(52);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t d = 1 + trial % 3;
    const MonomialIdeal a = testing::random_ideal(rng, d, 3, 3);
    const MonomialIdeal c = integral_closure(a);
    oracle::for_each_point({d, a.max_exponent()}, [&](const Monomial& m) {
      // Denominators up to 7 occur in this range, so search past l = 6.
      const auto w = oracle::closure_witness(a, m, 12);
      if (c.contains(m)) {
        EXPECT_TRUE(w.has_value()) << to_string(a) << " " << to_string(m);
      } else {
        EXPECT_FALSE(w.has_value()) << to_string(a) << " " << to_string(m);
      }
    });
  }
}

TEST(Normality, Examples) {
  const NormalityReport a = is_normal_up_to(I("(x1^2, x2^2)"), 1);
  EXPECT_FALSE(a.normal);
  EXPECT_EQ(a.first_failure, 1U);

  const NormalityReport b = is_normal_up_to(kPath, 3);
  EXPECT_TRUE(b.normal);
  EXPECT_FALSE(b.first_failure.has_value());
  EXPECT_EQ(b.checked_up_to, 3U);

  EXPECT_TRUE(is_normal_up_to(I("(x1)"), 10).normal);
  EXPECT_THROW(is_normal_up_to(kPath, 0), DomainError);
}

TEST(PowerEquivalence, Examples) {
  const EquivalenceReport t = check_power_equivalence(kTriangle, 2);
  ASSERT_EQ(t.rows.size(), 2U);
  EXPECT_TRUE(t.equivalence_holds);
  EXPECT_FALSE(t.rows[1].powers_equal);
  EXPECT_FALSE(t.rows[1].ass_condition);
  EXPECT_FALSE(t.condition_holds);
  EXPECT_FALSE(t.normality_holds.has_value());
  EXPECT_TRUE(t.passed());

  const EquivalenceReport p = check_power_equivalence(kPath, 3);
  EXPECT_TRUE(p.equivalence_holds);
  EXPECT_TRUE(p.condition_holds);
  ASSERT_TRUE(p.normality_holds.has_value());
  EXPECT_TRUE(*p.normality_holds);
  for (const EquivalenceRow& row : p.rows) {
    EXPECT_TRUE(row.powers_equal);
    EXPECT_EQ(row.closed, true);
    EXPECT_EQ(row.matches_prime_powers, true);
  }

  const EquivalenceReport x = check_power_equivalence(I("(x1)"), 4);
  EXPECT_TRUE(x.passed());
  EXPECT_TRUE(x.condition_holds);

  EXPECT_THROW(check_power_equivalence(I("(x1^2, x2)"), 2), DomainError);
  EXPECT_THROW(check_power_equivalence(kPath, 0), DomainError);
}

TEST(PowersProperties, IntersectionOfPrimesCommutesWithSymbolicPowers) {
  testing::Rng rng(53);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t d = 2 + trial % 3;
    const std::size_t t = 1 + trial % 3;
    MonomialIdeal meet = prime_ideal(testing::random_prime(rng, d));
    std::vector<PrimeSupport> primes{*is_monomial_prime(meet)};
    for (std::size_t i = 1; i < t; ++i) {
      primes.push_back(testing::random_prime(rng, d));
      meet = intersect(meet, prime_ideal(primes.back()));
    }
    for (std::uint64_t n = 1; n <= 4; ++n) {
      MonomialIdeal expected = power(prime_ideal(primes.front()), n);
      for (std::size_t i = 1; i < primes.size(); ++i) {
        expected = intersect(expected, power(prime_ideal(primes[i]), n));
      }
      EXPECT_EQ(symbolic_power_general(meet, n), expected) << to_string(meet) << " n=" << n;
    }
  }
}

TEST(PowersProperties, RoutesAgreeAndContainOrdinaryPower) {
  testing::Rng rng(54);
  for (int trial = 0; trial < 150; ++trial) {
    const MonomialIdeal a = testing::random_squarefree_ideal(rng, 2 + trial % 3, 5);
    for (std::uint64_t k = 1; k <= 3; ++k) {
      const MonomialIdeal s = symbolic_power_squarefree(a, k);
      EXPECT_EQ(symbolic_power_general(a, k), s);
      EXPECT_TRUE(is_subideal(power(a, k), s));
    }
  }
  for (int trial = 0; trial < 100; ++trial) {
    const MonomialIdeal a = testing::random_ideal(rng, 2 + trial % 2, 4, 3);
    for (std::uint64_t k = 1; k <= 2; ++k) {
      EXPECT_TRUE(is_subideal(power(a, k), symbolic_power(a, k))) << to_string(a);
    }
  }
}

TEST(PowersProperties, EquivalenceOnAllSquarefreeIdealsInThreeVariables) {
  for (const MonomialIdeal& a : testing::all_squarefree_ideals(3)) {
    const EquivalenceReport r = check_power_equivalence(a, 3);
    EXPECT_TRUE(r.passed()) << to_string(a);
  }
}

}  // namespace
}  // namespace monideal

#include <gtest/gtest.h>

#include <map>

#include "bfw/constructions.hpp"
#include "bfw/error.hpp"
#include "bfw/expsums.hpp"
#include "bfw/kloosterman.hpp"
#include "oracle.hpp"

using namespace bfw;

namespace {

// sum_{a not in F_2} chi_n(mu (conj(a) + a) / (a^2 + a)) by the oracle.
std::int64_t oracle_t35(const oracle::Field& O, std::uint64_t mu) {
  std::int64_t s = 0;
  for (std::uint64_t a = 2; a < O.size(); ++a) {
    const std::uint64_t num = O.mul(mu, O.conj(a) ^ a);
    s += O.chi(O.mul(num, O.inv(O.mul(a, a) ^ a)));
  }
  return s;
}

const IdentityCheck& by_name(const std::vector<IdentityCheck>& v, const std::string& name) {
  for (const auto& c : v)
    if (c.name == name) return c;
  throw std::runtime_error("missing check " + name);
}

}  // namespace

TEST(CharacterSumIdentity, LhsIsTheDirectSum) {
  for (int m = 2; m <= 5; ++m) {
    const auto F = BinaryField::quadratic(m);
    const oracle::Field O(2 * m, F.reduction_poly());
    for (std::uint64_t mu : O.subfield_units()) {
      const auto c = theorem35_check(F, mu);
      ASSERT_EQ(c.lhs, oracle_t35(O, mu)) << "m = " << m;
      const std::int64_t k = oracle::kloosterman_sub(O, mu);
      EXPECT_EQ(c.rhs, -2 - (1 + k) * (1 + k));
    }
  }
}

TEST(CharacterSumIdentity, MTwoValues) {
  const auto F = BinaryField::quadratic(2);
  const auto one = theorem35_check(F, 1);
  EXPECT_EQ(one.rhs, -18);
  for (Elem w : find_mu(F, -1)) {
    const auto c = theorem35_check(F, w);
    EXPECT_EQ(c.rhs, -2);
    EXPECT_EQ(c.lhs, -2);
    EXPECT_TRUE(c.match);
  }
}

// The closed form agrees with the direct sum exactly when k_m(mu) = -1; for
// other mu the direct sum is (1 + k)^2 - 2. This pins the observed behaviour
// rather than asserting the identity for every mu.
TEST(CharacterSumIdentity, ObservedSumAndClosedFormAgreement) {
  for (int m = 2; m <= 6; ++m) {
    const auto F = BinaryField::quadratic(m);
    for (Elem mu : F.enumerate(Subgroup::subfield_units)) {
      const std::int64_t k = kloosterman_subfield(F, mu);
      const auto c = theorem35_check(F, mu);
      EXPECT_EQ(c.lhs, (1 + k) * (1 + k) - 2);
      EXPECT_EQ(c.match, k == -1);
      EXPECT_EQ(c.match, c.lhs == c.rhs);
    }
  }
}

TEST(CharacterSumIdentity, Errors) {
  const auto F = BinaryField::quadratic(3);
  EXPECT_THROW(theorem35_check(F, F.generator()), Error);
  EXPECT_THROW(theorem35_check(F, 0), Error);
}

TEST(EDecomposition, ReconstructsAndIsUnique) {
  for (int m = 1; m <= 5; ++m) {
    const auto F = BinaryField::quadratic(m);
    const auto e = F.enumerate(Subgroup::affine_e);
    const auto units = F.enumerate(Subgroup::subfield_units);
    std::map<Elem, int> hits;
    for (Elem u : units)
      for (Elem l : e) ++hits[F.mul(u, l)];
    for (Elem x = 0; x < F.size(); ++x) {
      if (F.in_subfield(x)) {
        EXPECT_THROW(e_decompose(F, x), Error);
        continue;
      }
      ASSERT_EQ(hits[x], 1);
      const auto d = e_decompose(F, x);
      ASSERT_TRUE(F.in_subfield(d.u));
      ASSERT_EQ(F.tr_rel(d.lambda), 1u);
      ASSERT_EQ(F.mul(d.u, d.lambda), x);
      ASSERT_EQ(F.tr_abs(x), F.tr_sub(d.u));
    }
    for (Elem l : e) {
      const auto d = e_decompose(F, l);
      EXPECT_EQ(d.u, 1u);
      EXPECT_EQ(d.lambda, l);
    }
    EXPECT_TRUE(e_decompose_check(F).match);
  }
}

TEST(Sigma, TwoToOneOntoTraceOne) {
  for (int m = 1; m <= 7; ++m) {
    const auto F = BinaryField::quadratic(m);
    std::map<Elem, std::vector<Elem>> pre;
    for (Elem l : F.enumerate(Subgroup::affine_e)) pre[F.mul(l, F.conjugate(l))].push_back(l);
    EXPECT_EQ(pre.size(), std::size_t{1} << (m - 1));
    for (const auto& [a, ls] : pre) {
      EXPECT_EQ(F.tr_sub(a), 1);
      ASSERT_EQ(ls.size(), 2u);
      EXPECT_EQ(F.conjugate(ls[0]), ls[1]);
    }
    EXPECT_TRUE(sigma_two_to_one_check(F).match);
  }
}

TEST(QSet, SubIdentityAgainstOracle) {
  for (int m = 3; m <= 4; ++m) {
    const auto F = BinaryField::quadratic(m);
    const oracle::Field O(2 * m, F.reduction_poly());
    for (std::uint64_t mu : O.subfield_units()) {
      const auto checks = q_identity_check(F, mu);
      const auto& sub = by_name(checks, "q_subidentity");
      std::int64_t lhs = 0;
      for (std::uint64_t a = 2; a < O.size(); ++a) lhs += O.chi(O.mul(mu, O.inv(O.mul(a, a) ^ a)));
      EXPECT_EQ(sub.lhs, lhs);
      EXPECT_EQ(sub.rhs, -1 + oracle::kloosterman(O, mu));
      EXPECT_TRUE(sub.match);
      EXPECT_TRUE(sub.gating);
    }
  }
}

TEST(QSet, MembershipCountAndCover) {
  const auto F = BinaryField::quadratic(4);
  const oracle::Field O(8, F.reduction_poly());
  for (std::uint64_t mu : O.subfield_units()) {
    std::int64_t q = 0;
    for (std::uint64_t a = 2; a < O.size(); ++a)
      q += O.tr(O.mul(mu, O.inv(a))) == 1 && O.tr(O.mul(mu, O.inv(a ^ 1))) == 1 && O.tr(a) == 0;
    const auto checks = q_identity_check(F, mu);
    EXPECT_TRUE(by_name(checks, "q_cover").match);
    EXPECT_TRUE(by_name(checks, "q_nonempty").match);
    EXPECT_GT(q, 0);
    const auto& closed = by_name(checks, "q_closed_form");
    EXPECT_FALSE(closed.gating);
    EXPECT_EQ(closed.lhs, 4 * q);
    EXPECT_FALSE(by_name(checks, "q_lower_bound").gating);
  }
}

TEST(RSum, MatchesDoubleEnumeration) {
  for (int m = 2; m <= 6; m += 2) {
    const auto F = BinaryField::quadratic(m);
    const oracle::Field O(2 * m, F.reduction_poly());
    const auto units = O.subfield_units();
    for (std::uint64_t mu : units) {
      std::int64_t r = 0;
      const std::uint64_t mu2 = O.mul(mu, mu);
      for (std::uint64_t u : units) {
        if (O.tr_sub(O.inv(u)) != 1) continue;
        for (std::uint64_t v : units) {
          if (O.tr_sub(v) != 1) continue;
          const std::uint64_t w = v ^ O.mul(u, u) ^ u;
          r += O.chi_sub(O.mul(mu2, O.inv(v) ^ O.inv(w)));
        }
      }
      ASSERT_EQ(r_sum(F, mu), r) << "m = " << m;
      // At m = 2 the bound is met with equality for some mu, so it is only
      // asserted from m = 4 on.
      if (m >= 4) EXPECT_LT(std::llabs(r), std::int64_t{1} << (2 * m - 2));
    }
  }
  const auto F = BinaryField::quadratic(4);
  EXPECT_EQ(r_sum(F, 1), r_sum(F, 1));
}

TEST(N0Formula, DiagnosticValues) {
  for (int m : {4, 6}) {
    const auto F = BinaryField::quadratic(m);
    const Elem mu = first_mu_with_k_minus1(F);
    const auto c = n0_formula_check(F, mu);
    EXPECT_FALSE(c.gating);
    EXPECT_EQ(static_cast<std::uint64_t>(c.lhs), distribution(wht_fast(build_g(F, mu))).count_of(0));
    // rhs = (3/2)(2^{n-2} + R) in integers.
    const std::int64_t r = r_sum(F, mu);
    EXPECT_EQ(2 * c.rhs, 3 * ((std::int64_t{1} << (2 * m - 2)) + r));
    EXPECT_TRUE(c.match);
    // A perturbed R breaks the equality.
    EXPECT_NE(2 * c.lhs, 3 * ((std::int64_t{1} << (2 * m - 2)) + r + 4));
  }
}

TEST(N0Formula, Preconditions) {
  EXPECT_THROW(n0_formula_check(BinaryField::quadratic(3), 1), Error);
  const auto F = BinaryField::quadratic(4);
  const auto other = find_mu(F, 3);
  ASSERT_FALSE(other.empty());
  EXPECT_THROW(n0_formula_check(F, other.front()), Error);
  EXPECT_EQ(kloosterman_subfield(F, first_mu_with_k_minus1(F)), -1);
}

TEST(Bounds, MorenoAndGamma) {
  for (int m = 4; m <= 6; ++m) {
    const auto F = BinaryField::quadratic(m);
    for (Elem mu : F.enumerate(Subgroup::subfield_units)) {
      const auto checks = bound_checks(F, mu);
      EXPECT_TRUE(by_name(checks, "moreno_bound").match);
      EXPECT_TRUE(by_name(checks, "gamma_trivial_bound").match);
    }
  }
  const auto F = BinaryField::quadratic(8);
  EXPECT_TRUE(by_name(bound_checks(F, 1), "gamma_bound").match);
}

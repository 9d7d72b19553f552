#include <gtest/gtest.h>

#include <set>

#include "bfw/constructions.hpp"
#include "bfw/error.hpp"
#include "bfw/kloosterman.hpp"
#include "oracle.hpp"

using namespace bfw;

namespace {

using Dist = std::vector<std::pair<std::int64_t, std::uint64_t>>;

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::invalid_argument;
}

}  // namespace

TEST(Lambda, SolvesTheAffineEquation) {
  for (int m = 1; m <= 8; ++m) {
    const auto F = BinaryField::quadratic(m);
    EXPECT_EQ(F.tr_rel(find_lambda(F)), 1u);
  }
  EXPECT_EQ(BinaryField::quadratic(3).enumerate(Subgroup::affine_e).size(), 8u);
}

TEST(Lambda, TableDoesNotDependOnTheChoice) {
  const auto F = BinaryField::quadratic(4);
  const auto e = F.enumerate(Subgroup::affine_e);
  for (Elem mu : {1u, F.enumerate(Subgroup::subfield_units).back()}) {
    const auto f0 = build_f(F, mu, e[0]);
    const auto g0 = build_g(F, mu, e[0]);
    for (Elem l : e) {
      EXPECT_EQ(build_f(F, mu, l), f0);
      EXPECT_EQ(build_g(F, mu, l), g0);
    }
  }
}

TEST(Build, MatchesLiteralFormulas) {
  for (int m = 1; m <= 5; ++m) {
    const auto F = BinaryField::quadratic(m);
    const oracle::Field O(2 * m, F.reduction_poly());
    const Elem lambda = find_lambda(F);
    for (std::uint64_t mu : O.subfield_units()) {
      const auto f = build_f(F, mu);
      const auto g = build_g(F, mu);
      for (std::uint64_t x = 0; x < O.size(); ++x) {
        ASSERT_EQ(f.get(x), oracle::f_value(O, lambda, mu, x) == 1);
        ASSERT_EQ(g.get(x), oracle::g_value(O, lambda, mu, x) == 1);
      }
      EXPECT_FALSE(f.get(0));
    }
  }
}

TEST(Build, GAgreesWithFOnTraceZero) {
  const auto F = BinaryField::quadratic(4);
  const Elem lambda = find_lambda(F);
  const Elem mu = F.enumerate(Subgroup::subfield_units)[3];
  const auto f = build_f(F, mu);
  const auto g = build_g(F, mu);
  const Elem q = (Elem{1} << 4);
  for (Elem x = 0; x < F.size(); ++x) {
    if (F.tr_abs(x) == 0) {
      EXPECT_EQ(g.get(x), f.get(x));
      EXPECT_EQ(g.get(x), F.tr_abs(F.mul(lambda, F.mul(x, F.conjugate(x)))) == 1);
    } else {
      EXPECT_EQ(g.get(x), F.tr_abs(F.mul(mu, F.pow(x, q - 1))) == 1);
    }
  }
  EXPECT_EQ(build_construction(Construction::g, F, mu), g);
  EXPECT_EQ(build_construction(Construction::f, F, mu), f);
}

TEST(Build, ArgumentErrors) {
  const auto F = BinaryField::quadratic(3);
  EXPECT_EQ(code_of([&] { build_f(F, 0); }), Errc::zero_mu);
  EXPECT_EQ(code_of([&] { build_f(F, F.generator()); }), Errc::not_in_subfield);
  EXPECT_EQ(code_of([&] { build_g(F, 1, 1); }), Errc::invalid_lambda);
}

TEST(Spectrum, FTableColumnAtMFour) {
  const auto F = BinaryField::quadratic(4);
  const auto d = distribution(wht_fast(build_f(F, 1)));
  EXPECT_EQ(d.entries, (Dist{{-16, 92}, {0, 80}, {16, 64}, {32, 16}, {48, 4}}));
  EXPECT_EQ(nonlinearity(d, 8), 104);
  EXPECT_EQ(classify(d, 4).kind, SpectrumClass::five_valued);
}

TEST(Spectrum, GTableColumnAtMThree) {
  const auto F = BinaryField::quadratic(3);
  const Dist want{{-16, 4}, {-8, 12}, {0, 24}, {8, 20}, {16, 4}};
  bool any = false;
  for (Elem mu : find_mu(F, -1)) any |= distribution(wht_fast(build_g(F, mu))).entries == want;
  EXPECT_TRUE(any);
}

TEST(Degree, IsMPlusOne) {
  for (int m = 3; m <= 5; ++m) {
    const auto F = BinaryField::quadratic(m);
    for (Elem mu : F.enumerate(Subgroup::subfield_units)) {
      EXPECT_EQ(algebraic_degree(build_f(F, mu)), m + 1);
      EXPECT_EQ(algebraic_degree(build_g(F, mu)), m + 1);
    }
  }
  // Cross-check the Moebius-based degree against the subset-sum oracle once.
  const auto F = BinaryField::quadratic(4);
  EXPECT_EQ(oracle::anf_degree(build_f(F, 1)), 5);
}

TEST(CircleRoots, InverseSumCriterion) {
  for (int m = 2; m <= 7; ++m) {
    const auto F = BinaryField::quadratic(m);
    for (Elem a : F.enumerate(Subgroup::subfield_units)) {
      const auto r = solve_inverse_sum(F, a);
      ASSERT_EQ(r.exists, F.tr_sub(a) == 1);
      if (!r.exists) {
        EXPECT_TRUE(r.roots.empty());
        continue;
      }
      ASSERT_EQ(r.roots.size(), 2u);
      EXPECT_NE(r.roots[0], r.roots[1]);
      for (Elem x : r.roots) {
        EXPECT_TRUE(F.on_unit_circle(x));
        EXPECT_EQ(x ^ F.inv(x), F.inv(a));
      }
      EXPECT_EQ(F.conjugate(r.roots[0]), r.roots[1]);
    }
  }
  EXPECT_THROW(solve_inverse_sum(BinaryField::quadratic(3), 0), Error);
}

TEST(CircleRoots, CircleEquationExhaustive) {
  for (int m = 3; m <= 6; ++m) {
    const auto F = BinaryField::quadratic(m);
    for (Elem a = 1; a < F.size(); ++a) {
      const auto r = solve_circle_equation(F, a);
      // Brute force over the circle.
      std::vector<Elem> direct;
      for (Elem z : F.enumerate(Subgroup::unit_circle))
        if ((1 ^ F.mul(a, z) ^ F.div(F.conjugate(a), z)) == 0) direct.push_back(z);
      ASSERT_EQ(r.roots, direct) << "m = " << m << " a = " << a;
      ASSERT_EQ(r.exists, F.tr_sub(F.mul(a, F.conjugate(a))) == 1);
      if (!r.exists) continue;
      // a z^2 + z + conj(a) = 0: Vieta, and conjugate roots only for subfield a.
      EXPECT_EQ(r.roots[0] ^ r.roots[1], F.inv(a));
      EXPECT_EQ(F.mul(r.roots[0], r.roots[1]), F.div(F.conjugate(a), a));
      if (F.in_subfield(a)) EXPECT_EQ(F.conjugate(r.roots[0]), r.roots[1]);
    }
  }
  // a = 1 at odd m: two conjugate roots of 1 + z + 1/z.
  const auto F = BinaryField::quadratic(5);
  const auto r = solve_circle_equation(F, 1);
  ASSERT_TRUE(r.exists);
  EXPECT_EQ(r.roots.size(), 2u);
}

TEST(CircleConstructionChecks, ChecksPass) {
  for (int m = 2; m <= 8; ++m)
    for (const auto& c : lemma31_checks(BinaryField::quadratic(m))) EXPECT_TRUE(c.pass) << c.name << " " << c.detail;
}

TEST(CaseFormulas, WfMatchesExceptOddOrigin) {
  for (int m = 3; m <= 6; ++m) {
    const auto F = BinaryField::quadratic(m);
    for (Elem mu : F.enumerate(Subgroup::subfield_units)) {
      const auto s = wht_fast(build_f(F, mu));
      const auto rep = case_report(Construction::f, F, mu, s);
      for (const auto& e : rep.entries) {
        if (e.a == 0 && m % 2 == 1) {
          // Observed value is the negation of the closed form here.
          EXPECT_EQ(e.observed, -e.predicted);
          continue;
        }
        ASSERT_TRUE(e.match) << "m = " << m << " a = " << e.a << " " << e.label;
      }
      EXPECT_EQ(rep.origin_sign_flipped, m % 2 == 1);
    }
  }
  const auto F = BinaryField::quadratic(4);
  EXPECT_EQ(predicted_wf(F, 1, 0).value, -16);
}

TEST(CaseFormulas, WgMatchesEverywhere) {
  for (int m = 2; m <= 6; ++m) {
    const auto F = BinaryField::quadratic(m);
    for (Elem mu : find_mu(F, -1)) {
      const auto s = wht_fast(build_g(F, mu));
      const auto rep = case_report(Construction::g, F, mu, s);
      EXPECT_TRUE(rep.all_match()) << "m = " << m;
      EXPECT_EQ(rep.substituted_match_rate, 1.0);
      if (m % 2 == 1) {
        EXPECT_EQ(walsh_at_field_point(F, s, 0), 0);
        EXPECT_EQ(walsh_at_field_point(F, s, 1), 0);
      }
    }
  }
}

TEST(CaseFormulas, LiteralReadingIsReportedWhenItFails) {
  const auto F = BinaryField::quadratic(4);
  const Elem mu = F.enumerate(Subgroup::subfield_units).back();
  ASSERT_NE(mu, 1u);
  const auto rep = case_report(Construction::f, F, mu, wht_fast(build_f(F, mu)));
  EXPECT_EQ(rep.reading, MuReading::substituted);
  EXPECT_LT(rep.literal_match_rate, 1.0);
  EXPECT_EQ(rep.substituted_match_rate, 1.0);
  std::uint64_t total = 0;
  for (const auto& [label, tally] : rep.per_case) total += tally.total;
  EXPECT_EQ(total, F.size());
}

TEST(CountRelations, TableColumns) {
  const SpectrumDistribution f5{{{-32, 386}, {0, 310}, {32, 258}, {64, 50}, {96, 20}}};
  EXPECT_TRUE(count_relations_f(f5, 5).pass());
  const SpectrumDistribution g5{{{-64, 64}, {-32, 236}, {0, 396}, {32, 260}, {64, 68}}};
  EXPECT_TRUE(count_relations_g(g5, 5).pass());
  const SpectrumDistribution g7{{{-256, 1016}, {-128, 4072}, {0, 6072}, {128, 4216}, {256, 1008}}};
  EXPECT_TRUE(count_relations_g(g7, 7).pass());
  const SpectrumDistribution g3{{{-16, 4}, {-8, 12}, {0, 24}, {8, 20}, {16, 4}}};
  const auto c3 = count_relations_g(g3, 3);
  EXPECT_TRUE(c3.pass());
  EXPECT_EQ(c3.counts.at(0), 24u);
}

TEST(CountRelations, NegativeControls) {
  // One value moved from -16 to 0: the relations no longer hold.
  const SpectrumDistribution bad{{{-16, 91}, {0, 81}, {16, 64}, {32, 16}, {48, 4}}};
  EXPECT_FALSE(count_relations_f(bad, 4).pass());
  const SpectrumDistribution foreign{{{-16, 92}, {0, 80}, {16, 64}, {32, 16}, {64, 4}}};
  EXPECT_THROW(count_relations_f(foreign, 4), Error);
  EXPECT_THROW(count_relations_g(foreign, 4), Error);
}

TEST(Verify, Theorem32AtMFour) {
  const auto F = BinaryField::quadratic(4);
  const auto reports = verify_theorem(Theorem::thm32, F);
  ASSERT_EQ(reports.size(), 15u);
  const std::set<std::int64_t> allowed{-16, 0, 16, 32, 48};
  for (const auto& r : reports) {
    EXPECT_TRUE(r.passed()) << to_hex(*r.mu);
    const auto d = distribution(wht_fast(build_f(F, *r.mu)));
    for (auto v : d.values()) EXPECT_TRUE(allowed.count(v));
  }
}

TEST(Verify, Theorem34AtMFive) {
  const auto F = BinaryField::quadratic(5);
  VerifyOptions opt;
  opt.policy = MuPolicy::k_eq_minus1;
  const auto reports = verify_theorem(Theorem::thm34, F, opt);
  EXPECT_EQ(reports.size(), find_mu(F, -1).size());
  for (const auto& r : reports) {
    EXPECT_TRUE(r.passed());
    ASSERT_NE(r.find("nonlinearity_exact"), nullptr);
    EXPECT_TRUE(r.find("nonlinearity_exact")->pass);
    EXPECT_TRUE(r.find("balanced_iff_m_odd")->pass);
    EXPECT_TRUE(is_balanced(build_g(F, *r.mu)));
  }
}

TEST(Verify, NonlinearityBoundAtMThree) {
  const auto F = BinaryField::quadratic(3);
  for (Elem mu : F.enumerate(Subgroup::subfield_units))
    EXPECT_GE(nonlinearity(wht_fast(build_f(F, mu))), 20);
}

TEST(Verify, ThreadCountDoesNotChangeReports) {
  const auto F = BinaryField::quadratic(4);
  VerifyOptions one, many;
  many.threads = 4;
  const auto a = verify_theorem(Theorem::thm32, F, one);
  const auto b = verify_theorem(Theorem::thm32, F, many);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].mu, b[i].mu);
    ASSERT_EQ(a[i].checks.size(), b[i].checks.size());
    for (std::size_t j = 0; j < a[i].checks.size(); ++j) EXPECT_EQ(a[i].checks[j].detail, b[i].checks[j].detail);
  }
}

TEST(Verify, SelectionErrors) {
  const auto F = BinaryField::quadratic(3);
  VerifyOptions opt;
  opt.policy = MuPolicy::given;
  EXPECT_EQ(code_of([&] { verify_theorem(Theorem::thm32, F, opt); }), Errc::no_such_mu);
  EXPECT_EQ(select_mu(F, MuPolicy::all).size(), 7u);
}

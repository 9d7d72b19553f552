#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bfw/gf2n.hpp"

namespace bfw {

// lhs always comes from direct enumeration; rhs from the closed form under
// test.
struct IdentityCheck {
  std::string name;
  int m = 0;
  Elem mu = 0;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool match = false;
  bool gating = true;
  std::string notes;
};

// sum_{a not in F_2} chi_n(mu (conj(a) + a) / (a^2 + a)) against
// -2 - (1 + k_m(mu))^2.
IdentityCheck theorem35_check(const BinaryField& field, Elem mu);

struct EDecomposition {
  Elem u;       // in F_{2^m}^*
  Elem lambda;  // lambda + conj(lambda) == 1
};

// x = u lambda for x outside F_{2^m}; throws InSubfield otherwise.
EDecomposition e_decompose(const BinaryField& field, Elem x);

// Exhaustive over F_{2^n} minus F_{2^m}: u in F_{2^m}^*, lambda in E,
// u lambda == x and Tr_1^n(x) == Tr_1^m(u). lhs counts the elements that pass.
IdentityCheck e_decompose_check(const BinaryField& field);

// lambda -> lambda conj(lambda) on E hits each trace-one subfield element
// exactly twice, with a conjugate pair of preimages solving X^2 + X + a = 0.
IdentityCheck sigma_two_to_one_check(const BinaryField& field);

// Checks around Q = {a : Tr(mu/a) = Tr(mu/(a+1)) = 1, Tr(a) = 0}:
//   q_subidentity   sum_{a not in F_2} chi_n(mu/(a^2+a)) = -1 + k_n(mu)   (gating)
//   q_closed_form   4|Q| = 2^n - 1 - k_n(mu) + S                           (info)
//   q_cover         Q is inside Q1 u Q2                                    (gating)
//   q_lower_bound   |Q| >= 2^{m-2}(2^m - 5)                                (info)
//   q_nonempty      |Q| > 0                                                (gating, m >= 3)
// with S = sum_{a not in F_2} chi_n(a + mu/(a^2+a)) and k_n over the big field.
std::vector<IdentityCheck> q_identity_check(const BinaryField& field, Elem mu);

// R(mu) = sum over u, v in F_{2^m} with Tr_1^m(1/u) = Tr_1^m(v) = 1 of
// chi_m(mu^2 (1/v + 1/(v + u^2 + u))).
std::int64_t r_sum(const BinaryField& field, Elem mu);

// Zero count of the g construction's spectrum against (3/2)(2^{n-2} + R(mu)).
// Diagnostic only. Requires even m and k_m(mu) == -1 (NoSuchMu otherwise).
IdentityCheck n0_formula_check(const BinaryField& field, Elem mu);
// The first mu with k_m(mu) == -1; throws NoSuchMu.
Elem first_mu_with_k_minus1(const BinaryField& field);

// Moreno bound on S, the rational-function bound on the Gamma1/Gamma2 sum (poles
// skipped and counted) and its trivial bound.
std::vector<IdentityCheck> bound_checks(const BinaryField& field, Elem mu);

}  // namespace bfw

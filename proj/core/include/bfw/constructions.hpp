#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bfw/boolfun.hpp"
#include "bfw/gf2n.hpp"
#include "bfw/report.hpp"
#include "bfw/walsh.hpp"

namespace bfw {

enum class Construction { f, g };

// Smallest lambda with lambda + conj(lambda) == 1.
Elem find_lambda(const BinaryField& field);

// f(x) = Tr(lambda x^{2^m+1}) + Tr(x) Tr(mu x^{2^m-1})
// g(x) = (1 + Tr(x)) Tr(lambda x^{2^m+1}) + Tr(x) Tr(mu x^{2^m-1})
// mu must be a nonzero subfield element (ZeroMu / NotInSubfield); an explicit
// lambda must satisfy lambda + conj(lambda) == 1 (InvalidLambda).
TruthTable build_f(const BinaryField& field, Elem mu, std::optional<Elem> lambda = std::nullopt);
TruthTable build_g(const BinaryField& field, Elem mu, std::optional<Elem> lambda = std::nullopt);
TruthTable build_construction(Construction which, const BinaryField& field, Elem mu,
                              std::optional<Elem> lambda = std::nullopt);

struct CircleRoots {
  bool exists = false;
  std::vector<Elem> roots;  // two conjugate unit-circle elements when exists
};

// X + 1/X = 1/a for a in F_{2^m}^*: two unit-circle roots iff Tr_1^m(a) == 1.
CircleRoots solve_inverse_sum(const BinaryField& field, Elem a);
// 1 + a z + conj(a)/z = 0, reduced through the polar form of a to the above.
CircleRoots solve_circle_equation(const BinaryField& field, Elem a);

// X + 1/X = 1/a has two unit-circle roots exactly when Tr_1^m(a) = 1, and
// u -> u + conj(u) maps the unit circle minus 1 two-to-one onto
// H1 = {x in F_{2^m}^* : Tr_1^m(1/x) = 1}. Exhaustive over the subfield.
std::vector<Check> lemma31_checks(const BinaryField& field);

// How the printed mu in the closed forms is read. The derivation replaces mu
// by its square root and then keeps writing mu; `substituted` undoes that
// renaming, `literal` uses the printed symbols as they stand.
enum class MuReading { literal, substituted };
const char* to_string(MuReading r) noexcept;

struct CasePrediction {
  std::int64_t value = 0;
  std::string label;
};

CasePrediction predicted_wf(const BinaryField& field, Elem mu, Elem a,
                            MuReading reading = MuReading::substituted);
// k_mu is k_m(mu); needed only for a in {0, 1}.
CasePrediction predicted_wg(const BinaryField& field, Elem mu, Elem a, std::int64_t k_mu,
                            MuReading reading = MuReading::substituted);

struct CaseTally {
  std::uint64_t matched = 0;
  std::uint64_t total = 0;
};

struct CaseReport {
  MuReading reading = MuReading::literal;  // reading whose predictions are listed
  struct Entry {
    Elem a;
    std::string label;
    std::int64_t predicted;
    std::int64_t observed;
    bool match;
  };
  std::vector<Entry> entries;
  std::map<std::string, CaseTally> per_case;
  double literal_match_rate = 0;
  double substituted_match_rate = 0;
  // Observed W(0) is the negation of the closed form's value.
  bool origin_sign_flipped = false;

  bool all_match() const;
};

// Compares the closed forms with `spectrum` at every field point. The literal
// reading is tried first; if it disagrees anywhere the substituted reading is
// listed instead, and both match rates are kept.
CaseReport case_report(Construction which, const BinaryField& field, Elem mu,
                       const WalshSpectrum& spectrum);

struct CountCheck {
  std::map<int, std::uint64_t> counts;  // N_i = #{a : W(a) = i 2^m}
  std::vector<Check> relations;
  bool pass() const;
};

// N_0 = 3N_2 + 8N_3, N_1 = 2^{n-1} + 2^{m-1} - 3N_2 - 6N_3,
// N_{-1} = 2^{n-1} - 2^{m-1} - N_2 - 3N_3. Throws UnexpectedValue for values
// outside {-2^m, 0, 2^m, 2^{m+1}, 3 2^m}.
CountCheck count_relations_f(const SpectrumDistribution& dist, int m);
// N_0 = 3N_2 + 3N_{-2}, N_1 = 2^{n-1} + 2^{m-1} - 3N_2 - N_{-2},
// N_{-1} = 2^{n-1} - 2^{m-1} - N_2 - 3N_{-2}; values in {0, +-2^m, +-2^{m+1}}.
CountCheck count_relations_g(const SpectrumDistribution& dist, int m);

enum class Theorem { thm32, thm34 };
enum class MuPolicy { all, k_eq_minus1, given };

struct VerifyOptions {
  MuPolicy policy = MuPolicy::all;
  std::vector<Elem> given;            // for MuPolicy::given
  std::optional<Elem> lambda;
  int threads = 1;
  // Case-formula comparison is O(2^n) field solves per mu; run it up to this n.
  int case_formula_max_n = 12;
};

// One report per mu, ascending. Throws NoSuchMu when the policy selects
// nothing.
std::vector<VerificationReport> verify_theorem(Theorem which, const BinaryField& field,
                                               const VerifyOptions& options = {});

std::vector<Elem> select_mu(const BinaryField& field, MuPolicy policy, std::span<const Elem> given = {});

}  // namespace bfw

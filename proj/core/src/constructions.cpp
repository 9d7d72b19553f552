#include "bfw/constructions.hpp"

#include <algorithm>
#include <set>

#include "bfw/error.hpp"
#include "bfw/kloosterman.hpp"
#include "bfw/parallel.hpp"

namespace bfw {

namespace {

void require_mu(const BinaryField& field, Elem mu) {
  if (mu == 0) throw Error(Errc::zero_mu, "mu must be nonzero");
  if (!field.in_subfield(mu)) throw Error(Errc::not_in_subfield, "mu = " + to_hex(mu) + " is not in F_{2^m}");
}

Elem resolve_lambda(const BinaryField& field, std::optional<Elem> lambda) {
  if (!lambda) return find_lambda(field);
  if ((*lambda ^ field.conj(*lambda)) != 1)
    throw Error(Errc::invalid_lambda, to_hex(*lambda) + " does not satisfy lambda + conj(lambda) = 1");
  return *lambda;
}

int chi(int bit) noexcept { return bit ? -1 : 1; }

// Walks x = g^k for k = 0 .. 2^n - 2 together with x^{2^m+1} and x^{2^m-1}.
template <class Fn>
void for_each_unit_with_powers(const BinaryField& field, Fn&& fn) {
  const int m = field.half();
  const Elem g = field.generator();
  const LinearMap step_x = field.mul_map(g);
  const LinearMap step_norm = field.mul_map(field.pow(g, (std::uint64_t{1} << m) + 1));
  const LinearMap step_ratio = field.mul_map(field.pow(g, (std::uint64_t{1} << m) - 1));
  Elem x = 1, norm = 1, ratio = 1;
  const std::uint64_t count = field.size() - 1;
  for (std::uint64_t k = 0; k < count; ++k) {
    fn(x, norm, ratio);
    x = step_x(x);
    norm = step_norm(norm);
    ratio = step_ratio(ratio);
  }
}

TruthTable build_impl(Construction which, const BinaryField& field, Elem mu, std::optional<Elem> lambda) {
  require_mu(field, mu);
  const Elem lam = resolve_lambda(field, lambda);
  const std::uint32_t lam_mask = field.trace_form_mask(lam);
  const std::uint32_t mu_mask = field.trace_form_mask(mu);
  const Elem tmask = field.trace_mask();
  TruthTable t(field.degree());
  // x = 0 evaluates to 0: both monomials vanish there.
  for_each_unit_with_powers(field, [&](Elem x, Elem norm, Elem ratio) {
    const int tx = BinaryField::parity(x & tmask);
    const int quad = BinaryField::parity(norm & lam_mask);
    const int mono = BinaryField::parity(ratio & mu_mask);
    const int v = which == Construction::f ? quad ^ (tx & mono) : (tx ? mono : quad);
    if (v) t.set(x, true);
  });
  return t;
}

std::int64_t pair_sign_sum(const BinaryField& field, Elem coef, const CircleRoots& r) {
  std::int64_t s = 0;
  for (Elem root : r.roots) s += chi(field.tr_abs(field.mul(coef, root)));
  return s;
}

}  // namespace

Elem find_lambda(const BinaryField& field) { return field.affine_e_base(); }

TruthTable build_f(const BinaryField& field, Elem mu, std::optional<Elem> lambda) {
  return build_impl(Construction::f, field, mu, lambda);
}

TruthTable build_g(const BinaryField& field, Elem mu, std::optional<Elem> lambda) {
  return build_impl(Construction::g, field, mu, lambda);
}

TruthTable build_construction(Construction which, const BinaryField& field, Elem mu, std::optional<Elem> lambda) {
  return build_impl(which, field, mu, lambda);
}

CircleRoots solve_inverse_sum(const BinaryField& field, Elem a) {
  if (a == 0) throw Error(Errc::division_by_zero, "X + 1/X = 1/0");
  if (!field.in_subfield(a)) throw Error(Errc::not_in_subfield, to_hex(a) + " is not in F_{2^m}");
  CircleRoots out;
  if (field.tr_sub(a) == 0) return out;
  // X^2 + X/a + 1 = 0; with X = t/a this is t^2 + t = a^2.
  const Elem c = field.inv(a);
  for (Elem t : field.solve_artin_schreier(field.sqr(a))) out.roots.push_back(field.mul(c, t));
  std::sort(out.roots.begin(), out.roots.end());
  out.exists = out.roots.size() == 2 && field.on_unit_circle(out.roots[0]) && field.on_unit_circle(out.roots[1]);
  if (!out.exists) throw Error(Errc::invalid_argument, "inverse-sum roots left the unit circle");
  return out;
}

CircleRoots solve_circle_equation(const BinaryField& field, Elem a) {
  if (a == 0) throw Error(Errc::division_by_zero, "circle equation with a = 0");
  const int m = field.half();
  const std::uint64_t root_exp = std::uint64_t{1} << (m - 1);
  const Elem abar = field.conj(a);
  const Elem a0 = field.pow(field.mul(a, abar), root_exp);           // in F_{2^m}^*
  const Elem a1 = field.pow(field.mul(abar, field.inv(a)), root_exp);  // on the circle, a = a0 a1
  CircleRoots w = solve_inverse_sum(field, a0);
  CircleRoots out;
  if (!w.exists) return out;
  const Elem a1_inv = field.conj(a1);
  for (Elem r : w.roots) out.roots.push_back(field.mul(r, a1_inv));
  std::sort(out.roots.begin(), out.roots.end());
  out.exists = true;
  return out;
}

std::vector<Check> lemma31_checks(const BinaryField& field) {
  const int m = field.half();
  std::vector<Check> out;

  std::uint64_t with_roots = 0, bad = 0;
  std::string first_bad;
  for (Elem a : field.enumerate(Subgroup::subfield_units)) {
    const CircleRoots r = solve_inverse_sum(field, a);
    const bool expect = field.tr_sub(a) == 1;
    bool ok = r.exists == expect && r.roots.size() == (expect ? 2u : 0u);
    if (ok && expect) {
      const Elem inv_a = field.inv(a);
      for (Elem x : r.roots) ok = ok && field.on_unit_circle(x) && (x ^ field.inv(x)) == inv_a;
      ok = ok && r.roots[0] != r.roots[1] && field.conj(r.roots[0]) == r.roots[1];
    }
    with_roots += r.exists;
    if (!ok && bad++ == 0) first_bad = to_hex(a);
  }
  out.push_back({"inverse_sum_roots", bad == 0, true,
                 std::to_string(with_roots) + " of " + std::to_string((std::uint64_t{1} << m) - 1) +
                     " have roots" + (bad ? ", first failure at " + first_bad : "")});

  std::map<Elem, int> hits;
  for (Elem u : field.enumerate(Subgroup::unit_circle))
    if (u != 1) ++hits[u ^ field.conj(u)];
  bool two_to_one = true;
  std::uint64_t h1 = 0;
  for (const auto& [x, c] : hits) two_to_one = two_to_one && c == 2 && field.in_subfield(x) && x != 0;
  for (Elem x : field.enumerate(Subgroup::subfield_units)) {
    if (field.tr_sub(field.inv(x)) != 1) continue;
    ++h1;
    two_to_one = two_to_one && hits.contains(x);
  }
  out.push_back({"trace_map_two_to_one", two_to_one && hits.size() == h1, true,
                 "|image| = " + std::to_string(hits.size()) + ", |H1| = " + std::to_string(h1)});
  return out;
}

const char* to_string(MuReading r) noexcept {
  return r == MuReading::literal ? "literal" : "substituted";
}

CasePrediction predicted_wf(const BinaryField& field, Elem mu, Elem a, MuReading reading) {
  require_mu(field, mu);
  const int m = field.half();
  const std::int64_t q = std::int64_t{1} << m;
  const std::int64_t half_q = q / 2;
  const Elem coef = reading == MuReading::substituted ? field.sqrt(mu) : mu;
  if (a == 0) {
    if (m % 2 == 0) return {-q, "a=0,m even"};
    const CircleRoots rho = solve_circle_equation(field, 1);
    return {q * chi(field.tr_abs(field.mul(coef, rho.roots.at(0)))), "a=0,m odd"};
  }
  const bool trace_matches = field.tr_abs(a) == (m & 1);
  const int norm_trace = field.tr_sub_unchecked(field.mul(a, field.conj(a)));
  auto a_sum = [&] { return pair_sign_sum(field, coef, solve_circle_equation(field, a)); };
  auto b_sum = [&] {
    const Elem a1 = a ^ 1u;
    return a1 == 0 ? std::int64_t{0} : pair_sign_sum(field, coef, solve_circle_equation(field, a1));
  };
  if (trace_matches && norm_trace == 0) return {-q, "Tr(a)=m,Tr(aa')=0"};
  if (!trace_matches && norm_trace == 0) return {-half_q * b_sum(), "Tr(a)!=m,Tr(aa')=0"};
  if (trace_matches) return {half_q * (a_sum() - b_sum() + 2), "Tr(a)=m,Tr(aa')=1"};
  return {half_q * a_sum(), "Tr(a)!=m,Tr(aa')=1"};
}

CasePrediction predicted_wg(const BinaryField& field, Elem mu, Elem a, std::int64_t k_mu, MuReading reading) {
  require_mu(field, mu);
  const int m = field.half();
  const std::int64_t half_q = std::int64_t{1} << (m - 1);
  const bool odd = m % 2 == 1;
  if (a == 0) return odd ? CasePrediction{-half_q * (1 + k_mu), "a=0,m odd"}
                         : CasePrediction{-half_q * (3 + k_mu), "a=0,m even"};
  if (a == 1) return odd ? CasePrediction{half_q * (1 + k_mu), "a=1,m odd"}
                         : CasePrediction{half_q * (-1 + k_mu), "a=1,m even"};
  // Printed coefficient mu^2; with mu -> sqrt(mu) it becomes mu.
  const Elem coef = reading == MuReading::substituted ? mu : field.sqr(mu);
  const Elem a1 = a ^ 1u;
  const int c1 = chi(field.tr_abs(field.mul(coef, field.div(field.conj(a), a))));
  const int c2 = chi(field.tr_abs(field.mul(coef, field.div(field.conj(a1), a1))));
  const std::int64_t c = c1 - c2;
  const bool trace_matches = field.tr_abs(a) == (m & 1);
  const int norm_trace = field.tr_sub_unchecked(field.mul(a, field.conj(a)));
  if (trace_matches && norm_trace == 0) return {half_q * (-2 + c), "Tr(a)=m,Tr(aa')=0"};
  if (trace_matches) return {half_q * (2 + c), "Tr(a)=m,Tr(aa')=1"};
  return {half_q * c, "Tr(a)!=m"};
}

bool CaseReport::all_match() const {
  return std::all_of(entries.begin(), entries.end(), [](const Entry& e) { return e.match; });
}

CaseReport case_report(Construction which, const BinaryField& field, Elem mu, const WalshSpectrum& spectrum) {
  const std::int64_t k_mu = which == Construction::g ? kloosterman_subfield(field, mu) : 0;
  auto run = [&](MuReading reading) {
    CaseReport rep;
    rep.reading = reading;
    for (std::uint64_t v = 0; v < field.size(); ++v) {
      const auto a = static_cast<Elem>(v);
      const CasePrediction p = which == Construction::f ? predicted_wf(field, mu, a, reading)
                                                        : predicted_wg(field, mu, a, k_mu, reading);
      const std::int64_t obs = walsh_at_field_point(field, spectrum, a);
      rep.entries.push_back({a, p.label, p.value, obs, p.value == obs});
      auto& tally = rep.per_case[p.label];
      ++tally.total;
      if (p.value == obs) ++tally.matched;
    }
    return rep;
  };
  auto rate = [](const CaseReport& r) {
    std::uint64_t ok = 0;
    for (const auto& e : r.entries) ok += e.match;
    return r.entries.empty() ? 1.0 : static_cast<double>(ok) / static_cast<double>(r.entries.size());
  };
  auto mark_origin = [&](CaseReport& r) {
    const auto& e = r.entries.front();
    r.origin_sign_flipped = !e.match && e.predicted == -e.observed;
  };
  CaseReport literal = run(MuReading::literal);
  const double lit_rate = rate(literal);
  if (literal.all_match()) {
    literal.literal_match_rate = lit_rate;
    literal.substituted_match_rate = rate(run(MuReading::substituted));
    mark_origin(literal);
    return literal;
  }
  CaseReport sub = run(MuReading::substituted);
  sub.literal_match_rate = lit_rate;
  sub.substituted_match_rate = rate(sub);
  mark_origin(sub);
  return sub;
}

bool CountCheck::pass() const {
  return std::all_of(relations.begin(), relations.end(), [](const Check& c) { return c.pass; });
}

namespace {

std::map<int, std::uint64_t> level_counts(const SpectrumDistribution& dist, int m, std::span<const int> levels) {
  std::map<int, std::uint64_t> counts;
  for (int i : levels) counts[i] = 0;
  const std::int64_t q = std::int64_t{1} << m;
  for (const auto& [value, count] : dist.entries) {
    const bool divisible = value % q == 0;
    const int level = static_cast<int>(value / q);
    if (!divisible || !counts.contains(level))
      throw Error(Errc::unexpected_value, "Walsh value " + std::to_string(value) + " outside the theorem set");
    counts[level] = count;
  }
  return counts;
}

Check relation(const std::string& name, std::int64_t lhs, std::int64_t rhs) {
  return {name, lhs == rhs, true, std::to_string(lhs) + " vs " + std::to_string(rhs)};
}

}  // namespace

CountCheck count_relations_f(const SpectrumDistribution& dist, int m) {
  static constexpr int kLevels[] = {-1, 0, 1, 2, 3};
  CountCheck out;
  out.counts = level_counts(dist, m, kLevels);
  auto n = [&](int i) { return static_cast<std::int64_t>(out.counts[i]); };
  const std::int64_t half_n = std::int64_t{1} << (2 * m - 1);
  const std::int64_t half_q = std::int64_t{1} << (m - 1);
  out.relations.push_back(relation("N0=3N2+8N3", n(0), 3 * n(2) + 8 * n(3)));
  out.relations.push_back(relation("N1=2^(n-1)+2^(m-1)-3N2-6N3", n(1), half_n + half_q - 3 * n(2) - 6 * n(3)));
  out.relations.push_back(relation("N-1=2^(n-1)-2^(m-1)-N2-3N3", n(-1), half_n - half_q - n(2) - 3 * n(3)));
  return out;
}

CountCheck count_relations_g(const SpectrumDistribution& dist, int m) {
  static constexpr int kLevels[] = {-2, -1, 0, 1, 2};
  CountCheck out;
  out.counts = level_counts(dist, m, kLevels);
  auto n = [&](int i) { return static_cast<std::int64_t>(out.counts[i]); };
  const std::int64_t half_n = std::int64_t{1} << (2 * m - 1);
  const std::int64_t half_q = std::int64_t{1} << (m - 1);
  out.relations.push_back(relation("N0=3N2+3N-2", n(0), 3 * n(2) + 3 * n(-2)));
  out.relations.push_back(relation("N1=2^(n-1)+2^(m-1)-3N2-N-2", n(1), half_n + half_q - 3 * n(2) - n(-2)));
  out.relations.push_back(relation("N-1=2^(n-1)-2^(m-1)-N2-3N-2", n(-1), half_n - half_q - n(2) - 3 * n(-2)));
  return out;
}

std::vector<Elem> select_mu(const BinaryField& field, MuPolicy policy, std::span<const Elem> given) {
  switch (policy) {
    case MuPolicy::all: return field.enumerate(Subgroup::subfield_units);
    case MuPolicy::k_eq_minus1: return find_mu(field, -1);
    case MuPolicy::given: {
      std::vector<Elem> out(given.begin(), given.end());
      for (Elem mu : out) require_mu(field, mu);
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }
  }
  return {};
}

namespace {

std::string join_values(const std::vector<std::int64_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

VerificationReport verify_one(Theorem which, const BinaryField& field, Elem mu, const VerifyOptions& options) {
  const int m = field.half();
  const int n = field.degree();
  const std::int64_t q = std::int64_t{1} << m;
  const Construction cons = which == Theorem::thm32 ? Construction::f : Construction::g;
  VerificationReport rep;
  rep.theorem = which == Theorem::thm32 ? "thm32" : "thm34";
  rep.m = m;
  rep.mu = mu;

  std::int64_t k_mu = 0;
  if (which == Theorem::thm34) {
    k_mu = kloosterman_subfield(field, mu);
    rep.checks.push_back({"mu_hypothesis", k_mu == -1, true, "k_m(mu) = " + std::to_string(k_mu)});
  }

  const TruthTable table = build_construction(cons, field, mu, options.lambda);
  const WalshSpectrum spec = wht_fast(table);
  const SpectrumDistribution dist = distribution(spec);
  const auto values = dist.values();

  rep.checks.push_back({"zero_at_origin", !table.get(0), true, ""});
  rep.checks.push_back({"parseval", sum_of_squares(spec) == (std::int64_t{1} << (2 * n)), true, ""});

  const std::vector<std::int64_t> allowed = which == Theorem::thm32
                                                ? std::vector<std::int64_t>{-q, 0, q, 2 * q, 3 * q}
                                                : std::vector<std::int64_t>{-2 * q, -q, 0, q, 2 * q};
  const bool contained = std::all_of(values.begin(), values.end(), [&](std::int64_t v) {
    return std::find(allowed.begin(), allowed.end(), v) != allowed.end();
  });
  rep.checks.push_back({"value_set", contained, true, join_values(values)});

  const std::int64_t nl = nonlinearity(spec);
  const std::int64_t half_n = std::int64_t{1} << (n - 1);
  if (which == Theorem::thm32) {
    const std::int64_t bound = half_n - 3 * (q / 2);
    rep.checks.push_back({"nonlinearity_bound", nl >= bound, true,
                          "nl = " + std::to_string(nl) + ", bound " + std::to_string(bound)});
  } else {
    const std::int64_t target = half_n - q;
    // Equality needs N0 > 0, which holds from m = 3 on; at m = 2 g is bent.
    rep.checks.push_back({"nonlinearity_exact", nl == target, m >= 3,
                          "nl = " + std::to_string(nl) + ", expected " + std::to_string(target)});
    const bool balanced = is_balanced(table);
    rep.checks.push_back({"balanced_iff_m_odd", balanced == (m % 2 == 1), true,
                          balanced ? "balanced" : "not balanced"});
  }

  Check counts{"count_relations", false, true, ""};
  std::uint64_t n0 = 0;
  try {
    const CountCheck cc = cons == Construction::f ? count_relations_f(dist, m) : count_relations_g(dist, m);
    counts.pass = cc.pass();
    n0 = cc.counts.at(0);
    for (const auto& r : cc.relations) counts.detail += r.name + ":" + r.detail + "; ";
  } catch (const Error& e) {
    counts.detail = e.what();
  }
  rep.checks.push_back(counts);
  rep.checks.push_back({"n0_positive", n0 > 0, m >= 3, "N0 = " + std::to_string(n0)});

  const int deg = algebraic_degree(table);
  rep.checks.push_back({"algebraic_degree", deg == m + 1, m >= 3,
                        "deg = " + std::to_string(deg) + ", expected " + std::to_string(m + 1)});

  if (n <= options.case_formula_max_n) {
    const CaseReport cr = case_report(cons, field, mu, spec);
    std::string detail = std::string("reading=") + to_string(cr.reading) +
                         " literal=" + std::to_string(cr.literal_match_rate) +
                         " substituted=" + std::to_string(cr.substituted_match_rate);
    if (cr.origin_sign_flipped) detail += " origin=sign-flipped";
    for (const auto& [label, tally] : cr.per_case)
      detail += "; " + label + " " + std::to_string(tally.matched) + "/" + std::to_string(tally.total);
    rep.checks.push_back({"case_formulas", cr.all_match(), false, detail});
  }
  return rep;
}

}  // namespace

std::vector<VerificationReport> verify_theorem(Theorem which, const BinaryField& field, const VerifyOptions& options) {
  MuPolicy policy = options.policy;
  if (which == Theorem::thm34 && policy == MuPolicy::all) policy = MuPolicy::k_eq_minus1;
  const std::vector<Elem> mus = select_mu(field, policy, options.given);
  if (mus.empty())
    throw Error(Errc::no_such_mu, "no admissible mu at m = " + std::to_string(field.half()));
  return parallel_map(mus.size(), options.threads,
                      [&](std::size_t i) { return verify_one(which, field, mus[i], options); });
}

}  // namespace bfw

#include "bfw/expsums.hpp"

#include <cmath>
#include <map>
#include <numeric>

#include "bfw/constructions.hpp"
#include "bfw/error.hpp"
#include "bfw/kloosterman.hpp"
#include "bfw/walsh.hpp"

namespace bfw {

namespace {

int chi(int bit) noexcept { return bit ? -1 : 1; }

void require_mu(const BinaryField& field, Elem mu) {
  if (mu == 0) throw Error(Errc::zero_mu, "mu must be nonzero");
  if (!field.in_subfield(mu)) throw Error(Errc::not_in_subfield, "mu = " + to_hex(mu) + " is not in F_{2^m}");
}

// inv[a] for every a, with inv[0] = 0.
std::vector<Elem> inverse_table(const BinaryField& field) {
  std::vector<Elem> inv(field.size());
  std::iota(inv.begin(), inv.end(), Elem{0});
  batch_invert(field, inv);
  return inv;
}

IdentityCheck make(std::string name, const BinaryField& field, Elem mu, std::int64_t lhs, std::int64_t rhs,
                   bool match, bool gating = true, std::string notes = {}) {
  return {std::move(name), field.half(), mu, lhs, rhs, match, gating, std::move(notes)};
}

}  // namespace

IdentityCheck theorem35_check(const BinaryField& field, Elem mu) {
  require_mu(field, mu);
  const std::vector<Elem> inv = inverse_table(field);
  const std::uint32_t mu_mask = field.trace_form_mask(mu);
  std::int64_t lhs = 0;
  for (std::uint64_t v = 2; v < field.size(); ++v) {
    const auto a = static_cast<Elem>(v);
    // 1/(a^2 + a) = 1/a + 1/(a + 1)
    const Elem q = field.mul(field.conj(a) ^ a, inv[a] ^ inv[a ^ 1u]);
    lhs += chi(BinaryField::parity(q & mu_mask));
  }
  const std::int64_t k = kloosterman_subfield(field, mu);
  const std::int64_t rhs = -2 - (1 + k) * (1 + k);
  std::string notes = "k_m(mu) = " + std::to_string(k);
  if (lhs != rhs) notes += "; (1 + k_m(mu))^2 - 2 = " + std::to_string((1 + k) * (1 + k) - 2);
  return make("theorem35", field, mu, lhs, rhs, lhs == rhs, true, notes);
}

EDecomposition e_decompose(const BinaryField& field, Elem x) {
  const Elem u = x ^ field.conj(x);
  if (u == 0) throw Error(Errc::in_subfield, to_hex(x) + " lies in F_{2^m}");
  return {u, field.div(x, u)};
}

IdentityCheck e_decompose_check(const BinaryField& field) {
  std::int64_t good = 0, total = 0;
  for (std::uint64_t v = 0; v < field.size(); ++v) {
    const auto x = static_cast<Elem>(v);
    if (field.in_subfield(x)) continue;
    ++total;
    const EDecomposition d = e_decompose(field, x);
    const bool ok = d.u != 0 && field.in_subfield(d.u) && (d.lambda ^ field.conj(d.lambda)) == 1 &&
                    field.mul(d.u, d.lambda) == x && field.tr_abs(x) == field.tr_sub(d.u);
    good += ok;
  }
  return make("e_decompose", field, 0, good, total, good == total);
}

IdentityCheck sigma_two_to_one_check(const BinaryField& field) {
  const int m = field.half();
  std::map<Elem, std::vector<Elem>> preimages;
  for (Elem lam : field.enumerate(Subgroup::affine_e)) preimages[field.mul(lam, field.conj(lam))].push_back(lam);

  std::int64_t hit_twice = 0;
  bool ok = true;
  std::string notes;
  for (const auto& [a, pre] : preimages) {
    if (!field.in_subfield(a) || field.tr_sub(a) != 1) {
      ok = false;
      notes = "image " + to_hex(a) + " has subfield trace 0";
    }
    if (pre.size() != 2) continue;
    ++hit_twice;
    const bool conjugate_pair = field.conj(pre[0]) == pre[1];
    const bool roots = (field.sqr(pre[0]) ^ pre[0] ^ a) == 0 && (field.sqr(pre[1]) ^ pre[1] ^ a) == 0;
    if (!conjugate_pair || !roots) {
      ok = false;
      notes = "preimages of " + to_hex(a) + " are not a conjugate root pair";
    }
  }
  std::int64_t trace_one = 0;
  for (Elem a : field.enumerate(Subgroup::subfield_units)) trace_one += field.tr_sub_unchecked(a);
  const std::int64_t rhs = std::int64_t{1} << (m - 1);
  ok = ok && hit_twice == rhs && static_cast<std::int64_t>(preimages.size()) == rhs && trace_one == rhs;
  return make("sigma_two_to_one", field, 0, hit_twice, rhs, ok, true, notes);
}

std::vector<IdentityCheck> q_identity_check(const BinaryField& field, Elem mu) {
  require_mu(field, mu);
  const int m = field.half();
  const int n = field.degree();
  const std::vector<Elem> inv = inverse_table(field);
  const std::uint32_t mu_mask = field.trace_form_mask(mu);
  const Elem tmask = field.trace_mask();

  std::int64_t sub_sum = 0, s = 0, q_size = 0, covered = 0;
  for (std::uint64_t v = 2; v < field.size(); ++v) {
    const auto a = static_cast<Elem>(v);
    const int t_a = BinaryField::parity(a & tmask);
    const int t_inv_a = BinaryField::parity(inv[a] & mu_mask);
    const int t_inv_a1 = BinaryField::parity(inv[a ^ 1u] & mu_mask);
    const int t_quot = t_inv_a ^ t_inv_a1;  // Tr(mu/(a^2+a))
    sub_sum += chi(t_quot);
    s += chi(t_a ^ t_quot);
    if (t_inv_a && t_inv_a1 && !t_a) {
      ++q_size;
      const int norm = field.tr_sub_unchecked(field.mul(a, field.conj(a)));
      // Q1 asks Tr(mu/a) = 1 with norm trace 1, Q2 Tr(mu/(a+1)) = 1 with norm trace 0.
      if ((norm == 1 && t_inv_a) || (norm == 0 && t_inv_a1)) ++covered;
    }
  }
  const std::int64_t k_n = kloosterman_sum(field, mu);
  const std::int64_t two_n = std::int64_t{1} << n;

  std::vector<IdentityCheck> out;
  out.push_back(make("q_subidentity", field, mu, sub_sum, -1 + k_n, sub_sum == -1 + k_n, true,
                     "k_n(mu) = " + std::to_string(k_n)));

  const std::int64_t closed = two_n - 1 - k_n + s;
  const std::int64_t alt = two_n + 1 - k_n + s;
  // Each a in Q contributes 2 * 2 * 2 to the indicator product, so the
  // product sum is 8|Q|; that value is reported next to the closed form.
  std::string notes = "S = " + std::to_string(s) + "; 8|Q| = " + std::to_string(8 * q_size);
  if (4 * q_size != closed) notes += "; 2^n + 1 - k_n(mu) + S = " + std::to_string(alt);
  out.push_back(make("q_closed_form", field, mu, 4 * q_size, closed, 4 * q_size == closed, false, notes));

  out.push_back(make("q_cover", field, mu, covered, q_size, covered == q_size));

  const std::int64_t floor_q = m >= 2 ? (std::int64_t{1} << (m - 2)) * ((std::int64_t{1} << m) - 5) : 0;
  // The stated floor follows from the closed form above, so it is reported
  // alongside it; what the zero-count argument needs is |Q| > 0.
  out.push_back(make("q_lower_bound", field, mu, q_size, floor_q, q_size >= floor_q, false));
  out.push_back(make("q_nonempty", field, mu, q_size, 1, q_size >= 1, m >= 3));
  return out;
}

std::int64_t r_sum(const BinaryField& field, Elem mu) {
  require_mu(field, mu);
  const Elem coef = field.sqr(mu);
  std::vector<Elem> us, vs;
  for (Elem x : field.enumerate(Subgroup::subfield_units)) {
    if (field.tr_sub_unchecked(field.inv(x)) == 1) us.push_back(x);
    if (field.tr_sub_unchecked(x) == 1) vs.push_back(x);
  }
  std::vector<Elem> inv_v = vs;
  batch_invert(field, inv_v);
  std::int64_t acc = 0;
  std::vector<Elem> denom(vs.size());
  for (Elem u : us) {
    const Elem shift = field.sqr(u) ^ u;
    for (std::size_t i = 0; i < vs.size(); ++i) denom[i] = vs[i] ^ shift;  // never zero: traces differ
    batch_invert(field, denom);
    for (std::size_t i = 0; i < vs.size(); ++i)
      acc += chi(field.tr_sub_unchecked(field.mul(coef, inv_v[i] ^ denom[i])));
  }
  return acc;
}

Elem first_mu_with_k_minus1(const BinaryField& field) {
  const std::vector<Elem> mus = find_mu(field, -1);
  if (mus.empty()) throw Error(Errc::no_such_mu, "no mu with k_m(mu) = -1 at m = " + std::to_string(field.half()));
  return mus.front();
}

IdentityCheck n0_formula_check(const BinaryField& field, Elem mu) {
  require_mu(field, mu);
  const int m = field.half();
  if (m % 2 != 0) throw Error(Errc::invalid_argument, "the zero-count formula is stated for even m");
  const std::int64_t k = kloosterman_subfield(field, mu);
  if (k != -1) throw Error(Errc::no_such_mu, "k_m(" + to_hex(mu) + ") = " + std::to_string(k) + ", not -1");

  const WalshSpectrum spec = wht_fast(build_g(field, mu));
  const std::int64_t n0 = static_cast<std::int64_t>(distribution(spec).count_of(0));
  const std::int64_t r = r_sum(field, mu);
  const std::int64_t num = 3 * ((std::int64_t{1} << (field.degree() - 2)) + r);  // rhs = num / 2
  const bool integral = num % 2 == 0;
  const std::int64_t rhs = num / 2;
  std::string notes = "R = " + std::to_string(r);
  if (!integral) notes += "; formula is not an integer (" + std::to_string(num) + "/2)";
  const std::int64_t r_sqrt = r_sum(field, field.sqrt(mu));
  notes += "; R(sqrt mu) = " + std::to_string(r_sqrt);
  return make("n0_formula", field, mu, n0, rhs, integral && n0 == rhs, false, notes);
}

std::vector<IdentityCheck> bound_checks(const BinaryField& field, Elem mu) {
  require_mu(field, mu);
  const int m = field.half();
  const std::int64_t q = std::int64_t{1} << m;
  std::vector<IdentityCheck> out;

  {
    const std::vector<Elem> inv = inverse_table(field);
    const std::uint32_t mu_mask = field.trace_form_mask(mu);
    const Elem tmask = field.trace_mask();
    std::int64_t s = 0;
    for (std::uint64_t v = 2; v < field.size(); ++v) {
      const auto a = static_cast<Elem>(v);
      s += chi(BinaryField::parity(a & tmask) ^ BinaryField::parity((inv[a] ^ inv[a ^ 1u]) & mu_mask));
    }
    out.push_back(make("moreno_bound", field, mu, s, 4 * q, (s < 0 ? -s : s) <= 4 * q));
  }

  // Gamma sum with the smallest trace-one v0.
  const std::vector<Elem> sub = field.enumerate(Subgroup::subfield_units);
  Elem v0 = 0;
  for (Elem x : sub)
    if (field.tr_sub_unchecked(x) == 1) {
      v0 = x;
      break;
    }
  const Elem coef = field.sqr(mu);
  auto p = [&](Elem z, int e) { return field.pow(z, static_cast<std::uint64_t>(e)); };
  const Elem v2 = field.sqr(v0);
  std::int64_t s = 0, poles = 0;
  std::vector<Elem> points{0};
  points.insert(points.end(), sub.begin(), sub.end());
  for (Elem z : points) {
    const Elem g1 = 1 ^ p(z, 4) ^ p(z, 2) ^ v2;
    const Elem g2 = p(z, 8) ^ p(z, 6) ^ p(z, 5) ^ field.mul(v0, p(z, 4)) ^ p(z, 3) ^ field.mul(v2 ^ 1u, p(z, 2)) ^
                    field.mul(v2 ^ v0 ^ 1u, z) ^ p(v0, 4) ^ p(v0, 3) ^ v0;
    if (g2 == 0) {
      ++poles;
      continue;
    }
    s += chi(field.tr_sub_unchecked(field.mul(coef, field.div(g1, g2))));
  }
  const std::int64_t abs_s = s < 0 ? -s : s;
  // |S| <= 14 sqrt(2^m) + 1, in integers.
  const bool within = abs_s <= 1 || (abs_s - 1) * (abs_s - 1) <= 196 * q;
  const std::string pole_note = "v0 = " + to_hex(v0) + ", poles skipped: " + std::to_string(poles);
  const auto shown = static_cast<std::int64_t>(14.0 * std::sqrt(static_cast<double>(q)) + 1.0);
  out.push_back(make("gamma_bound", field, mu, s, shown, within, true, pole_note + "; bound 14 sqrt(2^m) + 1"));
  out.push_back(make("gamma_trivial_bound", field, mu, abs_s, q - poles, abs_s <= q - poles, true, pole_note));
  return out;
}

}  // namespace bfw

#include "bfw/kloosterman.hpp"

#include <algorithm>
#include <set>

#include "bfw/error.hpp"

namespace bfw {

namespace {

void require_subfield(const BinaryField& field, Elem x, const char* what) {
  if (!field.in_subfield(x))
    throw Error(Errc::not_in_subfield, std::string(what) + " = " + to_hex(x) + " is not in F_{2^m}");
}

// Signed sum over the cyclic group generated by `gen` (order `count`) of
// (-1)^{<mask_a, x> + <mask_b, 1/x>}.
std::int64_t cyclic_sum(const BinaryField& field, Elem gen, std::uint64_t count, std::uint32_t mask_a,
                        std::uint32_t mask_b) {
  const LinearMap up = field.mul_map(gen);
  const LinearMap down = field.mul_map(field.inv(gen));
  Elem x = 1, xi = 1;
  std::int64_t acc = 0;
  for (std::uint64_t k = 0; k < count; ++k) {
    acc += BinaryField::parity((x & mask_a) ^ (xi & mask_b)) ? -1 : 1;
    x = up(x);
    xi = down(xi);
  }
  return acc;
}

}  // namespace

std::int64_t kloosterman_sum(const BinaryField& field, Elem a, Elem b) {
  return cyclic_sum(field, field.generator(), field.size() - 1, field.trace_form_mask(a),
                    field.trace_form_mask(b));
}

std::int64_t kloosterman_subfield(const BinaryField& field, Elem a, Elem b) {
  require_subfield(field, a, "a");
  require_subfield(field, b, "b");
  const int m = field.half();
  const Elem lambda0 = field.affine_e_base();
  // Tr_1^m(a x) = Tr_1^n(lambda0 a x) for x in the subfield.
  return cyclic_sum(field, field.pow(field.generator(), (std::uint64_t{1} << m) + 1),
                    (std::uint64_t{1} << m) - 1, field.trace_form_mask(field.mul(lambda0, a)),
                    field.trace_form_mask(field.mul(lambda0, b)));
}

std::vector<std::pair<Elem, std::int64_t>> subfield_kloosterman_table(const BinaryField& field) {
  const int m = field.half();
  const std::uint64_t count = (std::uint64_t{1} << m) - 1;
  const Elem h = field.pow(field.generator(), (std::uint64_t{1} << m) + 1);
  const auto xs = field.powers(h, count);
  const Elem lambda0 = field.affine_e_base();
  std::vector<std::uint8_t> inv_trace(count);
  for (std::uint64_t k = 0; k < count; ++k)
    inv_trace[k] = static_cast<std::uint8_t>(field.tr_sub_unchecked(xs[(count - k) % count]));
  std::vector<std::pair<Elem, std::int64_t>> out;
  out.reserve(count);
  for (Elem mu : field.enumerate(Subgroup::subfield_units)) {
    const std::uint32_t mask = field.trace_form_mask(field.mul(lambda0, mu));
    std::int64_t acc = 0;
    for (std::uint64_t k = 0; k < count; ++k)
      acc += (BinaryField::parity(xs[k] & mask) ^ inv_trace[k]) ? -1 : 1;
    out.emplace_back(mu, acc);
  }
  return out;
}

SubfieldEmbedding::SubfieldEmbedding(const BinaryField& small, const BinaryField& big) {
  const int m = small.degree(), n = big.degree();
  if (n % m != 0) throw Error(Errc::invalid_argument, "degree " + std::to_string(m) + " does not divide " + std::to_string(n));
  const std::uint64_t poly = small.reduction_poly();
  auto eval = [&](Elem x) {
    Elem acc = 0;
    for (int i = m; i >= 0; --i) {
      acc = big.mul(acc, x);
      if ((poly >> i) & 1u) acc ^= 1;
    }
    return acc;
  };
  // Roots lie in the order-(2^m - 1) subgroup of big^*.
  const std::uint64_t cofactor = (big.size() - 1) / (small.size() - 1);
  const auto sub = big.powers(big.pow(big.generator(), cofactor), small.size() - 1);
  bool found = false;
  for (Elem c : sub) {
    if (eval(c) == 0 && (!found || c < root_)) {
      root_ = c;
      found = true;
    }
  }
  if (!found) throw Error(Errc::invalid_argument, "no root of the small field polynomial");
  std::vector<std::uint32_t> images(static_cast<std::size_t>(m));
  Elem p = 1;
  for (int i = 0; i < m; ++i) {
    images[i] = p;
    p = big.mul(p, root_);
  }
  map_ = LinearMap(images);
}

bool SubfieldEmbedding::trace_compatible(const BinaryField& small, const BinaryField& big) const {
  const int s = big.degree() / small.degree();
  for (std::uint64_t a = 0; a < small.size(); ++a) {
    const auto e = static_cast<Elem>(a);
    if (big.tr_abs(map_(e)) != ((s * small.tr_abs(e)) & 1)) return false;
  }
  return true;
}

std::int64_t kloosterman_lifted_direct(const BinaryField& base, int s, Elem a, int max_degree) {
  if (s < 1) throw Error(Errc::invalid_argument, "s must be positive");
  if (base.degree() * s > max_degree)
    throw Error(Errc::too_large, "lifted field of degree " + std::to_string(base.degree() * s));
  if (s == 1) return kloosterman_sum(base, a, 1);
  const BinaryField big = BinaryField::of_degree(base.degree() * s, std::nullopt, max_degree);
  const SubfieldEmbedding embed(base, big);
  return kloosterman_sum(big, embed(a), 1);
}

std::int64_t kloosterman_recursive(int m, int s, std::int64_t k1) {
  if (s < 0) throw Error(Errc::invalid_argument, "s must be non-negative");
  std::int64_t prev = -2, cur = k1;
  if (s == 0) return prev;
  const std::int64_t q = std::int64_t{1} << m;
  for (int i = 2; i <= s; ++i) {
    const std::int64_t next = -cur * k1 - q * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::int64_t unit_circle_sum(const BinaryField& field, Elem mu) {
  require_subfield(field, mu, "mu");
  if (mu == 0) throw Error(Errc::zero_mu, "mu must be nonzero");
  const auto circle = field.enumerate(Subgroup::unit_circle);
  std::vector<Elem> inverses = circle;
  batch_invert(field, inverses);
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < circle.size(); ++i) {
    // z + 1/z lies in the subfield.
    acc += field.tr_sub_unchecked(field.mul(mu, circle[i] ^ inverses[i])) ? -1 : 1;
  }
  return acc;
}

KloostermanScan scan(const BinaryField& field) {
  KloostermanScan out;
  out.m = field.degree();
  const std::uint64_t count = field.size() - 1;
  const auto xs = field.powers(field.generator(), count);
  std::vector<std::uint8_t> inv_trace(count);
  for (std::uint64_t k = 0; k < count; ++k)
    inv_trace[k] = static_cast<std::uint8_t>(field.tr_abs(xs[(count - k) % count]));
  out.entries.resize(field.size());
  for (std::uint64_t lam = 0; lam < field.size(); ++lam) {
    const std::uint32_t mask = field.trace_form_mask(static_cast<Elem>(lam));
    std::int64_t acc = 0;
    for (std::uint64_t k = 0; k < count; ++k)
      acc += (BinaryField::parity(xs[k] & mask) ^ inv_trace[k]) ? -1 : 1;
    out.entries[lam] = acc;
  }
  std::set<std::int64_t> distinct(out.entries.begin(), out.entries.end());
  out.value_set.assign(distinct.begin(), distinct.end());
  return out;
}

KloostermanScan scan(int m) { return scan(BinaryField::of_degree(m)); }

std::vector<std::int64_t> kloosterman_value_range(int m) {
  std::vector<std::int64_t> out;
  const std::int64_t limit_sq = std::int64_t{1} << (m + 2);  // (2^{m/2+1})^2
  const std::int64_t reach = std::int64_t{1} << (m / 2 + 2);
  for (std::int64_t s = -reach; s <= reach; ++s)
    if (s * s <= limit_sq && ((s % 4) + 4) % 4 == 3) out.push_back(s);
  return out;
}

bool within_weil_bound(int m, std::int64_t k) noexcept {
  return k * k <= (std::int64_t{4} << m);
}

std::vector<Elem> find_mu(const BinaryField& field, std::int64_t target) {
  std::vector<Elem> out;
  for (const auto& [mu, k] : subfield_kloosterman_table(field))
    if (k == target) out.push_back(mu);
  return out;
}

}  // namespace bfw

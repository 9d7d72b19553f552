#include "bfw/gf2n.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdio>

#include "bfw/error.hpp"

namespace bfw {

namespace {

std::uint64_t clmul(std::uint64_t a, std::uint64_t b) noexcept {
  std::uint64_t p = 0;
  for (; b != 0; b &= b - 1) p ^= a << std::countr_zero(b);
  return p;
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  const int dm = poly_degree(m);
  for (int da = poly_degree(a); da >= dm; da = poly_degree(a)) a ^= m << (da - dm);
  return a;
}

std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  // Operands have degree < deg(m) <= 31, so the product fits in 64 bits.
  return poly_mod(clmul(a, b), m);
}

std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a = poly_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

void require_quadratic(const BinaryField& f) {
  if (!f.is_quadratic()) throw Error(Errc::invalid_argument, "operation needs an even-degree field");
}

}  // namespace

int poly_degree(std::uint64_t poly) noexcept {
  return poly == 0 ? -1 : 63 - std::countl_zero(poly);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= v; ++p) {
    if (v % p == 0) {
      out.push_back(p);
      while (v % p == 0) v /= p;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

bool is_irreducible(std::uint64_t poly) {
  const int k = poly_degree(poly);
  if (k < 1) return false;
  if (k == 1) return true;
  // x^{2^i} mod poly for i = 1..k
  std::vector<std::uint64_t> frob(static_cast<std::size_t>(k) + 1);
  frob[0] = poly_mod(2, poly);
  for (int i = 1; i <= k; ++i) frob[i] = poly_mulmod(frob[i - 1], frob[i - 1], poly);
  if (frob[k] != poly_mod(2, poly)) return false;
  for (auto q : prime_factors(static_cast<std::uint64_t>(k))) {
    const std::uint64_t h = frob[k / q] ^ 2;
    if (poly_gcd(poly, h) != 1) return false;
  }
  return true;
}

std::uint64_t smallest_irreducible(int degree) {
  const std::uint64_t lo = (std::uint64_t{1} << degree) | 1;
  const std::uint64_t hi = std::uint64_t{1} << (degree + 1);
  for (std::uint64_t p = lo; p < hi; p += 2)
    if (is_irreducible(p)) return p;
  throw Error(Errc::not_irreducible, "no irreducible polynomial found");
}

BinaryField BinaryField::of_degree(int k, std::optional<std::uint64_t> poly, int max_degree) {
  if (k < 1) throw Error(Errc::invalid_argument, "degree must be positive");
  if (max_degree > kHardMaxDegree) max_degree = kHardMaxDegree;
  if (k > max_degree)
    throw Error(Errc::too_large, "degree " + std::to_string(k) + " exceeds cap " +
                                     std::to_string(max_degree));
  BinaryField f;
  f.n_ = k;
  f.max_degree_ = max_degree;
  f.mask_ = static_cast<Elem>((std::uint64_t{1} << k) - 1);
  if (poly) {
    if (poly_degree(*poly) != k || (*poly & 1) == 0)
      throw Error(Errc::invalid_argument, "override polynomial " + to_hex(*poly) +
                                              " must have degree " + std::to_string(k) +
                                              " and constant term 1");
    if (!is_irreducible(*poly))
      throw Error(Errc::not_irreducible, to_hex(*poly) + " is reducible");
    f.poly_ = *poly;
  } else {
    f.poly_ = smallest_irreducible(k);
  }
  f.init_tables();
  if (f.is_quadratic()) f.init_quadratic();
  return f;
}

BinaryField BinaryField::quadratic(int m, std::optional<std::uint64_t> poly, int max_degree) {
  if (m < 1) throw Error(Errc::invalid_argument, "m must be positive");
  if (2 * m > std::min(max_degree, kHardMaxDegree))
    throw Error(Errc::too_large, "n = " + std::to_string(2 * m) + " exceeds cap " +
                                     std::to_string(max_degree));
  return of_degree(2 * m, poly, max_degree);
}

void BinaryField::init_tables() {
  // reduce_[block][b] = (b * x^{8 block}) * x^n mod poly
  std::vector<Elem> xpow(static_cast<std::size_t>(n_));  // x^{n+j} mod poly
  std::uint64_t cur = poly_ ^ (std::uint64_t{1} << n_);  // x^n mod poly
  for (int j = 0; j < n_; ++j) {
    xpow[j] = static_cast<Elem>(cur);
    cur <<= 1;
    if (cur >> n_) cur ^= poly_;
  }
  for (int block = 0; block < 4; ++block) {
    for (std::uint32_t b = 0; b < 256; ++b) {
      Elem acc = 0;
      for (int j = 0; j < 8; ++j) {
        const int e = block * 8 + j;
        if (((b >> j) & 1u) && e < n_) acc ^= xpow[e];
      }
      reduce_[block][b] = acc;
    }
  }

  // Trace of every basis monomial, straight from the definition.
  std::vector<Elem> basis(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) basis[i] = Elem{1} << i;
  trace_mask_ = 0;
  for (int i = 0; i < n_; ++i) {
    Elem t = 0, y = basis[i];
    for (int j = 0; j < n_; ++j) {
      t ^= y;
      y = sqr(y);
    }
    // t lies in GF(2) = {0, 1}
    if (t == 1) trace_mask_ |= Elem{1} << i;
  }

  // Trace form M_ij = Tr(x^i x^j); rows are u(x^i).
  std::vector<std::uint32_t> rows(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    std::uint32_t row = 0;
    for (int j = 0; j < n_; ++j)
      if (tr_abs(mul(basis[i], basis[j]))) row |= std::uint32_t{1} << j;
    rows[i] = row;
  }
  trace_form_ = LinearMap(rows);
  auto inverse = invert(rows);
  if (!inverse) throw Error(Errc::not_irreducible, "degenerate trace form");
  from_trace_form_ = LinearMap(*inverse);
  dual_basis_ = *inverse;

  artin_schreier_images_.resize(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) artin_schreier_images_[i] = sqr(basis[i]) ^ basis[i];

  // Generator: smallest candidate of multiplicative order 2^n - 1.
  const std::uint64_t order = (std::uint64_t{1} << n_) - 1;
  const auto factors = prime_factors(order);
  generator_ = 1;
  if (order > 1) {
    for (Elem c = 2; c <= mask_; ++c) {
      bool ok = true;
      for (auto q : factors)
        if (pow(c, order / q) == 1) {
          ok = false;
          break;
        }
      if (ok) {
        generator_ = c;
        break;
      }
    }
  }
}

void BinaryField::init_quadratic() {
  const int m = n_ / 2;
  std::vector<std::uint32_t> images(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    Elem y = Elem{1} << i;
    for (int j = 0; j < m; ++j) y = sqr(y);
    images[i] = y;
  }
  conj_ = LinearMap(images);

  // lambda + conj(lambda) = 1 is a linear system with kernel F_{2^m}.
  std::vector<std::uint32_t> rel(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) rel[i] = images[i] ^ (std::uint32_t{1} << i);
  auto particular = solve_linear(rel, 1);
  if (!particular) throw Error(Errc::invalid_argument, "relative trace not onto");
  Elem best = *particular;
  auto kernel = kernel_basis(rel);
  // Minimise over the coset by brute force on the kernel span (2^m elements).
  const std::uint64_t span = std::uint64_t{1} << kernel.size();
  for (std::uint64_t s = 0; s < span; ++s) {
    Elem v = *particular;
    for (std::size_t b = 0; b < kernel.size(); ++b)
      if ((s >> b) & 1u) v ^= kernel[b];
    best = std::min(best, v);
  }
  affine_base_ = best;
  subfield_trace_mask_ = trace_form_(affine_base_);
}

int BinaryField::half() const {
  require_quadratic(*this);
  return n_ / 2;
}

Elem BinaryField::mul(Elem a, Elem b) const noexcept {
  const std::uint64_t p = clmul(a, b);
  const auto hi = static_cast<std::uint32_t>(p >> n_);
  return (static_cast<Elem>(p) & mask_) ^ reduce_[0][hi & 0xffu] ^ reduce_[1][(hi >> 8) & 0xffu] ^
         reduce_[2][(hi >> 16) & 0xffu] ^ reduce_[3][hi >> 24];
}

Elem BinaryField::pow(Elem a, std::uint64_t e) const noexcept {
  Elem r = 1;
  while (e != 0) {
    if (e & 1u) r = mul(r, a);
    a = sqr(a);
    e >>= 1;
  }
  return r;
}

Elem BinaryField::inv(Elem a) const {
  if (a == 0) throw Error(Errc::division_by_zero, "inverse of zero");
  return pow(a, size() - 2);
}

LinearMap BinaryField::mul_map(Elem c) const {
  std::vector<std::uint32_t> images(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) images[i] = mul(c, Elem{1} << i);
  return LinearMap(images);
}

std::vector<Elem> BinaryField::solve_artin_schreier(Elem d) const {
  if (tr_abs(d)) return {};
  auto y = solve_linear(artin_schreier_images_, d);
  if (!y) return {};
  return {std::min(*y, *y ^ 1u), std::max(*y, *y ^ 1u)};
}

Elem BinaryField::sqrt(Elem a) const noexcept {
  for (int i = 0; i + 1 < n_; ++i) a = sqr(a);
  return a;
}

Elem BinaryField::conjugate(Elem x) const {
  require_quadratic(*this);
  for (int i = 0; i < n_ / 2; ++i) x = sqr(x);
  return x;
}

bool BinaryField::in_subfield(Elem x) const {
  require_quadratic(*this);
  return conj_(x) == x;
}

bool BinaryField::on_unit_circle(Elem z) const {
  require_quadratic(*this);
  return z != 0 && mul(z, conj(z)) == 1;
}

int BinaryField::tr_sub(Elem x) const {
  require_quadratic(*this);
  if (conjugate(x) != x) throw Error(Errc::not_in_subfield, to_hex(x) + " is not in F_{2^m}");
  Elem t = 0;
  for (int i = 0; i < n_ / 2; ++i) {
    t ^= x;
    x = sqr(x);
  }
  return static_cast<int>(t);
}

PolarForm BinaryField::polar_decompose(Elem x) const {
  require_quadratic(*this);
  if (x == 0) throw Error(Errc::division_by_zero, "polar form of zero");
  const int m = n_ / 2;
  const std::uint64_t order = size() - 1;
  const std::uint64_t half_shift = std::uint64_t{1} << (m - 1);
  const std::uint64_t ey = (((std::uint64_t{1} << m) + 1) * half_shift) % order;
  const std::uint64_t ez = (((std::uint64_t{1} << m) - 1) * half_shift) % order;
  return {pow(x, ey), pow(x, ez)};
}

std::vector<Elem> BinaryField::powers(Elem base, std::uint64_t count) const {
  std::vector<Elem> out;
  out.reserve(count);
  const LinearMap step = mul_map(base);
  Elem cur = 1;
  for (std::uint64_t i = 0; i < count; ++i) {
    out.push_back(cur);
    cur = step(cur);
  }
  return out;
}

Elem BinaryField::affine_e_base() const {
  require_quadratic(*this);
  return affine_base_;
}

std::vector<Elem> BinaryField::enumerate(Subgroup which) const {
  std::vector<Elem> out;
  switch (which) {
    case Subgroup::full_units:
      out.reserve(size() - 1);
      for (std::uint64_t v = 1; v < size(); ++v) out.push_back(static_cast<Elem>(v));
      return out;
    case Subgroup::subfield_units: {
      const int m = half();
      out = powers(pow(generator_, (std::uint64_t{1} << m) + 1), (std::uint64_t{1} << m) - 1);
      break;
    }
    case Subgroup::unit_circle: {
      const int m = half();
      out = powers(pow(generator_, (std::uint64_t{1} << m) - 1), (std::uint64_t{1} << m) + 1);
      break;
    }
    case Subgroup::affine_e: {
      auto sub = enumerate(Subgroup::subfield_units);
      out.reserve(sub.size() + 1);
      out.push_back(affine_base_);
      for (Elem s : sub) out.push_back(affine_base_ ^ s);
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void batch_invert(const BinaryField& field, std::span<Elem> values) {
  std::vector<Elem> prefix(values.size());
  Elem acc = 1;
  for (std::size_t i = 0; i < values.size(); ++i) {
    prefix[i] = acc;
    if (values[i] != 0) acc = field.mul(acc, values[i]);
  }
  Elem inv = field.inv(acc);
  for (std::size_t i = values.size(); i-- > 0;) {
    if (values[i] == 0) continue;
    const Elem v = values[i];
    values[i] = field.mul(inv, prefix[i]);
    inv = field.mul(inv, v);
  }
}

std::string to_hex(std::uint64_t v) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(v));
  return buf;
}

std::uint64_t parse_hex(std::string_view text) {
  if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v, 16);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw Error(Errc::invalid_argument, "not a hex value: '" + std::string(text) + "'");
  return v;
}

}  // namespace bfw

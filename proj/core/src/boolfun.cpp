#include "bfw/boolfun.hpp"

#include <algorithm>
#include <bit>

#include "bfw/error.hpp"

namespace bfw {

PackedBits::PackedBits(int n) : n_(n) {
  if (n < 0 || n > kHardMaxDegree) throw Error(Errc::too_large, "table with n = " + std::to_string(n));
  words_.assign(std::max<std::uint64_t>(1, (std::uint64_t{1} << n) >> 6), 0);
}

std::uint64_t PackedBits::tail_mask() const noexcept {
  return n_ >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (std::uint64_t{1} << n_)) - 1;
}

std::vector<std::uint64_t> AnfTable::monomials() const {
  std::vector<std::uint64_t> out;
  const auto w = words();
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::uint64_t bits = w[i]; bits != 0; bits &= bits - 1)
      out.push_back((i << 6) | static_cast<std::uint64_t>(std::countr_zero(bits)));
  return out;
}

std::uint64_t weight(const TruthTable& f) noexcept {
  std::uint64_t total = 0;
  for (auto w : f.words()) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

bool is_balanced(const TruthTable& f) noexcept {
  return f.num_vars() > 0 && weight(f) == f.size() / 2;
}

std::uint64_t distance(const TruthTable& f, const TruthTable& h) {
  if (f.num_vars() != h.num_vars())
    throw Error(Errc::dimension_mismatch, "tables on " + std::to_string(f.num_vars()) + " and " +
                                              std::to_string(h.num_vars()) + " variables");
  std::uint64_t total = 0;
  const auto a = f.words(), b = h.words();
  for (std::size_t i = 0; i < a.size(); ++i) total += static_cast<std::uint64_t>(std::popcount(a[i] ^ b[i]));
  return total;
}

TruthTable complement(const TruthTable& f) {
  TruthTable out = f;
  auto w = out.words();
  for (auto& x : w) x = ~x;
  w.back() &= out.tail_mask();
  return out;
}

TruthTable sum(const TruthTable& f, const TruthTable& h) {
  if (f.num_vars() != h.num_vars()) throw Error(Errc::dimension_mismatch, "sum of tables");
  TruthTable out = f;
  auto w = out.words();
  const auto b = h.words();
  for (std::size_t i = 0; i < w.size(); ++i) w[i] ^= b[i];
  return out;
}

namespace {

void moebius(PackedBits& bits) {
  static constexpr std::uint64_t kLow[6] = {
      0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
      0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull};
  const int n = bits.num_vars();
  auto w = bits.words();
  for (int k = 0; k < std::min(n, 6); ++k) {
    const int shift = 1 << k;
    for (auto& x : w) x ^= (x & kLow[k]) << shift;
  }
  for (int k = 6; k < n; ++k) {
    const std::size_t step = std::size_t{1} << (k - 6);
    for (std::size_t base = 0; base < w.size(); base += 2 * step)
      for (std::size_t j = base; j < base + step; ++j) w[j + step] ^= w[j];
  }
  w.back() &= bits.tail_mask();
}

}  // namespace

AnfTable anf(const TruthTable& f) {
  AnfTable out(f.num_vars());
  std::copy(f.words().begin(), f.words().end(), out.words().begin());
  moebius(out);
  return out;
}

TruthTable anf_to_table(const AnfTable& a) {
  TruthTable out(a.num_vars());
  std::copy(a.words().begin(), a.words().end(), out.words().begin());
  moebius(out);
  return out;
}

int algebraic_degree(const AnfTable& a) {
  int deg = -1;
  const auto w = a.words();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) continue;
    const int hi = std::popcount(i);
    for (std::uint64_t bits = w[i]; bits != 0; bits &= bits - 1)
      deg = std::max(deg, hi + std::popcount(static_cast<unsigned>(std::countr_zero(bits))));
  }
  return deg;
}

int algebraic_degree(const TruthTable& f) { return algebraic_degree(anf(f)); }

std::vector<std::uint8_t> to_bytes(const TruthTable& f) {
  const std::size_t nbytes = std::max<std::uint64_t>(1, f.size() / 8);
  std::vector<std::uint8_t> out(nbytes);
  const auto w = f.words();
  for (std::size_t i = 0; i < nbytes; ++i) out[i] = static_cast<std::uint8_t>(w[i / 8] >> (8 * (i % 8)));
  return out;
}

TruthTable truth_table_from_bytes(int n, std::span<const std::uint8_t> bytes) {
  TruthTable t(n);
  const std::size_t nbytes = std::max<std::uint64_t>(1, t.size() / 8);
  if (bytes.size() != nbytes)
    throw Error(Errc::dimension_mismatch, "expected " + std::to_string(nbytes) + " bytes, got " +
                                              std::to_string(bytes.size()));
  auto w = t.words();
  for (std::size_t i = 0; i < nbytes; ++i) w[i / 8] |= std::uint64_t{bytes[i]} << (8 * (i % 8));
  w.back() &= t.tail_mask();
  return t;
}

std::string to_hex(const TruthTable& f) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (auto b : to_bytes(f)) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 15]);
  }
  return out;
}

}  // namespace bfw

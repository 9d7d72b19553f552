#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bfw/gf2n.hpp"

namespace bfw {

// 2^n bits packed little-endian into 64-bit words.
class PackedBits {
 public:
  PackedBits() = default;
  explicit PackedBits(int n);

  int num_vars() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << n_; }
  bool get(std::uint64_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::uint64_t i, bool v) noexcept {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= bit;
    else
      words_[i >> 6] &= ~bit;
  }
  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> words() noexcept { return words_; }
  // Mask of the valid bits of the last word.
  std::uint64_t tail_mask() const noexcept;

  friend bool operator==(const PackedBits&, const PackedBits&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

// Bit i is f(element whose coordinate integer is i).
class TruthTable : public PackedBits {
 public:
  using PackedBits::PackedBits;
};

// Bit u is the coefficient of the monomial prod_{i in u} x_i.
class AnfTable : public PackedBits {
 public:
  using PackedBits::PackedBits;
  // Set monomial masks, ascending.
  std::vector<std::uint64_t> monomials() const;
};

template <class Evaluator>
TruthTable build(const BinaryField& field, Evaluator&& eval) {
  TruthTable t(field.degree());
  for (std::uint64_t x = 0; x < field.size(); ++x)
    if (eval(static_cast<Elem>(x))) t.set(x, true);
  return t;
}

std::uint64_t weight(const TruthTable& f) noexcept;
bool is_balanced(const TruthTable& f) noexcept;
// Throws DimensionMismatch when the tables have different n.
std::uint64_t distance(const TruthTable& f, const TruthTable& h);
TruthTable complement(const TruthTable& f);
TruthTable sum(const TruthTable& f, const TruthTable& h);

// Moebius transform; it is an involution, so anf_to_table is the same butterfly.
AnfTable anf(const TruthTable& f);
TruthTable anf_to_table(const AnfTable& a);
// Max monomial weight in the ANF; -1 for the zero function.
int algebraic_degree(const TruthTable& f);
int algebraic_degree(const AnfTable& a);

// Lowercase hex of the little-endian byte image, without a 0x prefix. For
// n < 3 a single byte holds the 2^n valid bits.
std::string to_hex(const TruthTable& f);
std::vector<std::uint8_t> to_bytes(const TruthTable& f);
TruthTable truth_table_from_bytes(int n, std::span<const std::uint8_t> bytes);

}  // namespace bfw

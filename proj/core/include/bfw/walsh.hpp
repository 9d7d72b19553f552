#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bfw/boolfun.hpp"
#include "bfw/gf2n.hpp"

namespace bfw {

// values[u] = sum_x (-1)^{f(x) + <u, x>}, indexed by linear-functional mask u.
struct WalshSpectrum {
  int n = 0;
  std::vector<std::int64_t> values;
};

struct SpectrumDistribution {
  // (value, count), ascending by value.
  std::vector<std::pair<std::int64_t, std::uint64_t>> entries;

  std::uint64_t count_of(std::int64_t value) const noexcept;
  std::uint64_t total() const noexcept;
  std::vector<std::int64_t> values() const;
  friend bool operator==(const SpectrumDistribution&, const SpectrumDistribution&) = default;
};

enum class SpectrumClass { bent, semibent, plateaued, five_valued, other };

struct Classification {
  SpectrumClass kind = SpectrumClass::other;
  std::int64_t amplitude = 0;         // bent, semi-bent and plateaued only
  std::vector<std::int64_t> values;   // distinct values, ascending
  std::string label() const;
};

// Direct O(2^n) sum of (-1)^{f(x) + Tr(a x)} with field multiplication.
std::int64_t walsh_naive_at(const BinaryField& field, const TruthTable& f, Elem a);

// In-place butterflies, O(n 2^n). threads > 1 splits each stage into blocks.
WalshSpectrum wht_fast(const TruthTable& f, int threads = 1);

// W_f(a) read through the trace-form mask u(a).
std::int64_t walsh_at_field_point(const BinaryField& field, const WalshSpectrum& spectrum, Elem a);

SpectrumDistribution distribution(const WalshSpectrum& spectrum);
std::int64_t nonlinearity(const WalshSpectrum& spectrum);
std::int64_t nonlinearity(const SpectrumDistribution& dist, int n);
// Bent: all values +-2^m. Semi-bent: values in {0, +-2^{m+1}}. Plateaued:
// values in {0, +-A}. Otherwise five_valued when at most five distinct values.
Classification classify(const WalshSpectrum& spectrum, int m);
Classification classify(const SpectrumDistribution& dist, int m);

// sum of squares, for the Parseval check (== 4^n).
std::int64_t sum_of_squares(const WalshSpectrum& spectrum) noexcept;

}  // namespace bfw

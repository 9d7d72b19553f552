#include "bfw/walsh.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <thread>

#include "bfw/error.hpp"

namespace bfw {

std::uint64_t SpectrumDistribution::count_of(std::int64_t value) const noexcept {
  for (const auto& [v, c] : entries)
    if (v == value) return c;
  return 0;
}

std::uint64_t SpectrumDistribution::total() const noexcept {
  std::uint64_t t = 0;
  for (const auto& e : entries) t += e.second;
  return t;
}

std::vector<std::int64_t> SpectrumDistribution::values() const {
  std::vector<std::int64_t> out;
  for (const auto& e : entries) out.push_back(e.first);
  return out;
}

std::string Classification::label() const {
  switch (kind) {
    case SpectrumClass::bent: return "bent";
    case SpectrumClass::semibent: return "semi-bent";
    case SpectrumClass::plateaued: return "plateaued(" + std::to_string(amplitude) + ")";
    case SpectrumClass::five_valued: return "five-valued";
    case SpectrumClass::other: return "other";
  }
  return "other";
}

std::int64_t walsh_naive_at(const BinaryField& field, const TruthTable& f, Elem a) {
  if (f.num_vars() != field.degree()) throw Error(Errc::dimension_mismatch, "table/field size");
  std::int64_t acc = 0;
  for (std::uint64_t x = 0; x < field.size(); ++x) {
    const int e = static_cast<int>(f.get(x)) ^ field.tr_abs(field.mul(a, static_cast<Elem>(x)));
    acc += e ? -1 : 1;
  }
  return acc;
}

namespace {

void butterfly_range(std::int64_t* v, std::size_t half, std::size_t begin, std::size_t end) {
  for (std::size_t base = begin; base < end; base += 2 * half) {
    for (std::size_t j = base; j < base + half; ++j) {
      const std::int64_t a = v[j], b = v[j + half];
      v[j] = a + b;
      v[j + half] = a - b;
    }
  }
}

}  // namespace

WalshSpectrum wht_fast(const TruthTable& f, int threads) {
  const int n = f.num_vars();
  if (n > kHardMaxDegree) throw Error(Errc::too_large, "spectrum over n = " + std::to_string(n));
  WalshSpectrum s;
  s.n = n;
  const std::size_t size = f.size();
  s.values.resize(size);
  for (std::size_t x = 0; x < size; ++x) s.values[x] = f.get(x) ? -1 : 1;
  std::int64_t* v = s.values.data();

  // Blocks of 2^block_bits entries are independent for the low stages.
  const int block_bits = std::min(n, 12);
  const std::size_t block = std::size_t{1} << block_bits;
  auto low_stages = [&](std::size_t begin, std::size_t end) {
    for (std::size_t b = begin; b < end; b += block)
      for (std::size_t half = 1; half < block; half <<= 1) butterfly_range(v, half, b, b + block);
  };
  auto run_parallel = [&](std::size_t chunk_unit, auto&& body) {
    const std::size_t units = size / chunk_unit;
    const std::size_t workers = std::min<std::size_t>(std::max(threads, 1), units);
    if (workers <= 1) {
      body(0, size);
      return;
    }
    std::vector<std::jthread> pool;
    const std::size_t per = (units + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t lo = std::min(units, w * per) * chunk_unit;
      const std::size_t hi = std::min(units, (w + 1) * per) * chunk_unit;
      if (lo < hi) pool.emplace_back([&, lo, hi] { body(lo, hi); });
    }
  };
  run_parallel(block, low_stages);
  for (std::size_t half = block; half < size; half <<= 1)
    run_parallel(2 * half, [&](std::size_t lo, std::size_t hi) { butterfly_range(v, half, lo, hi); });
  return s;
}

std::int64_t walsh_at_field_point(const BinaryField& field, const WalshSpectrum& spectrum, Elem a) {
  if (spectrum.n != field.degree()) throw Error(Errc::dimension_mismatch, "spectrum/field size");
  return spectrum.values[field.trace_form_mask(a)];
}

SpectrumDistribution distribution(const WalshSpectrum& spectrum) {
  std::map<std::int64_t, std::uint64_t> hist;
  for (auto v : spectrum.values) ++hist[v];
  SpectrumDistribution d;
  d.entries.assign(hist.begin(), hist.end());
  return d;
}

std::int64_t nonlinearity(const SpectrumDistribution& dist, int n) {
  std::int64_t peak = 0;
  for (const auto& e : dist.entries) peak = std::max<std::int64_t>(peak, std::llabs(e.first));
  return (std::int64_t{1} << (n - 1)) - peak / 2;
}

std::int64_t nonlinearity(const WalshSpectrum& spectrum) {
  std::int64_t peak = 0;
  for (auto v : spectrum.values) peak = std::max<std::int64_t>(peak, std::llabs(v));
  return (std::int64_t{1} << (spectrum.n - 1)) - peak / 2;
}

Classification classify(const SpectrumDistribution& dist, int m) {
  Classification c;
  c.values = dist.values();
  const std::int64_t bent_amp = std::int64_t{1} << m;
  const std::int64_t semi_amp = std::int64_t{1} << (m + 1);
  auto subset_of = [&](std::initializer_list<std::int64_t> allowed) {
    return std::all_of(c.values.begin(), c.values.end(), [&](std::int64_t v) {
      return std::find(allowed.begin(), allowed.end(), v) != allowed.end();
    });
  };
  if (subset_of({-bent_amp, bent_amp})) {
    c.kind = SpectrumClass::bent;
    c.amplitude = bent_amp;
    return c;
  }
  if (subset_of({0, -semi_amp, semi_amp})) {
    c.kind = SpectrumClass::semibent;
    c.amplitude = semi_amp;
    return c;
  }
  std::set<std::int64_t> mags;
  for (auto v : c.values)
    if (v != 0) mags.insert(std::llabs(v));
  if (mags.size() == 1) {
    c.kind = SpectrumClass::plateaued;
    c.amplitude = *mags.begin();
    return c;
  }
  c.kind = c.values.size() <= 5 ? SpectrumClass::five_valued : SpectrumClass::other;
  return c;
}

Classification classify(const WalshSpectrum& spectrum, int m) {
  return classify(distribution(spectrum), m);
}

std::int64_t sum_of_squares(const WalshSpectrum& spectrum) noexcept {
  std::int64_t t = 0;
  for (auto v : spectrum.values) t += v * v;
  return t;
}

}  // namespace bfw

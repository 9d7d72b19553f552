#include "bfw/gf2_linear.hpp"

#include <bit>
#include <stdexcept>

namespace bfw {

LinearMap::LinearMap(std::span<const std::uint32_t> images) {
  if (images.size() > 32) throw std::invalid_argument("LinearMap: more than 32 columns");
  for (int block = 0; block < 4; ++block) {
    for (std::uint32_t b = 0; b < 256; ++b) {
      std::uint32_t acc = 0;
      for (int j = 0; j < 8; ++j) {
        const std::size_t col = static_cast<std::size_t>(block * 8 + j);
        if (((b >> j) & 1u) && col < images.size()) acc ^= images[col];
      }
      table_[block][b] = acc;
    }
  }
}

namespace {

// Row reduction keyed by leading bit; each pivot remembers which input
// columns were combined to produce it.
struct Echelon {
  std::array<std::uint32_t, 32> vec{};
  std::array<std::uint64_t, 32> combo{};
  std::array<bool, 32> used{};
  std::vector<std::uint64_t> kernel;

  // Reduces (v, c) against the pivots; returns the residue.
  std::pair<std::uint32_t, std::uint64_t> reduce(std::uint32_t v, std::uint64_t c) const {
    while (v != 0) {
      const int lead = 31 - std::countl_zero(v);
      if (!used[lead]) break;
      v ^= vec[lead];
      c ^= combo[lead];
    }
    return {v, c};
  }

  void insert(std::uint32_t v, std::uint64_t c) {
    auto [r, rc] = reduce(v, c);
    if (r == 0) {
      kernel.push_back(rc);
      return;
    }
    const int lead = 31 - std::countl_zero(r);
    used[lead] = true;
    vec[lead] = r;
    combo[lead] = rc;
  }
};

Echelon eliminate(std::span<const std::uint32_t> images) {
  if (images.size() > 32) throw std::invalid_argument("too many columns");
  Echelon e;
  for (std::size_t i = 0; i < images.size(); ++i) e.insert(images[i], std::uint64_t{1} << i);
  return e;
}

}  // namespace

std::optional<std::uint32_t> solve_linear(std::span<const std::uint32_t> images,
                                          std::uint32_t target) {
  const Echelon e = eliminate(images);
  auto [r, c] = e.reduce(target, 0);
  if (r != 0) return std::nullopt;
  return static_cast<std::uint32_t>(c);
}

std::vector<std::uint32_t> kernel_basis(std::span<const std::uint32_t> images) {
  const Echelon e = eliminate(images);
  std::vector<std::uint32_t> out;
  out.reserve(e.kernel.size());
  for (auto k : e.kernel) out.push_back(static_cast<std::uint32_t>(k));
  return out;
}

int rank(std::span<const std::uint32_t> vectors) {
  const Echelon e = eliminate(vectors);
  return static_cast<int>(vectors.size() - e.kernel.size());
}

std::optional<std::vector<std::uint32_t>> invert(std::span<const std::uint32_t> images) {
  const Echelon e = eliminate(images);
  if (!e.kernel.empty()) return std::nullopt;
  std::vector<std::uint32_t> inv(images.size());
  for (std::size_t j = 0; j < images.size(); ++j) {
    auto [r, c] = e.reduce(std::uint32_t{1} << j, 0);
    if (r != 0) return std::nullopt;
    inv[j] = static_cast<std::uint32_t>(c);
  }
  return inv;
}

}  // namespace bfw

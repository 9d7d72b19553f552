#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace bfw {

// GF(2)-linear map on bit vectors of width <= 32, evaluated through four
// byte-indexed lookup tables.
class LinearMap {
 public:
  LinearMap() = default;
  // images[i] is the image of the i-th unit vector.
  explicit LinearMap(std::span<const std::uint32_t> images);

  std::uint32_t operator()(std::uint32_t v) const noexcept {
    return table_[0][v & 0xffu] ^ table_[1][(v >> 8) & 0xffu] ^
           table_[2][(v >> 16) & 0xffu] ^ table_[3][v >> 24];
  }

 private:
  std::array<std::array<std::uint32_t, 256>, 4> table_{};
};

// Solves XOR_{i : bit i of x} images[i] == target. Returns one solution.
std::optional<std::uint32_t> solve_linear(std::span<const std::uint32_t> images,
                                          std::uint32_t target);

// Basis of {x : XOR_{i in x} images[i] == 0}.
std::vector<std::uint32_t> kernel_basis(std::span<const std::uint32_t> images);

int rank(std::span<const std::uint32_t> vectors);

// Images of the inverse map, or nullopt when the map is singular. The map
// must be square (images.size() columns of width images.size()).
std::optional<std::vector<std::uint32_t>> invert(std::span<const std::uint32_t> images);

}  // namespace bfw

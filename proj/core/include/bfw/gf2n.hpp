#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bfw/gf2_linear.hpp"

namespace bfw {

// Polynomial-basis coordinates of a field element: bit i is the coefficient
// of x^i.
using Elem = std::uint32_t;

inline constexpr int kDefaultMaxDegree = 28;
// Products of two elements must fit in 64 bits and trace-form masks in 32.
inline constexpr int kHardMaxDegree = 31;

enum class Subgroup { subfield_units, unit_circle, full_units, affine_e };

struct PolarForm {
  Elem radius;  // in F_{2^m}^*
  Elem angle;   // on the unit circle
};

/// GF(2^k) in a polynomial basis.
///
/// Fields built with `quadratic(m)` have even degree n = 2m and additionally
/// expose the conjugation x -> x^{2^m}, relative and subfield traces, polar
/// decomposition and the subgroup enumerations; calling those on an odd-degree
/// field throws `Errc::invalid_argument`.
///
/// Instances are immutable after construction and safe to share across
/// threads.
class BinaryField {
 public:
  // Field of degree k. Without `poly`, the reduction polynomial is the smallest
  // irreducible polynomial (as an integer) of degree k with constant term 1.
  static BinaryField of_degree(int k, std::optional<std::uint64_t> poly = std::nullopt,
                               int max_degree = kDefaultMaxDegree);
  // GF(2^{2m}) viewed as a quadratic extension of GF(2^m).
  static BinaryField quadratic(int m, std::optional<std::uint64_t> poly = std::nullopt,
                               int max_degree = kDefaultMaxDegree);

  int degree() const noexcept { return n_; }
  bool is_quadratic() const noexcept { return n_ % 2 == 0; }
  int half() const;  // m
  std::uint64_t reduction_poly() const noexcept { return poly_; }
  Elem generator() const noexcept { return generator_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << n_; }
  Elem mask() const noexcept { return mask_; }
  int max_degree() const noexcept { return max_degree_; }

  static Elem add(Elem a, Elem b) noexcept { return a ^ b; }
  Elem mul(Elem a, Elem b) const noexcept;
  Elem sqr(Elem a) const noexcept { return mul(a, a); }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  // pow(a, 0) == 1 for every a, including a == 0.
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  // Multiplication by a fixed constant as a table-driven linear map.
  LinearMap mul_map(Elem c) const;

  // Absolute trace Tr_1^n as 0/1.
  int tr_abs(Elem a) const noexcept { return parity(a & trace_mask_); }
  Elem trace_mask() const noexcept { return trace_mask_; }
  // u(a): bit j = Tr(a x^j), so that Tr(a y) = <u(a), y>.
  std::uint32_t trace_form_mask(Elem a) const noexcept { return trace_form_(a); }
  // Inverse of trace_form_mask (coordinates in the dual basis).
  Elem from_trace_form(std::uint32_t u) const noexcept { return from_trace_form_(u); }
  const std::vector<Elem>& dual_basis() const noexcept { return dual_basis_; }

  // y with y^2 + y == d: empty when Tr(d) == 1, otherwise {y, y + 1} ascending.
  std::vector<Elem> solve_artin_schreier(Elem d) const;
  // a^{2^{n-1}}, the unique square root.
  Elem sqrt(Elem a) const noexcept;

  // --- quadratic-only operations -------------------------------------------
  // x^{2^m} by m repeated squarings.
  Elem conjugate(Elem x) const;
  // Same map, table driven.
  Elem conj(Elem x) const noexcept { return conj_(x); }
  Elem tr_rel(Elem x) const { return x ^ conjugate(x); }
  bool in_subfield(Elem x) const;
  bool on_unit_circle(Elem z) const;
  // Tr_1^m on the subfield, evaluated from its definition; throws NotInSubfield.
  int tr_sub(Elem x) const;
  // Tr_1^m for x already known to lie in the subfield: Tr_1^n(lambda0 x) with
  // lambda0 + conj(lambda0) = 1.
  int tr_sub_unchecked(Elem x) const noexcept { return parity(x & subfield_trace_mask_); }
  PolarForm polar_decompose(Elem x) const;
  // Ascending coordinate order.
  std::vector<Elem> enumerate(Subgroup which) const;
  // Smallest element with lambda + conj(lambda) == 1.
  Elem affine_e_base() const;

  // base^0, base^1, ..., base^{count-1}.
  std::vector<Elem> powers(Elem base, std::uint64_t count) const;

  static int parity(std::uint32_t v) noexcept { return __builtin_parity(v); }

 private:
  BinaryField() = default;
  void init_tables();
  void init_quadratic();

  int n_ = 0;
  int max_degree_ = kDefaultMaxDegree;
  std::uint64_t poly_ = 0;
  Elem mask_ = 0;
  Elem generator_ = 1;
  Elem trace_mask_ = 0;
  std::array<std::array<Elem, 256>, 4> reduce_{};
  LinearMap trace_form_;
  LinearMap from_trace_form_;
  std::vector<Elem> dual_basis_;
  std::vector<Elem> artin_schreier_images_;
  // Quadratic only.
  LinearMap conj_;
  Elem subfield_trace_mask_ = 0;
  Elem affine_base_ = 0;
};

// Irreducibility over GF(2) by the x^{2^k} gcd test.
bool is_irreducible(std::uint64_t poly);
std::uint64_t smallest_irreducible(int degree);
int poly_degree(std::uint64_t poly) noexcept;
// Distinct prime factors in ascending order.
std::vector<std::uint64_t> prime_factors(std::uint64_t v);

// Montgomery batch inversion; zero entries stay zero.
void batch_invert(const BinaryField& field, std::span<Elem> values);

// "0x13"-style lowercase hex.
std::string to_hex(std::uint64_t v);
std::uint64_t parse_hex(std::string_view text);

}  // namespace bfw

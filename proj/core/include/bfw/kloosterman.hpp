#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bfw/gf2n.hpp"

namespace bfw {

// k(a, b) = sum_{x != 0} (-1)^{Tr(a x + b / x)} over the whole field.
std::int64_t kloosterman_sum(const BinaryField& field, Elem a, Elem b = 1);

// Same sum over the subfield F_{2^m} of a quadratic field, with Tr_1^m.
// Throws NotInSubfield.
std::int64_t kloosterman_subfield(const BinaryField& field, Elem a, Elem b = 1);

// k_m(mu) for every mu in F_{2^m}^* (ascending coordinate order inside `field`).
std::vector<std::pair<Elem, std::int64_t>> subfield_kloosterman_table(const BinaryField& field);

// Carries F_{2^m} into F_{2^{ms}} by sending x to a root of the small field's
// reduction polynomial. The smallest such root (as an integer) is used.
class SubfieldEmbedding {
 public:
  SubfieldEmbedding(const BinaryField& small, const BinaryField& big);
  Elem operator()(Elem a) const noexcept { return map_(a); }
  Elem root() const noexcept { return root_; }
  // Tr_big(embed(a)) == s * Tr_small(a) mod 2 for every a.
  bool trace_compatible(const BinaryField& small, const BinaryField& big) const;

 private:
  Elem root_ = 0;
  LinearMap map_;
};

// k_m^{(s)}(a): sum over F_{2^{ms}}^* of (-1)^{Tr(a g + 1/g)} with a embedded
// from `base` (degree m). Throws TooLarge when m s exceeds the cap.
std::int64_t kloosterman_lifted_direct(const BinaryField& base, int s, Elem a,
                                       int max_degree = kDefaultMaxDegree);

// k^{(s)} = -k^{(s-1)} k^{(1)} - 2^m k^{(s-2)} with k^{(0)} = -2, k^{(1)} = k1.
std::int64_t kloosterman_recursive(int m, int s, std::int64_t k1);

// sum_{z in unit circle} (-1)^{Tr_1^m(mu (z + 1/z))}; equals -k_m(mu).
std::int64_t unit_circle_sum(const BinaryField& field, Elem mu);

struct KloostermanScan {
  int m = 0;
  std::vector<std::int64_t> entries;    // k_m(lambda), lambda = 0 .. 2^m - 1
  std::vector<std::int64_t> value_set;  // distinct entries, ascending
};

KloostermanScan scan(const BinaryField& field);
KloostermanScan scan(int m);

// Integers s = -1 (mod 4) with |s| <= 2^{m/2 + 1}, ascending.
std::vector<std::int64_t> kloosterman_value_range(int m);
// |k| <= 2 sqrt(2^m), decided in integers.
bool within_weil_bound(int m, std::int64_t k) noexcept;

// mu in F_{2^m}^* (inside the quadratic field) with k_m(mu) == target, ascending.
std::vector<Elem> find_mu(const BinaryField& field, std::int64_t target);

}  // namespace bfw

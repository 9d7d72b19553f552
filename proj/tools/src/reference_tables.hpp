#pragma once

#include <cstdint>
#include <utility>
#include <vector>

// Published spectrum columns that `table` compares its freshly computed
// distributions against. Only the comparison uses them; every printed value
// is recomputed at run time.
namespace bfw::cli::reference {

struct Column {
  int m;
  std::vector<std::pair<std::int64_t, std::uint64_t>> entries;  // (value, count), ascending
};

inline const std::vector<Column>& remark_f() {
  static const std::vector<Column> cols{
      {4, {{-16, 92}, {0, 80}, {16, 64}, {32, 16}, {48, 4}}},
      {5, {{-32, 386}, {0, 310}, {32, 258}, {64, 50}, {96, 20}}},
      {6, {{-64, 1548}, {0, 1344}, {64, 856}, {128, 288}, {192, 60}}},
  };
  return cols;
}

inline const std::vector<Column>& remark_g() {
  static const std::vector<Column> cols{
      {3, {{-16, 4}, {-8, 12}, {0, 24}, {8, 20}, {16, 4}}},
      {5, {{-64, 64}, {-32, 236}, {0, 396}, {32, 260}, {64, 68}}},
      {7, {{-256, 1016}, {-128, 4072}, {0, 6072}, {128, 4216}, {256, 1008}}},
  };
  return cols;
}

}  // namespace bfw::cli::reference

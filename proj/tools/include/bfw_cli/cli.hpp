#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bfw/gf2n.hpp"
#include "bfw/report.hpp"

namespace bfw::cli {

enum ExitCode : int { kPass = 0, kVerificationFailure = 1, kUsage = 2, kCapability = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MRange {
  int lo = 0;
  int hi = 0;
};

// "A..B" or a single integer.
MRange parse_m_range(std::string_view text);

struct MuSelector {
  enum class Kind { hex, index, all, kloosterman };
  Kind kind = Kind::hex;
  std::uint64_t value = 1;  // hex coordinate or subfield index
  std::int64_t target = -1; // for "k=T"
};

// "0x..", "idx:K" (K-th power of the subfield generator), "all" or "k=T".
MuSelector parse_mu_selector(std::string_view text);
// Selected mu inside `field`, ascending. Hex and index selections are checked
// for subfield membership.
std::vector<Elem> resolve_mu(const BinaryField& field, const MuSelector& sel);

struct RunConfig {
  std::string command;
  std::optional<MRange> m;
  std::optional<std::string> mu;
  std::optional<std::string> lambda;
  std::vector<std::string> polys;
  std::string construction = "f";
  std::string format = "text";
  std::string out;
  int threads = 1;
  int max_n = kDefaultMaxDegree;
  // Command specific.
  std::string suite = "all";
  std::string table;
  bool scan = false;
  std::optional<std::int64_t> target;
  std::optional<std::string> a;
  std::optional<std::string> b;
};

// Builds GF(2^{2m}) honouring --poly overrides (matched by degree) and --max-n.
BinaryField make_field(int m, const RunConfig& cfg);

// Verification suites behind `verify`; reports in (m, mu) order.
std::vector<VerificationReport> run_suite(const std::string& suite, int m, const RunConfig& cfg);
const std::vector<std::string>& suite_names();

// Entry point: parses argv, runs the subcommand and returns the exit code.
// Reports go to --out when given, else to `out`; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bfw::cli

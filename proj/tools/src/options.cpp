#include <algorithm>
#include <charconv>

#include "bfw/error.hpp"
#include "bfw/kloosterman.hpp"
#include "bfw_cli/cli.hpp"

namespace bfw::cli {

namespace {

template <class T>
T parse_int(std::string_view text, std::string_view what) {
  T v{};
  const char* end = text.data() + text.size();
  auto [p, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || p != end) throw UsageError("bad " + std::string(what) + ": '" + std::string(text) + "'");
  return v;
}

}  // namespace

MRange parse_m_range(std::string_view text) {
  MRange r;
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    r.lo = r.hi = parse_int<int>(text, "m");
  } else {
    r.lo = parse_int<int>(text.substr(0, dots), "m-range");
    r.hi = parse_int<int>(text.substr(dots + 2), "m-range");
  }
  if (r.lo < 1 || r.hi < r.lo) throw UsageError("m-range must satisfy 1 <= A <= B");
  return r;
}

MuSelector parse_mu_selector(std::string_view text) {
  MuSelector s;
  if (text == "all") {
    s.kind = MuSelector::Kind::all;
  } else if (text.starts_with("k=")) {
    s.kind = MuSelector::Kind::kloosterman;
    s.target = parse_int<std::int64_t>(text.substr(2), "Kloosterman target");
  } else if (text.starts_with("idx:")) {
    s.kind = MuSelector::Kind::index;
    s.value = parse_int<std::uint64_t>(text.substr(4), "subfield index");
  } else {
    s.kind = MuSelector::Kind::hex;
    try {
      s.value = parse_hex(text);
    } catch (const Error&) {
      throw UsageError("bad mu: '" + std::string(text) + "'");
    }
  }
  return s;
}

std::vector<Elem> resolve_mu(const BinaryField& field, const MuSelector& sel) {
  switch (sel.kind) {
    case MuSelector::Kind::all: return field.enumerate(Subgroup::subfield_units);
    case MuSelector::Kind::kloosterman: return find_mu(field, sel.target);
    case MuSelector::Kind::index: {
      const Elem base = field.pow(field.generator(), (std::uint64_t{1} << field.half()) + 1);
      return {field.pow(base, sel.value)};
    }
    case MuSelector::Kind::hex: {
      if (sel.value > field.mask()) throw UsageError(to_hex(sel.value) + " is not an element of the field");
      const auto mu = static_cast<Elem>(sel.value);
      if (mu == 0) throw Error(Errc::zero_mu, "mu must be nonzero");
      if (!field.in_subfield(mu)) throw Error(Errc::not_in_subfield, to_hex(mu) + " is not in F_{2^m}");
      return {mu};
    }
  }
  return {};
}

BinaryField make_field(int m, const RunConfig& cfg) {
  std::optional<std::uint64_t> poly;
  for (const auto& text : cfg.polys) {
    std::uint64_t p = 0;
    try {
      p = parse_hex(text);
    } catch (const Error&) {
      throw UsageError("bad poly: '" + text + "'");
    }
    if (poly_degree(p) == 2 * m) poly = p;
  }
  return BinaryField::quadratic(m, poly, cfg.max_n);
}

}  // namespace bfw::cli

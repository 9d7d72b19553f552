#include "bfw_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "bfw/boolfun.hpp"
#include "bfw/constructions.hpp"
#include "bfw/error.hpp"
#include "bfw/kloosterman.hpp"
#include "bfw/walsh.hpp"
#include "reference_tables.hpp"

namespace bfw::cli {

namespace {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// validation

void validate(const RunConfig& cfg, bool needs_m) {
  if (cfg.max_n < 1 || cfg.max_n > kHardMaxDegree)
    throw UsageError("--max-n must lie in 1.." + std::to_string(kHardMaxDegree));
  if (cfg.threads < 1) throw UsageError("--threads must be positive");
  if (needs_m && !cfg.m) throw UsageError("--m or --m-range is required");
  if (cfg.construction != "f" && cfg.construction != "g") throw UsageError("--construction must be f or g");
  if (cfg.mu) parse_mu_selector(*cfg.mu);
  for (const auto& p : cfg.polys) {
    try {
      parse_hex(p);
    } catch (const Error&) {
      throw UsageError("bad poly: '" + p + "'");
    }
  }
  if (cfg.lambda) {
    try {
      parse_hex(*cfg.lambda);
    } catch (const Error&) {
      throw UsageError("bad lambda: '" + *cfg.lambda + "'");
    }
  }
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (cfg.format == f) return;
  std::string list;
  for (const char* f : allowed) list += std::string(list.empty() ? "" : "|") + f;
  throw UsageError("--format must be one of " + list);
}

// Fails with TooLarge before any table is allocated.
void check_capacity(const RunConfig& cfg) {
  if (2 * cfg.m->hi > cfg.max_n)
    throw Error(Errc::too_large, "n = " + std::to_string(2 * cfg.m->hi) + " exceeds --max-n " +
                                     std::to_string(cfg.max_n));
}

Construction construction_of(const RunConfig& cfg) {
  return cfg.construction == "f" ? Construction::f : Construction::g;
}

const char* default_mu(const RunConfig& cfg) { return cfg.construction == "f" ? "0x1" : "k=-1"; }

std::optional<Elem> lambda_of(const RunConfig& cfg) {
  if (!cfg.lambda) return std::nullopt;
  return static_cast<Elem>(parse_hex(*cfg.lambda));
}

std::vector<Elem> mus_for(const BinaryField& field, const RunConfig& cfg) {
  std::vector<Elem> mus = resolve_mu(field, parse_mu_selector(cfg.mu.value_or(default_mu(cfg))));
  if (mus.empty()) throw Error(Errc::no_such_mu, "no mu selected at m = " + std::to_string(field.half()));
  return mus;
}

// ---------------------------------------------------------------------------
// output

Json distribution_json(const SpectrumDistribution& d) {
  Json arr = Json::array();
  for (const auto& [v, c] : d.entries) arr.push_back({{"value", v}, {"count", c}});
  return arr;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string lpad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

// ---------------------------------------------------------------------------
// field

int cmd_field(const RunConfig& cfg, std::ostream& os) {
  validate(cfg, true);
  require_format(cfg, {"json", "csv", "text"});
  check_capacity(cfg);
  Json fields = Json::array();
  for (int m = cfg.m->lo; m <= cfg.m->hi; ++m) {
    const BinaryField f = make_field(m, cfg);
    Json dual = Json::array();
    for (Elem e : f.dual_basis()) dual.push_back(to_hex(e));
    const std::uint64_t q = std::uint64_t{1} << m;
    fields.push_back({{"m", m},
                      {"n", f.degree()},
                      {"poly", to_hex(f.reduction_poly())},
                      {"generator", to_hex(f.generator())},
                      {"trace_mask", to_hex(f.trace_mask())},
                      {"lambda", to_hex(find_lambda(f))},
                      {"subfield_generator", to_hex(f.pow(f.generator(), q + 1))},
                      {"unit_circle_generator", to_hex(f.pow(f.generator(), q - 1))},
                      {"dual_basis", dual}});
  }
  if (cfg.format == "json") {
    os << Json{{"fields", fields}}.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    os << "m,n,poly,generator,trace_mask,lambda,subfield_generator,unit_circle_generator\n";
    for (const auto& f : fields)
      os << f["m"] << ',' << f["n"] << ',' << f["poly"].get<std::string>() << ','
         << f["generator"].get<std::string>() << ',' << f["trace_mask"].get<std::string>() << ','
         << f["lambda"].get<std::string>() << ',' << f["subfield_generator"].get<std::string>() << ','
         << f["unit_circle_generator"].get<std::string>() << '\n';
  } else {
    for (const auto& f : fields) {
      os << "GF(2^" << f["n"] << ") over GF(2^" << f["m"] << ")\n";
      for (const char* key : {"poly", "generator", "trace_mask", "lambda", "subfield_generator", "unit_circle_generator"})
        os << "  " << pad(key, 22) << f[key].get<std::string>() << '\n';
      os << "  " << pad("dual_basis", 22);
      for (const auto& e : f["dual_basis"]) os << e.get<std::string>() << ' ';
      os << '\n';
    }
  }
  return kPass;
}

// ---------------------------------------------------------------------------
// spectrum

int cmd_spectrum(const RunConfig& cfg, std::ostream& os) {
  validate(cfg, true);
  require_format(cfg, {"json", "csv", "text"});
  check_capacity(cfg);
  const Construction which = construction_of(cfg);
  Json spectra = Json::array();
  for (int m = cfg.m->lo; m <= cfg.m->hi; ++m) {
    const BinaryField field = make_field(m, cfg);
    const Elem lambda = lambda_of(cfg).value_or(find_lambda(field));
    for (Elem mu : mus_for(field, cfg)) {
      const TruthTable t = build_construction(which, field, mu, lambda);
      const WalshSpectrum s = wht_fast(t, cfg.threads);
      const SpectrumDistribution d = distribution(s);
      spectra.push_back({{"construction", cfg.construction},
                         {"m", m},
                         {"n", field.degree()},
                         {"mu", to_hex(mu)},
                         {"lambda", to_hex(lambda)},
                         {"poly", to_hex(field.reduction_poly())},
                         {"distribution", distribution_json(d)},
                         {"nonlinearity", nonlinearity(s)},
                         {"classification", classify(d, m).label()},
                         {"balanced", is_balanced(t)},
                         {"algebraic_degree", algebraic_degree(t)}});
    }
  }
  if (cfg.format == "json") {
    os << Json{{"spectra", spectra}}.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    os << "construction,m,mu,nonlinearity,classification,balanced,algebraic_degree,value,count\n";
    for (const auto& s : spectra)
      for (const auto& e : s["distribution"])
        os << s["construction"].get<std::string>() << ',' << s["m"] << ',' << s["mu"].get<std::string>() << ','
           << s["nonlinearity"] << ',' << s["classification"].get<std::string>() << ','
           << (s["balanced"].get<bool>() ? "true" : "false") << ',' << s["algebraic_degree"] << ','
           << e["value"] << ',' << e["count"] << '\n';
  } else {
    for (const auto& s : spectra) {
      os << s["construction"].get<std::string>() << "  m = " << s["m"] << ", mu = " << s["mu"].get<std::string>()
         << ", lambda = " << s["lambda"].get<std::string>() << '\n';
      os << "  " << pad("W(a)", 10) << "frequency\n";
      for (const auto& e : s["distribution"])
        os << "  " << pad(std::to_string(e["value"].get<std::int64_t>()), 10) << e["count"] << '\n';
      os << "  nonlinearity " << s["nonlinearity"] << ", " << s["classification"].get<std::string>()
         << (s["balanced"].get<bool>() ? ", balanced" : ", not balanced") << ", degree "
         << s["algebraic_degree"] << '\n';
    }
  }
  return kPass;
}

// ---------------------------------------------------------------------------
// table

struct TableColumn {
  int m = 0;
  Elem mu = 0;
  bool match = false;
  std::size_t qualifying = 0;
  std::vector<Elem> matching;
  SpectrumDistribution dist;
};

int cmd_table(RunConfig cfg, std::ostream& os) {
  const bool is_f = cfg.table == "remark-f";
  if (!is_f && cfg.table != "remark-g") throw UsageError("table must be remark-f or remark-g");
  validate(cfg, false);
  require_format(cfg, {"json", "csv", "text"});
  const auto& reference = is_f ? reference::remark_f() : reference::remark_g();
  cfg.m = MRange{reference.front().m, reference.back().m};
  check_capacity(cfg);

  std::vector<TableColumn> cols;
  for (const auto& ref : reference) {
    const BinaryField field = make_field(ref.m, cfg);
    const std::optional<Elem> lambda = lambda_of(cfg);
    TableColumn col;
    col.m = ref.m;
    const std::vector<Elem> mus = is_f ? std::vector<Elem>{1} : find_mu(field, -1);
    col.qualifying = mus.size();
    for (Elem mu : mus) {
      const SpectrumDistribution d =
          distribution(wht_fast(build_construction(is_f ? Construction::f : Construction::g, field, mu, lambda)));
      const bool match = d.entries == ref.entries;
      if (match) col.matching.push_back(mu);
      if (col.dist.entries.empty() || (match && !col.match)) {
        col.dist = d;
        col.mu = mu;
        col.match = match;
      }
    }
    cols.push_back(std::move(col));
  }
  const bool all_match = std::all_of(cols.begin(), cols.end(), [](const TableColumn& c) { return c.match; });
  const char* fname = is_f ? "f" : "g";

  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& c : cols) {
      Json matching = Json::array();
      for (Elem mu : c.matching) matching.push_back(to_hex(mu));
      arr.push_back({{"m", c.m},
                     {"n", 2 * c.m},
                     {"mu", to_hex(c.mu)},
                     {"match", c.match},
                     {"qualifying_mu", c.qualifying},
                     {"matching_mu", matching},
                     {"distribution", distribution_json(c.dist)}});
    }
    os << Json{{"table", cfg.table}, {"construction", fname}, {"match", all_match}, {"columns", arr}}.dump(2)
       << '\n';
  } else if (cfg.format == "csv") {
    os << "table,m,mu,match,value,count\n";
    for (const auto& c : cols)
      for (const auto& [v, n] : c.dist.entries)
        os << cfg.table << ',' << c.m << ',' << to_hex(c.mu) << ',' << (c.match ? "true" : "false") << ',' << v
           << ',' << n << '\n';
  } else {
    const std::size_t vw = 10, fw = 11;
    std::string rule = "+";
    for (std::size_t i = 0; i < cols.size(); ++i) rule += std::string(vw, '-') + "+" + std::string(fw, '-') + "+";
    std::string heads = " ", header = "|";
    for (const auto& c : cols) {
      heads += pad("m = " + std::to_string(c.m) + ", mu = " + to_hex(c.mu), vw + fw + 2);
      header += pad(std::string(" W_") + fname + "(a)", vw) + "|" + pad(" frequency", fw) + "|";
    }
    os << heads << '\n' << rule << '\n' << header << '\n' << rule << '\n';
    std::size_t rows = 0;
    for (const auto& c : cols) rows = std::max(rows, c.dist.entries.size());
    for (std::size_t r = 0; r < rows; ++r) {
      os << '|';
      for (const auto& c : cols) {
        if (r < c.dist.entries.size())
          os << lpad(std::to_string(c.dist.entries[r].first), vw - 1) << " |"
             << lpad(std::to_string(c.dist.entries[r].second), fw - 1) << " |";
        else
          os << std::string(vw, ' ') << '|' << std::string(fw, ' ') << '|';
      }
      os << '\n';
    }
    os << rule << '\n';
    for (const auto& c : cols) {
      os << "m = " << c.m << ": " << (c.match ? "matches" : "DIFFERS");
      if (!is_f) os << " (" << c.matching.size() << " of " << c.qualifying << " mu with k_m(mu) = -1 match)";
      os << '\n';
    }
  }
  return all_match ? kPass : kVerificationFailure;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const RunConfig& cfg, std::ostream& os) {
  validate(cfg, true);
  require_format(cfg, {"json", "csv", "text"});
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), cfg.suite) == names.end())
    throw UsageError("unknown suite '" + cfg.suite + "'");
  check_capacity(cfg);

  std::vector<VerificationReport> reports;
  for (int m = cfg.m->lo; m <= cfg.m->hi; ++m) {
    auto part = run_suite(cfg.suite, m, cfg);
    reports.insert(reports.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  const bool passed = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  const std::string range = std::to_string(cfg.m->lo) + ".." + std::to_string(cfg.m->hi);

  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& r : reports) {
      Json checks = Json::array();
      for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"gating", c.gating}, {"detail", c.detail}});
      arr.push_back({{"theorem", r.theorem},
                     {"m", r.m},
                     {"mu", r.mu ? Json(to_hex(*r.mu)) : Json(nullptr)},
                     {"passed", r.passed()},
                     {"checks", checks}});
    }
    os << Json{{"suite", cfg.suite}, {"m_range", range}, {"passed", passed}, {"reports", arr}}.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    os << "suite,m,mu,check,pass,gating,detail\n";
    for (const auto& r : reports)
      for (const auto& c : r.checks)
        os << r.theorem << ',' << r.m << ',' << (r.mu ? to_hex(*r.mu) : "") << ',' << c.name << ','
           << (c.pass ? "true" : "false") << ',' << (c.gating ? "true" : "false") << ',' << csv_escape(c.detail)
           << '\n';
  } else {
    std::size_t failed = 0;
    for (const auto& r : reports) {
      failed += !r.passed();
      os << (r.passed() ? "PASS " : "FAIL ") << pad(r.theorem, 10) << " m=" << pad(std::to_string(r.m), 3);
      if (r.mu) os << " mu=" << to_hex(*r.mu);
      os << '\n';
      for (const auto& c : r.checks) {
        if (c.pass) continue;
        os << "     " << (c.gating ? "fail " : "info ") << c.name;
        if (!c.detail.empty()) os << ": " << c.detail;
        os << '\n';
      }
    }
    os << (passed ? "passed" : "FAILED") << ": " << reports.size() - failed << " of " << reports.size()
       << " reports pass, suite " << cfg.suite << ", m " << range << '\n';
  }
  return passed ? kPass : kVerificationFailure;
}

// ---------------------------------------------------------------------------
// kloosterman

int cmd_kloosterman(const RunConfig& cfg, std::ostream& os) {
  validate(cfg, true);
  require_format(cfg, {"json", "csv", "text"});
  const int modes = int(cfg.scan) + int(cfg.target.has_value()) + int(cfg.a.has_value());
  if (modes != 1) throw UsageError("kloosterman needs exactly one of --scan, --target, --a");
  if (cfg.b && !cfg.a) throw UsageError("--b requires --a");
  if (cfg.m->hi > cfg.max_n)
    throw Error(Errc::too_large, "m = " + std::to_string(cfg.m->hi) + " exceeds --max-n " + std::to_string(cfg.max_n));

  Json results = Json::array();
  for (int m = cfg.m->lo; m <= cfg.m->hi; ++m) {
    const BinaryField field = BinaryField::of_degree(m, std::nullopt, cfg.max_n);
    if (cfg.a) {
      auto elem = [&](const std::string& text) {
        std::uint64_t v = 0;
        try {
          v = parse_hex(text);
        } catch (const Error&) {
          throw UsageError("bad element: '" + text + "'");
        }
        if (v > field.mask()) throw UsageError(text + " is not an element of GF(2^" + std::to_string(m) + ")");
        return static_cast<Elem>(v);
      };
      const Elem a = elem(*cfg.a);
      const Elem b = cfg.b ? elem(*cfg.b) : 1;
      results.push_back({{"m", m}, {"a", to_hex(a)}, {"b", to_hex(b)}, {"k", kloosterman_sum(field, a, b)}});
      continue;
    }
    const KloostermanScan s = scan(field);
    if (cfg.scan) {
      Json values = Json::array();
      for (std::size_t i = 0; i < s.entries.size(); ++i) values.push_back({{"lambda", to_hex(i)}, {"k", s.entries[i]}});
      results.push_back({{"m", m}, {"values", values}, {"value_set", s.value_set}});
    } else {
      Json lambdas = Json::array();
      for (std::size_t i = 0; i < s.entries.size(); ++i)
        if (s.entries[i] == *cfg.target) lambdas.push_back(to_hex(i));
      results.push_back({{"m", m}, {"target", *cfg.target}, {"lambda", lambdas}});
    }
  }

  if (cfg.format == "json") {
    os << (results.size() == 1 ? results[0] : Json{{"results", results}}).dump(2) << '\n';
  } else if (cfg.format == "csv") {
    if (cfg.a) {
      os << "m,a,b,k\n";
      for (const auto& r : results)
        os << r["m"] << ',' << r["a"].get<std::string>() << ',' << r["b"].get<std::string>() << ',' << r["k"] << '\n';
    } else if (cfg.scan) {
      os << "m,lambda,k\n";
      for (const auto& r : results)
        for (const auto& v : r["values"]) os << r["m"] << ',' << v["lambda"].get<std::string>() << ',' << v["k"] << '\n';
    } else {
      os << "m,lambda\n";
      for (const auto& r : results)
        for (const auto& l : r["lambda"]) os << r["m"] << ',' << l.get<std::string>() << '\n';
    }
  } else {
    for (const auto& r : results) {
      if (cfg.a) {
        os << "k_" << r["m"] << "(" << r["a"].get<std::string>() << ", " << r["b"].get<std::string>()
           << ") = " << r["k"] << '\n';
      } else if (cfg.scan) {
        os << "m = " << r["m"] << '\n';
        for (const auto& v : r["values"]) os << "  " << pad(v["lambda"].get<std::string>(), 12) << v["k"] << '\n';
        os << "  value set:";
        for (const auto& v : r["value_set"]) os << ' ' << v;
        os << '\n';
      } else {
        os << "m = " << r["m"] << ", k = " << r["target"] << ": " << r["lambda"].size() << " elements\n";
        for (const auto& l : r["lambda"]) os << "  " << l.get<std::string>() << '\n';
      }
    }
  }
  return kPass;
}

// ---------------------------------------------------------------------------
// anf / export

struct Built {
  int m;
  Elem mu;
  Elem lambda;
  std::uint64_t poly;
  TruthTable table;
};

std::vector<Built> build_all(const RunConfig& cfg) {
  std::vector<Built> out;
  for (int m = cfg.m->lo; m <= cfg.m->hi; ++m) {
    const BinaryField field = make_field(m, cfg);
    const Elem lambda = lambda_of(cfg).value_or(find_lambda(field));
    for (Elem mu : mus_for(field, cfg))
      out.push_back({m, mu, lambda, field.reduction_poly(), build_construction(construction_of(cfg), field, mu, lambda)});
  }
  return out;
}

int cmd_anf(const RunConfig& cfg, std::ostream& os) {
  validate(cfg, true);
  require_format(cfg, {"json", "csv", "text"});
  check_capacity(cfg);
  Json arr = Json::array();
  for (const Built& b : build_all(cfg)) {
    const AnfTable anf_table = anf(b.table);
    Json monomials = Json::array();
    for (std::uint64_t mono : anf_table.monomials()) monomials.push_back(to_hex(mono));
    arr.push_back({{"construction", cfg.construction},
                   {"m", b.m},
                   {"n", 2 * b.m},
                   {"mu", to_hex(b.mu)},
                   {"algebraic_degree", algebraic_degree(b.table)},
                   {"monomials", monomials}});
  }
  if (cfg.format == "json") {
    os << Json{{"anf", arr}}.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    os << "construction,m,mu,monomial\n";
    for (const auto& a : arr)
      for (const auto& mono : a["monomials"])
        os << cfg.construction << ',' << a["m"] << ',' << a["mu"].get<std::string>() << ','
           << mono.get<std::string>() << '\n';
  } else {
    for (const auto& a : arr) {
      os << cfg.construction << "  m = " << a["m"] << ", mu = " << a["mu"].get<std::string>() << ": degree "
         << a["algebraic_degree"] << ", " << a["monomials"].size() << " monomials\n";
      for (const auto& mono : a["monomials"]) os << "  " << mono.get<std::string>() << '\n';
    }
  }
  return kPass;
}

int cmd_export(const RunConfig& cfg, std::ostream& os) {
  validate(cfg, true);
  require_format(cfg, {"json", "csv", "text", "raw"});
  check_capacity(cfg);
  const std::vector<Built> all = build_all(cfg);
  if (cfg.format == "raw") {
    if (all.size() != 1) throw UsageError("raw export takes a single m and mu");
    const auto bytes = to_bytes(all.front().table);
    os.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    return kPass;
  }
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const Built& b : all)
      arr.push_back({{"construction", cfg.construction},
                     {"m", b.m},
                     {"n", 2 * b.m},
                     {"mu", to_hex(b.mu)},
                     {"lambda", to_hex(b.lambda)},
                     {"poly", to_hex(b.poly)},
                     {"truth_table", to_hex(b.table)}});
    os << Json{{"tables", arr}}.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    os << "m,mu,x,value\n";
    for (const Built& b : all)
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << (2 * b.m)); ++x)
        os << b.m << ',' << to_hex(b.mu) << ',' << to_hex(x) << ',' << int(b.table.get(x)) << '\n';
  } else {
    for (const Built& b : all) os << to_hex(b.table) << '\n';
  }
  return kPass;
}

// ---------------------------------------------------------------------------
// wiring

void add_common(CLI::App* sub, RunConfig& cfg, std::string& m_text, std::string& range_text) {
  sub->add_option("--m", m_text, "half degree m (field GF(2^{2m}))");
  sub->add_option("--m-range", range_text, "range A..B of m");
  sub->add_option("--format", cfg.format, "json | csv | text");
  sub->add_option("--out", cfg.out, "write the report to this file");
  sub->add_option("--threads", cfg.threads, "worker threads");
  sub->add_option("--max-n", cfg.max_n, "largest field degree n allowed");
  sub->add_option("--poly", cfg.polys, "reduction polynomial override (hex); matched to m by degree");
}

void add_construction(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--construction", cfg.construction, "f or g");
  sub->add_option("--mu", cfg.mu, "0x.. | idx:K | all | k=T");
  sub->add_option("--lambda", cfg.lambda, "lambda override (hex), lambda + conj(lambda) = 1");
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::too_large: return kCapability;
    case Errc::not_irreducible:
    case Errc::invalid_argument:
    case Errc::zero_mu:
    case Errc::not_in_subfield:
    case Errc::in_subfield:
    case Errc::invalid_lambda:
    case Errc::division_by_zero:
    case Errc::dimension_mismatch: return kUsage;
    case Errc::no_such_mu:
    case Errc::unexpected_value: return kVerificationFailure;
  }
  return kVerificationFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string m_text, range_text;
  std::string target_text;

  CLI::App app{"Walsh spectra and exponential sums for two families of Boolean functions over GF(2^{2m})"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto* field = app.add_subcommand("field", "describe GF(2^{2m}) as built");
  add_common(field, cfg, m_text, range_text);

  auto* spectrum = app.add_subcommand("spectrum", "Walsh spectrum of f or g");
  add_common(spectrum, cfg, m_text, range_text);
  add_construction(spectrum, cfg);

  auto* table = app.add_subcommand("table", "regenerate a published spectrum table");
  table->add_option("which", cfg.table, "remark-f | remark-g")->required();
  table->add_option("--format", cfg.format, "json | csv | text");
  table->add_option("--out", cfg.out, "write the report to this file");
  table->add_option("--threads", cfg.threads, "worker threads");
  table->add_option("--max-n", cfg.max_n, "largest field degree n allowed");
  table->add_option("--poly", cfg.polys, "reduction polynomial override (hex); matched to m by degree");
  table->add_option("--lambda", cfg.lambda, "lambda override (hex)");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify, cfg, m_text, range_text);
  verify->add_option("--suite", cfg.suite, "thm32 | thm34 | thm35 | lemma23 | lemma31 | fkl | recursion | counts | qsets | all");
  verify->add_option("--mu", cfg.mu, "0x.. | idx:K | all | k=T");
  verify->add_option("--lambda", cfg.lambda, "lambda override (hex)");

  auto* kloo = app.add_subcommand("kloosterman", "Kloosterman sums over GF(2^m)");
  add_common(kloo, cfg, m_text, range_text);
  kloo->add_flag("--scan", cfg.scan, "k_m(lambda) for every lambda");
  kloo->add_option("--target", target_text, "list lambda with k_m(lambda) = T");
  kloo->add_option("--a", cfg.a, "evaluate k_m(a, b)");
  kloo->add_option("--b", cfg.b, "second argument (default 0x1)");

  auto* anf_cmd = app.add_subcommand("anf", "algebraic normal form of f or g");
  add_common(anf_cmd, cfg, m_text, range_text);
  add_construction(anf_cmd, cfg);

  auto* export_cmd = app.add_subcommand("export", "truth table of f or g (json | csv | text | raw)");
  add_common(export_cmd, cfg, m_text, range_text);
  add_construction(export_cmd, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (!m_text.empty() && !range_text.empty()) throw UsageError("give --m or --m-range, not both");
    if (!m_text.empty()) cfg.m = parse_m_range(m_text);
    if (!range_text.empty()) cfg.m = parse_m_range(range_text);
    if (!target_text.empty()) {
      std::int64_t t = 0;
      std::istringstream is(target_text);
      if (!(is >> t) || !is.eof()) throw UsageError("bad --target: '" + target_text + "'");
      cfg.target = t;
    }

    std::ostringstream buffer;
    int code = kPass;
    if (field->parsed()) code = cmd_field(cfg, buffer);
    else if (spectrum->parsed()) code = cmd_spectrum(cfg, buffer);
    else if (table->parsed()) code = cmd_table(cfg, buffer);
    else if (verify->parsed()) code = cmd_verify(cfg, buffer);
    else if (kloo->parsed()) code = cmd_kloosterman(cfg, buffer);
    else if (anf_cmd->parsed()) code = cmd_anf(cfg, buffer);
    else if (export_cmd->parsed()) code = cmd_export(cfg, buffer);

    if (cfg.out.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(cfg.out, std::ios::binary);
      if (!file) throw UsageError("cannot open '" + cfg.out + "' for writing");
      file << buffer.str();
    }
    return code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    const int code = exit_code_for(e);
    err << (code == kCapability ? "capability: " : "error: ") << e.what() << '\n';
    return code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailure;
  }
}

}  // namespace bfw::cli

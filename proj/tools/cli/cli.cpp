#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>

#include "segsec/errors.hpp"
#include "segsec/fat/calculus.hpp"
#include "segsec/fat/spec.hpp"
#include "segsec/fat/transfer.hpp"
#include "segsec/horace/appendix.hpp"
#include "segsec/horace/bounds.hpp"
#include "segsec/horace/certificate.hpp"
#include "segsec/horace/lemmas.hpp"
#include "segsec/segre/terracini.hpp"

namespace segsec::cli {

namespace {

using horace::BigInt;
using nlohmann::json;

// Usage problems found after CLI11 has accepted the flags.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Common {
  std::string primes;
  std::size_t trials = 3;
  std::string seed;
  std::string format = "text";
  std::string output;
  std::uint64_t cap = 1'000'000;
};

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc{} || ptr != end) throw UsageError(what + ": not an unsigned integer: '" + text + "'");
  return v;
}

std::uint64_t resolve_seed(const Common& c) {
  if (!c.seed.empty()) return parse_u64(c.seed, "--seed");
  if (const char* env = std::getenv("SEGSEC_SEED"); env != nullptr && *env != '\0')
    return parse_u64(env, "SEGSEC_SEED");
  return la::kDefaultSeed.value;
}

la::SamplingConfig sampling(const Common& c) {
  la::SamplingConfig cfg;
  if (!c.primes.empty()) {
    cfg.primes.clear();
    std::stringstream ss(c.primes);
    for (std::string item; std::getline(ss, item, ',');) cfg.primes.push_back(parse_u64(item, "--primes"));
  }
  cfg.trials = c.trials;
  cfg.seed = la::Seed{resolve_seed(c)};
  la::validate(cfg);
  return cfg;
}

// ---- rendering ----------------------------------------------------------------------------
// Records keep their insertion order for CSV/text columns; JSON sorts keys (nlohmann's default
// object type is a std::map), so both stay stable for golden files.

using Record = std::vector<std::pair<std::string, json>>;

json to_object(const Record& r) {
  json j = json::object();
  for (const auto& [k, v] : r) j[k] = v;
  return j;
}

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ";" : "") + scalar(v[i]);
    return out;
  }
  if (v.is_null()) return "";
  return v.dump();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

std::string render_record(const Record& r, const std::string& format) {
  if (format == "json") return to_object(r).dump(2) + "\n";
  std::string out;
  if (format == "csv") {
    for (std::size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + csv_field(r[i].first);
    out += "\n";
    for (std::size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + csv_field(scalar(r[i].second));
    return out + "\n";
  }
  std::size_t width = 0;
  for (const auto& [k, v] : r) width = std::max(width, k.size());
  for (const auto& [k, v] : r) out += k + ":" + std::string(width - k.size() + 1, ' ') + scalar(v) + "\n";
  return out;
}

// A list of rows under a header record. JSON: {meta..., "rows": [...]}. CSV: rows only.
std::string render_rows(const Record& meta, const std::vector<Record>& rows, const std::string& format) {
  if (format == "json") {
    json j = to_object(meta);
    j["rows"] = json::array();
    for (const auto& r : rows) j["rows"].push_back(to_object(r));
    return j.dump(2) + "\n";
  }
  std::string out;
  if (rows.empty()) return format == "csv" ? out : render_record(meta, "text");
  const Record& head = rows.front();
  if (format == "csv") {
    for (std::size_t i = 0; i < head.size(); ++i) out += (i ? "," : "") + csv_field(head[i].first);
    out += "\n";
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + csv_field(scalar(r[i].second));
      out += "\n";
    }
    return out;
  }
  out = render_record(meta, "text") + "\n";
  std::vector<std::size_t> width(head.size());
  for (std::size_t i = 0; i < head.size(); ++i) width[i] = head[i].first.size();
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], scalar(r[i].second).size());
  auto line = [&](const std::function<std::string(std::size_t)>& cell) {
    std::string l;
    for (std::size_t i = 0; i < head.size(); ++i) {
      const std::string c = cell(i);
      l += c + (i + 1 < head.size() ? std::string(width[i] - c.size() + 2, ' ') : "");
    }
    return l + "\n";
  };
  out += line([&](std::size_t i) { return head[i].first; });
  for (const auto& r : rows) out += line([&](std::size_t i) { return scalar(r[i].second); });
  return out;
}

void emit(const std::string& data, const Common& c, std::ostream& out) {
  if (c.output.empty()) {
    out << data;
    return;
  }
  std::ofstream f(c.output, std::ios::binary | std::ios::trunc);
  if (!f) throw UsageError("cannot write '" + c.output + "'");
  f << data;
}

json primes_json(const la::SamplingConfig& cfg) { return json(cfg.primes); }

// ---- secdim / table -------------------------------------------------------------------------

constexpr std::size_t kDefectTrials = 100;

std::uint64_t known_defect(unsigned n, unsigned s) { return n == 4 && s == 3 ? 1 : 0; }

// A defect is only reported after every cell of the escalated run falls short.
segre::DimensionReport escalate(segre::DimensionReport r, const la::SamplingConfig& cfg) {
  if (r.defect == 0 || cfg.trials >= kDefectTrials) return r;
  la::SamplingConfig strong = cfg;
  strong.trials = kDefectTrials;
  return segre::secant_dim_sample(r.problem, strong);
}

bool matches(const segre::DimensionReport& r) {
  const auto want = known_defect(r.problem.n, r.problem.s);
  return r.defect == want && (want == 0 || r.defect_confirmed());
}

Record secdim_record(const segre::DimensionReport& r) {
  const auto [lo, hi] = std::minmax_element(r.cell_dims.begin(), r.cell_dims.end());
  return {{"n", r.problem.n},
          {"s", r.problem.s},
          {"expected", r.expected},
          {"observed", r.observed},
          {"defect", r.defect},
          {"ideal_dim", r.ideal_dim},
          {"cells", r.cell_dims.size()},
          {"cells_agreeing", r.cells_agreeing},
          {"cell_min", r.cell_dims.empty() ? 0 : *lo},
          {"cell_max", r.cell_dims.empty() ? 0 : *hi},
          {"primes", json(r.primes)},
          {"trials", r.trials},
          {"seed", r.seed},
          {"degree_bound", r.degree_bound},
          {"failure_bound", r.failure_bound},
          {"known_defect", known_defect(r.problem.n, r.problem.s)},
          {"match", matches(r)}};
}

int cmd_secdim(unsigned n, unsigned s, const Common& c, std::ostream& out, std::ostream& err) {
  const auto cfg = sampling(c);
  if (n > segre::kMaxMatrixFactors) throw ResourceLimit("resource guard: n <= " + std::to_string(segre::kMaxMatrixFactors));
  auto r = segre::secant_dim_sample({n, s}, cfg);
  if (r.defect > 0 && cfg.trials < kDefectTrials) {
    err << "secdim: defect " << r.defect << " at (" << n << ", " << s << "); escalating to " << kDefectTrials
        << " trials\n";
    r = escalate(std::move(r), cfg);
  }
  emit(render_record(secdim_record(r), c.format), c, out);
  return matches(r) ? kMatch : kMismatch;
}

struct SRange {
  bool automatic = true;
  unsigned lo = 1, hi = 1;
};

SRange parse_s_range(const std::string& text) {
  if (text == "auto") return {};
  SRange r{false, 0, 0};
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    r.lo = r.hi = static_cast<unsigned>(parse_u64(text, "--s"));
  } else {
    r.lo = static_cast<unsigned>(parse_u64(text.substr(0, dots), "--s"));
    r.hi = static_cast<unsigned>(parse_u64(text.substr(dots + 2), "--s"));
  }
  if (r.lo < 1 || r.lo > r.hi) throw UsageError("--s: range must be nonempty and start at 1 or more");
  return r;
}

std::uint64_t e_star(unsigned n) {
  const std::uint64_t pow2 = std::uint64_t{1} << n;
  return (pow2 + n) / (n + 1);
}

struct TableOptions {
  unsigned n_min = 3, n_max = 8;
  std::string s = "auto";
  bool transfer = false;
  bool certify = false;
  bool timings = false;
  bool allow_large = false;
};

int cmd_table(const TableOptions& t, const Common& c, std::ostream& out, std::ostream& err) {
  const auto cfg = sampling(c);
  if (t.n_min < 1 || t.n_min > t.n_max) throw UsageError("--n-min/--n-max: range must be nonempty and start at 1 or more");
  if (t.n_max > segre::kMaxMatrixFactors)
    throw ResourceLimit("resource guard: n <= " + std::to_string(segre::kMaxMatrixFactors));
  if (t.n_max > 16 && !t.allow_large) throw UsageError("--n-max above 16 needs --allow-large");
  const SRange sr = parse_s_range(t.s);

  std::vector<Record> rows;
  bool all_match = true;
  for (unsigned n = t.n_min; n <= t.n_max; ++n) {
    const unsigned s_hi = sr.automatic ? static_cast<unsigned>(e_star(n) + 1) : sr.hi;
    const unsigned s_lo = sr.automatic ? 1 : sr.lo;
    const auto start = std::chrono::steady_clock::now();
    // One elimination per cell yields every prefix s; cells run concurrently inside.
    auto profile = segre::secant_dim_profile(n, s_hi, cfg);
    const double profile_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    for (unsigned s = s_lo; s <= s_hi; ++s) {
      const auto row_start = std::chrono::steady_clock::now();
      auto r = profile[s - 1];
      if (r.defect > 0) {
        err << "table: defect at (" << n << ", " << s << "); escalating to " << kDefectTrials << " trials\n";
        r = escalate(std::move(r), cfg);
      }
      std::vector<std::string> methods{"terracini"};
      bool ok = matches(r);
      if (t.transfer && n >= 2) {
        const auto tr = fat::transfer_consistency(n, s, cfg);
        if (tr.consistent()) methods.emplace_back("fatpoints");
        else ok = false;
      }
      if (t.certify && n >= 5 && (n != 4 || s != 3)) {
        const auto prof = horace::make_profile(n);
        const BigInt bs(s);
        if ((bs == prof.e || bs == prof.e_star) && horace::is_odd(bs)) {
          horace::CertifyOptions opts;
          opts.cap = c.cap;
          opts.sampling = cfg;
          opts.direct_oracle = false;
          const auto cert = horace::main_theorem_certify(n, bs, opts);
          if (cert.status == horace::Status::Verified) methods.emplace_back("certified");
          else if (cert.status == horace::Status::Failed) ok = false;
        }
      }
      all_match = all_match && ok;
      std::string tags;
      for (const auto& m : methods) tags += (tags.empty() ? "" : ";") + m;
      Record row{{"n", n},
                 {"s", s},
                 {"expected", r.expected},
                 {"observed", r.observed},
                 {"defect", r.defect},
                 {"methods", tags},
                 {"cells_agreeing", r.cells_agreeing},
                 {"cells", r.cell_dims.size()},
                 {"trials", r.trials},
                 {"match", ok}};
      if (t.timings) {
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - row_start).count();
        row.emplace_back("runtime_ms", ms + profile_ms / (s_hi - s_lo + 1));
      }
      rows.push_back(std::move(row));
    }
    err << "table: n=" << n << " done\n";
  }
  const Record meta{{"n_min", t.n_min},     {"n_max", t.n_max}, {"primes", primes_json(cfg)},
                    {"trials", cfg.trials}, {"seed", cfg.seed.value}, {"all_match", all_match}};
  emit(render_rows(meta, rows, c.format), c, out);
  return all_match ? kMatch : kMismatch;
}

// ---- fatpoints ------------------------------------------------------------------------------

int cmd_fatpoints(const std::string& path, std::optional<unsigned> degree, const Common& c, std::ostream& out) {
  const auto cfg = sampling(c);
  const auto spec = fat::load_spec(path);
  const unsigned t = degree.value_or(spec.degree);
  const auto d = fat::ideal_dim(spec, t, cfg);
  const Record r{{"spec", path},
                 {"ambient", spec.ambient},
                 {"degree", t},
                 {"dim", d.value},
                 {"monomials", d.monomials},
                 {"rows", d.rows},
                 {"columns", d.columns},
                 {"rank", d.rank},
                 {"cells", json(d.cells)},
                 {"samples", d.cells.size()},
                 {"primes", primes_json(cfg)},
                 {"trials", cfg.trials},
                 {"seed", cfg.seed.value}};
  emit(render_record(r, c.format), c, out);
  return kMatch;
}

// ---- certify --------------------------------------------------------------------------------

void flatten(const horace::CertificateNode& node, const std::string& path, std::vector<Record>& rows) {
  rows.push_back({{"path", path},
                  {"rule", horace::to_string(node.rule)},
                  {"scheme", node.scheme},
                  {"degree", node.degree},
                  {"claimed", big(node.claimed)},
                  {"computed", node.computed ? big(*node.computed) : json()},
                  {"status", horace::to_string(node.status)},
                  {"detail", node.detail}});
  for (std::size_t i = 0; i < node.children.size(); ++i)
    flatten(node.children[i], path + "." + std::to_string(i), rows);
}

void outline(const horace::CertificateNode& node, int depth, std::string& out) {
  out += std::string(2 * depth, ' ') + "[" + horace::to_string(node.status) + "] " + horace::to_string(node.rule) +
         " " + node.scheme + " deg " + std::to_string(node.degree) + " claim " + node.claimed.str();
  if (node.computed) out += " computed " + node.computed->str();
  if (!node.detail.empty()) out += " (" + node.detail + ")";
  out += "\n";
  for (const auto& ch : node.children) outline(ch, depth + 1, out);
}

struct CertifyFlags {
  unsigned n = 5;
  std::string s = "5";
  bool allow_bound_only = false;
  bool no_oracle = false;
};

int cmd_certify(const CertifyFlags& fl, const Common& c, std::ostream& out, std::ostream& err) {
  horace::CertifyOptions opts;
  opts.cap = c.cap;
  opts.sampling = sampling(c);
  opts.direct_oracle = !fl.no_oracle;
  BigInt s;
  try {
    s = BigInt(fl.s);
  } catch (const std::exception&) {
    throw UsageError("--s: not an integer: '" + fl.s + "'");
  }
  const auto root = horace::main_theorem_certify(fl.n, s, opts);
  std::string data;
  if (c.format == "json") {
    data = horace::to_json(root);
  } else if (c.format == "csv") {
    std::vector<Record> rows;
    flatten(root, "0", rows);
    data = render_rows({}, rows, "csv");
  } else {
    outline(root, 0, data);
  }
  emit(data, c, out);
  err << "certify n=" << fl.n << " s=" << s.str() << ": root claim " << root.claimed.str() << ", "
      << horace::to_string(root.status) << " (" << root.size() << " nodes)\n";
  switch (root.status) {
    case horace::Status::Verified: return kMatch;
    case horace::Status::BoundOnly: return fl.allow_bound_only ? kMatch : kMismatch;
    case horace::Status::Failed: break;
  }
  return kMismatch;
}

// ---- lemmas ---------------------------------------------------------------------------------

struct LemmaFlags {
  std::string which;
  unsigned m = 4, x = 0, y = 0, i = 1, n = 4, s = 3;
  unsigned n_min = 5, n_max = 64;
  bool v2 = false;
};

Record lemma_record(const horace::LemmaReport& r) {
  return {{"which", r.lemma},
          {"m", r.instance.m},
          {"x", r.instance.x},
          {"y", r.instance.y},
          {"case", r.covered ? json(r.covered->label) : json("bound-only")},
          {"value", r.value},
          {"formula", big(r.formula)},
          {"lower_bound_ok", r.lower_bound_ok},
          {"pass", r.pass()}};
}

// The lemzero bound on segre_to_fatpoints(n, s) with Π = {a_0 x_0 + a_1 x_1 = 0}, per cell.
Record lemzero_record(unsigned n, unsigned s, const la::SamplingConfig& cfg, bool& pass) {
  if (n < 2) throw GuardViolation("n >= 2", "n = " + std::to_string(n));
  const auto spec = fat::segre_to_fatpoints(n, s);
  std::size_t w = SIZE_MAX, tr = SIZE_MAX, bound = SIZE_MAX, direct = SIZE_MAX, cells = 0, holding = 0;
  for (auto p : cfg.primes) {
    const la::PrimeField f(p);
    for (std::size_t k = 0; k < cfg.trials; ++k) {
      la::Rng rng = la::cell_rng(cfg.seed, p, k);
      la::Rng plane_rng = rng.split(2);
      const auto inst = fat::instantiate(spec, f, rng);
      std::vector<la::Elem> form(n + 1, 0);
      form[0] = plane_rng.uniform(f);
      form[1] = plane_rng.nonzero(f);
      const auto rep = horace::lemzero_bound(inst.scheme, fat::Hyperplane::from_form(f, form));
      w = std::min(w, rep.w_dim);
      tr = std::min(tr, rep.t_dim);
      bound = std::min(bound, rep.bound);
      direct = std::min(direct, rep.direct);
      ++cells;
      holding += rep.holds() ? 1 : 0;
    }
  }
  pass = holding == cells;
  return {{"which", "lemzero"}, {"n", n},         {"s", s},          {"w_dim", w},
          {"t_dim", tr},        {"bound", bound}, {"direct", direct}, {"cells", cells},
          {"cells_holding", holding}, {"pass", pass}};
}

int cmd_lemmas(const LemmaFlags& fl, const Common& c, std::ostream& out) {
  const auto cfg = sampling(c);
  if (fl.which == "residue" || fl.which == "trace") {
    const horace::LemmaInstance inst{fl.m, fl.x, fl.y};
    horace::LemmaReport r;
    if (fl.which == "residue")
      r = fl.v2 ? horace::residue_lemma_v2_check(cfg) : horace::residue_lemma_check(inst, cfg);
    else
      r = horace::trace_lemma_check(inst, cfg);
    emit(render_record(lemma_record(r), c.format), c, out);
    return r.pass() ? kMatch : kMismatch;
  }
  if (fl.which == "fixcomp") {
    const auto r = horace::fixed_component_check(fl.i, fl.m, fl.n, cfg);
    const Record rec{{"which", "fixcomp"}, {"i", r.i}, {"m", r.m}, {"n", r.n},
                     {"branch", r.full ? "full" : "component"}, {"dim", r.dim},
                     {"with_component", r.with_component}, {"with_extra", r.with_extra}, {"pass", r.pass}};
    emit(render_record(rec, c.format), c, out);
    return r.pass ? kMatch : kMismatch;
  }
  if (fl.which == "substitution") {
    const auto r = horace::substitution_check(fl.m, fl.x, cfg);
    const Record rec{{"which", "substitution"}, {"m", fl.m},         {"x", r.x},
                     {"dim_y", r.dim_y},         {"dim_double", r.dim_double}, {"dim_pairs", r.dim_pairs},
                     {"hypothesis", r.hypothesis}, {"conclusion", r.conclusion}, {"pass", r.pass()}};
    emit(render_record(rec, c.format), c, out);
    return r.pass() ? kMatch : kMismatch;
  }
  if (fl.which == "lemzero") {
    bool pass = false;
    const auto rec = lemzero_record(fl.n, fl.s, cfg, pass);
    emit(render_record(rec, c.format), c, out);
    return pass ? kMatch : kMismatch;
  }
  // appendix
  const auto rep = horace::appendix_check(fl.n_min, fl.n_max);
  std::vector<Record> rows;
  for (const auto& row : rep.rows)
    rows.push_back({{"n", row.n}, {"branch", row.branch}, {"label", row.label}, {"detail", row.detail},
                    {"holds", row.holds}});
  const Record meta{{"which", "appendix"}, {"n_min", rep.n_min}, {"n_max", rep.n_max},
                    {"rows", rep.rows.size()}, {"violations", rep.violations}, {"pass", rep.passed()}};
  if (c.format == "text") {
    std::string text = render_record(meta, "text");
    for (const auto& row : rep.rows)
      if (!row.holds) text += "violated: n=" + std::to_string(row.n) + " " + row.branch + " " + row.label + " (" + row.detail + ")\n";
    emit(text, c, out);
  } else {
    json j = to_object(meta);
    if (c.format == "json") {
      j["rows"] = json::array();
      for (const auto& r : rows) j["rows"].push_back(to_object(r));
      emit(j.dump(2) + "\n", c, out);
    } else {
      emit(render_rows(meta, rows, "csv"), c, out);
    }
  }
  return rep.passed() ? kMatch : kMismatch;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--primes", c.primes, "Comma-separated primes (each >= 2^20)");
  sub->add_option("--trials", c.trials, "Samples per prime")->check(CLI::PositiveNumber);
  sub->add_option("--seed", c.seed, "Seed (default: $SEGSEC_SEED, else built-in)");
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--output,-o", c.output, "Write data here instead of stdout");
  sub->add_option("--cap", c.cap, "Largest monomial count computed by rank (certify)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Secant varieties of Segre products of P^1: dimensions, fat points, certificates"};
  app.name("segsec");
  app.require_subcommand(1);

  Common common;
  unsigned sd_n = 4, sd_s = 3;
  auto* secdim = app.add_subcommand("secdim", "Dimension of the s-th secant variety of (P^1)^n");
  secdim->add_option("--n", sd_n, "Number of P^1 factors")->required()->check(CLI::PositiveNumber);
  secdim->add_option("--s", sd_s, "Number of points")->required()->check(CLI::PositiveNumber);
  add_common(secdim, common);

  TableOptions tab;
  auto* table = app.add_subcommand("table", "Defect table over a range of n");
  table->add_option("--n-min", tab.n_min, "Smallest n");
  table->add_option("--n-max", tab.n_max, "Largest n");
  table->add_option("--s", tab.s, "'auto' (1..e*+1), a value, or lo..hi");
  table->add_flag("--transfer", tab.transfer, "Cross-check each row through the fat-point scheme");
  table->add_flag("--certify", tab.certify, "Certify rows with odd s in {e, e*}, n >= 5");
  table->add_flag("--timings", tab.timings, "Add a runtime column (breaks byte-identical output)");
  table->add_flag("--allow-large", tab.allow_large, "Permit n up to 20");
  add_common(table, common);

  std::string spec_path;
  std::optional<unsigned> degree;
  auto* fatpoints = app.add_subcommand("fatpoints", "dim (I_X)_t of a scheme-spec file");
  fatpoints->add_option("--spec", spec_path, "Scheme-spec JSON file")->required();
  fatpoints->add_option("--degree", degree, "Degree t (default: the file's degree)");
  add_common(fatpoints, common);

  CertifyFlags cf;
  auto* certify = app.add_subcommand("certify", "Certificate tree for (n, s), s in {e, e*} odd");
  certify->add_option("--n", cf.n, "n >= 5")->required();
  certify->add_option("--s", cf.s, "s (arbitrary precision)")->required();
  certify->add_flag("--allow-bound-only", cf.allow_bound_only, "Exit 0 when only bound-only leaves remain");
  certify->add_flag("--no-oracle", cf.no_oracle, "Skip the direct rank of the unspecialized scheme");
  add_common(certify, common);

  LemmaFlags lf;
  auto* lemmas = app.add_subcommand("lemmas", "Check one lemma instance or the appendix sweep");
  lemmas->add_option("--which", lf.which, "Which check")
      ->required()
      ->check(CLI::IsMember({"fixcomp", "lemzero", "substitution", "residue", "trace", "appendix"}));
  lemmas->add_option("--m", lf.m, "Ambient dimension m");
  lemmas->add_option("--x", lf.x, "x");
  lemmas->add_option("--y", lf.y, "y");
  lemmas->add_option("--i", lf.i, "i (fixcomp)");
  lemmas->add_option("--n", lf.n, "n (fixcomp, lemzero)");
  lemmas->add_option("--s", lf.s, "s (lemzero)");
  lemmas->add_option("--n-min", lf.n_min, "Appendix range start");
  lemmas->add_option("--n-max", lf.n_max, "Appendix range end");
  lemmas->add_flag("--v2", lf.v2, "Residue case (v.2)");
  add_common(lemmas, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kMatch;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kMatch;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (secdim->parsed()) return cmd_secdim(sd_n, sd_s, common, out, err);
    if (table->parsed()) return cmd_table(tab, common, out, err);
    if (fatpoints->parsed()) return cmd_fatpoints(spec_path, degree, common, out);
    if (certify->parsed()) return cmd_certify(cf, common, out, err);
    if (lemmas->parsed()) return cmd_lemmas(lf, common, out);
  } catch (const GuardViolation& e) {
    err << "error: guard violated: " << e.what() << "\n";
    return kUsage;
  } catch (const SpecParseError& e) {
    err << "error: spec: " << e.what() << "\n";
    return kUsage;
  } catch (const DegenerateSpan& e) {
    err << "error: degenerate span: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kMismatch;
  }
  return kUsage;
}

}  // namespace segsec::cli

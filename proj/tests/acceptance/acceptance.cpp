// End-to-end checks, one PASS/FAIL line per criterion. Exit status is the number of failures.

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "segsec/fat/spec.hpp"
#include "segsec/fat/transfer.hpp"
#include "segsec/horace/appendix.hpp"
#include "segsec/horace/bounds.hpp"
#include "segsec/horace/certificate.hpp"
#include "segsec/horace/lemmas.hpp"
#include "segsec/segre/terracini.hpp"
#include "../support/fuzz.hpp"

namespace {

using namespace segsec;
using nlohmann::json;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;  // keep the first failure
    ok = false;
  }
};

std::uint64_t pow2(unsigned n) { return std::uint64_t{1} << n; }
std::uint64_t e_star(unsigned n) { return (pow2(n) + n) / (n + 1); }

std::string cell(unsigned n, unsigned s) { return "(" + std::to_string(n) + "," + std::to_string(s) + ")"; }

struct CliRun {
  int code = 0;
  std::string out, err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 1. Every cell of every (n, s) with 3 <= n <= 12, s <= e*+1 equals min(2^n-1, s(n+1)-1),
//    except every cell of (4, 3), which is 13.
Outcome defect_table() {
  Outcome o;
  const la::SamplingConfig cfg;
  std::size_t rows = 0, cells = 0;
  for (unsigned n = 3; n <= 12; ++n) {
    const unsigned s_max = static_cast<unsigned>(e_star(n) + 1);
    const auto profile = segre::secant_dim_profile(n, s_max, cfg);
    for (unsigned s = 1; s <= s_max; ++s) {
      const std::uint64_t want = n == 4 && s == 3 ? 13 : std::min(pow2(n) - 1, std::uint64_t{s} * (n + 1) - 1);
      for (auto d : profile[s - 1].cell_dims) {
        ++cells;
        if (d != want) o.fail(cell(n, s) + " cell " + std::to_string(d) + " != " + std::to_string(want));
      }
      ++rows;
    }
  }
  o.detail = o.ok ? std::to_string(rows) + " rows, " + std::to_string(cells) + " cells exact" : o.detail;
  return o;
}

// 2. `secdim --n 4 --s 3`: 13, defect 1, 100 trials x 3 primes, no cell reaches 14.
Outcome exception_pinpoint() {
  Outcome o;
  const auto r = cli({"secdim", "--n", "4", "--s", "3", "--format", "json"});
  if (r.code != 0) o.fail("exit " + std::to_string(r.code));
  const auto j = json::parse(r.out);
  if (j["observed"] != 13) o.fail("observed " + j["observed"].dump());
  if (j["defect"] != 1) o.fail("defect " + j["defect"].dump());
  if (j["trials"] != 100 || j["primes"].size() != 3) o.fail("trials/primes " + j["trials"].dump());
  if (j["cells"] != 300 || j["cells_agreeing"] != 300) o.fail("cells " + j["cells_agreeing"].dump());
  if (j["cell_max"] != 13) o.fail("a cell reached " + j["cell_max"].dump());
  if (o.ok) o.detail = "observed 13, defect 1, 300/300 cells at 13";
  return o;
}

// 3. Multigraded and fat-point dimensions agree per sample, 3 <= n <= 8, 3 seeds.
Outcome transfer() {
  Outcome o;
  std::size_t checked = 0;
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    la::SamplingConfig cfg;
    cfg.seed = la::Seed{seed};
    for (unsigned n = 3; n <= 8; ++n)
      for (unsigned s = 1; s <= e_star(n) + 1; ++s) {
        const auto rep = fat::transfer_consistency(n, s, cfg);
        for (const auto& c : rep.cells) {
          ++checked;
          if (c.multigraded != c.fatpoint)
            o.fail(cell(n, s) + " seed " + std::to_string(seed) + ": " + std::to_string(c.multigraded) +
                   " vs " + std::to_string(c.fatpoint));
        }
      }
  }
  if (o.ok) o.detail = std::to_string(checked) + " sample pairs equal";
  return o;
}

// 4. Lemma values. Expected counts come from the closed forms, evaluated here independently.
Outcome lemma_values() {
  Outcome o;
  const la::SamplingConfig cfg;
  std::size_t checked = 0;
  auto expect = [&](const std::string& what, long long got, long long want) {
    ++checked;
    if (got != want) o.fail(what + ": " + std::to_string(got) + " != " + std::to_string(want));
  };
  auto residue = [&](unsigned m, unsigned x, unsigned y) {
    return static_cast<long long>(horace::residue_lemma_eval({m, x, y}, cfg).value);
  };
  auto trace = [&](unsigned m, unsigned x, unsigned y) {
    return static_cast<long long>(horace::trace_lemma_eval({m, x, y}, cfg).value);
  };
  const auto P = [](unsigned m) { return static_cast<long long>(pow2(m)); };

  for (unsigned m = 3; m <= 8; ++m) expect("residue i m=" + std::to_string(m), residue(m, 0, 0), P(m));
  for (unsigned m = 3; m <= 7; ++m) expect("residue ii m=" + std::to_string(m), residue(m, 1, 0), P(m) - 2 * m);
  expect("residue v.1", residue(4, 1, 1), 3);
  expect("residue v.2", static_cast<long long>(horace::residue_lemma_v2_check(cfg).value), 1);
  expect("residue vi", residue(5, 1, 3), 4);
  for (unsigned m = 5; m <= 7; ++m)
    for (unsigned x = 0; x <= (m - 1) / 2; x += 2)
      for (long long y = 0; y <= (P(m) - 2LL * m * x) / (m + 1); y += 2)
        expect("residue vii " + std::to_string(m) + "," + std::to_string(x) + "," + std::to_string(y),
               residue(m, x, static_cast<unsigned>(y)), P(m) - 2LL * m * x - (m + 1LL) * y);

  for (unsigned m = 3; m <= 7; ++m) expect("trace i m=" + std::to_string(m), trace(m, 1, 0), P(m) - 4);
  expect("trace iv", trace(4, 1, 2), 2);
  expect("trace v", trace(5, 2, 4), 0);
  for (unsigned m = 5; m <= 7; ++m)
    for (unsigned x = 0; x <= (m - 1) / 2; x += 2)
      for (long long y = 0; y <= (P(m) - 4LL * x) / (m + 1); y += 2)
        expect("trace vi " + std::to_string(m) + "," + std::to_string(x) + "," + std::to_string(y),
               trace(m, x, static_cast<unsigned>(y)), P(m) - 4LL * x - (m + 1LL) * y);

  const auto sub = horace::substitution_check(3, 1, cfg);
  expect("substitution dim Y", static_cast<long long>(sub.dim_y), 8);
  expect("substitution pairs", static_cast<long long>(sub.dim_pairs), 6);
  if (!sub.pass()) o.fail("substitution check");

  for (auto [i, m, n] : {std::array<unsigned, 3>{2, 3, 2}, {1, 2, 3}, {3, 4, 3}}) {
    const auto r = horace::fixed_component_check(i, m, n, cfg);
    ++checked;
    if (!r.pass) o.fail("fixed component " + std::to_string(i) + "," + std::to_string(m) + "," + std::to_string(n));
  }
  if (o.ok) o.detail = std::to_string(checked) + " values exact";
  return o;
}

// 5. Castelnuovo and lemzero bounds on 100 random schemes per n = 3..6.
Outcome inequality_fuzz() {
  Outcome o;
  const fat::PrimeField f;
  std::size_t checked = 0;
  for (unsigned n = 3; n <= 6; ++n)
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const la::Rng base(la::Seed{seed});
      const unsigned t = 2 + static_cast<unsigned>(seed % 3);
      auto [x, pi] = testing::castelnuovo_instance(n, t, f, base.split(n));
      const auto c = horace::castelnuovo_bound(x, pi, t);
      if (!c.holds())
        o.fail("castelnuovo n=" + std::to_string(n) + " seed " + std::to_string(seed) + ": " +
               std::to_string(c.direct) + " > " + std::to_string(c.bound));
      auto [y, pi2] = testing::lemzero_instance(n, f, base.split(100 + n));
      const auto l = horace::lemzero_bound(y, pi2);
      if (!l.holds())
        o.fail("lemzero n=" + std::to_string(n) + " seed " + std::to_string(seed) + ": " +
               std::to_string(l.direct) + " > " + std::to_string(l.bound));
      checked += 2;
    }
  if (o.ok) o.detail = std::to_string(checked) + " instances, 0 violations";
  return o;
}

// 6. Certificate roots against the direct rank, computed here through Terracini (a separate
//    code path from the certificate's own fat-point oracle).
Outcome certification() {
  Outcome o;
  const la::SamplingConfig cfg;
  std::string summary;
  for (auto [n, s] : {std::pair<unsigned, unsigned>{5, 5}, {6, 9}, {8, 29}, {9, 51}, {10, 93}}) {
    const auto root = horace::main_theorem_certify(n, horace::BigInt(s), {});
    const auto direct = segre::multigraded_ideal_dim({n, s}, cfg);
    if (root.status != horace::Status::Verified) o.fail(cell(n, s) + " " + horace::to_string(root.status));
    if (root.claimed != horace::BigInt(direct))
      o.fail(cell(n, s) + " claim " + root.claimed.str() + " vs direct " + std::to_string(direct));
    summary += (summary.empty() ? "" : " ") + cell(n, s) + "->" + root.claimed.str();
  }
  const auto guarded = cli({"certify", "--n", "4", "--s", "3"});
  if (guarded.code != 2) o.fail("certify (4,3) exit " + std::to_string(guarded.code));
  if (o.ok) o.detail = summary + ", all verified";
  return o;
}

// 7. Appendix 5..64 in under a second.
Outcome appendix() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto rep = horace::appendix_check(5, 64);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!rep.passed()) o.fail(rep.first_violation()->label + " at n=" + std::to_string(rep.first_violation()->n));
  if (secs >= 1.0) o.fail("took " + std::to_string(secs) + " s");
  if (o.ok) o.detail = std::to_string(rep.rows.size()) + " rows hold";
  return o;
}

// 8. Repeated runs with the same seed write byte-identical files; CSV and JSON agree.
Outcome determinism() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / "segsec_acceptance";
  std::filesystem::create_directories(dir);
  const std::vector<std::vector<std::string>> commands = {
      {"table", "--n-min", "3", "--n-max", "6", "--format", "csv"},
      {"table", "--n-min", "3", "--n-max", "6", "--format", "json"},
      {"secdim", "--n", "5", "--s", "5", "--format", "json", "--seed", "7"},
      {"certify", "--n", "5", "--s", "5", "--format", "json"},
      {"fatpoints", "--spec", SEGSEC_DATA_DIR "/transfer_4_3.json", "--format", "csv"},
      {"lemmas", "--which", "appendix", "--n-max", "64", "--format", "json"},
  };
  for (std::size_t k = 0; k < commands.size(); ++k) {
    std::string first;
    for (int rep = 0; rep < 2; ++rep) {
      const auto path = dir / ("run" + std::to_string(k) + "_" + std::to_string(rep));
      auto args = commands[k];
      args.insert(args.end(), {"--output", path.string()});
      const auto r = cli(args);
      if (r.code != 0) o.fail(args[0] + " exit " + std::to_string(r.code) + ": " + r.err);
      const auto bytes = slurp(path);
      if (bytes.empty()) o.fail(args[0] + " wrote nothing");
      if (rep == 0) first = bytes;
      else if (bytes != first) o.fail(args[0] + " output differs between runs");
    }
  }
  // Same numbers in both renderings of the table.
  const auto csv = slurp(dir / "run0_0");
  const auto rows = json::parse(slurp(dir / "run1_0"))["rows"];
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);  // header
  for (const auto& row : rows) {
    std::getline(lines, line);
    std::ostringstream want;
    want << row["n"] << "," << row["s"] << "," << row["expected"] << "," << row["observed"] << "," << row["defect"];
    if (line.rfind(want.str() + ",", 0) != 0) o.fail("csv/json mismatch: " + line);
  }
  std::filesystem::remove_all(dir);
  if (o.ok) o.detail = std::to_string(commands.size()) + " commands byte-identical, csv == json";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"defect table n=3..12", defect_table},
      {"exception (4,3) pinpoint", exception_pinpoint},
      {"transfer consistency n=3..8", transfer},
      {"lemma value regression", lemma_values},
      {"inequality fuzzing", inequality_fuzz},
      {"certification vs direct rank", certification},
      {"appendix sweep 5..64", appendix},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %zu %s: %s [%.1f s]\n", o.ok ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += o.ok ? 0 : 1;
  }
  return failures;
}

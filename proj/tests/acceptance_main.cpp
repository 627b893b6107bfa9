// Acceptance harness: runs every verification criterion at its pinned
// tolerance and prints one pass/fail line per criterion. Criterion 9 is
// checked the strict way, by running the CLI `verify` twice and comparing
// the JSON reports byte for byte after dropping the timing block.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <json.hpp>

#include "jpotts/verify.hpp"

#ifndef JPOTTS_CLI_PATH
#define JPOTTS_CLI_PATH "jpotts"
#endif

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

const char* kCriterionNames[10] = {
    "",
    "J(2) closed form and lattice expansion at v = 1/2",
    "5F4 representation vs direct cubature",
    "differentiated-identity residual at 10 random alpha",
    "hypergeometric identity suite",
    "Green function closed form and J' = G",
    "modular route: u(q) fixed point, lattice vs cubature",
    "J(5/2) via the eta-product L-value, triple cross-check",
    "Mahler measure identity and bridges",
    "byte-identical verify reports",
};

}  // namespace

int main() {
  jpotts::VerifyOptions opts;
  std::cerr << "running verification suite (criteria 1-8 + determinism probe)...\n";
  jpotts::Report report = jpotts::run_verification(opts, &std::cerr);

  std::map<int, std::pair<int, int>> tally;  // criterion -> (passed, total)
  for (const auto& c : report.checks) {
    auto& t = tally[c.criterion];
    t.second++;
    if (c.passed) t.first++;
  }

  // criterion 9, strict form: two CLI verify runs, byte-compared without
  // the "generated" block. Exit-code semantics are checked on the way.
  bool cli_deterministic = false;
  bool exit_codes_ok = true;
  std::string detail9;
  {
    const std::string cli = JPOTTS_CLI_PATH;
    const int rc_usage = std::system((cli + " no-such-command >/dev/null 2>&1").c_str());
    const int rc_numeric =
        std::system((cli + " j-direct --t 1.5 >/dev/null 2>&1").c_str());
    if (WEXITSTATUS(rc_usage) != 2 || WEXITSTATUS(rc_numeric) != 1) {
      std::printf("warning: CLI exit codes off (usage=%d numeric=%d)\n", WEXITSTATUS(rc_usage),
                  WEXITSTATUS(rc_numeric));
      exit_codes_ok = false;
    }
    const std::string f1 = "acceptance_verify_1.json";
    const std::string f2 = "acceptance_verify_2.json";
    const std::string cmd1 = cli + " --format json --out " + f1 + " verify --quiet";
    const std::string cmd2 = cli + " --format json --out " + f2 + " verify --quiet";
    std::cerr << "running CLI verify twice for the determinism criterion...\n";
    const int rc1 = std::system(cmd1.c_str());
    const int rc2 = std::system(cmd2.c_str());
    if (rc1 != 0 || rc2 != 0) {
      detail9 = "CLI verify exited nonzero";
    } else {
      try {
        auto j1 = nlohmann::json::parse(slurp(f1));
        auto j2 = nlohmann::json::parse(slurp(f2));
        const bool schema_ok = j1.contains("meta") && j1.contains("generated") &&
                               j1["checks"].is_array() && !j1["checks"].empty() &&
                               j1["all_passed"].is_boolean() &&
                               j1["checks"][0].contains("tolerance");
        j1.erase("generated");
        j2.erase("generated");
        const std::string s1 = j1.dump(2);
        const std::string s2 = j2.dump(2);
        cli_deterministic = schema_ok && !s1.empty() && s1 == s2;
        detail9 = cli_deterministic ? "reports identical outside the timing block"
                  : schema_ok       ? "reports differ"
                                    : "report schema incomplete";
      } catch (const std::exception& e) {
        detail9 = std::string("report parse failure: ") + e.what();
      }
    }
  }
  {
    auto& t = tally[9];
    t.second += 2;
    if (cli_deterministic) t.first++;
    if (exit_codes_ok) t.first++;
  }

  int criteria_passed = 0;
  bool all_ok = true;
  for (int crit = 1; crit <= 9; ++crit) {
    const auto& t = tally[crit];
    const bool ok = (t.first == t.second) && t.second > 0;
    if (ok) {
      ++criteria_passed;
    } else {
      all_ok = false;
    }
    std::printf("criterion %d: %s  [%d/%d checks]  %s%s\n", crit, ok ? "PASS" : "FAIL", t.first,
                t.second, kCriterionNames[crit],
                (crit == 9 && !detail9.empty()) ? ("  (" + detail9 + ")").c_str() : "");
  }
  std::printf("ACCEPTANCE: %d/9 criteria passed\n", criteria_passed);

  if (!all_ok) {
    for (const auto& c : report.checks) {
      if (!c.passed) {
        std::printf("  failed %s  %s  residual=%s tol=%s\n", c.id.c_str(), c.name.c_str(),
                    c.residual.c_str(), c.tolerance.c_str());
      }
    }
  }
  return all_ok ? 0 : 1;
}

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "jpotts/eval.hpp"

namespace jpotts {

// One verification check: a computed value against a reference with a pinned
// tolerance. All numeric fields are pre-formatted decimal strings so that
// serialization is deterministic across runs.
struct CheckRecord {
  std::string id;         // e.g. "2.3"
  int criterion = 0;      // 1..9
  std::string name;
  std::string inputs;
  std::string value;
  std::string reference;
  std::string residual;   // measured quantity compared against tolerance
  std::string err_bound;  // claimed numerical error, may be empty
  std::string tolerance;
  bool passed = false;
  long terms = 0;
  long nodes = 0;
  double wall_ms = 0.0;   // excluded from canonical payloads
};

struct Report {
  std::string tool = "jpotts";
  std::string version;
  int digits = 30;
  long lattice_radius = 2000;
  unsigned seed = 42;
  std::vector<CheckRecord> checks;

  bool all_passed() const;
  int criteria_passed() const;   // out of 9
};

struct VerifyOptions {
  int digits = 30;
  long lattice_radius = 2000;
  unsigned seed = 42;
  bool runtime_checks = true;    // enforce the wall-clock limits
};

// Runs the full verification suite (criteria 1..9; criterion 9 is the
// in-process re-evaluation determinism probe -- the test suite additionally
// compares two whole CLI runs byte for byte). Progress lines go to
// `progress` when provided.
Report run_verification(const VerifyOptions& opts, std::ostream* progress = nullptr);

// Deterministic text form of everything except timings. Byte-identical
// across runs with equal options.
std::string canonical_payload(const Report& report);

// Number formatting used for all record fields.
std::string format_real(const Real& x, int digits = 20);
std::string format_double(double x);

}  // namespace jpotts

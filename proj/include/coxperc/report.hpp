#pragma once

// Assembles the full analysis pipeline (nerve, growth series, spectral
// bounds, phase certificate, optional exact-walk oracle and percolation
// sweep) into a single versioned JSON document, with a process exit code
// describing how far the pipeline got.

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "coxperc/coxeter_matrix.hpp"
#include "coxperc/percolation.hpp"

namespace coxperc {

inline constexpr const char* kReportSchemaVersion = "1.0";

// Exit codes shared by run_report and the CLI.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,       // bad arguments or unparseable input
  kExitValidation = 2,  // input parsed but failed semantic validation
  kExitResource = 3,    // a configured resource cap was hit
};

struct ReportOptions {
  // Radius of the Cayley ball used for the bounds section (and reused by the
  // oracle and percolation sections when it is large enough).
  int radius = 4;
  std::size_t max_ball_size = 5'000'000;

  // Number of growth-series coefficients (sphere and ball sizes) to emit.
  int coeffs = 10;

  // Gabber weights for the observed spectral bound; must be positive.
  double c1 = 3.0;
  double c2 = 3.0;
  double c3 = 2.0;

  // Exact walk oracle: verify C_n / a*_n / decomposition up to this n.
  // Negative disables the oracle section entirely.
  int oracle_nmax = 6;

  // Percolation sweep; disabled unless `simulate` is set.
  bool simulate = false;
  std::vector<double> p_grid;  // empty -> 21 evenly spaced points in [0,1]
  int samples = 200;
  std::uint64_t seed = 1;
  PercMode mode = PercMode::bond;
  int workers = 1;
};

struct ReportResult {
  nlohmann::json doc;
  int exit_code = kExitOk;
};

// Runs the whole pipeline on one Coxeter matrix. Never throws for expected
// failure modes: a certificate that cannot be issued becomes an error
// subsection with exit code kExitValidation, and a ball-size cap becomes an
// error subsection with exit code kExitResource.
ReportResult run_report(const CoxeterMatrix& m, const ReportOptions& options);

}  // namespace coxperc

// Config-driven front end shared by the CLI and the python bindings: resolve
// an input (preset name or JSON descriptor file), run one computation, emit a
// deterministic machine-readable report.

#ifndef SMASHHC_RUNNER_HPP
#define SMASHHC_RUNNER_HPP

#include <string>

namespace smashhc {

struct JobConfig {
  std::string input;        // preset name ("pareigis_surrogate(1)") or a path
                            // to a JSON descriptor file
  std::string computation;  // axioms | matched-pair-check | cylindrical-cert |
                            // ez-check | hh | hc | coinvariants |
                            // spectral-rows | spectral-cols | separable-collapse
  std::size_t n_max = 4;
  std::size_t p_max = 3;
  std::size_t q_max = 3;
  std::string w = "cyclic";      // coefficient module for hc / spectral runs
  std::string format = "text";   // json | csv | text
  std::string out_path;          // empty: write to stdout
  int workers = 1;
  std::string field = "rational";  // rational | cyclotomic:N (JSON inputs)
  bool quiet = false;              // suppress progress on stderr
};

struct RunOutcome {
  // 0 = all checks pass / success, 1 = a check failed (report still emitted),
  // 2 = input error
  int exit_code = 0;
  std::string payload;     // the report in the requested format
  std::string diagnostic;  // human diagnostics (stderr)
};

RunOutcome run_job(const JobConfig& config);

}  // namespace smashhc

#endif

#ifndef SQUEEZE_VERIFY_HPP
#define SQUEEZE_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace sqz::verify {

enum class Status { pass, warn, fail };
const char* status_name(Status s);

struct CheckResult {
  std::string name;
  Status status;
  double residual;
  double tolerance;
  std::string notes;
  double seconds;
};

struct Options {
  std::uint64_t seed = 12345;
  int cutoff = -1;  // -1 keeps per-check defaults
  int samples = 200;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  Status overall() const;
};

// suite: all | boson | fermion | grassmann | maxent.
SuiteReport run_suite(const std::string& suite, const Options& opt);

std::string render_text(const SuiteReport& report);
// One line per check: name<TAB>status<TAB>residual<TAB>tolerance.
void write_summary(const SuiteReport& report, const std::string& path);

}  // namespace sqz::verify

#endif

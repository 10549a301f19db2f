#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbitkit/cli/report.hpp"
#include "orbitkit/numtheory.hpp"

namespace orbitkit::cli {

/// Malformed or out-of-domain input; maps to exit status 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable holding the default worker count.
inline constexpr const char* kJobsEnv = "ORBITKIT_JOBS";
unsigned default_jobs();

struct FlVerifyParams {
  u64 p = 3;
  std::string a = "1";
  std::string b = "3";
  std::string delta = "auto";  // "auto" or a rational
  int kappa = 1;
  std::string window = "auto";  // "auto" or a radius >= 0
  bool saturate = true;
  unsigned jobs = 1;
};

struct SweepParams {
  std::vector<u64> primes;
  std::vector<int> valuations;
  int kappa = 1;
  std::string a = "1";
  bool saturate = true;
  unsigned jobs = 1;
};

struct HeckeParams {
  u64 p = 2;
  std::size_t truncation = 64;
};

struct ThetaParams {
  std::vector<double> t{1.0};
  int terms = 50;
  double tolerance = 1e-10;
};

struct PoissonParams {
  std::vector<double> s{1.0};
  int terms = 50;
  double tolerance = 1e-10;
};

struct LseriesParams {
  /// "trivial", "mod4", "kronecker:<D>" or "quadratic:<d>".
  std::string character = "trivial";
  double s = 2.0;
  u64 n_max = 1'000'000;
  u64 p_max = 10'000;
  double tolerance = 1e-4;
};

struct FrobeniusParams {
  i64 d = -1;
  u64 p_max = 1000;
};

struct TraceParams {
  /// Catalog name ("S3", "C12", "A4", "D4", ...) or generators in cycle
  /// notation separated by ';', e.g. "(1 2 3);(1 2)".
  std::string group = "S3";
  /// "all" or generators separated by ';'.
  std::string subgroup = "all";
};

RunReport cmd_fl_verify(const FlVerifyParams& params);
/// fl-verify without the comparison: passes when the counts saturate.
RunReport cmd_orbital(const FlVerifyParams& params);
RunReport cmd_sweep(const SweepParams& params);
RunReport cmd_hecke(const HeckeParams& params);
RunReport cmd_theta(const ThetaParams& params);
RunReport cmd_poisson(const PoissonParams& params);
RunReport cmd_lseries(const LseriesParams& params);
RunReport cmd_frobenius(const FrobeniusParams& params);
RunReport cmd_trace(const TraceParams& params);

/// Reads a sweep grid from a JSON file; keys p, vb, kappa, a, saturate, jobs.
/// jobs is left at 0 when the file does not set it.
SweepParams load_sweep_config(const std::string& path);

int exit_code(const RunReport& report);

/// Full command-line entry point. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            bool err_is_terminal = false);

}  // namespace orbitkit::cli

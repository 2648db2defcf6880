#pragma once

// Command implementations behind the `nestedquiver` tool. Each returns the
// exit code with a JSON report; `run` adds argument parsing and output.
//
// Exit codes: 0 success, 1 verification failure, 2 parse error,
// 3 precondition violation.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "nestedquiver/io.hpp"

namespace nq::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kParseError = 2, kPrecondition = 3 };

struct Outcome {
  int exit_code = kOk;
  Json report;
};

int exit_code_for(ErrorCode code);

/// Worker count from NESTED_QUIVER_THREADS (default 1).
std::size_t thread_count();

/// Relation residuals and stability of an enhanced or Hirzebruch rep.
Outcome cmd_check(const Json& input, const std::optional<EnhThetaParam>& theta);

/// direction: "rep-to-cycle" (EnhRep -> pair) or "cycle-to-rep" (pair -> EnhRep).
Outcome cmd_convert(const std::string& direction, const Json& input, int n,
                    const std::optional<EnhThetaParam>& theta);

struct RoundtripOptions {
  std::optional<std::string> corpus;  // directory of *.json pairs or reps
  unsigned cmax = 3;                  // monomial pairs with c <= cmax
  int n = 1;
  std::size_t random = 0;             // random point-pair instances
  std::uint64_t seed = 1;
  std::size_t threads = 0;            // 0: thread_count()
};

Outcome cmd_roundtrip(const RoundtripOptions& opts);

Outcome cmd_count_fixed(unsigned cp, unsigned c, int charts, int n);

Outcome cmd_monad_check(const Json& input, const std::optional<NuPoint>& nu);

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace nq::cli

#pragma once

#include <string>
#include <string_view>

#include "kzrat/config.hpp"
#include "kzrat/report.hpp"

namespace kzrat {

enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,     // golden mismatch, ODE unsatisfied, no rational witness
  kExitUsage = 2,        // usage or configuration error, insufficient order
  kExitObstruction = 3,  // resonant step without solution
};

struct CommandOptions {
  bool golden = false;
  bool golden_dual = false;
};

struct CommandResult {
  RunReport report;
  std::string text;  // human-readable table for standard output
  int exit_code = kExitOk;
};

/// Series coefficients b_rho..b_{rho+N}, resonance records, recursion check,
/// optional golden comparison.
CommandResult cmd_series(const SystemConfig& config, const CommandOptions& options = {});

/// Series -> reconstruction -> exact ODE check (numeric mode only).
CommandResult cmd_verify(const SystemConfig& config);

/// Local expansion coefficients a_{-1}, a_0..a_N.
CommandResult cmd_expand(const SystemConfig& config);

/// Dispatch by name ("series" | "verify" | "expand").
CommandResult run_command(std::string_view name, const SystemConfig& config, const CommandOptions& options = {});

}  // namespace kzrat

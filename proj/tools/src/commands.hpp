#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "cartan/residual.hpp"
#include "job.hpp"

namespace cartan::cli {

enum ExitCode : int { kPass = 0, kVerificationFailed = 1, kUsageError = 2, kNonConvergence = 3 };

/// Every verification that applies to the job, names prefixed by module.
ResidualReport verifyJob(const Job& job, double tolScale);
/// Flux (and energy for the hyperbolic family) with integer diagnostics.
nlohmann::json fluxJob(const Job& job);
/// y-major CSV grid of |phi|^2, B and the Baptista factor; NaN outside the source chart.
void sampleJob(const Job& job, std::ostream& out);

nlohmann::json reportToJson(const ResidualReport& report);
ResidualReport reportFromJson(const nlohmann::json& j);

/// Full command line (argv[0] included). Writes results to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cartan::cli

#pragma once

#include <string>
#include <vector>

#include "brtk/verify/config.hpp"
#include "brtk/verify/report.hpp"

namespace brtk {

  // Suite names accepted by run_suite, "all" last.
  std::vector<std::string> const& suite_names();

  // Runs one suite (or every suite for "all", in parallel) and returns the
  // sorted report. Throws ValidationError for an unknown suite.
  VerificationReport run_suite(std::string const& name, VerifyConfig const& config);

}  // namespace brtk

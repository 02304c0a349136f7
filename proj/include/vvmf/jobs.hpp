#pragma once

#include <string>

namespace vvmf {

struct JobResult {
  int status = 0;  // 0 ok, 1 check failed, 2 parse error, 3 precondition, 4 internal
  std::string report_json;
};

// Runs one CLI command on JSON input with JSON options ({"order": M,
// "max_pole": P, "bi_order": [Mq, Mz], "component": i, "i": .., "j": ..,
// "block": [[..],..], "weight": "p/2"}). Never throws: errors come back as a
// status plus an error report. VVMF_MAX_ORDER caps all order parameters.
JobResult run_job(const std::string& command, const std::string& input_json,
                  const std::string& options_json);

}  // namespace vvmf

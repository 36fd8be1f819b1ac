#pragma once

#include "axl/ideals.hpp"
#include "axl/idempotents.hpp"
#include "axl/jsonio.hpp"

namespace axl {

struct ReportOptions {
  bool idempotents = false;  // run the enumeration (can be slow for dim >= 6)
  int adjoin_budget = 4;
  int axis_cap = 64;
  int group_cap = 256;
};

// Aggregated per-algebra report with deterministic field ordering.
Json cmd_report(const BuildResult& br, const ReportOptions& opts = {});

// Golden-corpus runner: executes every encoded claim, returns (passed, failed,
// messages). Throws CorpusParseError on malformed input.
struct GoldenResult {
  int passed = 0;
  int failed = 0;
  std::vector<std::string> messages;
};
GoldenResult run_golden(const Json& corpus, bool stop_on_first = false);

}  // namespace axl

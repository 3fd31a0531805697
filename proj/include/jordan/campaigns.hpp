#pragma once

// Seeded verification campaigns behind the jordan-lab command line.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace jordan {

inline constexpr const char* kVersion = "0.1.0";

struct RunConfig {
  std::string command;
  std::string algebra;
  std::optional<int> trials;  // per-command default when absent
  std::uint64_t seed = 0;
  std::optional<double> tolerance;
  std::string out;  // empty: stdout
  std::string format = "json";
  unsigned threads = 0;  // 0: hardware concurrency
};

struct CampaignResult {
  nlohmann::json report;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  bool passed = true;
  std::string verdict;  // one human-readable line
};

/// Names accepted by run_campaign.
const std::vector<std::string>& campaign_commands();
int default_trials(const std::string& command);

/// Throws ParseError, UnsupportedStructure or PreconditionError for
/// configuration problems (unknown command, bad descriptor, refused algebra).
CampaignResult run_campaign(const RunConfig& config);

/// JSON (sorted keys, 2-space indent) or CSV text of a result.
std::string render(const CampaignResult& result, const std::string& format);

/// Runs body(i) for i < count on a small pool; results must be written to
/// per-index slots so that the outcome does not depend on scheduling.
void parallel_for(int count, unsigned threads, const std::function<void(int)>& body);

}  // namespace jordan

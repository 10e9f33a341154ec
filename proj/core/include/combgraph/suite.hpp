#ifndef COMBGRAPH_SUITE_HPP
#define COMBGRAPH_SUITE_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace combgraph {

struct SuiteOptions {
  std::string format = "json";  // "json" (JSON lines) or "csv"
  std::optional<std::uint64_t> seed_override;
  std::optional<int> trials_override;
};

// Runs the suites declared in a config file (see README for the format),
// writing one report line per instance plus a trailing aggregate record.
// Returns the number of failed instances; parse errors throw with a location.
int run_suite_file(const std::string& config_path, std::ostream& out,
                   const SuiteOptions& options = {});
int run_suite_text(const std::string& config_text, std::ostream& out,
                   const SuiteOptions& options = {});

}  // namespace combgraph

#endif

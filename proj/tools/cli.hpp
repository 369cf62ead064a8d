#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "json.hpp"

namespace glab::cli {

inline constexpr const char* kSchema = "glab.report/1";
inline constexpr const char* kVersion = "0.3.0";

enum ExitCode { kPass = 0, kPropertyFailure = 1, kInputError = 2, kCapExceeded = 3 };

// One task invocation. `task` is "<module>.<command>", e.g. "thick.analyze".
struct TaskConfig {
  std::string task;
  std::string group;                            // group spec text, when the task takes one
  std::map<std::string, std::string> sets;      // subset specs by role ("set", "a", "b")
  std::map<std::string, std::int64_t> numbers;  // n, p, cap, max_m, samples, ...
  std::map<std::string, std::string> strings;   // t, sigma, tau, g, cocycle
  std::uint64_t seed = 1;
  std::string format = "json";  // json or csv
  std::string dir;              // base directory for file references

  bool operator==(const TaskConfig&) const = default;
};

nlohmann::json to_json(const TaskConfig& c);
// Throws glab::Error(invalid_parameters) on malformed input.
TaskConfig config_from_json(const nlohmann::json& j);

const std::map<std::string, std::string>& task_summaries();

struct Report {
  nlohmann::json doc;  // schema, toolkit, config, seed, status, results, timings
  int exit_code = kPass;
};

// Never throws for module errors: they become an "error" section and the
// matching exit code.
Report run(const TaskConfig& config, bool with_timings = true);

// JSON text (sorted keys, two-space indent), or CSV of results.rows when the
// task produced a table.
std::string render(const Report& report, const std::string& format);

}  // namespace glab::cli

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cokahler/lie_model.hpp"

namespace cokahler {

using Json = nlohmann::ordered_json;

enum class Command { Classify, Betti, Lefschetz, Verbitsky, Split, Massey, Minimal, MappingTorus, All };

std::optional<Command> parse_command(std::string_view name);
std::string to_string(Command command);

struct RunOptions {
  /// Hypothesis violations become notes instead of failures.
  bool informational = false;
  int max_degree = 3;
  std::optional<int> order;     // overrides the model's automorphism order
  std::optional<int> rotation;  // integral rotation of the first two generators
};

/// COKAHLER_MAX_DEGREE if set (must be a positive integer), else 3.
int default_max_degree();

/// Report for one model:
///   {"model", "dimension", "sections": {...}, "checks": [...], "passed"}
/// Every check names the invariant it comes from and carries a status of
/// "pass", "fail" or "note". Only "fail" makes the report fail.
Json run_model(Command command, const LieModel& model, const RunOptions& options);

/// One worker per model; results merged in model-name order.
Json run(Command command, const std::vector<LieModel>& models, const RunOptions& options);

bool passed(const Json& report);

std::string render_json(const Json& report);
std::string render_text(const Json& report);

}  // namespace cokahler

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lexnet/build.hpp"
#include "lexnet/chat.hpp"
#include "lexnet/errors.hpp"
#include "lexnet/hits.hpp"
#include "lexnet/stages.hpp"

namespace lexnet {

struct ChildInput {
  std::string id;
  std::vector<std::string> files;
};

/// Everything one run needs. Defaults reproduce the standard analysis; a JSON
/// config file and command-line flags both map onto this struct.
struct RunConfig {
  std::vector<ChildInput> children;
  IngestConfig ingest;
  std::string child_speaker = "CHI";
  std::string mother_speaker = "MOT";

  std::vector<MluInterval> mlu_ranges = default_mlu_ranges();
  int window_size = 5;
  int split_threshold = 10;
  WindowPlacement placement = WindowPlacement::Start;
  int smoothing_width = 1;

  std::size_t top_k = 10;
  HitsOptions hits;
  bool self_loops = true;
  std::vector<std::string> shift_words{"a", "the"};
  std::string output_dir;
};

/// Loads a JSON config file. Unknown keys, malformed values, and inconsistent
/// knobs (overlapping ranges, even smoothing, k = 0, ...) all raise
/// ConfigError; files that cannot be read raise InputError.
RunConfig load_config(const std::string& path);

/// Same checks applied to an already-populated config (used after flags are
/// merged in). Throws ConfigError.
void validate_config(const RunConfig& config);

/// Convenience accessors for the staged-analysis knobs.
StagePlanOptions stage_options(const RunConfig& config);
BuildOptions build_options(const RunConfig& config);

}  // namespace lexnet

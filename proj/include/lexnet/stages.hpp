#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexnet/chat.hpp"
#include "lexnet/errors.hpp"

namespace lexnet {

/// Half-open/closed numeric interval for MLU bands, e.g. [1,1.5] or (1.5,2].
struct MluInterval {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_closed = true;
  bool hi_closed = true;

  bool contains(double x) const {
    bool above = lo_closed ? x >= lo : x > lo;
    bool below = hi_closed ? x <= hi : x < hi;
    return above && below;
  }

  std::string to_string() const;
  /// Parses "[a,b]", "(a,b]", "[a,b)" or "(a,b)". Throws ConfigError.
  static MluInterval parse(std::string_view text);

  friend bool operator==(const MluInterval&, const MluInterval&) = default;
};

/// The default developmental bands: [1,1.5], (1.5,2], (2,2.5], (2.5,3], (3,3.5].
std::vector<MluInterval> default_mlu_ranges();

/// Ranges must be well-formed, ascending, and pairwise non-overlapping.
/// Throws ConfigError otherwise.
void validate_ranges(std::span<const MluInterval> ranges);

/// Index of the range containing the MLU value, or nullopt when none does.
/// Validates the ranges first (overlaps are a configuration error).
std::optional<std::size_t> assign_stage(double mlu, std::span<const MluInterval> ranges);

/// A contiguous block of visits selected to represent one stage.
struct StageWindow {
  std::string stage_label;           // "S1", "early S4", ...
  MluInterval mlu_range;
  std::vector<int> file_indices;     // consecutive visit indices
  std::optional<int> span_days;      // last date minus first, when dates exist

  friend bool operator==(const StageWindow&, const StageWindow&) = default;
};

struct StagePlan {
  std::string child_id;
  std::vector<StageWindow> windows;  // ordered by first file index
  std::vector<MluInterval> ranges;

  friend bool operator==(const StagePlan& a, const StagePlan& b) {
    return a.child_id == b.child_id && a.windows == b.windows;
  }
};

enum class WindowPlacement { Start, Center, End };

struct StagePlanOptions {
  std::vector<MluInterval> ranges = default_mlu_ranges();
  int window_size = 5;
  int split_threshold = 10;  // runs at least this long yield early/late windows
  WindowPlacement placement = WindowPlacement::Start;
  int smoothing_width = 1;   // centered moving average over per-visit MLU; 1 = off
  std::string speaker = "CHI";
};

/// Segments a corpus into stage windows.
///
/// Each visit gets the speaker's per-visit MLU (optionally smoothed) and the
/// stage band it falls in; visits outside every band are unlabeled. For each
/// stage, the longest run of consecutively labeled visits is chosen (earliest
/// wins ties). Runs shorter than window_size are kept whole; runs reaching
/// split_threshold yield "early"/"late" windows of window_size files from both
/// ends; anything between yields one window_size-file window at the configured
/// placement. Windows never overlap and are ordered by first file index.
StagePlan plan_stages(const Corpus& corpus, const StagePlanOptions& options = {});

/// Human-auditable tab-separated table, one window per line:
/// label, range, file indices, span_days ("-" when unknown).
std::string plan_to_text(const StagePlan& plan);

/// Parses the plan_to_text format back. Throws ParseError on malformed lines.
StagePlan plan_from_text(std::string_view text, std::string child_id = {});

}  // namespace lexnet

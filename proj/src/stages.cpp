#include "lexnet/stages.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace lexnet {
namespace {

std::string format_bound(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

double parse_bound(std::string_view text) {
  std::string s(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ConfigError("bad interval bound: " + s);
  }
  while (used < s.size() && (s[used] == ' ' || s[used] == '\t')) ++used;
  if (used != s.size()) throw ConfigError("bad interval bound: " + s);
  return v;
}

struct Run {
  std::size_t stage = 0;
  std::size_t begin = 0;  // session indices [begin, end)
  std::size_t end = 0;
  std::size_t length() const { return end - begin; }
};

}  // namespace

std::string MluInterval::to_string() const {
  return std::string(lo_closed ? "[" : "(") + format_bound(lo) + "," + format_bound(hi) +
         (hi_closed ? "]" : ")");
}

MluInterval MluInterval::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s.push_back(c);
  if (s.size() < 5) throw ConfigError("bad interval: " + std::string(text));
  char open = s.front();
  char close = s.back();
  if ((open != '[' && open != '(') || (close != ']' && close != ')'))
    throw ConfigError("bad interval delimiters: " + std::string(text));
  auto comma = s.find(',');
  if (comma == std::string::npos || comma != s.rfind(','))
    throw ConfigError("bad interval: " + std::string(text));
  MluInterval interval;
  interval.lo = parse_bound(s.substr(1, comma - 1));
  interval.hi = parse_bound(s.substr(comma + 1, s.size() - comma - 2));
  interval.lo_closed = open == '[';
  interval.hi_closed = close == ']';
  if (interval.lo > interval.hi ||
      (interval.lo == interval.hi && !(interval.lo_closed && interval.hi_closed)))
    throw ConfigError("empty interval: " + std::string(text));
  return interval;
}

std::vector<MluInterval> default_mlu_ranges() {
  return {
      {1.0, 1.5, true, true},
      {1.5, 2.0, false, true},
      {2.0, 2.5, false, true},
      {2.5, 3.0, false, true},
      {3.0, 3.5, false, true},
  };
}

void validate_ranges(std::span<const MluInterval> ranges) {
  if (ranges.empty()) throw ConfigError("no MLU ranges configured");
  for (const auto& r : ranges)
    if (r.lo > r.hi || (r.lo == r.hi && !(r.lo_closed && r.hi_closed)))
      throw ConfigError("empty interval: " + r.to_string());
  for (std::size_t i = 1; i < ranges.size(); ++i) {
    const auto& a = ranges[i - 1];
    const auto& b = ranges[i];
    if (b.lo < a.lo) throw ConfigError("MLU ranges out of order: " + b.to_string());
    bool disjoint = a.hi < b.lo || (a.hi == b.lo && !(a.hi_closed && b.lo_closed));
    if (!disjoint)
      throw ConfigError("overlapping MLU ranges: " + a.to_string() + " and " + b.to_string());
  }
}

std::optional<std::size_t> assign_stage(double mlu, std::span<const MluInterval> ranges) {
  validate_ranges(ranges);
  for (std::size_t i = 0; i < ranges.size(); ++i)
    if (ranges[i].contains(mlu)) return i;
  return std::nullopt;
}

StagePlan plan_stages(const Corpus& corpus, const StagePlanOptions& options) {
  validate_ranges(options.ranges);
  if (options.window_size < 1) throw ConfigError("window_size must be at least 1");
  if (options.split_threshold < options.window_size)
    throw ConfigError("split_threshold must be at least window_size");
  if (options.smoothing_width < 1 || options.smoothing_width % 2 == 0)
    throw ConfigError("smoothing_width must be odd and at least 1");

  const auto& sessions = corpus.sessions;
  std::vector<std::optional<double>> mlu(sessions.size());
  for (std::size_t i = 0; i < sessions.size(); ++i) {
    try {
      mlu[i] = session_mlu({&sessions[i], 1}, options.speaker);
    } catch (const InputError&) {
      // a visit with no qualifying speech stays unlabeled and breaks runs
    }
  }

  std::vector<std::optional<double>> smoothed = mlu;
  if (options.smoothing_width > 1) {
    int radius = options.smoothing_width / 2;
    for (std::size_t i = 0; i < sessions.size(); ++i) {
      if (!mlu[i]) continue;
      double sum = 0.0;
      int n = 0;
      for (int j = static_cast<int>(i) - radius; j <= static_cast<int>(i) + radius; ++j) {
        if (j < 0 || j >= static_cast<int>(sessions.size()) || !mlu[static_cast<std::size_t>(j)])
          continue;
        sum += *mlu[static_cast<std::size_t>(j)];
        ++n;
      }
      smoothed[i] = sum / n;
    }
  }

  std::vector<std::optional<std::size_t>> stage_of(sessions.size());
  for (std::size_t i = 0; i < sessions.size(); ++i)
    if (smoothed[i]) stage_of[i] = assign_stage(*smoothed[i], options.ranges);

  std::vector<Run> runs;
  for (std::size_t i = 0; i < sessions.size();) {
    if (!stage_of[i]) {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < sessions.size() && stage_of[j] == stage_of[i]) ++j;
    runs.push_back({*stage_of[i], i, j});
    i = j;
  }

  StagePlan plan;
  plan.child_id = corpus.child_id;
  plan.ranges = options.ranges;

  auto make_window = [&](std::string label, std::size_t stage, std::size_t begin,
                         std::size_t count) {
    StageWindow window;
    window.stage_label = std::move(label);
    window.mlu_range = options.ranges[stage];
    for (std::size_t i = begin; i < begin + count; ++i)
      window.file_indices.push_back(sessions[i].visit_index);
    bool dated = true;
    for (std::size_t i = begin; i < begin + count; ++i)
      if (!sessions[i].date) dated = false;
    if (dated && count > 0)
      window.span_days = static_cast<int>(sessions[begin + count - 1].date->day_number() -
                                          sessions[begin].date->day_number());
    plan.windows.push_back(std::move(window));
  };

  std::size_t ws = static_cast<std::size_t>(options.window_size);
  for (std::size_t stage = 0; stage < options.ranges.size(); ++stage) {
    const Run* best = nullptr;
    for (const auto& run : runs)
      if (run.stage == stage && (!best || run.length() > best->length())) best = &run;
    if (!best) continue;

    std::string base = "S" + std::to_string(stage + 1);
    if (best->length() >= static_cast<std::size_t>(options.split_threshold)) {
      make_window("early " + base, stage, best->begin, ws);
      make_window("late " + base, stage, best->end - ws, ws);
    } else if (best->length() > ws) {
      std::size_t offset = 0;
      if (options.placement == WindowPlacement::Center)
        offset = (best->length() - ws) / 2;
      else if (options.placement == WindowPlacement::End)
        offset = best->length() - ws;
      make_window(base, stage, best->begin + offset, ws);
    } else {
      make_window(base, stage, best->begin, best->length());
    }
  }

  std::sort(plan.windows.begin(), plan.windows.end(),
            [](const StageWindow& a, const StageWindow& b) {
              return a.file_indices.front() < b.file_indices.front();
            });
  return plan;
}

std::string plan_to_text(const StagePlan& plan) {
  std::string out = "# stage\trange\tfiles\tspan_days\n";
  for (const auto& window : plan.windows) {
    out += window.stage_label;
    out += '\t';
    out += window.mlu_range.to_string();
    out += '\t';
    for (std::size_t i = 0; i < window.file_indices.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(window.file_indices[i]);
    }
    out += '\t';
    out += window.span_days ? std::to_string(*window.span_days) : "-";
    out += '\n';
  }
  return out;
}

StagePlan plan_from_text(std::string_view text, std::string child_id) {
  StagePlan plan;
  plan.child_id = std::move(child_id);
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      auto tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab == std::string::npos ? std::string::npos
                                                                   : tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (fields.size() != 4) throw ParseError("expected 4 tab-separated fields", line_no);

    StageWindow window;
    window.stage_label = fields[0];
    try {
      window.mlu_range = MluInterval::parse(fields[1]);
    } catch (const ConfigError& e) {
      throw ParseError(e.what(), line_no);
    }
    std::istringstream files{fields[2]};
    int index = 0;
    while (files >> index) window.file_indices.push_back(index);
    if (window.file_indices.empty())
      throw ParseError("stage window has no files: " + fields[0], line_no);
    for (std::size_t i = 1; i < window.file_indices.size(); ++i)
      if (window.file_indices[i] != window.file_indices[i - 1] + 1)
        throw ParseError("file indices not consecutive: " + fields[2], line_no);
    if (fields[3] != "-") {
      try {
        window.span_days = std::stoi(fields[3]);
      } catch (const std::exception&) {
        throw ParseError("bad span_days: " + fields[3], line_no);
      }
    }
    plan.windows.push_back(std::move(window));
  }

  for (const auto& window : plan.windows)
    if (std::find(plan.ranges.begin(), plan.ranges.end(), window.mlu_range) ==
        plan.ranges.end())
      plan.ranges.push_back(window.mlu_range);
  return plan;
}

}  // namespace lexnet

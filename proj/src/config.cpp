#include "lexnet/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "json.hpp"

namespace lexnet {
namespace {

using nlohmann::json;

std::vector<std::string> string_list(const json& value, const std::string& key) {
  if (!value.is_array()) throw ConfigError(key + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : value) {
    if (!item.is_string()) throw ConfigError(key + " must be an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

int int_value(const json& value, const std::string& key) {
  if (!value.is_number_integer()) throw ConfigError(key + " must be an integer");
  return value.get<int>();
}

double double_value(const json& value, const std::string& key) {
  if (!value.is_number()) throw ConfigError(key + " must be a number");
  return value.get<double>();
}

WindowPlacement parse_placement(const std::string& text) {
  if (text == "start") return WindowPlacement::Start;
  if (text == "center") return WindowPlacement::Center;
  if (text == "end") return WindowPlacement::End;
  throw ConfigError("window_placement must be start, center, or end; got " + text);
}

}  // namespace

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open config: " + path);

  json root;
  try {
    root = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("config " + path + ": " + e.what());
  }
  if (!root.is_object()) throw ConfigError("config root must be a JSON object");

  static const std::set<std::string> known = {
      "children",        "speakers",        "child_speaker",     "mother_speaker",
      "exclusion_markers", "unintelligible", "punctuation",      "mlu_ranges",
      "window_size",     "split_threshold", "window_placement",  "mlu_smoothing",
      "k",               "hits_tolerance",  "hits_max_iterations", "self_loops",
      "shift_words",     "output_dir"};
  for (const auto& [key, value] : root.items())
    if (!known.count(key)) throw ConfigError("unknown config key: " + key);

  RunConfig config;
  bool window_size_set = false;
  bool split_threshold_set = false;

  if (root.contains("children")) {
    if (!root["children"].is_array()) throw ConfigError("children must be an array");
    for (const auto& entry : root["children"]) {
      if (!entry.is_object() || !entry.contains("id") || !entry.contains("files"))
        throw ConfigError("each child needs an id and a files list");
      for (const auto& [key, value] : entry.items())
        if (key != "id" && key != "files") throw ConfigError("unknown child key: " + key);
      ChildInput child;
      if (!entry["id"].is_string()) throw ConfigError("child id must be a string");
      child.id = entry["id"].get<std::string>();
      child.files = string_list(entry["files"], "files");
      config.children.push_back(std::move(child));
    }
  }

  if (root.contains("speakers")) config.ingest.speakers = string_list(root["speakers"], "speakers");
  if (root.contains("child_speaker")) {
    if (!root["child_speaker"].is_string()) throw ConfigError("child_speaker must be a string");
    config.child_speaker = root["child_speaker"].get<std::string>();
  }
  if (root.contains("mother_speaker")) {
    if (!root["mother_speaker"].is_string()) throw ConfigError("mother_speaker must be a string");
    config.mother_speaker = root["mother_speaker"].get<std::string>();
  }
  if (root.contains("exclusion_markers"))
    config.ingest.exclusion_markers = string_list(root["exclusion_markers"], "exclusion_markers");
  if (root.contains("unintelligible"))
    config.ingest.unintelligible = string_list(root["unintelligible"], "unintelligible");
  if (root.contains("punctuation"))
    config.ingest.punctuation = string_list(root["punctuation"], "punctuation");

  if (root.contains("mlu_ranges")) {
    config.mlu_ranges.clear();
    for (const auto& text : string_list(root["mlu_ranges"], "mlu_ranges"))
      config.mlu_ranges.push_back(MluInterval::parse(text));
  }
  if (root.contains("window_size")) {
    config.window_size = int_value(root["window_size"], "window_size");
    window_size_set = true;
  }
  if (root.contains("split_threshold")) {
    config.split_threshold = int_value(root["split_threshold"], "split_threshold");
    split_threshold_set = true;
  }
  if (window_size_set && !split_threshold_set) config.split_threshold = 2 * config.window_size;
  if (root.contains("window_placement")) {
    if (!root["window_placement"].is_string())
      throw ConfigError("window_placement must be a string");
    config.placement = parse_placement(root["window_placement"].get<std::string>());
  }
  if (root.contains("mlu_smoothing"))
    config.smoothing_width = int_value(root["mlu_smoothing"], "mlu_smoothing");

  if (root.contains("k")) {
    int k = int_value(root["k"], "k");
    if (k < 1) throw ConfigError("k must be at least 1");
    config.top_k = static_cast<std::size_t>(k);
  }
  if (root.contains("hits_tolerance"))
    config.hits.tolerance = double_value(root["hits_tolerance"], "hits_tolerance");
  if (root.contains("hits_max_iterations"))
    config.hits.max_iterations = int_value(root["hits_max_iterations"], "hits_max_iterations");
  if (root.contains("self_loops")) {
    if (!root["self_loops"].is_boolean()) throw ConfigError("self_loops must be a boolean");
    config.self_loops = root["self_loops"].get<bool>();
  }
  if (root.contains("shift_words"))
    config.shift_words = string_list(root["shift_words"], "shift_words");
  if (root.contains("output_dir")) {
    if (!root["output_dir"].is_string()) throw ConfigError("output_dir must be a string");
    config.output_dir = root["output_dir"].get<std::string>();
  }

  validate_config(config);
  return config;
}

void validate_config(const RunConfig& config) {
  validate_ranges(config.mlu_ranges);
  if (config.window_size < 1) throw ConfigError("window_size must be at least 1");
  if (config.split_threshold < config.window_size)
    throw ConfigError("split_threshold must be at least window_size");
  if (config.smoothing_width < 1 || config.smoothing_width % 2 == 0)
    throw ConfigError("mlu_smoothing must be odd and at least 1");
  if (config.top_k < 1) throw ConfigError("k must be at least 1");
  if (config.hits.tolerance <= 0.0) throw ConfigError("hits_tolerance must be positive");
  if (config.hits.max_iterations < 1)
    throw ConfigError("hits_max_iterations must be at least 1");
  if (config.ingest.speakers.empty()) throw ConfigError("speakers must not be empty");

  auto known_speaker = [&](const std::string& code) {
    return std::find(config.ingest.speakers.begin(), config.ingest.speakers.end(), code) !=
           config.ingest.speakers.end();
  };
  if (!known_speaker(config.child_speaker))
    throw ConfigError("child_speaker " + config.child_speaker + " is not in speakers");
  if (!known_speaker(config.mother_speaker))
    throw ConfigError("mother_speaker " + config.mother_speaker + " is not in speakers");

  std::set<std::string> ids;
  for (const auto& child : config.children) {
    if (child.id.empty()) throw ConfigError("child id must not be empty");
    if (!ids.insert(child.id).second) throw ConfigError("duplicate child id: " + child.id);
    if (child.files.empty()) throw ConfigError("child " + child.id + " has no files");
  }
}

StagePlanOptions stage_options(const RunConfig& config) {
  StagePlanOptions options;
  options.ranges = config.mlu_ranges;
  options.window_size = config.window_size;
  options.split_threshold = config.split_threshold;
  options.placement = config.placement;
  options.smoothing_width = config.smoothing_width;
  options.speaker = config.child_speaker;
  return options;
}

BuildOptions build_options(const RunConfig& config) { return {config.self_loops}; }

}  // namespace lexnet

#include "lexnet/pipeline.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>

#include "json.hpp"

#include "lexnet/analysis.hpp"
#include "lexnet/csv.hpp"
#include "lexnet/pajek.hpp"

namespace lexnet {
namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << content;
  if (!out) throw InputError("failed writing " + path.string());
}

std::string file_tag(const std::string& speaker) {
  std::string tag;
  for (char c : speaker)
    tag += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return tag;
}

std::string label_tag(const std::string& label) {
  std::string tag;
  for (char c : label) tag += c == ' ' ? '_' : c;
  return tag;
}

CsvTable mlu_table(const Corpus& corpus, const std::vector<std::string>& speakers) {
  CsvTable table;
  table.header = {"visit", "speaker", "utterances", "morphemes", "mlu", "mlu_basis"};
  for (const auto& session : corpus.sessions) {
    for (const auto& speaker : speakers) {
      long utterances = 0;
      long morphemes = 0;
      bool word_based = false;
      for (const auto& u : session.utterances)
        if (u.speaker == speaker && u.spontaneous) {
          ++utterances;
          morphemes += u.morphemes;
          if (used_token_fallback(u)) word_based = true;
        }
      std::vector<std::string> row{std::to_string(session.visit_index), speaker,
                                   std::to_string(utterances), std::to_string(morphemes)};
      if (utterances > 0) {
        row.push_back(format_mlu(static_cast<double>(morphemes) /
                                 static_cast<double>(utterances)));
        row.push_back(word_based ? "words" : "mor");
      } else {
        row.push_back("");
        row.push_back("");
      }
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

ordered_json hits_report(const LexicalNetwork& network, const StageWindow& window,
                         const RunConfig& config) {
  ordered_json report;
  report["child"] = network.meta().child_id;
  report["speaker"] = network.meta().speaker;
  report["stage"] = window.stage_label;
  report["k"] = config.top_k;
  report["size"] = network.node_count();
  report["arcs"] = network.arc_count();

  ordered_json hub_list = ordered_json::array();
  ordered_json authority_list = ordered_json::array();
  if (network.node_count() > 0) {
    HitsResult result = hits(network, config.hits);
    report["converged"] = result.converged;
    report["iterations"] = result.iterations;
    if (result.warning) report["warning"] = *result.warning;
    for (const auto& word : top_hubs(result, config.top_k))
      hub_list.push_back({{"word", word}, {"weight", result.hub.at(word)}});
    for (const auto& word : top_authorities(result, config.top_k))
      authority_list.push_back({{"word", word}, {"weight", result.authority.at(word)}});
  } else {
    report["converged"] = true;
    report["iterations"] = 0;
  }
  report["hubs"] = std::move(hub_list);
  report["authorities"] = std::move(authority_list);
  return report;
}

void run_child(const ChildInput& child, const RunConfig& config) {
  Corpus corpus = load_corpus(child.files, config.ingest, child.id);
  if (corpus.sessions.empty()) throw InputError("child " + child.id + " has no sessions");

  fs::path dir = fs::path(config.output_dir) / child.id;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw InputError("cannot create output directory " + dir.string());

  std::string sessions_dump;
  for (const auto& session : corpus.sessions) sessions_dump += session_dump(session);
  write_file(dir / "sessions.tsv", sessions_dump);

  std::vector<std::string> speakers{config.child_speaker};
  if (config.mother_speaker != config.child_speaker)
    speakers.push_back(config.mother_speaker);
  write_file(dir / "mlu.csv", mlu_table(corpus, speakers).to_string());

  BuildOptions build_opts = build_options(config);
  for (const auto& speaker : speakers) {
    auto series = accumulative_series(corpus, speaker, build_opts);
    auto points = growth_trajectory(series);
    write_file(dir / ("growth_" + file_tag(speaker) + ".csv"), to_csv(points).to_string());
  }

  StagePlan plan = plan_stages(corpus, stage_options(config));
  write_file(dir / "stage_plan.tsv", plan_to_text(plan));

  std::vector<std::pair<StageWindow, LexicalNetwork>> child_stages;
  for (const auto& speaker : speakers) {
    auto stages = build_stage_networks(corpus, plan, speaker, build_opts);
    auto summary = stage_summary(corpus, plan, speaker, build_opts);
    write_file(dir / ("stages_" + file_tag(speaker) + ".csv"), to_csv(summary).to_string());

    for (const auto& [window, network] : stages) {
      std::string stem = file_tag(speaker) + "_" + label_tag(window.stage_label);
      write_file(dir / ("stage_" + stem + ".net"), write_pajek(network));
      write_file(dir / ("hits_" + stem + ".json"),
                 hits_report(network, window, config).dump(2) + "\n");
      write_file(dir / ("degrees_" + stem + ".csv"),
                 to_csv(top_degree_report(network, config.top_k)).to_string());
    }
    if (speaker == config.child_speaker) child_stages = stages;

    if (!stages.empty() && speaker == config.child_speaker) {
      auto records = shift_table(stages, config.shift_words, config.top_k, config.hits);
      write_file(dir / ("shift_" + file_tag(speaker) + ".csv"), to_csv(records).to_string());
    } else if (speaker == config.child_speaker) {
      CsvTable empty;
      empty.header = {"word"};
      write_file(dir / ("shift_" + file_tag(speaker) + ".csv"), empty.to_string());
    }
  }

  if (config.mother_speaker != config.child_speaker) {
    auto mother_stages = build_stage_networks(corpus, plan, config.mother_speaker, build_opts);
    write_file(dir / "dyad.csv", to_csv(dyad_compare(child_stages, mother_stages)).to_string());
  }
}

}  // namespace

void run_pipeline(const RunConfig& config) {
  validate_config(config);
  if (config.children.empty()) throw ConfigError("no children configured");
  if (config.output_dir.empty()) throw ConfigError("output_dir must be set");
  for (const auto& child : config.children) run_child(child, config);
}

}  // namespace lexnet

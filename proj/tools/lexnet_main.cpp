// lexnet: turn CHAT-lite transcripts into word-collocation networks and the
// measures derived from them (MLU staging, growth curves, hub/authority
// rankings, egonets, dyad comparisons).

#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "lexnet/analysis.hpp"
#include "lexnet/csv.hpp"
#include "lexnet/pajek.hpp"
#include "lexnet/pipeline.hpp"

namespace {

using namespace lexnet;

struct CliOptions {
  std::string config_path;
  std::string child_id;
  std::vector<std::string> inputs;
};

RunConfig resolve_config(const CliOptions& cli) {
  RunConfig config;
  if (!cli.config_path.empty()) config = load_config(cli.config_path);
  if (!cli.inputs.empty()) {
    ChildInput child;
    child.id = cli.child_id.empty() ? "child" : cli.child_id;
    child.files = cli.inputs;
    config.children = {std::move(child)};
  } else if (!cli.child_id.empty() && config.children.size() > 1) {
    // keep only the named child
    std::vector<ChildInput> kept;
    for (auto& c : config.children)
      if (c.id == cli.child_id) kept.push_back(std::move(c));
    if (kept.empty()) throw ConfigError("no child named " + cli.child_id + " in config");
    config.children = std::move(kept);
  }
  return config;
}

Corpus single_corpus(const RunConfig& config) {
  if (config.children.empty())
    throw ConfigError("no input transcripts; pass --input or a config with children");
  if (config.children.size() > 1)
    throw ConfigError("this subcommand works on one child; select one with --child");
  const auto& child = config.children.front();
  return load_corpus(child.files, config.ingest, child.id);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InputError("cannot write " + out_path);
  out << text;
}

LexicalNetwork load_network(const std::string& path) {
  return network_from_pajek(read_pajek(read_text_file(path)));
}

int dispatch(int argc, char** argv) {
  CLI::App app{"CHAT-lite transcripts to word-collocation networks"};
  app.require_subcommand(1);
  app.fallthrough();

  CliOptions cli;
  app.add_option("--config", cli.config_path, "JSON config file");
  app.add_option("--child", cli.child_id, "child id (names ad-hoc input, or selects from config)");
  app.add_option("--input", cli.inputs, "transcript file or directory (repeatable)")
      ->type_name("PATH");

  // Flag overrides, applied on top of the config file.
  std::optional<int> window_size, split_threshold, smoothing, max_iterations;
  std::optional<std::size_t> top_k;
  std::optional<double> tolerance;
  std::optional<std::string> placement, child_speaker, mother_speaker;
  std::optional<std::vector<std::string>> speakers, shift_words, mlu_ranges;
  bool flag_self_loops = false, flag_no_self_loops = false;
  app.add_option("--k", top_k, "list length for hub/authority/degree reports");
  app.add_option("--window-size", window_size, "files per stage window");
  app.add_option("--split-threshold", split_threshold,
                 "run length that triggers early/late windows");
  app.add_option("--placement", placement, "window placement in long runs: start|center|end");
  app.add_option("--smoothing", smoothing, "odd moving-average width for per-visit MLU");
  app.add_option("--tolerance", tolerance, "hub/authority convergence tolerance");
  app.add_option("--max-iterations", max_iterations, "hub/authority iteration cap");
  app.add_option("--speakers", speakers, "speaker codes to ingest")->delimiter(',');
  app.add_option("--child-speaker", child_speaker, "speaker code for the child");
  app.add_option("--mother-speaker", mother_speaker, "speaker code for the caretaker");
  app.add_option("--shift-words", shift_words, "words tracked by the shift table")
      ->delimiter(',');
  app.add_option("--mlu-ranges", mlu_ranges, "stage bands, e.g. \"[1,1.5]\",\"(1.5,2]\"")
      ->delimiter(';');
  app.add_flag("--self-loops", flag_self_loops, "keep immediate word repetitions as loops");
  app.add_flag("--no-self-loops", flag_no_self_loops, "drop immediate word repetitions");

  std::string out_path;   // -o/--output: file for text results
  std::string out_dir;    // --out: directory for multi-file results

  auto* ingest_cmd = app.add_subcommand("ingest", "parse transcripts, dump utterances as TSV");
  ingest_cmd->add_option("-o,--output", out_path, "write here instead of stdout");

  auto* mlu_cmd = app.add_subcommand("mlu", "per-visit MLU table as CSV");
  mlu_cmd->add_option("-o,--output", out_path, "write here instead of stdout");

  auto* build_cmd = app.add_subcommand("build", "write collocation networks as Pajek files");
  std::string build_mode;
  build_cmd->add_option("--mode", build_mode, "accumulative or stage")->required();
  build_cmd->add_option("--out", out_dir, "output directory")->required();
  std::string build_speaker;
  build_cmd->add_option("--speaker", build_speaker, "speaker code (default: child speaker)");

  auto* hits_cmd = app.add_subcommand("hits", "hub/authority weights of one network");
  std::string net_path;
  hits_cmd->add_option("--net", net_path, "Pajek network file")->required();
  hits_cmd->add_option("-o,--output", out_path, "write here instead of stdout");

  auto* egonet_cmd = app.add_subcommand("egonet", "neighborhood subgraph of one word");
  std::string ego_word, ego_net_path, ego_stage, ego_speaker, ego_direction = "both";
  egonet_cmd->add_option("--word", ego_word, "center word")->required();
  egonet_cmd->add_option("--net", ego_net_path, "Pajek network file");
  egonet_cmd->add_option("--stage", ego_stage, "stage label, e.g. S2 (uses the corpus)");
  egonet_cmd->add_option("--speaker", ego_speaker, "speaker code (default: child speaker)");
  egonet_cmd->add_option("--direction", ego_direction, "both|in|out");
  egonet_cmd->add_option("-o,--output", out_path, "write here instead of stdout");

  auto* shift_cmd = app.add_subcommand("shift", "status of tracked words across stages");
  shift_cmd->add_option("-o,--output", out_path, "write here instead of stdout");

  auto* report_cmd = app.add_subcommand("report", "full per-child artifact tree");
  report_cmd->add_option("--out", out_dir, "output directory");

  auto* export_cmd = app.add_subcommand("export", "re-emit a Pajek file in normalized form");
  std::string export_net;
  export_cmd->add_option("--net", export_net, "Pajek network file")->required();
  export_cmd->add_option("-o,--output", out_path, "write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // prints help for --help (exit 0); anything else is a usage problem
    return app.exit(e) == 0 ? 0 : 2;
  }

  RunConfig config = resolve_config(cli);
  if (top_k) config.top_k = *top_k;
  if (window_size) {
    config.window_size = *window_size;
    if (!split_threshold) config.split_threshold = 2 * *window_size;
  }
  if (split_threshold) config.split_threshold = *split_threshold;
  if (placement) {
    if (*placement == "start") config.placement = WindowPlacement::Start;
    else if (*placement == "center") config.placement = WindowPlacement::Center;
    else if (*placement == "end") config.placement = WindowPlacement::End;
    else throw ConfigError("placement must be start, center, or end; got " + *placement);
  }
  if (smoothing) config.smoothing_width = *smoothing;
  if (tolerance) config.hits.tolerance = *tolerance;
  if (max_iterations) config.hits.max_iterations = *max_iterations;
  if (speakers) config.ingest.speakers = *speakers;
  if (child_speaker) config.child_speaker = *child_speaker;
  if (mother_speaker) config.mother_speaker = *mother_speaker;
  if (shift_words) config.shift_words = *shift_words;
  if (mlu_ranges) {
    config.mlu_ranges.clear();
    for (const auto& text : *mlu_ranges) config.mlu_ranges.push_back(MluInterval::parse(text));
  }
  if (flag_self_loops) config.self_loops = true;
  if (flag_no_self_loops) config.self_loops = false;
  if (!out_dir.empty()) config.output_dir = out_dir;
  validate_config(config);

  if (ingest_cmd->parsed()) {
    Corpus corpus = single_corpus(config);
    std::string dump;
    for (const auto& session : corpus.sessions) {
      for (const auto& warning : session.warnings)
        std::cerr << "lexnet: " << session.source_name << ": " << warning << "\n";
      dump += session_dump(session);
    }
    emit(dump, out_path);
    return 0;
  }

  if (mlu_cmd->parsed()) {
    Corpus corpus = single_corpus(config);
    CsvTable table;
    table.header = {"visit", "speaker", "utterances", "morphemes", "mlu", "mlu_basis"};
    for (const auto& session : corpus.sessions)
      for (const auto& speaker : config.ingest.speakers) {
        long utterances = 0, morphemes = 0;
        bool word_based = false;
        for (const auto& u : session.utterances)
          if (u.speaker == speaker && u.spontaneous) {
            ++utterances;
            morphemes += u.morphemes;
            if (used_token_fallback(u)) word_based = true;
          }
        if (utterances == 0) continue;
        table.rows.push_back({std::to_string(session.visit_index), speaker,
                              std::to_string(utterances), std::to_string(morphemes),
                              format_mlu(static_cast<double>(morphemes) /
                                         static_cast<double>(utterances)),
                              word_based ? "words" : "mor"});
      }
    emit(table.to_string(), out_path);
    return 0;
  }

  if (build_cmd->parsed()) {
    Corpus corpus = single_corpus(config);
    std::string speaker = build_speaker.empty() ? config.child_speaker : build_speaker;
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    std::string tag;
    for (char c : speaker) tag += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));

    if (build_mode == "accumulative") {
      for (const auto& network : accumulative_series(corpus, speaker, build_options(config))) {
        fs::path path = fs::path(out_dir) / ("accumulative_" + tag + "_" +
                                             network.meta().label + ".net");
        std::ofstream out(path, std::ios::binary);
        if (!out) throw InputError("cannot write " + path.string());
        out << write_pajek(network);
      }
    } else if (build_mode == "stage") {
      StagePlan plan = plan_stages(corpus, stage_options(config));
      std::ofstream plan_out(fs::path(out_dir) / "stage_plan.tsv", std::ios::binary);
      plan_out << plan_to_text(plan);
      for (const auto& [window, network] :
           build_stage_networks(corpus, plan, speaker, build_options(config))) {
        std::string label;
        for (char c : window.stage_label) label += c == ' ' ? '_' : c;
        fs::path path = fs::path(out_dir) / ("stage_" + tag + "_" + label + ".net");
        std::ofstream out(path, std::ios::binary);
        if (!out) throw InputError("cannot write " + path.string());
        out << write_pajek(network);
      }
    } else {
      throw ConfigError("build --mode must be accumulative or stage; got " + build_mode);
    }
    return 0;
  }

  if (hits_cmd->parsed()) {
    LexicalNetwork network = load_network(net_path);
    if (network.node_count() == 0) throw InputError("network is empty: " + net_path);
    HitsResult result = hits(network, config.hits);
    nlohmann::ordered_json report;
    report["net"] = net_path;
    report["k"] = config.top_k;
    report["converged"] = result.converged;
    report["iterations"] = result.iterations;
    if (result.warning) report["warning"] = *result.warning;
    auto hubs = nlohmann::ordered_json::array();
    for (const auto& word : top_hubs(result, config.top_k))
      hubs.push_back({{"word", word}, {"weight", result.hub.at(word)}});
    auto authorities = nlohmann::ordered_json::array();
    for (const auto& word : top_authorities(result, config.top_k))
      authorities.push_back({{"word", word}, {"weight", result.authority.at(word)}});
    report["hubs"] = std::move(hubs);
    report["authorities"] = std::move(authorities);
    emit(report.dump(2) + "\n", out_path);
    return 0;
  }

  if (egonet_cmd->parsed()) {
    EgonetDirection direction = EgonetDirection::Both;
    if (ego_direction == "in") direction = EgonetDirection::In;
    else if (ego_direction == "out") direction = EgonetDirection::Out;
    else if (ego_direction != "both")
      throw ConfigError("direction must be both, in, or out; got " + ego_direction);

    LexicalNetwork network;
    if (!ego_net_path.empty()) {
      network = load_network(ego_net_path);
    } else if (!ego_stage.empty()) {
      Corpus corpus = single_corpus(config);
      StagePlan plan = plan_stages(corpus, stage_options(config));
      std::string speaker = ego_speaker.empty() ? config.child_speaker : ego_speaker;
      bool found = false;
      for (auto& [window, net] :
           build_stage_networks(corpus, plan, speaker, build_options(config)))
        if (window.stage_label == ego_stage) {
          network = std::move(net);
          found = true;
          break;
        }
      if (!found) throw InputError("no stage labeled " + ego_stage + " in the plan");
    } else {
      throw ConfigError("egonet needs --net FILE or --stage LABEL");
    }
    if (!network.has_node(ego_word))
      throw InputError("word not in network: " + ego_word);
    emit(write_pajek(egonet(network, ego_word, direction).network), out_path);
    return 0;
  }

  if (shift_cmd->parsed()) {
    Corpus corpus = single_corpus(config);
    StagePlan plan = plan_stages(corpus, stage_options(config));
    auto stages = build_stage_networks(corpus, plan, config.child_speaker,
                                       build_options(config));
    CsvTable table;
    if (stages.empty()) {
      table.header = {"word"};
    } else {
      auto records = shift_table(stages, config.shift_words, config.top_k, config.hits);
      table = to_csv(records);
    }
    emit(table.to_string(), out_path);
    return 0;
  }

  if (report_cmd->parsed()) {
    if (config.output_dir.empty())
      throw ConfigError("report needs an output directory (--out or output_dir in the config)");
    run_pipeline(config);
    return 0;
  }

  if (export_cmd->parsed()) {
    emit(write_pajek(load_network(export_net)), out_path);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const ConfigError& e) {
    std::cerr << "lexnet: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "lexnet: " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    std::cerr << "lexnet: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "lexnet: internal error: " << e.what() << "\n";
    return 3;
  }
}

#pragma once

#include "lexnet/config.hpp"

namespace lexnet {

/// Runs the whole corpus-to-report pipeline and writes one directory per
/// child under config.output_dir:
///   sessions.tsv                     normalized utterance dump
///   mlu.csv                          per-visit MLU for child and mother
///   growth_<spk>.csv                 accumulative growth trajectory
///   stage_plan.tsv                   the stage windows (plan_to_text format)
///   stages_<spk>.csv                 per-stage summary table
///   stage_<spk>_<label>.net          stage network, Pajek format
///   hits_<spk>_<label>.json          top-k hub/authority lists
///   degrees_<spk>_<label>.csv        top-k in/out degree lists
///   shift_<spk>.csv                  status of the tracked words per stage
///   dyad.csv                         child vs mother stage measures
/// Output depends only on the inputs and the config; a second run over the
/// same data produces byte-identical files.
void run_pipeline(const RunConfig& config);

}  // namespace lexnet

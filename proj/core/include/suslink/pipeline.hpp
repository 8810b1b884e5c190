#pragma once

#include "suslink/invariants.hpp"
#include "suslink/nielsen_graph.hpp"
#include "suslink/plumbing_tree.hpp"
#include "suslink/resolution.hpp"
#include "suslink/waldhausen_graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace suslink {

enum class StageId { input = 0, step1, nielsen, power, waldhausen, plumbing, invariants };

const char* stage_id_name(StageId s);
StageId parse_stage_id(const std::string& name);

struct PipelineOptions {
  Integer r = 2;
  bool keep_arrows = false;
  bool blow_down = false;
  InputSide side = InputSide::fbar_g;
  bool compare_holomorphic = true;
  friend bool operator==(const PipelineOptions&, const PipelineOptions&) = default;
};

// The f.g-bar run set against the holomorphic product fg + z^r on the same graph.
struct HolomorphicComparison {
  bool computed = false;
  bool links_coincide = false;
  FibreEuler fibre_fbar_g;
  FibreEuler fibre_fg;
  std::string failure;
};

// Everything the pipeline has produced so far. Each stage fills one slot;
// the CLI serializes the bundle between subcommands.
struct Bundle {
  PipelineOptions options;
  std::optional<ResolutionGraph> input;
  std::optional<MultPlumbing> step1;
  std::optional<NielsenGraph> nielsen;
  std::optional<NielsenGraph> powered;
  std::optional<WaldhausenGraph> waldhausen;
  std::optional<PlumbingTree> synthesized;
  std::optional<PlumbingTree> tree;
  std::optional<ObstructionReport> report;
  std::optional<HolomorphicComparison> comparison;
  std::vector<std::string> notes;

  StageId reached() const;
};

// Runs every missing stage up to and including target.
void advance(Bundle& b, StageId target);

Bundle run_pipeline(const ResolutionGraph& graph, const PipelineOptions& options);

}  // namespace suslink

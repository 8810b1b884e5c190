#include "suslink/pipeline.hpp"

#include "suslink/error.hpp"
#include "suslink/mero.hpp"
#include "suslink/nielsen.hpp"
#include "suslink/power.hpp"
#include "suslink/synth.hpp"

#include <algorithm>

namespace suslink {

const char* stage_id_name(StageId s) {
  switch (s) {
    case StageId::input: return "input";
    case StageId::step1: return "step1";
    case StageId::nielsen: return "nielsen";
    case StageId::power: return "power";
    case StageId::waldhausen: return "waldhausen";
    case StageId::plumbing: return "plumbing";
    case StageId::invariants: return "invariants";
  }
  return "?";
}

StageId parse_stage_id(const std::string& name) {
  for (int i = 0; i <= static_cast<int>(StageId::invariants); ++i)
    if (name == stage_id_name(static_cast<StageId>(i))) return static_cast<StageId>(i);
  throw Error(Stage::io, "unknown stage '" + name + "'");
}

StageId Bundle::reached() const {
  if (report) return StageId::invariants;
  if (tree) return StageId::plumbing;
  if (waldhausen) return StageId::waldhausen;
  if (powered) return StageId::power;
  if (nielsen) return StageId::nielsen;
  if (step1) return StageId::step1;
  return StageId::input;
}

namespace {

bool has_both_germs(const ResolutionGraph& g) {
  bool f = std::any_of(g.arrows.begin(), g.arrows.end(), [](const auto& a) { return a.side == Germ::f; });
  bool gg = std::any_of(g.arrows.begin(), g.arrows.end(), [](const auto& a) { return a.side == Germ::g; });
  return f && gg;
}

HolomorphicComparison compare_with_product(const Bundle& b) {
  HolomorphicComparison c;
  try {
    PipelineOptions opt = b.options;
    opt.side = InputSide::sum;
    opt.blow_down = false;
    opt.compare_holomorphic = false;
    Bundle hol = run_pipeline(*b.input, opt);
    c.fibre_fbar_g = fibre_euler(*b.step1);
    c.fibre_fg = fibre_euler(*hol.step1);
    c.links_coincide = isomorphic(blow_down(*b.synthesized), blow_down(*hol.synthesized));
    c.computed = true;
  } catch (const Error& e) {
    c.failure = e.what();
  }
  return c;
}

}  // namespace

void advance(Bundle& b, StageId target) {
  auto want = [&](StageId s) { return static_cast<int>(target) >= static_cast<int>(s); };
  if (want(StageId::step1) && !b.step1) {
    if (!b.input) throw Error(Stage::step1, "no resolution graph to start from");
    b.step1 = subtract_and_normalize(*b.input, b.options.side);
  }
  if (want(StageId::nielsen) && !b.nielsen) b.nielsen = build_nielsen(*b.step1);
  if (want(StageId::power) && !b.powered) {
    if (b.options.r < 1) throw Error(Stage::power, "r must be at least 1");
    b.powered = power_nielsen(*b.nielsen, b.options.r);
  }
  if (want(StageId::waldhausen) && !b.waldhausen) b.waldhausen = mero_waldhausen(*b.powered);
  if (want(StageId::plumbing) && !b.tree) {
    b.synthesized = synth_plumbing(*b.waldhausen, b.options.keep_arrows);
    b.tree = b.options.blow_down ? blow_down(*b.synthesized) : *b.synthesized;
  }
  if (want(StageId::invariants) && !b.report) {
    b.report = obstruction_report(*b.tree, *b.step1, b.options.r);
    if (!b.report->numerically_gorenstein) b.notes.push_back("not numerically Gorenstein: K has non-integral entries");
    if (!b.report->ls.applicable) b.notes.push_back("Laufer-Steenbrink congruence not applicable");
    else if (!b.report->ls.congruent)
      b.notes.push_back("Laufer-Steenbrink congruence fails: chi(F) = " + b.report->chi_fibre_F.str() + " vs chi + K^2 = " +
                        b.report->ls.chi_plus_k2.str() + " (mod 12)");
    if (b.options.side == InputSide::fbar_g && b.options.compare_holomorphic && b.input && has_both_germs(*b.input)) {
      b.comparison = compare_with_product(b);
      const auto& c = *b.comparison;
      if (c.computed && c.links_coincide) {
        std::string note = "link coincides with that of the holomorphic germ fg + z^" + b.options.r.str() +
                           "; Milnor fibre genus " + c.fibre_fbar_g.genus.str() + " (f.g-bar) vs " +
                           c.fibre_fg.genus.str() + " (fg)";
        if (c.fibre_fbar_g.genus != c.fibre_fg.genus) note += ", so the open books are not equivalent";
        b.notes.push_back(note);
      }
    }
  }
}

Bundle run_pipeline(const ResolutionGraph& graph, const PipelineOptions& options) {
  Bundle b;
  b.options = options;
  b.input = graph;
  advance(b, StageId::invariants);
  return b;
}

}  // namespace suslink

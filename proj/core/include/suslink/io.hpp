#pragma once

#include "suslink/pipeline.hpp"

#include <string>

namespace suslink {

inline constexpr const char* kSchema = "suslink/1";

std::string to_json(const Bundle& b);
Bundle bundle_from_json(const std::string& text);

std::string to_json(const PlumbingTree& tree);
PlumbingTree tree_from_json(const std::string& text);

std::string to_dot(const MultPlumbing& mp, const std::string& name = "step1");
std::string to_dot(const NielsenGraph& n, const std::string& name = "nielsen");
std::string to_dot(const WaldhausenGraph& w, const std::string& name = "waldhausen");
std::string to_dot(const PlumbingTree& t, const std::string& name = "plumbing");

// Text and DOT renderings of one stage of a bundle, or of every stage when
// stage is invariants and full is set.
std::string to_text(const Bundle& b, StageId stage, bool full);
std::string to_dot(const Bundle& b, StageId stage, bool full);

std::string to_text(const MultPlumbing& mp);
std::string to_text(const NielsenGraph& n);
std::string to_text(const WaldhausenGraph& w);
std::string to_text(const PlumbingTree& t);
std::string to_text(const ObstructionReport& rep);

}  // namespace suslink

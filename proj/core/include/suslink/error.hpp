#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace suslink {

enum class Stage { core, input, step1, nielsen, power, waldhausen, plumbing, invariants, io };

const char* stage_name(Stage s);

// Every pass reports failures through this type: the stage and the ids of the
// offending vertices (resolution ids where available) travel with the message.
class Error : public std::runtime_error {
 public:
  Error(Stage stage, const std::string& what, std::vector<int> ids = {});

  Stage stage() const { return stage_; }
  const std::vector<int>& ids() const { return ids_; }
  const std::string& detail() const { return detail_; }

 private:
  Stage stage_;
  std::vector<int> ids_;
  std::string detail_;
};

}  // namespace suslink

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace vawrt {

/// A problem file shipped under problems/ and compiled in.
struct Preset {
  std::string id;
  std::string text;
};

/// Sorted by id.
const std::vector<Preset>& presets();
const Preset* find_preset(std::string_view id);

}  // namespace vawrt

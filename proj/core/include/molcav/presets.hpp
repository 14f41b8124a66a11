#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "molcav/sweep.hpp"

namespace molcav {

struct PresetInfo {
  std::string name;
  std::string summary;
};

/// All figure presets in display order.
std::vector<PresetInfo> list_presets();

/// Sweep spec reproducing a figure panel's parameter set. Resolution defaults
/// to 101 points per axis unless the panel is a discrete family of curves.
/// Throws UnknownPreset.
SweepSpec figure_preset(std::string_view name);

}  // namespace molcav

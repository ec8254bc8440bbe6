#pragma once

#include <string>
#include <vector>

#include "firerisk/scene.hpp"

namespace firerisk {

// Scene manifest: one `key = value` pair per line, `#` comments and blank
// lines ignored. Keys:
//
//   scene.<n>.date = YYYY-MM-DD          (required)
//   scene.<n>.cloud = none|partial|full  (default none)
//   scene.<n>.mission = <text>           (optional)
//   scene.<n>.band.<BAND> = <path>       (ASCII grid, e.g. band.B8)
//   scene.<n>.cloud_mask = <path>        (optional; nonzero or nodata = cloud)
//
// Paths are resolved against the manifest's directory. Scenes come back
// date-ascending; duplicate dates are an error.
std::vector<Scene> load_scene_manifest(const std::string& path);

}  // namespace firerisk

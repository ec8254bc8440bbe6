#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "firerisk/grid.hpp"

namespace firerisk {

// Area of interest: either a polygon in map coordinates (implicitly closed,
// at least 3 distinct finite vertices) or a ready-made boolean mask.
struct AreaOfInterest {
    std::string name;
    std::vector<std::array<double, 2>> polygon;
    std::optional<MaskGrid> mask;

    bool is_polygon() const { return !polygon.empty(); }

    // Throws Error when neither/both shapes are set or the polygon is
    // degenerate.
    void validate() const;
};

AreaOfInterest aoi_from_polygon(std::string name,
                                std::vector<std::array<double, 2>> vertices);
AreaOfInterest aoi_from_mask(std::string name, MaskGrid mask);

// Polygon form: a cell is selected iff its center is inside by the even-odd
// rule; centers on the boundary follow the half-open convention (left/bottom
// edges in, right/top out), so adjacent polygons never claim a cell twice.
// Mask form: returned as-is after a geometry compatibility check.
MaskGrid rasterize_aoi(const AreaOfInterest& aoi, const GridGeometry& geometry);

// AOI file: JSON object with "name" and either "polygon": [[x, y], ...] or
// "mask": <path to an ASCII grid, resolved against the file's directory>.
AreaOfInterest load_aoi(const std::string& path);

void save_aoi(const AreaOfInterest& aoi, const std::string& path);

}  // namespace firerisk

#pragma once

#include <span>

#include "firerisk/grid.hpp"
#include "firerisk/indices.hpp"

namespace firerisk {

enum class MaskSource { Vegetation, Cloud, Aoi, Combined };

struct PixelMask {
    MaskGrid grid;
    MaskSource source = MaskSource::Combined;
};

// True where the NDVI cell is valid and strictly above the threshold;
// keeps the analysis on vegetation and drops artificial surfaces.
PixelMask vegetation_mask(const IndexGrid& ndvi, double threshold);

// Cellwise AND. A single mask passes through unchanged; two or more give
// provenance Combined. Empty input or mixed geometries throw.
PixelMask combine_masks(std::span<const PixelMask> masks);

// Cells where the mask is false become nodata; values never change.
RasterGrid apply_mask(const RasterGrid& grid, const PixelMask& mask);

}  // namespace firerisk

#pragma once

#include <cstddef>

#include "firerisk/grid.hpp"

namespace firerisk {

enum class IndexKind { NDWI, NDVI };

// Denominators smaller than this in magnitude mean no usable signal in
// either band; the cell becomes nodata instead of a fabricated extreme.
inline constexpr double kDegenerateDenominator = 1e-12;

// Normalized-difference index grid. Valid cells lie in [-1, 1] whenever both
// input reflectances are non-negative; negative inputs (possible after
// atmospheric correction) are computed normally but counted so callers can
// surface a warning.
struct IndexGrid {
    RasterGrid grid;
    IndexKind kind = IndexKind::NDWI;
    std::size_t negative_input_cells = 0;
};

// NDWI = (nir - swir) / (nir + swir), per cell. Both grids must share one
// geometry (the 20 m common grid in the Sentinel-2 workflow). A cell is
// nodata when either input is nodata or the denominator is degenerate.
IndexGrid compute_ndwi(const RasterGrid& nir, const RasterGrid& swir);

// NDVI = (nir - red) / (nir + red), same rules.
IndexGrid compute_ndvi(const RasterGrid& nir, const RasterGrid& red);

}  // namespace firerisk

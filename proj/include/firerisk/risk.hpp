#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "firerisk/indices.hpp"
#include "firerisk/masking.hpp"
#include "firerisk/timeseries.hpp"

namespace firerisk {

// Thresholds of the classification rule. NDWI at or below ndwi_threshold
// marks a vegetation pixel (or an AOI mean) as fire-prone.
struct RiskConfig {
    double ndwi_threshold = 0.2;
    double ndvi_threshold = 0.2;

    void validate() const;  // both thresholds must lie in [-1, 1]
};

enum class RiskClass : std::uint8_t { NotAtRisk = 0, AtRisk = 1, Unclassified = 2 };

// Per-pixel three-way classification. Unclassified appears exactly where
// the NDWI is nodata or the vegetation mask is false. Carries the threshold
// it was built with so rendering stays consistent with the classes.
struct RiskMap {
    GridGeometry geometry;
    std::vector<RiskClass> classes;
    double ndwi_threshold = 0.2;

    RiskClass at(int row, int col) const {
        return classes[static_cast<std::size_t>(row) * geometry.n_cols + col];
    }
};

// Vegetation cell with NDWI <= threshold -> AtRisk (the boundary is
// inclusive); above -> NotAtRisk; everything else Unclassified.
RiskMap classify_risk(const IndexGrid& ndwi, const PixelMask& vegetation,
                      const RiskConfig& cfg);

// Same rule applied to an AOI's mean NDWI at one date of its series.
// The date must be present.
RiskClass classify_aoi(const IndexSeries& series, const Date& date, const RiskConfig& cfg);

// Color map: AtRisk cells on a linear yellow(255,255,0) to red(255,0,0)
// ramp as NDWI falls from the threshold to -1, NotAtRisk gray
// (180,180,180), Unclassified black.
void render_risk_ppm(const IndexGrid& ndwi, const RiskMap& map, const std::string& path);

// Binary map: AtRisk 255, NotAtRisk 0, Unclassified 127.
void render_binary_pgm(const RiskMap& map, const std::string& path);

// ASCII-grid persistence of a risk map: AtRisk 1, NotAtRisk 0,
// Unclassified nodata.
RasterGrid risk_to_grid(const RiskMap& map);
RiskMap risk_from_grid(const RasterGrid& grid, double ndwi_threshold = 0.2);

}  // namespace firerisk

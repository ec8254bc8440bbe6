#pragma once

#include <span>
#include <string>
#include <vector>

#include "firerisk/aoi.hpp"
#include "firerisk/masking.hpp"
#include "firerisk/scene.hpp"

namespace firerisk {

struct ZonalStats {
    double mean = 0.0;
    std::size_t count = 0;
};

// Mean of the valid cells selected by the mask, accumulated with pairwise
// summation so the result does not depend on how the work is partitioned.
// Zero contributing cells raise EmptyZoneError rather than producing NaN.
ZonalStats zonal_mean(const RasterGrid& grid, const PixelMask& mask);

struct SeriesPoint {
    Date date;
    double mean_ndwi = 0.0;
    std::size_t valid_pixels = 0;
    CloudCover cloud = CloudCover::None;
};

// Per-AOI NDWI trend: one point per usable scene, dates strictly increasing.
struct IndexSeries {
    std::string aoi_name;
    std::vector<SeriesPoint> points;
};

// For each scene: bring B4/B8/B11 to the common grid, compute NDVI and NDWI,
// restrict to AOI and vegetation and cloud-free (when a cloud mask is
// present), and take the zonal NDWI mean. Scenes whose combined mask selects
// nothing are skipped with a notice on stderr. Scenes must be date-ordered
// with unique dates and carry all three bands.
IndexSeries build_series(std::span<const Scene> scenes, const AreaOfInterest& aoi,
                         double ndvi_threshold);

// CSV: header `aoi,date,mean_ndwi,valid_pixels,cloud_cover`, dates ISO-8601,
// means with 6 decimals, LF line endings.
void export_series_csv(std::span<const IndexSeries> series, const std::string& path);

std::vector<IndexSeries> parse_series_csv(const std::string& path);

}  // namespace firerisk

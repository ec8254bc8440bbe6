#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "firerisk/aoi.hpp"
#include "firerisk/scene.hpp"

namespace firerisk {

// Reflectance triple for the three bands the workflow consumes.
struct BandLevels {
    double b4 = 0.0;
    double b8 = 0.0;
    double b11 = 0.0;
};

// Post-ignition behavior: levels jump to `initial` on the ignition date and
// decay exponentially toward `final_levels` with time constant tau_days,
// which drives the NDWI downward the way a drying burn scar does.
struct BurnProfile {
    BandLevels initial;
    BandLevels final_levels;
    double tau_days = 30.0;
};

struct RegionProfile {
    AreaOfInterest aoi;
    BandLevels baseline;
    std::optional<Date> ignition_date;
    BurnProfile burn;
};

// Recipe for a deterministic multi-temporal dataset: regions with temporal
// reflectance profiles on a common grid, optional per-cell Gaussian noise
// clamped to keep reflectances non-negative.
struct SynthSpec {
    GridGeometry geometry;  // the common (20 m analogue) grid
    std::vector<Date> dates;
    std::vector<CloudCover> cloud;  // parallel to dates; empty means all none
    std::vector<RegionProfile> regions;
    BandLevels background{0.3, 0.3, 0.3};  // cells outside every region
    double noise_sigma = 0.0;
    std::uint64_t seed = 0;

    void validate() const;
};

// Reflectance levels of a region at a date.
BandLevels region_levels_at(const RegionProfile& region, const Date& date);

// B4/B8 grid geometry: half the cell size of the common grid, mirroring the
// native 10 m vs 20 m Sentinel-2 layout, so the pipeline's resampling path
// is exercised.
GridGeometry fine_geometry(const GridGeometry& common);

// One scene per date, bitwise deterministic for a fixed seed. B4 and B8 are
// produced at the fine grid (each fine cell takes its parent common cell's
// region), B11 at the common grid. Overlapping regions are rejected: the
// ground truth would be ambiguous.
std::vector<Scene> generate_dataset(const SynthSpec& spec);

// 1 over cells of regions carrying an ignition date, 0 elsewhere; all valid.
RasterGrid generate_gt(const SynthSpec& spec);

// JSON spec file, see README for the schema.
SynthSpec load_synth_spec(const std::string& path);

// Writes band grids, scene manifest, ground truth, one AOI file per region
// and a metadata.json recording the seed and noise algorithm.
void write_dataset(const SynthSpec& spec, const std::string& out_dir);

}  // namespace firerisk

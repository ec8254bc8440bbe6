#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "firerisk/date.hpp"
#include "firerisk/grid.hpp"

namespace firerisk {

// Sentinel-2 band labels relevant to this workflow.
enum class BandId { B2, B3, B4, B5, B6, B7, B8, B8A, B11, B12 };

std::string to_string(BandId id);
std::optional<BandId> band_from_string(std::string_view text);

struct BandDescriptor {
    BandId id;
    double native_resolution_m;
    double center_wavelength_um;
};

const BandDescriptor& band_descriptor(BandId id);

enum class CloudCover { None, Partial, Full };

std::string to_string(CloudCover c);
std::optional<CloudCover> cloud_cover_from_string(std::string_view text);

// One dated acquisition: co-registered bands at their native resolutions
// plus cloud metadata. The optional cloud mask (true = cloud) lives at the
// scene's common grid.
struct Scene {
    Date date;
    std::string mission;  // e.g. "S-2A"
    CloudCover cloud = CloudCover::None;
    std::map<BandId, RasterGrid> bands;
    std::optional<MaskGrid> cloud_mask;

    const RasterGrid& band(BandId id) const;  // throws naming date and band
    bool has_band(BandId id) const { return bands.count(id) != 0; }
};

// Geometry of the coarsest of the required bands; every finer band must
// share the origin and nest by an integer factor, or this throws.
GridGeometry common_geometry(const Scene& scene, std::span<const BandId> required);

// The band brought onto the target geometry by block-mean aggregation
// (identity when already there). Upsampling is not supported.
RasterGrid band_at(const Scene& scene, BandId id, const GridGeometry& target);

}  // namespace firerisk

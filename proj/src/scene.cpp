#include "firerisk/scene.hpp"

#include <array>
#include <cmath>

namespace firerisk {

namespace {

constexpr std::array<BandDescriptor, 10> kBands = {{
    {BandId::B2, 10.0, 0.490},
    {BandId::B3, 10.0, 0.560},
    {BandId::B4, 10.0, 0.665},
    {BandId::B5, 20.0, 0.705},
    {BandId::B6, 20.0, 0.740},
    {BandId::B7, 20.0, 0.783},
    {BandId::B8, 10.0, 0.842},
    {BandId::B8A, 20.0, 0.865},
    {BandId::B11, 20.0, 1.610},
    {BandId::B12, 20.0, 2.190},
}};

constexpr std::array<const char*, 10> kBandNames = {"B2", "B3", "B4",  "B5",  "B6",
                                                    "B7", "B8", "B8A", "B11", "B12"};

}  // namespace

std::string to_string(BandId id) { return kBandNames[static_cast<std::size_t>(id)]; }

std::optional<BandId> band_from_string(std::string_view text) {
    for (std::size_t i = 0; i < kBandNames.size(); ++i)
        if (text == kBandNames[i]) return static_cast<BandId>(i);
    return std::nullopt;
}

const BandDescriptor& band_descriptor(BandId id) {
    return kBands[static_cast<std::size_t>(id)];
}

std::string to_string(CloudCover c) {
    switch (c) {
        case CloudCover::None: return "none";
        case CloudCover::Partial: return "partial";
        case CloudCover::Full: return "full";
    }
    return "none";
}

std::optional<CloudCover> cloud_cover_from_string(std::string_view text) {
    if (text == "none") return CloudCover::None;
    if (text == "partial") return CloudCover::Partial;
    if (text == "full") return CloudCover::Full;
    return std::nullopt;
}

const RasterGrid& Scene::band(BandId id) const {
    auto it = bands.find(id);
    if (it == bands.end())
        throw Error("scene " + date.to_string() + " is missing band " + to_string(id));
    return it->second;
}

GridGeometry common_geometry(const Scene& scene, std::span<const BandId> required) {
    if (required.empty()) throw Error("common_geometry: no bands requested");

    const GridGeometry* coarsest = nullptr;
    for (BandId id : required) {
        const GridGeometry& g = scene.band(id).geometry();
        if (!coarsest || g.cell_size > coarsest->cell_size) coarsest = &g;
    }

    for (BandId id : required) {
        const GridGeometry& g = scene.band(id).geometry();
        if (g.x_origin != coarsest->x_origin || g.y_origin != coarsest->y_origin)
            throw GeometryError("scene " + scene.date.to_string() + ": band " +
                                to_string(id) + " origin differs from the common grid");
        const double ratio = coarsest->cell_size / g.cell_size;
        const double rounded = std::round(ratio);
        if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-9)
            throw GeometryError("scene " + scene.date.to_string() + ": band " +
                                to_string(id) + " cell size " +
                                std::to_string(g.cell_size) +
                                " does not nest in the common cell size " +
                                std::to_string(coarsest->cell_size));
        const int factor = static_cast<int>(rounded);
        if (g.n_cols != coarsest->n_cols * factor || g.n_rows != coarsest->n_rows * factor)
            throw GeometryError("scene " + scene.date.to_string() + ": band " +
                                to_string(id) + " extent does not match the common grid");
    }
    return *coarsest;
}

RasterGrid band_at(const Scene& scene, BandId id, const GridGeometry& target) {
    const RasterGrid& native = scene.band(id);
    if (native.geometry() == target) return native;

    const double ratio = target.cell_size / native.geometry().cell_size;
    const double rounded = std::round(ratio);
    if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-9)
        throw GeometryError("scene " + scene.date.to_string() + ": cannot bring band " +
                            to_string(id) + " to cell size " +
                            std::to_string(target.cell_size));
    RasterGrid resampled = downsample_mean(native, static_cast<int>(rounded));
    require_compatible(resampled.geometry(), target, "band_at");
    return resampled;
}

}  // namespace firerisk

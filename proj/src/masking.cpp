#include "firerisk/masking.hpp"

namespace firerisk {

PixelMask vegetation_mask(const IndexGrid& ndvi, double threshold) {
    if (ndvi.kind != IndexKind::NDVI)
        throw Error("vegetation_mask expects an NDVI grid");

    const RasterGrid& g = ndvi.grid;
    PixelMask out{MaskGrid(g.geometry()), MaskSource::Vegetation};
    const double* v = g.values().data();
    const std::uint8_t* ok = g.validity().data();
    std::uint8_t* dst = out.grid.raw();
    for (std::size_t i = 0; i < g.cell_count(); ++i)
        dst[i] = (ok[i] && v[i] > threshold) ? 1 : 0;
    return out;
}

PixelMask combine_masks(std::span<const PixelMask> masks) {
    if (masks.empty()) throw Error("combine_masks needs at least one mask");
    if (masks.size() == 1) return masks[0];

    PixelMask out{masks[0].grid, MaskSource::Combined};
    std::uint8_t* acc = out.grid.raw();
    const std::size_t n = out.grid.geometry().cell_count();
    for (std::size_t m = 1; m < masks.size(); ++m) {
        require_compatible(out.grid.geometry(), masks[m].grid.geometry(), "combine_masks");
        const std::uint8_t* cells = masks[m].grid.cells().data();
        for (std::size_t i = 0; i < n; ++i) acc[i] &= cells[i];
    }
    return out;
}

RasterGrid apply_mask(const RasterGrid& grid, const PixelMask& mask) {
    require_compatible(grid.geometry(), mask.grid.geometry(), "apply_mask");
    RasterGrid out = grid;
    std::uint8_t* ok = out.raw_validity();
    const std::uint8_t* keep = mask.grid.cells().data();
    for (std::size_t i = 0; i < out.cell_count(); ++i) ok[i] &= keep[i];
    return out;
}

}  // namespace firerisk

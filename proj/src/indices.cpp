#include "firerisk/indices.hpp"

#include <atomic>
#include <cmath>

#include "firerisk/parallel.hpp"

namespace firerisk {

namespace {

IndexGrid normalized_difference(const RasterGrid& a, const RasterGrid& b,
                                IndexKind kind, const char* what) {
    require_compatible(a.geometry(), b.geometry(), what);

    IndexGrid out;
    out.kind = kind;
    out.grid = RasterGrid(a.geometry());

    const double* va = a.values().data();
    const double* vb = b.values().data();
    const std::uint8_t* oka = a.validity().data();
    const std::uint8_t* okb = b.validity().data();
    double* dst = out.grid.raw_values();
    std::uint8_t* dst_ok = out.grid.raw_validity();
    const int n_cols = a.n_cols();

    std::atomic<std::size_t> negatives{0};
    parallel_for_rows(a.n_rows(), [&](int row_begin, int row_end) {
        std::size_t local_neg = 0;
        const std::size_t begin = static_cast<std::size_t>(row_begin) * n_cols;
        const std::size_t end = static_cast<std::size_t>(row_end) * n_cols;
        for (std::size_t i = begin; i < end; ++i) {
            if (!oka[i] || !okb[i]) {
                dst_ok[i] = 0;
                continue;
            }
            const double x = va[i];
            const double y = vb[i];
            if (x < 0.0 || y < 0.0) ++local_neg;
            const double denom = x + y;
            if (std::abs(denom) < kDegenerateDenominator) {
                dst_ok[i] = 0;
                continue;
            }
            dst[i] = (x - y) / denom;
            dst_ok[i] = 1;
        }
        negatives.fetch_add(local_neg);
    });
    out.negative_input_cells = negatives.load();
    return out;
}

}  // namespace

IndexGrid compute_ndwi(const RasterGrid& nir, const RasterGrid& swir) {
    return normalized_difference(nir, swir, IndexKind::NDWI, "compute_ndwi");
}

IndexGrid compute_ndvi(const RasterGrid& nir, const RasterGrid& red) {
    return normalized_difference(nir, red, IndexKind::NDVI, "compute_ndvi");
}

}  // namespace firerisk

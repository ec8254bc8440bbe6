#include "firerisk/grid.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "firerisk/parallel.hpp"

namespace firerisk {

void GridGeometry::validate() const {
    if (n_cols < 1 || n_rows < 1)
        throw Error("grid dimensions must be at least 1x1, got " + std::to_string(n_cols) +
                    "x" + std::to_string(n_rows));
    if (!(cell_size > 0.0) || !std::isfinite(cell_size))
        throw Error("cell size must be a positive finite number");
    if (!std::isfinite(x_origin) || !std::isfinite(y_origin))
        throw Error("grid origin must be finite");
}

void require_compatible(const GridGeometry& a, const GridGeometry& b, const char* what) {
    if (a == b) return;
    throw GeometryError(std::string(what) + ": incompatible grid geometries (" +
                        std::to_string(a.n_cols) + "x" + std::to_string(a.n_rows) +
                        " @" + std::to_string(a.cell_size) + "m vs " +
                        std::to_string(b.n_cols) + "x" + std::to_string(b.n_rows) +
                        " @" + std::to_string(b.cell_size) + "m)");
}

RasterGrid::RasterGrid(const GridGeometry& geom) : geom_(geom) {
    geom_.validate();
    values_.assign(geom_.cell_count(), 0.0);
    valid_.assign(geom_.cell_count(), 0);
}

RasterGrid::RasterGrid(const GridGeometry& geom, double fill) : geom_(geom) {
    geom_.validate();
    if (!std::isfinite(fill)) throw Error("fill value must be finite");
    values_.assign(geom_.cell_count(), fill);
    valid_.assign(geom_.cell_count(), 1);
}

void RasterGrid::set(int row, int col, double v) {
    if (!std::isfinite(v))
        throw Error("valid cells must hold finite values; use set_nodata instead");
    const std::size_t i = index(row, col);
    values_[i] = v;
    valid_[i] = 1;
}

std::size_t RasterGrid::valid_count() const {
    std::size_t n = 0;
    for (std::uint8_t v : valid_) n += v;
    return n;
}

bool RasterGrid::invariants_hold() const {
    if (values_.size() != geom_.cell_count() || valid_.size() != geom_.cell_count())
        return false;
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (valid_[i] && !std::isfinite(values_[i])) return false;
    return true;
}

MaskGrid::MaskGrid(const GridGeometry& geom, bool fill) : geom_(geom) {
    geom_.validate();
    cells_.assign(geom_.cell_count(), fill ? 1 : 0);
}

std::size_t MaskGrid::true_count() const {
    std::size_t n = 0;
    for (std::uint8_t v : cells_) n += v;
    return n;
}

RasterGrid downsample_mean(const RasterGrid& grid, int factor) {
    if (factor < 1) throw Error("downsample factor must be >= 1");
    const GridGeometry& in = grid.geometry();
    if (in.n_cols % factor != 0 || in.n_rows % factor != 0)
        throw Error("grid dimensions " + std::to_string(in.n_cols) + "x" +
                    std::to_string(in.n_rows) + " not divisible by factor " +
                    std::to_string(factor));

    GridGeometry out_geom{in.n_cols / factor, in.n_rows / factor, in.x_origin,
                          in.y_origin, in.cell_size * factor};
    RasterGrid out(out_geom);

    const double* src = grid.values().data();
    const std::uint8_t* src_ok = grid.validity().data();
    double* dst = out.raw_values();
    std::uint8_t* dst_ok = out.raw_validity();

    parallel_for_rows(out_geom.n_rows, [&](int row_begin, int row_end) {
        for (int r = row_begin; r < row_end; ++r) {
            for (int c = 0; c < out_geom.n_cols; ++c) {
                // fixed left-to-right, top-to-bottom order within the block
                double sum = 0.0;
                int count = 0;
                for (int br = 0; br < factor; ++br) {
                    const std::size_t base =
                        static_cast<std::size_t>(r * factor + br) * in.n_cols +
                        static_cast<std::size_t>(c) * factor;
                    for (int bc = 0; bc < factor; ++bc) {
                        if (src_ok[base + bc]) {
                            sum += src[base + bc];
                            ++count;
                        }
                    }
                }
                const std::size_t o = out.index(r, c);
                if (count > 0) {
                    dst[o] = sum / count;
                    dst_ok[o] = 1;
                } else {
                    dst_ok[o] = 0;
                }
            }
        }
    });
    return out;
}

}  // namespace firerisk

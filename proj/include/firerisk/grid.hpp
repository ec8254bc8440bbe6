#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "firerisk/error.hpp"

namespace firerisk {

// Placement of a north-up grid: lower-left corner in map coordinates plus a
// square cell size. Matches the ASCII grid header (XLLCORNER/YLLCORNER).
// Two grids interoperate only when all five fields are exactly equal.
struct GridGeometry {
    int n_cols = 0;
    int n_rows = 0;
    double x_origin = 0.0;  // easting of the lower-left corner
    double y_origin = 0.0;  // northing of the lower-left corner
    double cell_size = 0.0; // meters per pixel, > 0

    bool operator==(const GridGeometry&) const = default;

    std::size_t cell_count() const {
        return static_cast<std::size_t>(n_cols) * static_cast<std::size_t>(n_rows);
    }

    // Center of cell (row, col); row 0 is the northernmost row.
    double cell_center_x(int col) const { return x_origin + (col + 0.5) * cell_size; }
    double cell_center_y(int row) const {
        return y_origin + (n_rows - row - 0.5) * cell_size;
    }

    void validate() const;
};

// Throws GeometryError when the two geometries differ. `what` names the
// operation for the error message.
void require_compatible(const GridGeometry& a, const GridGeometry& b, const char* what);

// Single-band grid of 64-bit reals with per-cell validity. A cell is either
// a finite value or nodata; NaN/inf never enter a valid cell, and nodata is
// a flag rather than a sentinel value that could leak into arithmetic.
class RasterGrid {
public:
    RasterGrid() = default;

    // All cells start as nodata.
    explicit RasterGrid(const GridGeometry& geom);

    // All cells valid with the given value.
    RasterGrid(const GridGeometry& geom, double fill);

    const GridGeometry& geometry() const { return geom_; }
    int n_cols() const { return geom_.n_cols; }
    int n_rows() const { return geom_.n_rows; }
    std::size_t cell_count() const { return values_.size(); }

    std::size_t index(int row, int col) const {
        return static_cast<std::size_t>(row) * geom_.n_cols + col;
    }

    bool valid(int row, int col) const { return valid_[index(row, col)] != 0; }
    double value(int row, int col) const { return values_[index(row, col)]; }

    void set(int row, int col, double v);
    void set_nodata(int row, int col) { valid_[index(row, col)] = 0; }

    std::span<const double> values() const { return values_; }
    std::span<const std::uint8_t> validity() const { return valid_; }

    // Unchecked flat access for bulk fills; callers must keep the
    // finite-valid invariant.
    double* raw_values() { return values_.data(); }
    std::uint8_t* raw_validity() { return valid_.data(); }

    std::size_t valid_count() const;

    // True when every valid cell holds a finite value and buffer sizes
    // match the geometry. Exercised by tests after bulk fills.
    bool invariants_hold() const;

    bool operator==(const RasterGrid&) const = default;

private:
    GridGeometry geom_;
    std::vector<double> values_;
    std::vector<std::uint8_t> valid_;
};

// Boolean grid; every cell is defined (no nodata state).
class MaskGrid {
public:
    MaskGrid() = default;
    explicit MaskGrid(const GridGeometry& geom, bool fill = false);

    const GridGeometry& geometry() const { return geom_; }
    int n_cols() const { return geom_.n_cols; }
    int n_rows() const { return geom_.n_rows; }

    std::size_t index(int row, int col) const {
        return static_cast<std::size_t>(row) * geom_.n_cols + col;
    }

    bool get(int row, int col) const { return cells_[index(row, col)] != 0; }
    void set(int row, int col, bool v) { cells_[index(row, col)] = v ? 1 : 0; }

    std::span<const std::uint8_t> cells() const { return cells_; }
    std::uint8_t* raw() { return cells_.data(); }

    std::size_t true_count() const;

    bool operator==(const MaskGrid&) const = default;

private:
    GridGeometry geom_;
    std::vector<std::uint8_t> cells_;
};

// Block-mean aggregation: output cell = mean of the valid cells in its
// factor x factor block (summed in row-major order within the block);
// a block with no valid cell becomes nodata. Grid dimensions must be
// divisible by the factor; there is no implicit padding.
RasterGrid downsample_mean(const RasterGrid& grid, int factor);

}  // namespace firerisk

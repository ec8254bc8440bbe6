#pragma once

#include <string>

#include "firerisk/grid.hpp"

namespace firerisk {

// ASCII grid format, one band per file:
//
//   NCOLS <int>
//   NROWS <int>
//   XLLCORNER <real>
//   YLLCORNER <real>
//   CELLSIZE <real>
//   NODATA_VALUE <real>
//   <row 0 values, space separated>   (NROWS rows, northernmost first)
//
// Keywords are case-insensitive; exactly these six header lines in this
// order. Cells equal to NODATA_VALUE come back as nodata.

// Throws ParseError (with line/column) on malformed input, IoError when the
// file cannot be read.
RasterGrid read_ascii_grid(const std::string& path);

// Cell values are written with 10 significant digits; header reals use the
// shortest exact representation. The nodata sentinel defaults to -9999 and
// is moved if a valid cell happens to hold that exact value, so the output
// always re-parses to an identical grid.
void write_ascii_grid(const RasterGrid& grid, const std::string& path);

}  // namespace firerisk

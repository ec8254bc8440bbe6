#pragma once

#include <cstdint>
#include <span>
#include <string>

namespace firerisk {

// Binary PPM (P6), maxval 255. rgb holds 3 bytes per pixel, row-major from
// the top row. File size is exactly header + 3*width*height bytes.
void write_ppm(const std::string& path, int width, int height,
               std::span<const std::uint8_t> rgb);

// Binary PGM (P5), maxval 255, one byte per pixel.
void write_pgm(const std::string& path, int width, int height,
               std::span<const std::uint8_t> gray);

}  // namespace firerisk

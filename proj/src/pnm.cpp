#include "firerisk/pnm.hpp"

#include <fstream>

#include "firerisk/error.hpp"

namespace firerisk {

namespace {

void write_pnm(const std::string& path, const char* magic, int width, int height,
               int bytes_per_pixel, std::span<const std::uint8_t> data) {
    if (width < 1 || height < 1)
        throw Error("image dimensions must be positive");
    const std::size_t expected = static_cast<std::size_t>(width) *
                                 static_cast<std::size_t>(height) * bytes_per_pixel;
    if (data.size() != expected)
        throw Error("pixel buffer size " + std::to_string(data.size()) +
                    " does not match " + std::to_string(expected));

    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    file << magic << "\n" << width << " " << height << "\n255\n";
    file.write(reinterpret_cast<const char*>(data.data()),
               static_cast<std::streamsize>(data.size()));
    if (!file) throw IoError("failed writing '" + path + "'");
}

}  // namespace

void write_ppm(const std::string& path, int width, int height,
               std::span<const std::uint8_t> rgb) {
    write_pnm(path, "P6", width, height, 3, rgb);
}

void write_pgm(const std::string& path, int width, int height,
               std::span<const std::uint8_t> gray) {
    write_pnm(path, "P5", width, height, 1, gray);
}

}  // namespace firerisk

#pragma once

#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <string>

#include <unistd.h>

#include "firerisk/grid.hpp"
#include "firerisk/parallel.hpp"

namespace testutil {

// Unique scratch directory, removed with everything in it on destruction.
class TempDir {
public:
    TempDir() {
        static std::atomic<int> counter{0};
        dir_ = std::filesystem::temp_directory_path() /
               ("firerisk_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter.fetch_add(1)));
        std::filesystem::create_directories(dir_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(dir_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::string path(const std::string& name) const { return (dir_ / name).string(); }
    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path dir_;
};

// Restores the global worker cap when the test ends.
class ThreadGuard {
public:
    explicit ThreadGuard(int n) { firerisk::set_max_threads(n); }
    ~ThreadGuard() { firerisk::set_max_threads(0); }
};

// Row-major cell list; NaN marks nodata (test shorthand only, the library
// itself never stores NaN).
inline firerisk::RasterGrid make_grid(const firerisk::GridGeometry& geom,
                                      std::initializer_list<double> cells) {
    firerisk::RasterGrid grid(geom);
    int r = 0, c = 0;
    for (double v : cells) {
        if (!std::isnan(v)) grid.set(r, c, v);
        if (++c == geom.n_cols) {
            c = 0;
            ++r;
        }
    }
    return grid;
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
}

inline std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(f),
                       std::istreambuf_iterator<char>());
}

}  // namespace testutil

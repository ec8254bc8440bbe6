#include "firerisk/aoi.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>

#include <json.hpp>

#include "firerisk/ascii_grid.hpp"

namespace firerisk {

void AreaOfInterest::validate() const {
    if (polygon.empty() == !mask.has_value())
        throw Error("AOI '" + name + "' must have exactly one of polygon or mask");
    if (!polygon.empty()) {
        for (const auto& v : polygon)
            if (!std::isfinite(v[0]) || !std::isfinite(v[1]))
                throw Error("AOI '" + name + "' has a non-finite polygon vertex");
        std::set<std::pair<double, double>> distinct;
        for (const auto& v : polygon) distinct.insert({v[0], v[1]});
        if (distinct.size() < 3)
            throw Error("AOI '" + name + "' polygon needs at least 3 distinct vertices");
    }
}

AreaOfInterest aoi_from_polygon(std::string name,
                                std::vector<std::array<double, 2>> vertices) {
    AreaOfInterest aoi;
    aoi.name = std::move(name);
    aoi.polygon = std::move(vertices);
    aoi.validate();
    return aoi;
}

AreaOfInterest aoi_from_mask(std::string name, MaskGrid mask) {
    AreaOfInterest aoi;
    aoi.name = std::move(name);
    aoi.mask = std::move(mask);
    aoi.validate();
    return aoi;
}

MaskGrid rasterize_aoi(const AreaOfInterest& aoi, const GridGeometry& geometry) {
    geometry.validate();
    aoi.validate();

    if (aoi.mask) {
        require_compatible(aoi.mask->geometry(), geometry, "rasterize_aoi");
        return *aoi.mask;
    }

    // Scanline even-odd: per row, gather the x of every edge crossing at the
    // centers' y, then a center is inside iff an odd number of crossings lie
    // strictly to its right. Strict comparisons give the half-open rule.
    MaskGrid out(geometry, false);
    const auto& poly = aoi.polygon;
    const std::size_t n = poly.size();

    std::vector<double> crossings;
    for (int r = 0; r < geometry.n_rows; ++r) {
        const double py = geometry.cell_center_y(r);
        crossings.clear();
        for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
            const double yi = poly[i][1];
            const double yj = poly[j][1];
            if ((yi > py) != (yj > py)) {
                const double xi = poly[i][0];
                const double xj = poly[j][0];
                crossings.push_back((xj - xi) * (py - yi) / (yj - yi) + xi);
            }
        }
        if (crossings.empty()) continue;
        std::sort(crossings.begin(), crossings.end());
        for (int c = 0; c < geometry.n_cols; ++c) {
            const double px = geometry.cell_center_x(c);
            const auto right =
                crossings.end() - std::upper_bound(crossings.begin(), crossings.end(), px);
            if (right % 2 != 0) out.set(r, c, true);
        }
    }
    return out;
}

namespace {

using nlohmann::json;

json read_json_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw IoError("cannot open '" + path + "' for reading");
    json j;
    try {
        file >> j;
    } catch (const json::parse_error& e) {
        throw ParseError(path, 0, 0, e.what());
    }
    return j;
}

}  // namespace

AreaOfInterest load_aoi(const std::string& path) {
    const json j = read_json_file(path);
    if (!j.is_object() || !j.contains("name") || !j["name"].is_string())
        throw ParseError(path, 0, 0, "AOI file needs a \"name\" string");
    const std::string name = j["name"].get<std::string>();

    const bool has_poly = j.contains("polygon");
    const bool has_mask = j.contains("mask");
    if (has_poly == has_mask)
        throw ParseError(path, 0, 0,
                         "AOI file needs exactly one of \"polygon\" or \"mask\"");

    if (has_poly) {
        const auto& p = j["polygon"];
        if (!p.is_array())
            throw ParseError(path, 0, 0, "\"polygon\" must be an array of [x, y] pairs");
        std::vector<std::array<double, 2>> vertices;
        vertices.reserve(p.size());
        for (const auto& v : p) {
            if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
                throw ParseError(path, 0, 0, "polygon vertex must be [x, y]");
            vertices.push_back({v[0].get<double>(), v[1].get<double>()});
        }
        try {
            return aoi_from_polygon(name, std::move(vertices));
        } catch (const Error& e) {
            throw ParseError(path, 0, 0, e.what());
        }
    }

    if (!j["mask"].is_string())
        throw ParseError(path, 0, 0, "\"mask\" must be a path string");
    const std::filesystem::path mask_path =
        std::filesystem::path(path).parent_path() / j["mask"].get<std::string>();
    const RasterGrid grid = read_ascii_grid(mask_path.string());
    MaskGrid mask(grid.geometry());
    for (int r = 0; r < grid.n_rows(); ++r)
        for (int c = 0; c < grid.n_cols(); ++c)
            mask.set(r, c, grid.valid(r, c) && grid.value(r, c) != 0.0);
    return aoi_from_mask(name, std::move(mask));
}

void save_aoi(const AreaOfInterest& aoi, const std::string& path) {
    aoi.validate();
    if (!aoi.is_polygon())
        throw Error("only polygon AOIs can be saved; write the mask grid instead");
    json j;
    j["name"] = aoi.name;
    json poly = json::array();
    for (const auto& v : aoi.polygon) poly.push_back({v[0], v[1]});
    j["polygon"] = poly;
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    file << j.dump(2) << "\n";
    if (!file) throw IoError("failed writing '" + path + "'");
}

}  // namespace firerisk

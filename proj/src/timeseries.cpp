#include "firerisk/timeseries.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "firerisk/indices.hpp"
#include "firerisk/reduce.hpp"

namespace firerisk {

ZonalStats zonal_mean(const RasterGrid& grid, const PixelMask& mask) {
    require_compatible(grid.geometry(), mask.grid.geometry(), "zonal_mean");

    // Contributors collected in row-major order; the pairwise tree over that
    // fixed sequence makes the mean independent of any parallel partition.
    std::vector<double> contributing;
    const double* v = grid.values().data();
    const std::uint8_t* ok = grid.validity().data();
    const std::uint8_t* sel = mask.grid.cells().data();
    for (std::size_t i = 0; i < grid.cell_count(); ++i)
        if (sel[i] && ok[i]) contributing.push_back(v[i]);

    if (contributing.empty())
        throw EmptyZoneError("zonal_mean: no valid cells selected by the mask");

    ZonalStats stats;
    stats.count = contributing.size();
    stats.mean = pairwise_sum(contributing) / static_cast<double>(stats.count);
    return stats;
}

IndexSeries build_series(std::span<const Scene> scenes, const AreaOfInterest& aoi,
                         double ndvi_threshold) {
    if (scenes.empty()) throw Error("build_series needs at least one scene");
    aoi.validate();

    static constexpr std::array<BandId, 3> kRequired = {BandId::B4, BandId::B8,
                                                        BandId::B11};

    IndexSeries series;
    series.aoi_name = aoi.name;

    const Date* prev_date = nullptr;
    for (const Scene& scene : scenes) {
        if (prev_date && !(*prev_date < scene.date))
            throw Error("build_series: scenes must be date-ordered with unique dates (" +
                        scene.date.to_string() + " follows " + prev_date->to_string() + ")");
        prev_date = &scene.date;

        const GridGeometry common = common_geometry(scene, kRequired);
        const RasterGrid red = band_at(scene, BandId::B4, common);
        const RasterGrid nir = band_at(scene, BandId::B8, common);
        const RasterGrid swir = band_at(scene, BandId::B11, common);

        const IndexGrid ndvi = compute_ndvi(nir, red);
        const IndexGrid ndwi = compute_ndwi(nir, swir);
        if (ndwi.negative_input_cells > 0)
            std::cerr << "warning: scene " << scene.date.to_string() << ": "
                      << ndwi.negative_input_cells
                      << " cells with negative reflectance\n";

        std::vector<PixelMask> parts;
        parts.push_back(PixelMask{rasterize_aoi(aoi, common), MaskSource::Aoi});
        parts.push_back(vegetation_mask(ndvi, ndvi_threshold));
        if (scene.cloud_mask) {
            require_compatible(scene.cloud_mask->geometry(), common, "build_series cloud mask");
            PixelMask clear{MaskGrid(common), MaskSource::Cloud};
            const std::uint8_t* cloudy = scene.cloud_mask->cells().data();
            std::uint8_t* dst = clear.grid.raw();
            for (std::size_t i = 0; i < common.cell_count(); ++i) dst[i] = cloudy[i] ? 0 : 1;
            parts.push_back(std::move(clear));
        } else if (scene.cloud != CloudCover::None) {
            std::cerr << "warning: scene " << scene.date.to_string() << " is flagged "
                      << to_string(scene.cloud)
                      << " cloud cover but has no cloud mask; using it whole\n";
        }
        const PixelMask mask = combine_masks(parts);

        try {
            const ZonalStats stats = zonal_mean(ndwi.grid, mask);
            series.points.push_back(
                SeriesPoint{scene.date, stats.mean, stats.count, scene.cloud});
        } catch (const EmptyZoneError&) {
            std::cerr << "note: scene " << scene.date.to_string() << ": AOI '" << aoi.name
                      << "' has no usable pixels, skipped\n";
        }
    }
    return series;
}

void export_series_csv(std::span<const IndexSeries> series, const std::string& path) {
    if (series.empty()) throw Error("export_series_csv needs at least one series");

    std::string out = "aoi,date,mean_ndwi,valid_pixels,cloud_cover\n";
    char buf[64];
    for (const IndexSeries& s : series) {
        for (const SeriesPoint& p : s.points) {
            std::snprintf(buf, sizeof(buf), "%.6f", p.mean_ndwi);
            out += s.aoi_name;
            out += ',';
            out += p.date.to_string();
            out += ',';
            out += buf;
            out += ',';
            out += std::to_string(p.valid_pixels);
            out += ',';
            out += to_string(p.cloud);
            out += '\n';
        }
    }

    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    file.write(out.data(), static_cast<std::streamsize>(out.size()));
    if (!file) throw IoError("failed writing '" + path + "'");
}

std::vector<IndexSeries> parse_series_csv(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open '" + path + "' for reading");

    std::vector<IndexSeries> series;
    std::string line;
    int line_no = 0;
    while (std::getline(file, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line_no == 1) {
            if (line != "aoi,date,mean_ndwi,valid_pixels,cloud_cover")
                throw ParseError(path, 1, 0, "unexpected CSV header '" + line + "'");
            continue;
        }

        std::array<std::string, 5> fields;
        std::size_t field = 0, start = 0;
        for (std::size_t i = 0; i <= line.size(); ++i) {
            if (i == line.size() || line[i] == ',') {
                if (field >= fields.size())
                    throw ParseError(path, line_no, static_cast<int>(i) + 1,
                                     "too many fields");
                fields[field++] = line.substr(start, i - start);
                start = i + 1;
            }
        }
        if (field != fields.size())
            throw ParseError(path, line_no, 0, "expected 5 comma-separated fields");

        SeriesPoint p;
        p.date = Date::parse(fields[1]);
        {
            const char* first = fields[2].data();
            const char* last = first + fields[2].size();
            auto [ptr, ec] = std::from_chars(first, last, p.mean_ndwi);
            if (ec != std::errc() || ptr != last)
                throw ParseError(path, line_no, 0, "bad mean_ndwi '" + fields[2] + "'");
        }
        {
            const char* first = fields[3].data();
            const char* last = first + fields[3].size();
            auto [ptr, ec] = std::from_chars(first, last, p.valid_pixels);
            if (ec != std::errc() || ptr != last)
                throw ParseError(path, line_no, 0, "bad valid_pixels '" + fields[3] + "'");
        }
        const auto cloud = cloud_cover_from_string(fields[4]);
        if (!cloud)
            throw ParseError(path, line_no, 0, "bad cloud_cover '" + fields[4] + "'");
        p.cloud = *cloud;

        if (series.empty() || series.back().aoi_name != fields[0]) {
            series.push_back(IndexSeries{fields[0], {}});
        }
        series.back().points.push_back(p);
    }
    return series;
}

}  // namespace firerisk

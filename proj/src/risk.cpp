#include "firerisk/risk.hpp"

#include <algorithm>
#include <cmath>

#include "firerisk/pnm.hpp"

namespace firerisk {

void RiskConfig::validate() const {
    if (!(ndwi_threshold >= -1.0 && ndwi_threshold <= 1.0))
        throw Error("ndwi_threshold must lie in [-1, 1]");
    if (!(ndvi_threshold >= -1.0 && ndvi_threshold <= 1.0))
        throw Error("ndvi_threshold must lie in [-1, 1]");
}

RiskMap classify_risk(const IndexGrid& ndwi, const PixelMask& vegetation,
                      const RiskConfig& cfg) {
    cfg.validate();
    if (ndwi.kind != IndexKind::NDWI) throw Error("classify_risk expects an NDWI grid");
    require_compatible(ndwi.grid.geometry(), vegetation.grid.geometry(), "classify_risk");

    RiskMap map;
    map.geometry = ndwi.grid.geometry();
    map.ndwi_threshold = cfg.ndwi_threshold;
    map.classes.resize(map.geometry.cell_count(), RiskClass::Unclassified);

    const double* v = ndwi.grid.values().data();
    const std::uint8_t* ok = ndwi.grid.validity().data();
    const std::uint8_t* veg = vegetation.grid.cells().data();
    for (std::size_t i = 0; i < map.classes.size(); ++i) {
        if (!veg[i] || !ok[i]) continue;
        map.classes[i] = v[i] <= cfg.ndwi_threshold ? RiskClass::AtRisk
                                                    : RiskClass::NotAtRisk;
    }
    return map;
}

RiskClass classify_aoi(const IndexSeries& series, const Date& date, const RiskConfig& cfg) {
    cfg.validate();
    for (const SeriesPoint& p : series.points)
        if (p.date == date)
            return p.mean_ndwi <= cfg.ndwi_threshold ? RiskClass::AtRisk
                                                     : RiskClass::NotAtRisk;
    throw Error("series '" + series.aoi_name + "' has no point at " + date.to_string());
}

void render_risk_ppm(const IndexGrid& ndwi, const RiskMap& map, const std::string& path) {
    require_compatible(ndwi.grid.geometry(), map.geometry, "render_risk_ppm");

    const double* v = ndwi.grid.values().data();
    const double ramp_span = map.ndwi_threshold + 1.0;  // threshold down to -1
    std::vector<std::uint8_t> rgb(map.geometry.cell_count() * 3);
    for (std::size_t i = 0; i < map.classes.size(); ++i) {
        std::uint8_t* px = &rgb[i * 3];
        switch (map.classes[i]) {
            case RiskClass::AtRisk: {
                double t = ramp_span > 0.0 ? (v[i] + 1.0) / ramp_span : 0.0;
                t = std::clamp(t, 0.0, 1.0);
                px[0] = 255;
                px[1] = static_cast<std::uint8_t>(std::lround(255.0 * t));
                px[2] = 0;
                break;
            }
            case RiskClass::NotAtRisk:
                px[0] = px[1] = px[2] = 180;
                break;
            case RiskClass::Unclassified:
                px[0] = px[1] = px[2] = 0;
                break;
        }
    }
    write_ppm(path, map.geometry.n_cols, map.geometry.n_rows, rgb);
}

void render_binary_pgm(const RiskMap& map, const std::string& path) {
    std::vector<std::uint8_t> gray(map.geometry.cell_count());
    for (std::size_t i = 0; i < gray.size(); ++i) {
        switch (map.classes[i]) {
            case RiskClass::AtRisk: gray[i] = 255; break;
            case RiskClass::NotAtRisk: gray[i] = 0; break;
            case RiskClass::Unclassified: gray[i] = 127; break;
        }
    }
    write_pgm(path, map.geometry.n_cols, map.geometry.n_rows, gray);
}

RasterGrid risk_to_grid(const RiskMap& map) {
    RasterGrid out(map.geometry);
    for (int r = 0; r < map.geometry.n_rows; ++r) {
        for (int c = 0; c < map.geometry.n_cols; ++c) {
            switch (map.at(r, c)) {
                case RiskClass::AtRisk: out.set(r, c, 1.0); break;
                case RiskClass::NotAtRisk: out.set(r, c, 0.0); break;
                case RiskClass::Unclassified: break;
            }
        }
    }
    return out;
}

RiskMap risk_from_grid(const RasterGrid& grid, double ndwi_threshold) {
    RiskMap map;
    map.geometry = grid.geometry();
    map.ndwi_threshold = ndwi_threshold;
    map.classes.resize(map.geometry.cell_count(), RiskClass::Unclassified);
    const double* v = grid.values().data();
    const std::uint8_t* ok = grid.validity().data();
    for (std::size_t i = 0; i < map.classes.size(); ++i) {
        if (!ok[i]) continue;
        map.classes[i] = v[i] != 0.0 ? RiskClass::AtRisk : RiskClass::NotAtRisk;
    }
    return map;
}

}  // namespace firerisk

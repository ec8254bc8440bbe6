#include "firerisk/synth.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "firerisk/ascii_grid.hpp"
#include "firerisk/parallel.hpp"
#include "firerisk/rng.hpp"

namespace firerisk {

namespace {

void check_levels(const BandLevels& levels, const std::string& where) {
    for (double v : {levels.b4, levels.b8, levels.b11})
        if (!std::isfinite(v) || v < 0.0)
            throw Error(where + ": reflectance levels must be finite and >= 0");
}

}  // namespace

void SynthSpec::validate() const {
    geometry.validate();
    if (dates.empty()) throw Error("synth spec needs at least one date");
    for (std::size_t i = 1; i < dates.size(); ++i)
        if (!(dates[i - 1] < dates[i]))
            throw Error("synth spec dates must be strictly increasing");
    if (!cloud.empty() && cloud.size() != dates.size())
        throw Error("synth spec cloud flags must match the number of dates");
    if (!(noise_sigma >= 0.0) || !std::isfinite(noise_sigma))
        throw Error("noise_sigma must be >= 0");
    check_levels(background, "background");
    for (const RegionProfile& r : regions) {
        r.aoi.validate();
        check_levels(r.baseline, "region '" + r.aoi.name + "' baseline");
        if (r.ignition_date) {
            check_levels(r.burn.initial, "region '" + r.aoi.name + "' burn.initial");
            check_levels(r.burn.final_levels, "region '" + r.aoi.name + "' burn.final");
            if (!(r.burn.tau_days > 0.0))
                throw Error("region '" + r.aoi.name + "': burn tau_days must be > 0");
        }
    }
}

BandLevels region_levels_at(const RegionProfile& region, const Date& date) {
    if (!region.ignition_date || date < *region.ignition_date) return region.baseline;
    const double days = static_cast<double>(days_between(*region.ignition_date, date));
    const double w = std::exp(-days / region.burn.tau_days);
    const BandLevels& a = region.burn.initial;
    const BandLevels& b = region.burn.final_levels;
    return BandLevels{b.b4 + (a.b4 - b.b4) * w, b.b8 + (a.b8 - b.b8) * w,
                      b.b11 + (a.b11 - b.b11) * w};
}

GridGeometry fine_geometry(const GridGeometry& common) {
    return GridGeometry{common.n_cols * 2, common.n_rows * 2, common.x_origin,
                        common.y_origin, common.cell_size / 2.0};
}

namespace {

// Region index per cell of the common grid, -1 for background. Rejects
// overlapping regions.
std::vector<int> region_index_map(const SynthSpec& spec) {
    std::vector<int> owner(spec.geometry.cell_count(), -1);
    for (std::size_t ri = 0; ri < spec.regions.size(); ++ri) {
        const MaskGrid mask = rasterize_aoi(spec.regions[ri].aoi, spec.geometry);
        const std::uint8_t* cells = mask.cells().data();
        for (std::size_t i = 0; i < owner.size(); ++i) {
            if (!cells[i]) continue;
            if (owner[i] >= 0)
                throw Error("synth regions '" +
                            spec.regions[static_cast<std::size_t>(owner[i])].aoi.name +
                            "' and '" + spec.regions[ri].aoi.name + "' overlap");
            owner[i] = static_cast<int>(ri);
        }
    }
    return owner;
}

enum class SynthBand { B4 = 0, B8 = 1, B11 = 2 };

double level_of(const BandLevels& levels, SynthBand band) {
    switch (band) {
        case SynthBand::B4: return levels.b4;
        case SynthBand::B8: return levels.b8;
        case SynthBand::B11: return levels.b11;
    }
    return 0.0;
}

// Band raster at `geom`, which is either the common grid or the 2x finer
// one; fine cells inherit the region of their parent common cell. Noise
// streams are seeded per (date, band, row), so results do not depend on the
// parallel schedule.
RasterGrid generate_band(const SynthSpec& spec, const std::vector<int>& owner,
                         const std::vector<double>& region_levels, double background_level,
                         const GridGeometry& geom, std::size_t date_index, SynthBand band) {
    RasterGrid out(geom, 0.0);
    double* dst = out.raw_values();
    const int shift = geom.n_cols == spec.geometry.n_cols ? 0 : 1;
    const int common_cols = spec.geometry.n_cols;
    const double sigma = spec.noise_sigma;

    parallel_for_rows(geom.n_rows, [&](int row_begin, int row_end) {
        for (int r = row_begin; r < row_end; ++r) {
            NormalSampler noise(mix_seed(spec.seed, date_index,
                                         static_cast<std::uint64_t>(band) * 2 + shift,
                                         static_cast<std::uint64_t>(r)));
            const int parent_row = r >> shift;
            for (int c = 0; c < geom.n_cols; ++c) {
                const int region =
                    owner[static_cast<std::size_t>(parent_row) * common_cols + (c >> shift)];
                double v = region < 0 ? background_level
                                      : region_levels[static_cast<std::size_t>(region)];
                if (sigma > 0.0) v = std::max(0.0, v + sigma * noise.next());
                dst[static_cast<std::size_t>(r) * geom.n_cols + c] = v;
            }
        }
    });
    return out;
}

}  // namespace

std::vector<Scene> generate_dataset(const SynthSpec& spec) {
    spec.validate();
    const std::vector<int> owner = region_index_map(spec);
    const GridGeometry fine = fine_geometry(spec.geometry);

    std::vector<Scene> scenes;
    scenes.reserve(spec.dates.size());
    for (std::size_t di = 0; di < spec.dates.size(); ++di) {
        Scene scene;
        scene.date = spec.dates[di];
        scene.mission = "SYNTH";
        scene.cloud = spec.cloud.empty() ? CloudCover::None : spec.cloud[di];

        for (SynthBand band : {SynthBand::B4, SynthBand::B8, SynthBand::B11}) {
            std::vector<double> levels(spec.regions.size());
            for (std::size_t ri = 0; ri < spec.regions.size(); ++ri)
                levels[ri] = level_of(region_levels_at(spec.regions[ri], scene.date), band);
            const double bg = level_of(spec.background, band);
            const GridGeometry& geom = band == SynthBand::B11 ? spec.geometry : fine;
            const BandId id = band == SynthBand::B4   ? BandId::B4
                              : band == SynthBand::B8 ? BandId::B8
                                                      : BandId::B11;
            scene.bands.emplace(id, generate_band(spec, owner, levels, bg, geom, di, band));
        }
        scenes.push_back(std::move(scene));
    }
    return scenes;
}

RasterGrid generate_gt(const SynthSpec& spec) {
    spec.validate();
    const std::vector<int> owner = region_index_map(spec);
    RasterGrid gt(spec.geometry, 0.0);
    double* v = gt.raw_values();
    for (std::size_t i = 0; i < owner.size(); ++i)
        if (owner[i] >= 0 && spec.regions[static_cast<std::size_t>(owner[i])].ignition_date)
            v[i] = 1.0;
    return gt;
}

namespace {

using nlohmann::json;

BandLevels levels_from_json(const json& j, const std::string& path, const char* where) {
    if (!j.is_object() || !j.contains("b4") || !j.contains("b8") || !j.contains("b11"))
        throw ParseError(path, 0, 0,
                         std::string(where) + " must be an object with b4, b8, b11");
    return BandLevels{j["b4"].get<double>(), j["b8"].get<double>(),
                      j["b11"].get<double>()};
}

}  // namespace

SynthSpec load_synth_spec(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw IoError("cannot open '" + path + "' for reading");
    json j;
    try {
        file >> j;
    } catch (const json::parse_error& e) {
        throw ParseError(path, 0, 0, e.what());
    }

    SynthSpec spec;
    if (!j.contains("geometry") || !j.contains("dates") || !j.contains("regions"))
        throw ParseError(path, 0, 0, "synth spec needs geometry, dates and regions");

    const json& g = j["geometry"];
    for (const char* key : {"n_cols", "n_rows", "x_origin", "y_origin", "cell_size"})
        if (!g.contains(key))
            throw ParseError(path, 0, 0, std::string("geometry is missing ") + key);
    spec.geometry = GridGeometry{g["n_cols"].get<int>(), g["n_rows"].get<int>(),
                                 g["x_origin"].get<double>(), g["y_origin"].get<double>(),
                                 g["cell_size"].get<double>()};

    for (const json& d : j["dates"]) {
        if (d.is_string()) {
            spec.dates.push_back(Date::parse(d.get<std::string>()));
            spec.cloud.push_back(CloudCover::None);
        } else if (d.is_object() && d.contains("date")) {
            spec.dates.push_back(Date::parse(d["date"].get<std::string>()));
            CloudCover cc = CloudCover::None;
            if (d.contains("cloud")) {
                const auto parsed = cloud_cover_from_string(d["cloud"].get<std::string>());
                if (!parsed)
                    throw ParseError(path, 0, 0,
                                     "bad cloud flag '" + d["cloud"].get<std::string>() + "'");
                cc = *parsed;
            }
            spec.cloud.push_back(cc);
        } else {
            throw ParseError(path, 0, 0, "dates entries must be strings or {date, cloud}");
        }
    }

    if (j.contains("seed")) spec.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("noise_sigma")) spec.noise_sigma = j["noise_sigma"].get<double>();
    if (j.contains("background"))
        spec.background = levels_from_json(j["background"], path, "background");

    for (const json& r : j["regions"]) {
        RegionProfile region;
        if (!r.contains("name") || !r.contains("polygon") || !r.contains("baseline"))
            throw ParseError(path, 0, 0, "region needs name, polygon and baseline");
        std::vector<std::array<double, 2>> vertices;
        for (const json& v : r["polygon"]) {
            if (!v.is_array() || v.size() != 2)
                throw ParseError(path, 0, 0, "polygon vertex must be [x, y]");
            vertices.push_back({v[0].get<double>(), v[1].get<double>()});
        }
        region.aoi = aoi_from_polygon(r["name"].get<std::string>(), std::move(vertices));
        region.baseline = levels_from_json(r["baseline"], path, "baseline");
        if (r.contains("ignition_date")) {
            region.ignition_date = Date::parse(r["ignition_date"].get<std::string>());
            if (!r.contains("burn"))
                throw ParseError(path, 0, 0, "region '" + region.aoi.name +
                                                 "' has an ignition_date but no burn profile");
            const json& b = r["burn"];
            region.burn.initial = levels_from_json(b["initial"], path, "burn.initial");
            region.burn.final_levels = levels_from_json(b["final"], path, "burn.final");
            if (b.contains("tau_days")) region.burn.tau_days = b["tau_days"].get<double>();
        }
        spec.regions.push_back(std::move(region));
    }

    spec.validate();
    return spec;
}

void write_dataset(const SynthSpec& spec, const std::string& out_dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory '" + out_dir + "'");
    const fs::path dir(out_dir);

    const std::vector<Scene> scenes = generate_dataset(spec);

    std::string manifest;
    for (std::size_t i = 0; i < scenes.size(); ++i) {
        const Scene& s = scenes[i];
        const std::string tag = s.date.to_string();
        const std::string b4 = "b04_" + tag + ".asc";
        const std::string b8 = "b08_" + tag + ".asc";
        const std::string b11 = "b11_" + tag + ".asc";
        write_ascii_grid(s.band(BandId::B4), (dir / b4).string());
        write_ascii_grid(s.band(BandId::B8), (dir / b8).string());
        write_ascii_grid(s.band(BandId::B11), (dir / b11).string());

        const std::string n = std::to_string(i);
        manifest += "scene." + n + ".date = " + tag + "\n";
        manifest += "scene." + n + ".cloud = " + to_string(s.cloud) + "\n";
        manifest += "scene." + n + ".band.B4 = " + b4 + "\n";
        manifest += "scene." + n + ".band.B8 = " + b8 + "\n";
        manifest += "scene." + n + ".band.B11 = " + b11 + "\n";
    }
    {
        std::ofstream file(dir / "manifest.txt", std::ios::binary);
        if (!file) throw IoError("cannot write manifest in '" + out_dir + "'");
        file << manifest;
    }

    write_ascii_grid(generate_gt(spec), (dir / "gt.asc").string());

    for (const RegionProfile& r : spec.regions)
        save_aoi(r.aoi, (dir / ("aoi_" + r.aoi.name + ".json")).string());

    json meta;
    meta["seed"] = spec.seed;
    meta["noise_sigma"] = spec.noise_sigma;
    meta["noise_algorithm"] = kNoiseAlgorithmId;
    json dates = json::array();
    for (const Date& d : spec.dates) dates.push_back(d.to_string());
    meta["dates"] = dates;
    meta["geometry"] = {{"n_cols", spec.geometry.n_cols},
                        {"n_rows", spec.geometry.n_rows},
                        {"x_origin", spec.geometry.x_origin},
                        {"y_origin", spec.geometry.y_origin},
                        {"cell_size", spec.geometry.cell_size}};
    std::ofstream file(dir / "metadata.json", std::ios::binary);
    if (!file) throw IoError("cannot write metadata in '" + out_dir + "'");
    file << meta.dump(2) << "\n";
}

}  // namespace firerisk

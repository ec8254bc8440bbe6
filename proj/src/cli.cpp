#include "firerisk/cli.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "firerisk/aoi.hpp"
#include "firerisk/ascii_grid.hpp"
#include "firerisk/error.hpp"
#include "firerisk/indices.hpp"
#include "firerisk/manifest.hpp"
#include "firerisk/masking.hpp"
#include "firerisk/parallel.hpp"
#include "firerisk/risk.hpp"
#include "firerisk/scene.hpp"
#include "firerisk/synth.hpp"
#include "firerisk/timeseries.hpp"
#include "firerisk/validate.hpp"

namespace firerisk::cli {

namespace {

std::string check_date(const std::string& text) {
    try {
        Date::parse(text);
        return {};
    } catch (const Error& e) {
        return e.what();
    }
}

const Scene& scene_on(const std::vector<Scene>& scenes, const Date& date) {
    for (const Scene& s : scenes)
        if (s.date == date) return s;
    throw Error("manifest has no scene dated " + date.to_string());
}

void warn_negative(const IndexGrid& index, const std::string& label) {
    if (index.negative_input_cells > 0)
        std::cerr << "warning: " << label << ": " << index.negative_input_cells
                  << " cells with negative reflectance\n";
}

struct IndexArgs {
    std::string kind = "ndwi";
    std::string b4, b8, b11, out;
};

int run_index(const IndexArgs& a) {
    Scene scene;
    scene.date = Date{2000, 1, 1};  // placeholder, only surfaces in error text
    if (!a.b4.empty()) scene.bands.emplace(BandId::B4, read_ascii_grid(a.b4));
    scene.bands.emplace(BandId::B8, read_ascii_grid(a.b8));
    if (!a.b11.empty()) scene.bands.emplace(BandId::B11, read_ascii_grid(a.b11));

    IndexGrid result;
    if (a.kind == "ndvi") {
        if (a.b4.empty()) throw Error("index --kind ndvi needs --b4");
        const std::array<BandId, 2> req = {BandId::B4, BandId::B8};
        const GridGeometry common = common_geometry(scene, req);
        result = compute_ndvi(band_at(scene, BandId::B8, common),
                              band_at(scene, BandId::B4, common));
    } else {
        if (a.b11.empty()) throw Error("index --kind ndwi needs --b11");
        const std::array<BandId, 2> req = {BandId::B8, BandId::B11};
        const GridGeometry common = common_geometry(scene, req);
        result = compute_ndwi(band_at(scene, BandId::B8, common),
                              band_at(scene, BandId::B11, common));
    }
    warn_negative(result, a.kind);
    write_ascii_grid(result.grid, a.out);
    return 0;
}

struct SeriesArgs {
    std::string manifest, out;
    std::vector<std::string> aois;
    double ndvi_threshold = 0.2;
};

int run_series(const SeriesArgs& a) {
    const std::vector<Scene> scenes = load_scene_manifest(a.manifest);
    std::vector<IndexSeries> all;
    all.reserve(a.aois.size());
    for (const std::string& path : a.aois)
        all.push_back(build_series(scenes, load_aoi(path), a.ndvi_threshold));
    export_series_csv(all, a.out);
    return 0;
}

struct RiskmapArgs {
    std::string manifest, date, aoi;
    std::string ppm, pgm, grid;
    double ndwi_threshold = 0.2;
    double ndvi_threshold = 0.2;
};

int run_riskmap(const RiskmapArgs& a) {
    const RiskConfig cfg{a.ndwi_threshold, a.ndvi_threshold};
    cfg.validate();

    const std::vector<Scene> scenes = load_scene_manifest(a.manifest);
    const Scene& scene = scene_on(scenes, Date::parse(a.date));

    static constexpr std::array<BandId, 3> kRequired = {BandId::B4, BandId::B8,
                                                        BandId::B11};
    const GridGeometry common = common_geometry(scene, kRequired);
    const RasterGrid red = band_at(scene, BandId::B4, common);
    const RasterGrid nir = band_at(scene, BandId::B8, common);
    const RasterGrid swir = band_at(scene, BandId::B11, common);

    const IndexGrid ndvi = compute_ndvi(nir, red);
    const IndexGrid ndwi = compute_ndwi(nir, swir);
    warn_negative(ndwi, "scene " + scene.date.to_string());

    std::vector<PixelMask> parts;
    parts.push_back(vegetation_mask(ndvi, cfg.ndvi_threshold));
    if (!a.aoi.empty())
        parts.push_back(PixelMask{rasterize_aoi(load_aoi(a.aoi), common), MaskSource::Aoi});
    if (scene.cloud_mask) {
        require_compatible(scene.cloud_mask->geometry(), common, "riskmap cloud mask");
        PixelMask clear{MaskGrid(common), MaskSource::Cloud};
        const std::uint8_t* cloudy = scene.cloud_mask->cells().data();
        std::uint8_t* dst = clear.grid.raw();
        for (std::size_t i = 0; i < common.cell_count(); ++i) dst[i] = cloudy[i] ? 0 : 1;
        parts.push_back(std::move(clear));
    } else if (scene.cloud != CloudCover::None) {
        std::cerr << "warning: scene " << scene.date.to_string() << " is flagged "
                  << to_string(scene.cloud)
                  << " cloud cover but has no cloud mask; classifying it whole\n";
    }

    const RiskMap map = classify_risk(ndwi, combine_masks(parts), cfg);
    if (!a.ppm.empty()) render_risk_ppm(ndwi, map, a.ppm);
    if (!a.pgm.empty()) render_binary_pgm(map, a.pgm);
    if (!a.grid.empty()) write_ascii_grid(risk_to_grid(map), a.grid);
    return 0;
}

struct ValidateArgs {
    std::string prediction, gt, out;
};

std::string format_metric(const std::optional<double>& value) {
    if (!value) return "";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", *value);
    return buf;
}

int run_validate(const ValidateArgs& a) {
    const RiskMap map = risk_from_grid(read_ascii_grid(a.prediction));
    const ConfusionMatrix cm = confusion(map, read_ascii_grid(a.gt));
    const Metrics m = metrics(cm);

    std::string text = "metric,value\n";
    text += "true_positive," + std::to_string(cm.true_positive) + '\n';
    text += "false_positive," + std::to_string(cm.false_positive) + '\n';
    text += "false_negative," + std::to_string(cm.false_negative) + '\n';
    text += "true_negative," + std::to_string(cm.true_negative) + '\n';
    text += "accuracy," + format_metric(m.accuracy) + '\n';
    text += "precision," + format_metric(m.precision) + '\n';
    text += "recall," + format_metric(m.recall) + '\n';
    text += "iou," + format_metric(m.iou) + '\n';

    std::cout << text;
    if (!a.out.empty()) {
        std::ofstream file(a.out, std::ios::binary);
        if (!file) throw IoError("cannot open '" + a.out + "' for writing");
        file.write(text.data(), static_cast<std::streamsize>(text.size()));
        if (!file) throw IoError("failed writing '" + a.out + "'");
    }
    return 0;
}

struct SynthArgs {
    std::string spec, out;
};

int run_synth(const SynthArgs& a) {
    write_dataset(load_synth_spec(a.spec), a.out);
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
    try {
        CLI::App app{"Fire-risk mapping from multispectral reflectance rasters"};
        app.require_subcommand(1);
        app.fallthrough();

        int threads = 0;
        app.add_option("--threads", threads,
                       "Worker threads for raster passes (0 = all hardware threads)")
            ->check(CLI::NonNegativeNumber);

        IndexArgs ia;
        CLI::App* index = app.add_subcommand(
            "index", "Compute a water or vegetation index grid for one scene");
        index->add_option("--kind", ia.kind, "Index to compute")
            ->check(CLI::IsMember({"ndwi", "ndvi"}))
            ->capture_default_str();
        index->add_option("--b4", ia.b4, "Red band ASCII grid (NDVI)");
        index->add_option("--b8", ia.b8, "NIR band ASCII grid")->required();
        index->add_option("--b11", ia.b11, "SWIR band ASCII grid (NDWI)");
        index->add_option("--out", ia.out, "Output ASCII grid")->required();

        SeriesArgs sa;
        CLI::App* series = app.add_subcommand(
            "series", "Per-AOI NDWI means across a scene manifest, as CSV");
        series->add_option("--manifest", sa.manifest, "Scene manifest file")->required();
        series->add_option("--aoi", sa.aois, "AOI JSON file (repeatable)")->required();
        series->add_option("--out", sa.out, "Output CSV")->required();
        series->add_option("--ndvi-threshold", sa.ndvi_threshold,
                           "Vegetation mask threshold")
            ->check(CLI::Range(-1.0, 1.0))
            ->capture_default_str();

        RiskmapArgs ra;
        CLI::App* riskmap = app.add_subcommand(
            "riskmap", "Classify fire risk for one scene and render maps");
        riskmap->add_option("--manifest", ra.manifest, "Scene manifest file")->required();
        riskmap->add_option("--date", ra.date, "Scene date, YYYY-MM-DD")
            ->required()
            ->check(check_date, "DATE");
        riskmap->add_option("--aoi", ra.aoi, "Restrict to an AOI JSON file");
        riskmap->add_option("--ndwi-threshold", ra.ndwi_threshold,
                            "NDWI at or below this is at risk")
            ->check(CLI::Range(-1.0, 1.0))
            ->capture_default_str();
        riskmap->add_option("--ndvi-threshold", ra.ndvi_threshold,
                            "Vegetation mask threshold")
            ->check(CLI::Range(-1.0, 1.0))
            ->capture_default_str();
        riskmap->add_option("--ppm", ra.ppm, "Color risk map (PPM)");
        riskmap->add_option("--pgm", ra.pgm, "Binary risk map (PGM)");
        riskmap->add_option("--grid", ra.grid, "Risk classes as ASCII grid");

        ValidateArgs va;
        CLI::App* validate = app.add_subcommand(
            "validate", "Confusion matrix and metrics against a ground-truth grid");
        validate->add_option("--prediction", va.prediction,
                             "Risk ASCII grid (1 at risk, 0 not, nodata unclassified)")
            ->required();
        validate->add_option("--gt", va.gt, "Ground-truth ASCII grid (nonzero = burned)")
            ->required();
        validate->add_option("--out", va.out, "Also write the CSV here");

        SynthArgs ya;
        CLI::App* synth = app.add_subcommand(
            "synth", "Generate a synthetic scene set with ground truth");
        synth->add_option("--spec", ya.spec, "Synthesis spec (JSON)")->required();
        synth->add_option("--out", ya.out, "Output directory")->required();

        try {
            app.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            const int code = app.exit(e);
            return code == 0 ? 0 : 1;
        }

        set_max_threads(threads);

        if (*riskmap && ra.ppm.empty() && ra.pgm.empty() && ra.grid.empty()) {
            std::cerr << "riskmap: at least one of --ppm, --pgm or --grid is required\n"
                      << "Run with --help for more information.\n";
            return 1;
        }

        if (*index) return run_index(ia);
        if (*series) return run_series(sa);
        if (*riskmap) return run_riskmap(ra);
        if (*validate) return run_validate(va);
        if (*synth) return run_synth(ya);
        return 0;
    } catch (const Error& e) {
        std::cerr << "firerisk: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "firerisk: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace firerisk::cli

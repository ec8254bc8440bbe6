#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "firerisk/aoi.hpp"
#include "firerisk/ascii_grid.hpp"
#include "firerisk/error.hpp"
#include "firerisk/indices.hpp"
#include "firerisk/manifest.hpp"
#include "firerisk/masking.hpp"
#include "firerisk/parallel.hpp"
#include "firerisk/risk.hpp"
#include "firerisk/rng.hpp"
#include "firerisk/scene.hpp"
#include "firerisk/synth.hpp"
#include "firerisk/timeseries.hpp"
#include "firerisk/validate.hpp"

namespace py = pybind11;
using namespace firerisk;

namespace {

py::array_t<double> grid_to_numpy(const RasterGrid& g) {
    py::array_t<double> out({g.n_rows(), g.n_cols()});
    auto u = out.mutable_unchecked<2>();
    for (int r = 0; r < g.n_rows(); ++r)
        for (int c = 0; c < g.n_cols(); ++c)
            u(r, c) = g.valid(r, c) ? g.value(r, c)
                                    : std::numeric_limits<double>::quiet_NaN();
    return out;
}

RasterGrid grid_from_numpy(const GridGeometry& geom,
                           const py::array_t<double, py::array::c_style |
                                                         py::array::forcecast>& arr) {
    if (arr.ndim() != 2 || arr.shape(0) != geom.n_rows || arr.shape(1) != geom.n_cols)
        throw Error("array shape does not match the geometry");
    RasterGrid g(geom);
    auto u = arr.unchecked<2>();
    for (int r = 0; r < geom.n_rows; ++r)
        for (int c = 0; c < geom.n_cols; ++c) {
            const double v = u(r, c);
            if (std::isfinite(v)) g.set(r, c, v);  // non-finite cells stay nodata
        }
    return g;
}

py::array_t<bool> mask_to_numpy(const MaskGrid& m) {
    py::array_t<bool> out({m.n_rows(), m.n_cols()});
    auto u = out.mutable_unchecked<2>();
    for (int r = 0; r < m.n_rows(); ++r)
        for (int c = 0; c < m.n_cols(); ++c) u(r, c) = m.get(r, c);
    return out;
}

MaskGrid mask_from_numpy(const GridGeometry& geom,
                         const py::array_t<bool, py::array::c_style |
                                                     py::array::forcecast>& arr) {
    if (arr.ndim() != 2 || arr.shape(0) != geom.n_rows || arr.shape(1) != geom.n_cols)
        throw Error("array shape does not match the geometry");
    MaskGrid m(geom);
    auto u = arr.unchecked<2>();
    for (int r = 0; r < geom.n_rows; ++r)
        for (int c = 0; c < geom.n_cols; ++c) m.set(r, c, u(r, c));
    return m;
}

py::array_t<std::uint8_t> risk_to_numpy(const RiskMap& map) {
    py::array_t<std::uint8_t> out({map.geometry.n_rows, map.geometry.n_cols});
    auto u = out.mutable_unchecked<2>();
    for (int r = 0; r < map.geometry.n_rows; ++r)
        for (int c = 0; c < map.geometry.n_cols; ++c)
            u(r, c) = static_cast<std::uint8_t>(map.at(r, c));
    return out;
}

}  // namespace

PYBIND11_MODULE(_firerisk, m) {
    m.doc() = "Fire-risk raster analytics: NDWI/NDVI indices, per-AOI time "
              "series, threshold classification and validation";

    py::register_exception<Error>(m, "Error");

    py::class_<Date>(m, "Date")
        .def(py::init<>())
        .def(py::init([](int year, int month, int day) {
                 return Date{year, month, day};
             }),
             py::arg("year"), py::arg("month"), py::arg("day"))
        .def_readwrite("year", &Date::year)
        .def_readwrite("month", &Date::month)
        .def_readwrite("day", &Date::day)
        .def_static("parse", &Date::parse, py::arg("text"))
        .def("day_number", &Date::day_number)
        .def("__str__", &Date::to_string)
        .def("__repr__",
             [](const Date& d) { return "Date(" + d.to_string() + ")"; })
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def(py::self < py::self)
        .def(py::self <= py::self)
        .def(py::self > py::self)
        .def(py::self >= py::self);
    m.def("days_between", &days_between, py::arg("from_date"), py::arg("to_date"));

    py::class_<GridGeometry>(m, "GridGeometry")
        .def(py::init<>())
        .def(py::init([](int n_cols, int n_rows, double x_origin, double y_origin,
                         double cell_size) {
                 return GridGeometry{n_cols, n_rows, x_origin, y_origin, cell_size};
             }),
             py::arg("n_cols"), py::arg("n_rows"), py::arg("x_origin"),
             py::arg("y_origin"), py::arg("cell_size"))
        .def_readwrite("n_cols", &GridGeometry::n_cols)
        .def_readwrite("n_rows", &GridGeometry::n_rows)
        .def_readwrite("x_origin", &GridGeometry::x_origin)
        .def_readwrite("y_origin", &GridGeometry::y_origin)
        .def_readwrite("cell_size", &GridGeometry::cell_size)
        .def("cell_count", &GridGeometry::cell_count)
        .def("cell_center_x", &GridGeometry::cell_center_x, py::arg("col"))
        .def("cell_center_y", &GridGeometry::cell_center_y, py::arg("row"))
        .def("validate", &GridGeometry::validate)
        .def(py::self == py::self);

    py::class_<RasterGrid>(m, "RasterGrid")
        .def(py::init<const GridGeometry&>(), py::arg("geometry"))
        .def(py::init<const GridGeometry&, double>(), py::arg("geometry"),
             py::arg("fill"))
        .def_property_readonly("geometry", &RasterGrid::geometry)
        .def_property_readonly("n_cols", &RasterGrid::n_cols)
        .def_property_readonly("n_rows", &RasterGrid::n_rows)
        .def("valid", &RasterGrid::valid, py::arg("row"), py::arg("col"))
        .def("value", &RasterGrid::value, py::arg("row"), py::arg("col"))
        .def("set", &RasterGrid::set, py::arg("row"), py::arg("col"), py::arg("value"))
        .def("set_nodata", &RasterGrid::set_nodata, py::arg("row"), py::arg("col"))
        .def("valid_count", &RasterGrid::valid_count)
        .def("to_numpy", &grid_to_numpy,
             "Float array with NaN at nodata cells")
        .def_static("from_numpy", &grid_from_numpy, py::arg("geometry"),
                    py::arg("array"),
                    "Build a grid from a float array; non-finite cells become nodata")
        .def(py::self == py::self);

    py::class_<MaskGrid>(m, "MaskGrid")
        .def(py::init<const GridGeometry&, bool>(), py::arg("geometry"),
             py::arg("fill") = false)
        .def_property_readonly("geometry", &MaskGrid::geometry)
        .def("get", &MaskGrid::get, py::arg("row"), py::arg("col"))
        .def("set", &MaskGrid::set, py::arg("row"), py::arg("col"), py::arg("value"))
        .def("true_count", &MaskGrid::true_count)
        .def("to_numpy", &mask_to_numpy)
        .def_static("from_numpy", &mask_from_numpy, py::arg("geometry"),
                    py::arg("array"))
        .def(py::self == py::self);

    m.def("read_ascii_grid", &read_ascii_grid, py::arg("path"));
    m.def("write_ascii_grid", &write_ascii_grid, py::arg("grid"), py::arg("path"));
    m.def("downsample_mean", &downsample_mean, py::arg("grid"), py::arg("factor"));

    py::enum_<BandId>(m, "BandId")
        .value("B2", BandId::B2)
        .value("B3", BandId::B3)
        .value("B4", BandId::B4)
        .value("B5", BandId::B5)
        .value("B6", BandId::B6)
        .value("B7", BandId::B7)
        .value("B8", BandId::B8)
        .value("B8A", BandId::B8A)
        .value("B11", BandId::B11)
        .value("B12", BandId::B12);

    py::enum_<CloudCover>(m, "CloudCover")
        .value("NONE", CloudCover::None)
        .value("PARTIAL", CloudCover::Partial)
        .value("FULL", CloudCover::Full);

    py::class_<Scene>(m, "Scene")
        .def(py::init<>())
        .def_readwrite("date", &Scene::date)
        .def_readwrite("mission", &Scene::mission)
        .def_readwrite("cloud", &Scene::cloud)
        .def_readwrite("cloud_mask", &Scene::cloud_mask)
        .def("has_band", &Scene::has_band, py::arg("band"))
        .def("band", &Scene::band, py::arg("band"))
        .def("set_band",
             [](Scene& s, BandId id, const RasterGrid& grid) {
                 s.bands.insert_or_assign(id, grid);
             },
             py::arg("band"), py::arg("grid"));
    m.def("common_geometry",
          [](const Scene& scene, const std::vector<BandId>& required) {
              return common_geometry(scene, required);
          },
          py::arg("scene"), py::arg("required"));
    m.def("band_at", &band_at, py::arg("scene"), py::arg("band"), py::arg("target"));
    m.def("load_scene_manifest", &load_scene_manifest, py::arg("path"));

    py::enum_<IndexKind>(m, "IndexKind")
        .value("NDWI", IndexKind::NDWI)
        .value("NDVI", IndexKind::NDVI);

    py::class_<IndexGrid>(m, "IndexGrid")
        .def_readonly("grid", &IndexGrid::grid)
        .def_readonly("kind", &IndexGrid::kind)
        .def_readonly("negative_input_cells", &IndexGrid::negative_input_cells);
    m.def("compute_ndwi", &compute_ndwi, py::arg("nir"), py::arg("swir"));
    m.def("compute_ndvi", &compute_ndvi, py::arg("nir"), py::arg("red"));

    py::enum_<MaskSource>(m, "MaskSource")
        .value("VEGETATION", MaskSource::Vegetation)
        .value("CLOUD", MaskSource::Cloud)
        .value("AOI", MaskSource::Aoi)
        .value("COMBINED", MaskSource::Combined);

    py::class_<PixelMask>(m, "PixelMask")
        .def(py::init([](const MaskGrid& grid, MaskSource source) {
                 return PixelMask{grid, source};
             }),
             py::arg("grid"), py::arg("source") = MaskSource::Combined)
        .def_readonly("grid", &PixelMask::grid)
        .def_readonly("source", &PixelMask::source);
    m.def("vegetation_mask", &vegetation_mask, py::arg("ndvi"), py::arg("threshold"));
    m.def("combine_masks",
          [](const std::vector<PixelMask>& masks) { return combine_masks(masks); },
          py::arg("masks"));
    m.def("apply_mask", &apply_mask, py::arg("grid"), py::arg("mask"));

    py::class_<AreaOfInterest>(m, "AreaOfInterest")
        .def_readwrite("name", &AreaOfInterest::name)
        .def_readwrite("polygon", &AreaOfInterest::polygon)
        .def_property_readonly("is_polygon", &AreaOfInterest::is_polygon)
        .def("validate", &AreaOfInterest::validate);
    m.def("aoi_from_polygon", &aoi_from_polygon, py::arg("name"), py::arg("vertices"));
    m.def("aoi_from_mask", &aoi_from_mask, py::arg("name"), py::arg("mask"));
    m.def("rasterize_aoi", &rasterize_aoi, py::arg("aoi"), py::arg("geometry"));
    m.def("load_aoi", &load_aoi, py::arg("path"));
    m.def("save_aoi", &save_aoi, py::arg("aoi"), py::arg("path"));

    py::class_<ZonalStats>(m, "ZonalStats")
        .def_readonly("mean", &ZonalStats::mean)
        .def_readonly("count", &ZonalStats::count);
    m.def("zonal_mean", &zonal_mean, py::arg("grid"), py::arg("mask"));

    py::class_<SeriesPoint>(m, "SeriesPoint")
        .def_readonly("date", &SeriesPoint::date)
        .def_readonly("mean_ndwi", &SeriesPoint::mean_ndwi)
        .def_readonly("valid_pixels", &SeriesPoint::valid_pixels)
        .def_readonly("cloud", &SeriesPoint::cloud);

    py::class_<IndexSeries>(m, "IndexSeries")
        .def_readonly("aoi_name", &IndexSeries::aoi_name)
        .def_readonly("points", &IndexSeries::points);
    m.def("build_series",
          [](const std::vector<Scene>& scenes, const AreaOfInterest& aoi,
             double ndvi_threshold) {
              return build_series(scenes, aoi, ndvi_threshold);
          },
          py::arg("scenes"), py::arg("aoi"), py::arg("ndvi_threshold") = 0.2);
    m.def("export_series_csv",
          [](const std::vector<IndexSeries>& series, const std::string& path) {
              export_series_csv(series, path);
          },
          py::arg("series"), py::arg("path"));
    m.def("parse_series_csv", &parse_series_csv, py::arg("path"));

    py::class_<RiskConfig>(m, "RiskConfig")
        .def(py::init([](double ndwi_threshold, double ndvi_threshold) {
                 return RiskConfig{ndwi_threshold, ndvi_threshold};
             }),
             py::arg("ndwi_threshold") = 0.2, py::arg("ndvi_threshold") = 0.2)
        .def_readwrite("ndwi_threshold", &RiskConfig::ndwi_threshold)
        .def_readwrite("ndvi_threshold", &RiskConfig::ndvi_threshold)
        .def("validate", &RiskConfig::validate);

    py::enum_<RiskClass>(m, "RiskClass")
        .value("NOT_AT_RISK", RiskClass::NotAtRisk)
        .value("AT_RISK", RiskClass::AtRisk)
        .value("UNCLASSIFIED", RiskClass::Unclassified);

    py::class_<RiskMap>(m, "RiskMap")
        .def_readonly("geometry", &RiskMap::geometry)
        .def_readonly("ndwi_threshold", &RiskMap::ndwi_threshold)
        .def("at", &RiskMap::at, py::arg("row"), py::arg("col"))
        .def("to_numpy", &risk_to_numpy, "Class codes as an integer array");
    m.def("classify_risk", &classify_risk, py::arg("ndwi"), py::arg("vegetation"),
          py::arg("config"));
    m.def("classify_aoi", &classify_aoi, py::arg("series"), py::arg("date"),
          py::arg("config"));
    m.def("render_risk_ppm", &render_risk_ppm, py::arg("ndwi"), py::arg("risk"),
          py::arg("path"));
    m.def("render_binary_pgm", &render_binary_pgm, py::arg("risk"), py::arg("path"));
    m.def("risk_to_grid", &risk_to_grid, py::arg("risk"));
    m.def("risk_from_grid", &risk_from_grid, py::arg("grid"),
          py::arg("ndwi_threshold") = 0.2);

    py::class_<ConfusionMatrix>(m, "ConfusionMatrix")
        .def_readonly("true_positive", &ConfusionMatrix::true_positive)
        .def_readonly("false_positive", &ConfusionMatrix::false_positive)
        .def_readonly("false_negative", &ConfusionMatrix::false_negative)
        .def_readonly("true_negative", &ConfusionMatrix::true_negative)
        .def("total", &ConfusionMatrix::total)
        .def(py::self == py::self);
    m.def("confusion", &confusion, py::arg("risk"), py::arg("gt"));

    py::class_<Metrics>(m, "Metrics")
        .def_readonly("accuracy", &Metrics::accuracy)
        .def_readonly("precision", &Metrics::precision)
        .def_readonly("recall", &Metrics::recall)
        .def_readonly("iou", &Metrics::iou);
    m.def("metrics", &metrics, py::arg("confusion"));

    py::class_<SynthSpec>(m, "SynthSpec")
        .def_readwrite("geometry", &SynthSpec::geometry)
        .def_readwrite("dates", &SynthSpec::dates)
        .def_readwrite("noise_sigma", &SynthSpec::noise_sigma)
        .def_readwrite("seed", &SynthSpec::seed)
        .def("validate", &SynthSpec::validate);
    m.def("load_synth_spec", &load_synth_spec, py::arg("path"));
    m.def("generate_dataset", &generate_dataset, py::arg("spec"));
    m.def("generate_gt", &generate_gt, py::arg("spec"));
    m.def("write_dataset", &write_dataset, py::arg("spec"), py::arg("out_dir"));

    m.def("set_max_threads", &set_max_threads, py::arg("n"));
    m.def("max_threads", &max_threads);

    m.attr("NOISE_ALGORITHM") = kNoiseAlgorithmId;
    m.attr("__version__") = "0.1.0";
}

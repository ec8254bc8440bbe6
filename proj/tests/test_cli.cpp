#include <doctest.h>

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "firerisk/ascii_grid.hpp"
#include "firerisk/cli.hpp"
#include "firerisk/timeseries.hpp"
#include "helpers.hpp"

using namespace firerisk;
using testutil::read_file;
using testutil::TempDir;
using testutil::write_file;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

// Runs the CLI entry point with captured streams so usage errors and help
// text do not pollute the test log.
CliResult run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("firerisk");
    for (const std::string& a : args) argv.push_back(a.c_str());

    std::ostringstream out, err;
    std::streambuf* old_out = std::cout.rdbuf(out.rdbuf());
    std::streambuf* old_err = std::cerr.rdbuf(err.rdbuf());
    const int code = cli::run(static_cast<int>(argv.size()), argv.data());
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
    return {code, out.str(), err.str()};
}

const char* kSpecJson = R"({
  "geometry": {"n_cols": 4, "n_rows": 4, "x_origin": 0, "y_origin": 0, "cell_size": 20},
  "dates": ["2017-06-01", "2017-07-01", "2017-07-31", "2017-12-01"],
  "regions": [
    {
      "name": "scar",
      "polygon": [[0, 0], [40, 0], [40, 80], [0, 80]],
      "baseline": {"b4": 0.06, "b8": 0.45, "b11": 0.15},
      "ignition_date": "2017-07-01",
      "burn": {
        "initial": {"b4": 0.14, "b8": 0.30, "b11": 0.26},
        "final": {"b4": 0.16, "b8": 0.26, "b11": 0.40},
        "tau_days": 30
      }
    }
  ]
})";

}  // namespace

TEST_CASE("usage mistakes exit with 1") {
    CHECK(run_cli({}).code == 1);
    CHECK(run_cli({"enhance"}).code == 1);
    CHECK(run_cli({"--bogus"}).code == 1);
    CHECK(run_cli({"index"}).code == 1);  // --b8/--out missing
    CHECK(run_cli({"series", "--manifest", "m", "--aoi", "a"}).code == 1);
    CHECK(run_cli({"--threads", "-2", "validate", "--prediction", "p", "--gt", "g"}).code ==
          1);
    CHECK(run_cli({"riskmap", "--manifest", "m", "--date", "2017-13-01", "--grid", "r"})
              .code == 1);
    CHECK(run_cli({"riskmap", "--manifest", "m", "--date", "2017-07-07",
                   "--ndwi-threshold", "1.5", "--grid", "r"})
              .code == 1);

    const CliResult no_output =
        run_cli({"riskmap", "--manifest", "m", "--date", "2017-07-07"});
    CHECK(no_output.code == 1);
    CHECK(no_output.err.find("--ppm") != std::string::npos);
}

TEST_CASE("help exits with 0") {
    const CliResult top = run_cli({"--help"});
    CHECK(top.code == 0);
    CHECK(top.out.find("riskmap") != std::string::npos);

    const CliResult sub = run_cli({"riskmap", "--help"});
    CHECK(sub.code == 0);
    CHECK(sub.out.find("--ppm") != std::string::npos);
}

TEST_CASE("data problems exit with 2") {
    TempDir tmp;
    CHECK(run_cli({"synth", "--spec", tmp.path("absent.json"), "--out", tmp.path("out")})
              .code == 2);
    CHECK(run_cli({"series", "--manifest", tmp.path("absent.manifest"), "--aoi",
                   tmp.path("a.json"), "--out", tmp.path("s.csv")})
              .code == 2);

    write_ascii_grid(RasterGrid(GridGeometry{2, 2, 0.0, 0.0, 20.0}, 0.4),
                     tmp.path("b8.asc"));
    const CliResult no_b11 = run_cli(
        {"index", "--b8", tmp.path("b8.asc"), "--out", tmp.path("ndwi.asc")});
    CHECK(no_b11.code == 2);
    CHECK(no_b11.err.find("--b11") != std::string::npos);
}

TEST_CASE("the subcommands compose into the full workflow") {
    TempDir tmp;
    const std::string spec = tmp.path("spec.json");
    const std::string data = tmp.path("data");
    write_file(spec, kSpecJson);

    // synthesize
    REQUIRE(run_cli({"synth", "--spec", spec, "--out", data}).code == 0);
    const std::string manifest = data + "/manifest.txt";
    const std::string aoi = data + "/aoi_scar.json";
    REQUIRE(std::filesystem::exists(manifest));
    REQUIRE(std::filesystem::exists(aoi));

    // NDWI trend over the burned region; --threads may trail the subcommand
    const std::string csv = tmp.path("series.csv");
    REQUIRE(run_cli({"series", "--manifest", manifest, "--aoi", aoi, "--out", csv,
                     "--threads", "2"})
                .code == 0);
    const std::vector<IndexSeries> series = parse_series_csv(csv);
    REQUIRE(series.size() == 1);
    CHECK(series[0].aoi_name == "scar");
    REQUIRE(series[0].points.size() == 4);
    CHECK(series[0].points[0].mean_ndwi == doctest::Approx(0.5).epsilon(1e-5));
    CHECK(series[0].points[0].valid_pixels == 8);
    // the burn drags the mean NDWI down over time
    CHECK(series[0].points[3].mean_ndwi < series[0].points[1].mean_ndwi);
    CHECK(series[0].points[1].mean_ndwi < series[0].points[0].mean_ndwi);

    // standalone index grid for one date
    const std::string ndwi = tmp.path("ndwi.asc");
    REQUIRE(run_cli({"--threads", "1", "index", "--kind", "ndwi", "--b8",
                     data + "/b08_2017-06-01.asc", "--b11", data + "/b11_2017-06-01.asc",
                     "--out", ndwi})
                .code == 0);
    const RasterGrid ndwi_grid = read_ascii_grid(ndwi);
    CHECK(ndwi_grid.geometry().n_cols == 4);  // resampled to the B11 grid
    CHECK(ndwi_grid.value(0, 0) == doctest::Approx(0.5));
    CHECK(ndwi_grid.value(0, 3) == doctest::Approx(0.0));

    // risk map months after ignition
    const std::string risk = tmp.path("risk.asc");
    const std::string ppm = tmp.path("risk.ppm");
    const std::string pgm = tmp.path("risk.pgm");
    REQUIRE(run_cli({"riskmap", "--manifest", manifest, "--date", "2017-12-01", "--aoi",
                     aoi, "--ppm", ppm, "--pgm", pgm, "--grid", risk})
                .code == 0);
    CHECK(read_file(ppm).size() == 11 + 48);  // "P6\n4 4\n255\n" + rgb
    CHECK(read_file(pgm).size() == 11 + 16);

    const RasterGrid risk_grid = read_ascii_grid(risk);
    for (int r = 0; r < 4; ++r) {
        CHECK(risk_grid.value(r, 0) == 1.0);  // burned half at risk
        CHECK(risk_grid.value(r, 1) == 1.0);
        CHECK_FALSE(risk_grid.valid(r, 2));  // outside the AOI
        CHECK_FALSE(risk_grid.valid(r, 3));
    }

    // against the ground truth the prediction is perfect
    const std::string report = tmp.path("metrics.csv");
    const CliResult validated = run_cli({"validate", "--prediction", risk, "--gt",
                                         data + "/gt.asc", "--out", report});
    REQUIRE(validated.code == 0);
    CHECK(validated.out.find("true_positive,8\n") != std::string::npos);
    CHECK(validated.out.find("accuracy,1.000000\n") != std::string::npos);
    CHECK(validated.out.find("iou,1.000000\n") != std::string::npos);
    CHECK(read_file(report) == validated.out);

    // a date the manifest does not list is a data error
    const CliResult bad_date = run_cli({"riskmap", "--manifest", manifest, "--date",
                                        "2017-01-01", "--grid", tmp.path("r2.asc")});
    CHECK(bad_date.code == 2);
    CHECK(bad_date.err.find("no scene dated") != std::string::npos);
}

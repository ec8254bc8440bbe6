#include <doctest.h>

#include <array>

#include "firerisk/scene.hpp"
#include "helpers.hpp"

using namespace firerisk;
using testutil::make_grid;

namespace {

Scene two_resolution_scene() {
    Scene scene;
    scene.date = Date{2017, 7, 7};
    const GridGeometry fine{4, 4, 0.0, 0.0, 10.0};
    const GridGeometry coarse{2, 2, 0.0, 0.0, 20.0};
    scene.bands.emplace(BandId::B4, RasterGrid(fine, 0.1));
    scene.bands.emplace(BandId::B8, make_grid(fine, {1, 2, 3, 4,       //
                                                     5, 6, 7, 8,       //
                                                     9, 10, 11, 12,    //
                                                     13, 14, 15, 16}));
    scene.bands.emplace(BandId::B11, RasterGrid(coarse, 0.2));
    return scene;
}

}  // namespace

TEST_CASE("band lookup names the missing band and date") {
    const Scene scene = two_resolution_scene();
    CHECK_NOTHROW(scene.band(BandId::B8));
    try {
        scene.band(BandId::B12);
        FAIL("expected Error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("2017-07-07") != std::string::npos);
        CHECK(std::string(e.what()).find("B12") != std::string::npos);
    }
}

TEST_CASE("band descriptors cover the workflow bands") {
    CHECK(band_descriptor(BandId::B4).native_resolution_m == 10.0);
    CHECK(band_descriptor(BandId::B4).center_wavelength_um == 0.665);
    CHECK(band_descriptor(BandId::B8).native_resolution_m == 10.0);
    CHECK(band_descriptor(BandId::B8).center_wavelength_um == 0.842);
    CHECK(band_descriptor(BandId::B11).native_resolution_m == 20.0);
    CHECK(band_descriptor(BandId::B11).center_wavelength_um == 1.610);
    CHECK(band_from_string("B8A") == BandId::B8A);
    CHECK_FALSE(band_from_string("B99").has_value());
}

TEST_CASE("common geometry is the coarsest required band") {
    const Scene scene = two_resolution_scene();
    const std::array<BandId, 3> req = {BandId::B4, BandId::B8, BandId::B11};
    CHECK(common_geometry(scene, req) == GridGeometry{2, 2, 0.0, 0.0, 20.0});

    const std::array<BandId, 2> fine_only = {BandId::B4, BandId::B8};
    CHECK(common_geometry(scene, fine_only) == GridGeometry{4, 4, 0.0, 0.0, 10.0});
}

TEST_CASE("common geometry rejects misaligned bands") {
    const std::array<BandId, 2> req = {BandId::B8, BandId::B11};

    Scene shifted;
    shifted.bands.emplace(BandId::B8, RasterGrid(GridGeometry{4, 4, 5.0, 0.0, 10.0}, 1.0));
    shifted.bands.emplace(BandId::B11, RasterGrid(GridGeometry{2, 2, 0.0, 0.0, 20.0}, 1.0));
    CHECK_THROWS_AS(common_geometry(shifted, req), GeometryError);

    Scene uneven;
    uneven.bands.emplace(BandId::B8, RasterGrid(GridGeometry{4, 4, 0.0, 0.0, 7.0}, 1.0));
    uneven.bands.emplace(BandId::B11, RasterGrid(GridGeometry{2, 2, 0.0, 0.0, 20.0}, 1.0));
    CHECK_THROWS_AS(common_geometry(uneven, req), GeometryError);

    Scene truncated;
    truncated.bands.emplace(BandId::B8, RasterGrid(GridGeometry{3, 4, 0.0, 0.0, 10.0}, 1.0));
    truncated.bands.emplace(BandId::B11, RasterGrid(GridGeometry{2, 2, 0.0, 0.0, 20.0}, 1.0));
    CHECK_THROWS_AS(common_geometry(truncated, req), GeometryError);

    CHECK_THROWS_AS(common_geometry(two_resolution_scene(), std::array<BandId, 0>{}),
                    Error);
}

TEST_CASE("band_at resamples or passes through") {
    const Scene scene = two_resolution_scene();
    const GridGeometry coarse{2, 2, 0.0, 0.0, 20.0};

    CHECK(band_at(scene, BandId::B11, coarse) == scene.band(BandId::B11));

    const RasterGrid b8 = band_at(scene, BandId::B8, coarse);
    CHECK(b8.geometry() == coarse);
    CHECK(b8.value(0, 0) == (1.0 + 2.0 + 5.0 + 6.0) / 4.0);
    CHECK(b8.value(1, 1) == (11.0 + 12.0 + 15.0 + 16.0) / 4.0);

    // upsampling B11 to the fine grid is not supported
    CHECK_THROWS_AS(band_at(scene, BandId::B11, GridGeometry{4, 4, 0.0, 0.0, 10.0}),
                    GeometryError);
}

TEST_CASE("cloud cover names") {
    CHECK(to_string(CloudCover::None) == "none");
    CHECK(to_string(CloudCover::Partial) == "partial");
    CHECK(to_string(CloudCover::Full) == "full");
    CHECK(cloud_cover_from_string("partial") == CloudCover::Partial);
    CHECK_FALSE(cloud_cover_from_string("cloudy").has_value());
}

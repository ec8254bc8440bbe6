#include <doctest.h>

#include <cmath>
#include <cstring>
#include <limits>
#include <random>

#include "firerisk/indices.hpp"
#include "firerisk/parallel.hpp"
#include "helpers.hpp"

using namespace firerisk;
using testutil::make_grid;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
const GridGeometry kOne{1, 1, 0.0, 0.0, 20.0};

double ndwi_of(double nir, double swir) {
    const IndexGrid out =
        compute_ndwi(make_grid(kOne, {nir}), make_grid(kOne, {swir}));
    REQUIRE(out.grid.valid(0, 0));
    return out.grid.value(0, 0);
}

RasterGrid random_grid(std::mt19937_64& rng, const GridGeometry& geom,
                       double lo, double hi, double nodata_share) {
    std::uniform_real_distribution<double> value(lo, hi);
    std::uniform_real_distribution<double> pick(0.0, 1.0);
    RasterGrid grid(geom);
    for (int r = 0; r < geom.n_rows; ++r)
        for (int c = 0; c < geom.n_cols; ++c)
            if (pick(rng) >= nodata_share) grid.set(r, c, value(rng));
    return grid;
}

// The straight-line per-pixel loop the tiled implementation must match
// bitwise.
RasterGrid reference_index(const RasterGrid& a, const RasterGrid& b) {
    RasterGrid out(a.geometry());
    for (int r = 0; r < a.n_rows(); ++r) {
        for (int c = 0; c < a.n_cols(); ++c) {
            if (!a.valid(r, c) || !b.valid(r, c)) continue;
            const double x = a.value(r, c);
            const double y = b.value(r, c);
            if (std::abs(x + y) < 1e-12) continue;
            out.set(r, c, (x - y) / (x + y));
        }
    }
    return out;
}

bool bitwise_equal(const RasterGrid& a, const RasterGrid& b) {
    if (a.geometry() != b.geometry()) return false;
    for (int r = 0; r < a.n_rows(); ++r) {
        for (int c = 0; c < a.n_cols(); ++c) {
            if (a.valid(r, c) != b.valid(r, c)) return false;
            if (a.valid(r, c) &&
                std::memcmp(&a.values()[a.index(r, c)], &b.values()[b.index(r, c)],
                            sizeof(double)) != 0)
                return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("NDWI formula on known values") {
    CHECK(ndwi_of(0.4, 0.4) == 0.0);
    CHECK(std::abs(ndwi_of(0.5, 0.1) - 0.6666666667) <= 1e-9);
    CHECK(ndwi_of(0.1, 0.5) == doctest::Approx(-2.0 / 3.0));
}

TEST_CASE("NDVI formula on known values") {
    // 0.75 and 0.25 are exact in binary, so the quotient is exactly 0.5
    const IndexGrid out =
        compute_ndvi(make_grid(kOne, {0.75}), make_grid(kOne, {0.25}));
    CHECK(out.kind == IndexKind::NDVI);
    CHECK(out.grid.value(0, 0) == 0.5);

    const IndexGrid typical =
        compute_ndvi(make_grid(kOne, {0.6}), make_grid(kOne, {0.2}));
    CHECK(typical.grid.value(0, 0) == doctest::Approx(0.5));

    const IndexGrid equal =
        compute_ndvi(make_grid(kOne, {0.3}), make_grid(kOne, {0.3}));
    CHECK(equal.grid.value(0, 0) == 0.0);
}

TEST_CASE("nodata and degenerate denominators propagate") {
    const IndexGrid zero =
        compute_ndwi(make_grid(kOne, {0.0}), make_grid(kOne, {0.0}));
    CHECK_FALSE(zero.grid.valid(0, 0));

    const IndexGrid tiny =
        compute_ndwi(make_grid(kOne, {5e-13}), make_grid(kOne, {0.0}));
    CHECK_FALSE(tiny.grid.valid(0, 0));

    const IndexGrid at_limit =
        compute_ndwi(make_grid(kOne, {1e-12}), make_grid(kOne, {0.0}));
    CHECK(at_limit.grid.valid(0, 0));
    CHECK(at_limit.grid.value(0, 0) == 1.0);

    const IndexGrid gap = compute_ndwi(make_grid(kOne, {kNaN}), make_grid(kOne, {0.4}));
    CHECK_FALSE(gap.grid.valid(0, 0));

    const IndexGrid gap2 = compute_ndwi(make_grid(kOne, {0.4}), make_grid(kOne, {kNaN}));
    CHECK_FALSE(gap2.grid.valid(0, 0));
}

TEST_CASE("negative reflectances compute but are counted") {
    const IndexGrid out =
        compute_ndwi(make_grid(kOne, {-0.1}), make_grid(kOne, {0.3}));
    CHECK(out.negative_input_cells == 1);
    CHECK(out.grid.value(0, 0) == doctest::Approx(-2.0));

    const IndexGrid clean =
        compute_ndwi(make_grid(kOne, {0.1}), make_grid(kOne, {0.3}));
    CHECK(clean.negative_input_cells == 0);
}

TEST_CASE("incompatible geometries are rejected") {
    const RasterGrid a(GridGeometry{2, 2, 0.0, 0.0, 20.0}, 0.5);
    const RasterGrid b(GridGeometry{2, 2, 0.0, 0.0, 10.0}, 0.5);
    CHECK_THROWS_AS(compute_ndwi(a, b), GeometryError);
    CHECK_THROWS_AS(compute_ndvi(a, b), GeometryError);
}

TEST_CASE("tiled computation matches the per-pixel reference bitwise") {
    std::mt19937_64 rng(101);
    const GridGeometry geom{64, 64, 0.0, 0.0, 20.0};

    for (int trial = 0; trial < 10; ++trial) {
        const RasterGrid a = random_grid(rng, geom, 0.0, 0.6, 0.1);
        const RasterGrid b = random_grid(rng, geom, 0.0, 0.6, 0.1);
        const RasterGrid want = reference_index(a, b);

        for (int workers : {1, 2, 3, 7}) {
            testutil::ThreadGuard guard(workers);
            const IndexGrid got = compute_ndwi(a, b);
            CHECK(bitwise_equal(got.grid, want));
        }
    }
}

TEST_CASE("index invariants on non-negative inputs") {
    std::mt19937_64 rng(103);
    const GridGeometry geom{32, 32, 0.0, 0.0, 20.0};

    for (int trial = 0; trial < 10; ++trial) {
        const RasterGrid a = random_grid(rng, geom, 0.0, 1.0, 0.05);
        const RasterGrid b = random_grid(rng, geom, 0.0, 1.0, 0.05);

        const IndexGrid ab = compute_ndwi(a, b);
        const IndexGrid ba = compute_ndwi(b, a);

        RasterGrid a_scaled(geom);
        RasterGrid b_scaled(geom);
        const double scale = 3.7;
        for (int r = 0; r < geom.n_rows; ++r)
            for (int c = 0; c < geom.n_cols; ++c) {
                if (a.valid(r, c)) a_scaled.set(r, c, a.value(r, c) * scale);
                if (b.valid(r, c)) b_scaled.set(r, c, b.value(r, c) * scale);
            }
        const IndexGrid scaled = compute_ndwi(a_scaled, b_scaled);

        for (int r = 0; r < geom.n_rows; ++r) {
            for (int c = 0; c < geom.n_cols; ++c) {
                if (!ab.grid.valid(r, c)) continue;
                const double v = ab.grid.value(r, c);
                CHECK(v >= -1.0);
                CHECK(v <= 1.0);
                REQUIRE(ba.grid.valid(r, c));
                CHECK(std::abs(v + ba.grid.value(r, c)) <= 1e-15);
                if (scaled.grid.valid(r, c))
                    CHECK(std::abs(v - scaled.grid.value(r, c)) <= 1e-15);
            }
        }
    }
}

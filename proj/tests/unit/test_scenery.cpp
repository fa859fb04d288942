#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "systems.hpp"
#include "tangentlab/error.hpp"
#include "tangentlab/scenery.hpp"

using namespace tangentlab;

namespace {

const SelfAffineSystem& e6() {
    static const SelfAffineSystem sys = testsys::e6();
    return sys;
}

ZoomParams small_zoom() {
    ZoomParams p;
    p.ladder = {0.1, 0.2, 4};
    p.K = 3;
    p.grid = 128;
    return p;
}

}  // namespace

TEST(ScaleLadder, Values) {
    const auto s = ScaleLadder{0.1, 0.2, 3}.scales();
    ASSERT_EQ(s.size(), 3U);
    EXPECT_DOUBLE_EQ(s[2], 0.1 * 0.2 * 0.2);
    EXPECT_THROW((ScaleLadder{0.6, 0.2, 3}.scales()), Error);
    EXPECT_THROW((ScaleLadder{0.1, 1.0, 3}.scales()), Error);
    EXPECT_THROW((ScaleLadder{0.1, 0.2, 0}.scales()), Error);
}

TEST(ZoomSequence, RowsAreConsistent) {
    const auto points = sample_points(ProbVector::uniform(6), 7, 3, 64);
    for (const auto& x : points) {
        const auto report = zoom_sequence(e6(), x, small_zoom());
        ASSERT_EQ(report.rows.size(), 4U);
        int last_n = -1;
        for (const auto& r : report.rows) {
            EXPECT_GE(r.depth_n, last_n);
            last_n = r.depth_n;
            EXPECT_TRUE(r.separation_bound_holds);
            EXPECT_LE(r.max_rect_height, r.eps);
            EXPECT_LE(r.view_distance, r.eps + 2.0 / 128);
            EXPECT_GE(r.product_deviation, 0.0);
            EXPECT_LE(r.product_deviation, 1.0);
            if (r.is_pattern && r.area_bound_defined) EXPECT_LE(r.pattern_area, r.area_bound);
        }
    }
}

TEST(ZoomSequence, CsvIsDeterministic) {
    const auto a = sample_points(ProbVector::uniform(6), 3, 4, 64);
    const auto b = sample_points(ProbVector::uniform(6), 3, 4, 64);
    ASSERT_EQ(a, b);
    std::string ca = zoom_csv_header(), cb = zoom_csv_header();
    const auto ra = zoom_experiment(e6(), a, small_zoom(), 1);
    const auto rb = zoom_experiment(e6(), b, small_zoom(), 3);
    for (std::size_t i = 0; i < ra.size(); ++i) {
        ca += zoom_csv_rows(ra[i], i);
        cb += zoom_csv_rows(rb[i], i);
    }
    EXPECT_EQ(ca, cb);
    EXPECT_NE(sample_points(ProbVector::uniform(6), 4, 1, 64)[0], a[0]);
}

TEST(ZoomSequence, LeftBorderNeverPattern) {
    const auto report = zoom_sequence(e6(), Word(64, 1), small_zoom());
    EXPECT_EQ(report.first_pattern(), report.rows.size());
}

TEST(ZoomSequence, ErrorsNameTheScale) {
    ZoomParams p = small_zoom();
    p.ladder = {0.1, 0.01, 4};
    try {
        zoom_sequence(e6(), Word(8, 2), p);
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("scale k="), std::string::npos);
    }
}

TEST(Gallery, IdentityAndSubset) {
    const auto x = sample_points(ProbVector::uniform(6), 11, 1, 64)[0];
    const auto scales = ScaleLadder{0.1, 0.2, 4}.scales();
    const auto g = gallery_collect(e6(), x, scales, 128);
    const auto d = gallery_distance(g, g);
    EXPECT_EQ(d.one_sided, 0.0);
    EXPECT_EQ(d.symmetric, 0.0);

    const auto part = gallery_collect(e6(), x, {scales[1], scales[3]}, 128);
    EXPECT_EQ(gallery_distance(part, g).one_sided, 0.0);
    EXPECT_GE(gallery_distance(g, part).symmetric, gallery_distance(g, part).one_sided);

    const auto m = gallery_matrix(g, part);
    ASSERT_EQ(m.size(), 4U);
    EXPECT_EQ(m[1][0], 0.0);
    EXPECT_THROW(gallery_collect(e6(), x, {0.01, 0.1}, 128), Error);
    EXPECT_THROW(gallery_collect(e6(), x, {}, 128), Error);
    EXPECT_THROW(gallery_distance(g, gallery_collect(e6(), x, scales, 64)), Error);
}

TEST(Gallery, SharedSuffixGivesMatchingDeepViews) {
    // all E6 maps share their linear part, so views inside distinct
    // first-level cylinders are translates of each other
    const auto tail = sample_points(ProbVector::uniform(6), 21, 1, 62)[0];
    Word x{1, 3}, y{6, 4};
    x.insert(x.end(), tail.begin(), tail.end());
    y.insert(y.end(), tail.begin(), tail.end());
    const std::vector<double> scales = {1e-3, 2e-4, 4e-5};
    const auto gx = gallery_collect(e6(), x, scales, 256);
    const auto gy = gallery_collect(e6(), y, scales, 256);
    const auto m = gallery_matrix(gx, gy);
    for (std::size_t i = 0; i < scales.size(); ++i) EXPECT_LE(m[i][i], 2.0 * std::sqrt(2.0) / 256);
}

TEST(BoundaryDemo, LeftAndRight) {
    const auto left = boundary_demo(e6(), 256, BorderSide::Left, 4);
    EXPECT_EQ(left.letter, 1);
    EXPECT_NEAR(left.point.x, 0.0, 1e-12);
    EXPECT_NEAR(left.point.y, 0.0, 1e-12);
    EXPECT_TRUE(left.holds());

    const auto right = boundary_demo(e6(), 256, BorderSide::Right, 4);
    EXPECT_EQ(right.letter, 5);
    EXPECT_NEAR(right.point.x, 1.0, 1e-12);
    EXPECT_TRUE(right.holds());

    const auto mirrored = boundary_demo(testsys::e6_mirrored(), 256, BorderSide::Right, 4);
    EXPECT_EQ(mirrored.letter, 1);
    EXPECT_TRUE(mirrored.holds());
}

TEST(BoundaryDemo, InteriorPointsSeeBothSides) {
    const auto x = sample_points(ProbVector::uniform(6), 5, 1, 64)[0];
    const int n = 256;
    const auto g = gallery_collect(e6(), x, {1e-3}, n);
    std::size_t left = 0;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n / 2 - 1; ++i) left += g.views[0].at(i, j) ? 1 : 0;
    EXPECT_GT(left, 0U);
}

TEST(ParallelFor, DeterministicAndRethrowsLowest) {
    std::vector<int> a(200), b(200);
    parallel_for(a.size(), [&](std::size_t i) { a[i] = static_cast<int>(i * i % 97); }, 1);
    parallel_for(b.size(), [&](std::size_t i) { b[i] = static_cast<int>(i * i % 97); }, 4);
    EXPECT_EQ(a, b);
    try {
        parallel_for(
            100,
            [](std::size_t i) {
                if (i == 17 || i == 60) throw std::runtime_error(std::to_string(i));
            },
            4);
        FAIL();
    } catch (const std::runtime_error& e) {
        EXPECT_STREQ(e.what(), "17");
    }
    parallel_for(0, [](std::size_t) { FAIL(); });
}

TEST(ParallelFor, ThreadCap) {
    ::setenv("TANGENTLAB_THREADS", "1", 1);
    EXPECT_EQ(worker_count(), 1U);
    ::setenv("TANGENTLAB_THREADS", "bogus", 1);
    EXPECT_GE(worker_count(), 1U);
    ::unsetenv("TANGENTLAB_THREADS");
}

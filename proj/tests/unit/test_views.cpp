#include <gtest/gtest.h>

#include <cmath>

#include "systems.hpp"
#include "tangentlab/conditions.hpp"
#include "tangentlab/error.hpp"
#include "tangentlab/measure.hpp"
#include "tangentlab/setmetric.hpp"
#include "tangentlab/views.hpp"

using namespace tangentlab;

namespace {

const SelfAffineSystem& e6() {
    static const SelfAffineSystem sys = testsys::e6();
    return sys;
}

Word sampled(std::uint64_t seed, std::size_t n = 64) {
    RandomSource rng(seed);
    return sample_address(ProbVector::uniform(6), n, rng);
}

}  // namespace

TEST(Window, Preconditions) {
    EXPECT_THROW(Window(e6(), Word(64, 1), 0.0), Error);
    EXPECT_THROW(Window(e6(), Word(64, 1), 0.5), Error);
    EXPECT_THROW(Window(e6(), {}, 0.1), Error);
    try {
        Window(e6(), {1, 2}, 0.1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Enclosure);
    }
}

TEST(Window, UsesPrefixUpToDepthCap) {
    const Window w(e6(), Word(100, 3), 0.01);
    EXPECT_EQ(w.prefix().size(), 64U);
    EXPECT_LE(w.radius(), 0.01 * kEnclosureRatio);
    const Window corner(e6(), Word(64, 1), 0.1);
    EXPECT_TRUE(corner.leaves_unit_square());
    const Point c = corner.normalize(corner.center());
    EXPECT_DOUBLE_EQ(c.x, 0.5);
    EXPECT_DOUBLE_EQ(c.y, 0.5);
}

TEST(SingleCylinderDepth, OriginAtTenth) {
    const Window w(e6(), Word(8, 1), 0.1);
    const auto d = single_cylinder_depth(e6(), w);
    EXPECT_EQ(d.n, 2);
    EXPECT_EQ(d.cylinder, (Word{1, 1}));
    EXPECT_NEAR(d.height, 0.04, 1e-15);
    EXPECT_TRUE(d.separation_bound_holds);
}

TEST(SingleCylinderDepth, ZeroWhenTwoFirstLevelRectsMeet) {
    // Q around a point of R_3 with t = 0.45 reaches R_4 as well.
    const Window w(e6(), Word(64, 3), 0.45);
    EXPECT_EQ(single_cylinder_depth(e6(), w).n, 0);
}

TEST(SingleCylinderDepth, SeparationBoundOnSamples) {
    const double delta = separation_delta(e6());
    for (std::uint64_t i = 0; i < 100; ++i) {
        const double t = 0.2 * std::pow(0.37, static_cast<double>(i % 12));
        const Window w(e6(), sampled(i), t);
        const auto d = single_cylinder_depth(e6(), w);
        EXPECT_TRUE(d.separation_bound_holds) << i;
        EXPECT_LE(delta * std::pow(e6().s_min(), d.n), delta * d.height * (1 + 1e-12));
        EXPECT_LT(delta * d.height, t * std::sqrt(2.0));
        EXPECT_EQ(d.cylinder, Word(w.prefix().begin(), w.prefix().begin() + d.n));
    }
}

TEST(EpsilonK, Values) {
    EXPECT_NEAR(epsilon_K(e6(), 3), 0.008 * std::sqrt(2.0) / 0.05, 1e-15);
    EXPECT_NEAR(epsilon_K(e6(), 3), 0.22627, 1e-5);
    EXPECT_NEAR(epsilon_K(e6(), 0), std::sqrt(2.0) / 0.05, 1e-12);
    EXPECT_GT(epsilon_K(e6(), 0), 1.0);
    for (int K = 0; K < 8; ++K) EXPECT_NEAR(epsilon_K(e6(), K + 1), 0.2 * epsilon_K(e6(), K), 1e-15);
    EXPECT_EQ(reference_level(e6(), 512), 6);
    EXPECT_EQ(reference_level(e6(), 1024), 7);
}

TEST(ApproxView, LevelZeroIsTheSingleCylinder) {
    const Window w(e6(), Word(64, 1), 0.1);
    const auto v = approx_view(e6(), w, 0);
    ASSERT_EQ(v.rects.size(), 1U);
    const Rect expected = w.normalize(cylinder_rect(e6(), {1, 1}));
    EXPECT_EQ(v.rects[0], expected);
    EXPECT_EQ(v.depth_n, 2);
    EXPECT_TRUE(v.clipped);
}

TEST(ApproxView, HeightsBoundedAtOrigin) {
    const Window w(e6(), Word(12, 1), 0.1);
    const auto v = approx_view(e6(), w, 3);
    const double eps = epsilon_K(e6(), 3);
    ASSERT_FALSE(v.rects.empty());
    for (const auto& r : v.rects) {
        EXPECT_LE(r.height(), eps);
        EXPECT_LE(r.height() * w.t(), eps * w.t());
        EXPECT_GE(r.x0, 0.0);
        EXPECT_LE(r.x1, 1.0);
        EXPECT_GE(r.y0, 0.0);
        EXPECT_LE(r.y1, 1.0);
    }
}

TEST(ApproxView, ContainsFineViewAndIsClose) {
    const int N = 256;
    for (std::uint64_t i = 0; i < 12; ++i) {
        const double t = 0.1 * std::pow(0.2, static_cast<double>(i % 5));
        const Window w(e6(), sampled(100 + i), t);
        for (int K : {2, 3, 4}) {
            const auto coarse = rasterize(approx_view(e6(), w, K).rects, N);
            const auto fine = rasterize(reference_view(e6(), w, N).rects, N);
            for (int y = 0; y < N; ++y)
                for (int x = 0; x < N; ++x)
                    if (fine.at(x, y)) EXPECT_TRUE(coarse.at(x, y));
            EXPECT_LT(hausdorff(fine, coarse), epsilon_K(e6(), K) + 2.0 / N);
        }
    }
}

TEST(ApproxView, DepthCap) {
    const Window w(e6(), Word(64, 2), 1e-6);
    EXPECT_THROW(approx_view(e6(), w, 3, 8), DepthCapError);
}

TEST(IsPattern, ProductForm) {
    const RectUnion rects = {{0, 1, 0, 0.1}, {0, 1, 0.5, 0.6}};
    const auto p = is_pattern(rects, 0.1);
    EXPECT_TRUE(p.is_pattern);
    EXPECT_NEAR(p.area, 0.2, 1e-15);
    ASSERT_EQ(p.intervals.size(), 2U);
    EXPECT_EQ(p.intervals[1].lo, 0.5);
}

TEST(IsPattern, SpanAndHeightFailures) {
    EXPECT_FALSE(is_pattern(RectUnion{{0.2, 1, 0, 0.05}}, 0.1).is_pattern);
    EXPECT_FALSE(is_pattern(RectUnion{{0, 1, 0, 0.3}}, 0.1).is_pattern);
    EXPECT_FALSE(is_pattern(RectUnion{{0, 1, 0.2, 0.2}}, 0.1).is_pattern);
    // pieces that tile a slab horizontally still form a pattern
    EXPECT_TRUE(is_pattern(RectUnion{{0, 0.6, 0, 0.05}, {0.6, 1, 0, 0.05}}, 0.1).is_pattern);
    // touching y-intervals merge into one slab
    const auto merged = is_pattern(RectUnion{{0, 1, 0, 0.05}, {0, 1, 0.05, 0.08}}, 0.1);
    EXPECT_TRUE(merged.is_pattern);
    EXPECT_EQ(merged.intervals.size(), 1U);
    // a slab whose lower part spans but upper part does not
    EXPECT_FALSE(is_pattern(RectUnion{{0, 1, 0, 0.05}, {0, 0.5, 0.05, 0.08}}, 0.1).is_pattern);
    EXPECT_THROW(is_pattern(RectUnion{}, 0.1), Error);
}

TEST(IsPattern, MonotoneInEps) {
    for (std::uint64_t i = 0; i < 20; ++i) {
        const Window w(e6(), sampled(300 + i), 0.1 * std::pow(0.2, static_cast<double>(i % 6)));
        const auto v = approx_view(e6(), w, 3);
        bool seen = false;
        for (double eps : {0.01, 0.05, 0.1, 0.2263, 0.5, 1.0}) {
            const bool p = is_pattern(v, eps).is_pattern;
            if (seen) EXPECT_TRUE(p);
            seen = seen || p;
        }
    }
}

TEST(IsPattern, LeftBorderNeverPattern) {
    for (double t : {0.1, 0.02, 0.004, 8e-4, 1.6e-4}) {
        const Window w(e6(), Word(64, 1), t);
        const auto v = approx_view(e6(), w, 3);
        EXPECT_FALSE(is_pattern(v, epsilon_K(e6(), 3)).is_pattern);
        for (const auto& r : v.rects) EXPECT_GE(r.x0, 0.5);
    }
}

TEST(PatternAreaBound, Values) {
    const auto b6 = pattern_area_bound(e6(), 6);
    EXPECT_TRUE(b6.defined);
    EXPECT_EQ(b6.k_tilde, 2);
    EXPECT_NEAR(b6.bound, 0.81450625, 1e-15);
    EXPECT_NEAR(pattern_area_bound(e6(), 3).bound, 0.95, 1e-15);
    const auto b1 = pattern_area_bound(e6(), 1);
    EXPECT_FALSE(b1.defined);
    EXPECT_EQ(b1.bound, 1.0);
}

TEST(VerticalSection, Examples) {
    const auto at_tenth = vertical_section_diameter(e6(), 0.1, 1);
    EXPECT_GE(at_tenth.lower, 0.6 - 1e-12);
    EXPECT_LE(at_tenth.upper, 1.0);
    const auto seam = vertical_section_diameter(e6(), 1.0 / 3.0, 1);
    EXPECT_EQ(seam.cylinders, 4U);
    EXPECT_GE(seam.lower, 0.6 - 1e-12);
    EXPECT_THROW(vertical_section_diameter(e6(), 1.5, 1), Error);
    const auto gapped = testsys::two_double_columns();
    try {
        vertical_section_diameter(gapped, 0.5, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Hypothesis);
    }
}

TEST(VerticalSection, LowerBoundOnGrid) {
    for (int i = 0; i < 1000; ++i) {
        const double x1 = i / 999.0;
        const auto d = vertical_section_diameter(e6(), x1, 2);
        EXPECT_GE(d.lower, 0.05) << x1;
        EXPECT_LE(d.lower, d.upper);
    }
}

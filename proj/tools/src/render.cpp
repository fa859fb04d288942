#include "tangentlab_tools/render.hpp"

#include <algorithm>
#include <cmath>

#include "tangentlab/error.hpp"

namespace tangentlab::tools {

namespace {

// Indices i with window_lo + (i + 1/2) * step in [lo, hi].
std::pair<int, int> center_range(double lo, double hi, double window_lo, double step, int n) {
    double first = std::ceil((lo - window_lo) / step - 0.5);
    double last = std::floor((hi - window_lo) / step - 0.5);
    first = std::max(first, 0.0);
    last = std::min(last, static_cast<double>(n - 1));
    if (first > last) return {1, 0};
    return {static_cast<int>(first), static_cast<int>(last)};
}

}  // namespace

LevelImage render_levels(const SelfAffineSystem& sys, int max_level, int n, const Rect& window, std::uint64_t cap) {
    if (max_level < 0) throw Error(ErrorKind::Precondition, "max_level must be nonnegative");
    if (n < 1 || n > 8192) throw Error(ErrorKind::Shape, "image size must lie in [1, 8192]");
    if (!(window.x0 >= 0.0 && window.x1 <= 1.0 && window.y0 >= 0.0 && window.y1 <= 1.0 && window.x0 < window.x1 &&
          window.y0 < window.y1)) {
        throw Error(ErrorKind::Precondition, "render window must be a nondegenerate subrectangle of [0,1]^2");
    }
    LevelImage img;
    img.n = n;
    img.levels.assign(static_cast<std::size_t>(n) * n, -1);
    const double dx = (window.x1 - window.x0) / n;
    const double dy = (window.y1 - window.y0) / n;

    std::uint64_t visited = 0;
    // Level 0 is the unit square itself; descend only into cylinders that contain a pixel center.
    auto paint = [&](auto&& self, const CylinderGeom& node, int level) -> void {
        auto [i0, i1] = center_range(node.rect.x0, node.rect.x1, window.x0, dx, n);
        auto [j0, j1] = center_range(node.rect.y0, node.rect.y1, window.y0, dy, n);
        if (i0 > i1 || j0 > j1) return;
        if (++visited > cap) throw Error(ErrorKind::EnumerationCap, "render exceeds the cylinder cap");
        for (int j = j0; j <= j1; ++j) {
            const int row = n - 1 - j;
            for (int i = i0; i <= i1; ++i) {
                int& cell = img.levels[static_cast<std::size_t>(row) * n + i];
                cell = std::max(cell, level);
            }
        }
        if (level == max_level) return;
        for (int c = 1; c <= static_cast<int>(sys.m()); ++c) self(self, sys.child(node, static_cast<Letter>(c)), level + 1);
    };
    paint(paint, CylinderGeom{}, 0);

    img.pixels.resize(img.levels.size());
    for (std::size_t k = 0; k < img.levels.size(); ++k) {
        const int level = std::max(img.levels[k], 0);
        img.pixels[k] = max_level == 0 ? 0 : static_cast<std::uint8_t>(255 - (255 * level) / max_level);
    }
    return img;
}

std::string to_pgm(const LevelImage& image) {
    std::string out = "P5\n" + std::to_string(image.n) + " " + std::to_string(image.n) + "\n255\n";
    out.append(image.pixels.begin(), image.pixels.end());
    return out;
}

}  // namespace tangentlab::tools

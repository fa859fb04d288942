#ifndef TANGENTLAB_TOOLS_RENDER_HPP
#define TANGENTLAB_TOOLS_RENDER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tangentlab/ifs.hpp"

namespace tangentlab::tools {

inline constexpr std::uint64_t kRenderCap = 50'000'000;

/// Greyscale image, row 0 at the top.
struct LevelImage {
    int n = 0;
    std::vector<std::uint8_t> pixels;
    /// Deepest level whose E^(L) contains the pixel center, row 0 at the top.
    std::vector<int> levels;

    std::uint8_t at(int col, int row) const { return pixels[static_cast<std::size_t>(row) * n + col]; }
    int level_at(int col, int row) const { return levels[static_cast<std::size_t>(row) * n + col]; }
};

/// Pixel value 255 - floor(255 L / max_level), where L is the deepest level
/// (at most max_level) whose union of cylinders contains the pixel center.
/// With max_level = 0 every pixel is 0.
LevelImage render_levels(const SelfAffineSystem& sys, int max_level, int n, const Rect& window = kUnitSquare,
                         std::uint64_t cap = kRenderCap);

std::string to_pgm(const LevelImage& image);

}  // namespace tangentlab::tools

#endif

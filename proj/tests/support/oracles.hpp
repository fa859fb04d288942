#ifndef TANGENTLAB_TEST_ORACLES_HPP
#define TANGENTLAB_TEST_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "tangentlab/ifs.hpp"
#include "tangentlab/setmetric.hpp"

namespace oracle {

/// Directed squared distance over all cell pairs, in cell units.
inline std::int64_t directed_squared(const tangentlab::GridSet& a, const tangentlab::GridSet& b) {
    std::vector<std::pair<int, int>> pb;
    for (int j = 0; j < b.n(); ++j)
        for (int i = 0; i < b.n(); ++i)
            if (b.at(i, j)) pb.emplace_back(i, j);
    std::int64_t worst = 0;
    for (int j = 0; j < a.n(); ++j) {
        for (int i = 0; i < a.n(); ++i) {
            if (!a.at(i, j)) continue;
            std::int64_t best = std::numeric_limits<std::int64_t>::max();
            for (auto [u, v] : pb) {
                const std::int64_t dx = u - i, dy = v - j;
                best = std::min(best, dx * dx + dy * dy);
            }
            worst = std::max(worst, best);
        }
    }
    return worst;
}

inline std::int64_t hausdorff_squared(const tangentlab::GridSet& a, const tangentlab::GridSet& b) {
    return std::max(directed_squared(a, b), directed_squared(b, a));
}

/// Minimum distance between two rectangles over sampled points of each: a uniform
/// grid of `per_side` steps, refined by the other rectangle's corner coordinates
/// clamped into range.
inline double sampled_gap(const tangentlab::Rect& p, const tangentlab::Rect& q, int per_side) {
    auto coords = [per_side](double lo, double hi, double o0, double o1) {
        std::vector<double> v;
        for (int k = 0; k <= per_side; ++k) v.push_back(lo + (hi - lo) * k / per_side);
        v.push_back(std::clamp(o0, lo, hi));
        v.push_back(std::clamp(o1, lo, hi));
        return v;
    };
    auto samples = [&](const tangentlab::Rect& r, const tangentlab::Rect& o) {
        std::vector<tangentlab::Point> pts;
        for (double x : coords(r.x0, r.x1, o.x0, o.x1))
            for (double y : coords(r.y0, r.y1, o.y0, o.y1)) pts.push_back({x, y});
        return pts;
    };
    const auto a = samples(p, q), b = samples(q, p);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& u : a)
        for (const auto& v : b) best = std::min(best, std::hypot(u.x - v.x, u.y - v.y));
    return best;
}

/// Number of level-1 projections containing x1.
inline int projections_containing(const tangentlab::SelfAffineSystem& sys, double x1) {
    int count = 0;
    for (const auto& f : sys.maps()) count += (f.rect().x0 <= x1 && x1 <= f.rect().x1) ? 1 : 0;
    return count;
}

}  // namespace oracle

#endif

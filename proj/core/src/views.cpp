#include "tangentlab/views.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tangentlab/conditions.hpp"
#include "tangentlab/error.hpp"

namespace tangentlab {

Window::Window(const SelfAffineSystem& sys, const Word& address, double t, int depth_cap) : t_(t) {
    if (!(t > 0.0 && t < 0.5)) throw Error(ErrorKind::Precondition, "window side t must lie in (0, 1/2)");
    if (address.empty()) throw Error(ErrorKind::Precondition, "window center needs a nonempty address");
    const auto len = std::min(address.size(), static_cast<std::size_t>(std::max(depth_cap, 1)));
    prefix_.assign(address.begin(), address.begin() + static_cast<std::ptrdiff_t>(len));
    auto enc = point_of_address(sys, prefix_);
    center_ = enc.center;
    radius_ = enc.radius;
    enclosure_ = cylinder_rect(sys, prefix_);
    if (radius_ > t * kEnclosureRatio) {
        throw Error(ErrorKind::Enclosure, "address prefix of length " + std::to_string(len) + " leaves radius " +
                                              std::to_string(radius_) + " > t*1e-3; supply a deeper prefix");
    }
}

Rect Window::square() const {
    const double h = 0.5 * t_;
    return {center_.x - h, center_.x + h, center_.y - h, center_.y + h};
}

bool Window::leaves_unit_square() const {
    return !kUnitSquare.contains(square());
}

Point Window::normalize(Point y) const {
    return {(y.x - center_.x) / t_ + 0.5, (y.y - center_.y) / t_ + 0.5};
}

Rect Window::normalize(const Rect& r) const {
    const Rect sq = square();
    Rect c{std::max(r.x0, sq.x0), std::min(r.x1, sq.x1), std::max(r.y0, sq.y0), std::min(r.y1, sq.y1)};
    if (c.x1 < c.x0) c.x1 = c.x0;
    if (c.y1 < c.y0) c.y1 = c.y0;
    Point lo = normalize(Point{c.x0, c.y0});
    Point hi = normalize(Point{c.x1, c.y1});
    auto clamp01 = [](double v) { return std::clamp(v, 0.0, 1.0); };
    return {clamp01(lo.x), clamp01(hi.x), clamp01(lo.y), clamp01(hi.y)};
}

Contact contact(const Window& window, const Rect& r) {
    // Q_{c,t} meets r iff c lies in r inflated by t/2.
    const double h = 0.5 * window.t();
    const Rect inflated{r.x0 - h, r.x1 + h, r.y0 - h, r.y1 + h};
    const Rect& e = window.enclosure();
    if (inflated.contains(e)) return Contact::All;
    if (!inflated.intersects(e)) return Contact::None;
    return Contact::Mixed;
}

namespace {

[[noreturn]] void ambiguous(const Window& w) {
    throw Error(ErrorKind::Enclosure, "window contact undecided for the enclosure of prefix length " +
                                          std::to_string(w.prefix().size()) + "; supply a deeper prefix");
}

bool meets(const Window& w, const Rect& r) {
    switch (contact(w, r)) {
        case Contact::All: return true;
        case Contact::None: return false;
        case Contact::Mixed: break;
    }
    ambiguous(w);
}

}  // namespace

CylinderDepth single_cylinder_depth(const SelfAffineSystem& sys, const Window& window, int depth_cap) {
    Word word;
    CylinderGeom node;
    for (int level = 1;; ++level) {
        if (level > depth_cap) {
            throw DepthCapError(level - 1, depth_cap, "single_cylinder_depth exceeded the depth cap");
        }
        int hits = 0;
        Letter hit_letter = 0;
        CylinderGeom hit;
        for (int j = 1; j <= static_cast<int>(sys.m()); ++j) {
            CylinderGeom c = sys.child(node, static_cast<Letter>(j));
            if (!meets(window, c.rect)) continue;
            ++hits;
            hit_letter = static_cast<Letter>(j);
            hit = c;
        }
        if (hits == 0) {
            throw Error(ErrorKind::Precondition, "window center is not on the attractor");
        }
        if (hits >= 2) break;
        word.push_back(hit_letter);
        node = hit;
    }
    CylinderDepth out;
    out.n = static_cast<int>(word.size());
    out.cylinder = std::move(word);
    out.height = node.map.s;
    out.separation_bound_holds = sys.delta() * out.height < window.t() * std::sqrt(2.0);
    return out;
}

ViewCover approx_view(const SelfAffineSystem& sys, const Window& window, int K, int depth_cap, double resolution) {
    if (K < 0) throw Error(ErrorKind::Precondition, "approximation level K must be nonnegative");
    auto depth = single_cylinder_depth(sys, window, depth_cap);
    if (depth.n + K > depth_cap) {
        throw DepthCapError(depth.n, depth_cap, "approx_view: level n+K exceeds the depth cap");
    }
    ViewCover view;
    view.depth_n = depth.n;
    view.level_K = K;
    view.resolution = resolution;
    view.clipped = window.leaves_unit_square();
    view.t = window.t();
    view.center = window.center();

    CylinderGeom root = cylinder(sys, depth.cylinder);
    Word word = depth.cylinder;
    for_each_descendant(
        sys, word, root, K, [&](const Rect& r) { return meets(window, r); },
        [&](const Word&, const CylinderGeom& c) { view.rects.push_back(window.normalize(c.rect)); });
    return view;
}

double epsilon_K(const SelfAffineSystem& sys, int K) {
    double power = 1.0;
    for (int i = 0; i < K; ++i) power *= sys.s_max();
    return power * std::sqrt(2.0) / sys.delta();
}

int reference_level(const SelfAffineSystem& sys, int grid) {
    int K = 0;
    while (epsilon_K(sys, K) > 1.0 / grid) ++K;
    return K;
}

ViewCover reference_view(const SelfAffineSystem& sys, const Window& window, int grid, int depth_cap) {
    return approx_view(sys, window, reference_level(sys, grid), depth_cap, 1.0 / grid);
}

PatternReport is_pattern(const RectUnion& rects, double eps, double tol_x) {
    if (rects.empty()) throw Error(ErrorKind::Emptiness, "is_pattern: empty view");
    PatternReport report;
    report.tol_x = tol_x;

    std::vector<std::size_t> order(rects.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rects[a].y0 < rects[b].y0; });

    struct Slab {
        Interval span;
        std::vector<std::size_t> members;
    };
    std::vector<Slab> slabs;
    for (std::size_t idx : order) {
        const Rect& r = rects[idx];
        if (!slabs.empty() && r.y0 <= slabs.back().span.hi) {
            slabs.back().span.hi = std::max(slabs.back().span.hi, r.y1);
            slabs.back().members.push_back(idx);
        } else {
            slabs.push_back({{r.y0, r.y1}, {idx}});
        }
    }

    auto fail = [&](std::string why) {
        if (report.reason.empty()) report.reason = std::move(why);
    };
    for (const auto& slab : slabs) {
        const double height = slab.span.length();
        report.intervals.push_back(slab.span);
        report.area += height;
        report.max_height = std::max(report.max_height, height);
        if (!(height > 0.0)) fail("zero-length interval");
        if (height > eps) fail("interval longer than eps");

        std::vector<double> cuts;
        for (std::size_t idx : slab.members) {
            cuts.push_back(rects[idx].y0);
            cuts.push_back(rects[idx].y1);
        }
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
            std::vector<Interval> spans;
            for (std::size_t idx : slab.members) {
                const Rect& r = rects[idx];
                if (r.y0 <= cuts[c] && r.y1 >= cuts[c + 1]) spans.push_back({r.x0, r.x1});
            }
            std::sort(spans.begin(), spans.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
            double reach = tol_x;
            bool gap = false;
            for (const auto& s : spans) {
                if (s.lo > reach) {
                    gap = true;
                    break;
                }
                reach = std::max(reach, s.hi);
            }
            if (gap || reach < 1.0 - tol_x) {
                fail("slab does not span [0,1] horizontally");
                break;
            }
        }
    }
    report.is_pattern = report.reason.empty();
    return report;
}

PatternReport is_pattern(const ViewCover& view, double eps) {
    return is_pattern(view.rects, eps, view.resolution);
}

AreaBound pattern_area_bound(const SelfAffineSystem& sys, int K) {
    AreaBound out;
    out.k_tilde = k_tilde(sys);
    if (K < out.k_tilde) return out;
    out.defined = true;
    double bound = 1.0;
    for (int i = out.k_tilde; i < K; ++i) bound *= 1.0 - sys.delta();
    out.bound = bound;
    return out;
}

SectionDiameter vertical_section_diameter(const SelfAffineSystem& sys, double x1, int depth) {
    if (!(x1 >= 0.0 && x1 <= 1.0)) throw Error(ErrorKind::Precondition, "x1 must lie in [0,1]");
    if (depth < 1) throw Error(ErrorKind::Precondition, "section depth must be at least 1");
    double min_y0 = 2, max_y1 = -1, lowest_top = 2, highest_bottom = -1;
    std::size_t count = 0;
    Word word;
    for_each_descendant(
        sys, word, CylinderGeom{}, depth, [x1](const Rect& r) { return r.x0 <= x1 && x1 <= r.x1; },
        [&](const Word&, const CylinderGeom& c) {
            ++count;
            min_y0 = std::min(min_y0, c.rect.y0);
            max_y1 = std::max(max_y1, c.rect.y1);
            lowest_top = std::min(lowest_top, c.rect.y1);
            highest_bottom = std::max(highest_bottom, c.rect.y0);
        });
    if (count == 0) {
        throw Error(ErrorKind::Hypothesis, "no level-" + std::to_string(depth) +
                                               " cylinder meets the vertical segment at x1 = " + std::to_string(x1));
    }
    return {std::max(0.0, highest_bottom - lowest_top), max_y1 - min_y0, count};
}

}  // namespace tangentlab

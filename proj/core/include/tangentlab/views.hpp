#ifndef TANGENTLAB_VIEWS_HPP
#define TANGENTLAB_VIEWS_HPP

#include <string>
#include <vector>

#include "tangentlab/ifs.hpp"

namespace tangentlab {

/// The enclosure of the window center may be at most this fraction of t.
inline constexpr double kEnclosureRatio = 1e-3;
/// Horizontal span tolerance for pattern detection.
inline constexpr double kDefaultSpanTolerance = 0x1p-10;

/// Square neighbourhood Q_{x,t} of a point of E known through an address prefix.
///
/// The longest prefix of `address` (up to the depth cap) is used; its cylinder
/// is the enclosure of x and its center is used as x. Every intersection test
/// is evaluated for the whole enclosure and must be unanimous.
class Window {
public:
    Window(const SelfAffineSystem& sys, const Word& address, double t, int depth_cap = kDefaultDepthCap);

    const Word& prefix() const { return prefix_; }
    Point center() const { return center_; }
    double radius() const { return radius_; }
    double t() const { return t_; }
    const Rect& enclosure() const { return enclosure_; }

    /// Q_{x,t}; may extend beyond the unit square.
    Rect square() const;
    bool leaves_unit_square() const;

    Point normalize(Point y) const;
    /// h_{x,t}(r intersected with Q_{x,t}), clamped into [0,1]^2.
    Rect normalize(const Rect& r) const;

private:
    Word prefix_;
    Point center_;
    double radius_ = 0;
    double t_ = 0;
    Rect enclosure_;
};

enum class Contact { None, All, Mixed };

/// Whether Q_{x,t} meets `r` for no point, every point, or only some points of
/// the window's enclosure.
Contact contact(const Window& window, const Rect& r);

struct CylinderDepth {
    /// n(x,t): deepest level at which Q_{x,t} meets a single cylinder.
    int n = 0;
    Word cylinder;
    /// Height s_u of that cylinder.
    double height = 1.0;
    /// delta * s_u < t * sqrt(2).
    bool separation_bound_holds = false;
};

CylinderDepth single_cylinder_depth(const SelfAffineSystem& sys, const Window& window,
                                    int depth_cap = kDefaultDepthCap);

/// Union of normalized rectangles approximating a view.
struct ViewCover {
    RectUnion rects;
    int depth_n = 0;
    int level_K = 0;
    double resolution = kDefaultSpanTolerance;
    bool clipped = false;
    double t = 0.0;
    Point center;
};

/// P^K_{x,t}: the level-(n+K) cylinders meeting Q_{x,t}, clipped and normalized.
ViewCover approx_view(const SelfAffineSystem& sys, const Window& window, int K, int depth_cap = kDefaultDepthCap,
                      double resolution = kDefaultSpanTolerance);

/// (s^*)^K * sqrt(2) / delta.
double epsilon_K(const SelfAffineSystem& sys, int K);

/// Least K with epsilon_K <= 1/N: members of P^K are then at most one cell high.
int reference_level(const SelfAffineSystem& sys, int grid);

/// Fine cover of the normalized view N_{x,t} at raster resolution `grid`.
ViewCover reference_view(const SelfAffineSystem& sys, const Window& window, int grid,
                         int depth_cap = kDefaultDepthCap);

struct PatternReport {
    bool is_pattern = false;
    /// Merged y-extents of the view, bottom to top.
    std::vector<Interval> intervals;
    double max_height = 0.0;
    /// Sum of interval lengths.
    double area = 0.0;
    double tol_x = kDefaultSpanTolerance;
    /// Empty for patterns, otherwise the first failed condition.
    std::string reason;
};

/// Whether the rectangles form [0,1] x (disjoint closed intervals of length in (0, eps]),
/// with horizontal spans checked to within tol_x.
PatternReport is_pattern(const RectUnion& rects, double eps, double tol_x = kDefaultSpanTolerance);
PatternReport is_pattern(const ViewCover& view, double eps);

struct AreaBound {
    double bound = 1.0;
    int k_tilde = 0;
    /// False when K < k_tilde; bound is then reported as 1.
    bool defined = false;
};

/// (1 - delta)^(K - k_tilde).
AreaBound pattern_area_bound(const SelfAffineSystem& sys, int K);

struct SectionDiameter {
    double lower = 0.0;
    double upper = 0.0;
    std::size_t cylinders = 0;
};

/// Bounds on diam(E on the vertical segment at x1) from the depth-level cylinders
/// meeting the segment. The lower bound assumes the vertical-segment condition,
/// under which every such cylinder carries a point of E on the segment.
SectionDiameter vertical_section_diameter(const SelfAffineSystem& sys, double x1, int depth);

}  // namespace tangentlab

#endif

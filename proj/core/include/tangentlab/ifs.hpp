#ifndef TANGENTLAB_IFS_HPP
#define TANGENTLAB_IFS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tangentlab/rational.hpp"

namespace tangentlab {

inline constexpr int kDefaultDepthCap = 64;

using Letter = std::uint8_t;

/// Finite address over the alphabet {1, ..., m}; letters are 1-based.
using Word = std::vector<Letter>;

std::string to_string(const Word& word);

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Closed axis-aligned rectangle [x0,x1] x [y0,y1].
struct Rect {
    double x0 = 0.0;
    double x1 = 1.0;
    double y0 = 0.0;
    double y1 = 1.0;

    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
    Point center() const { return {0.5 * (x0 + x1), 0.5 * (y0 + y1)}; }

    bool intersects(const Rect& o) const {
        return x0 <= o.x1 && o.x0 <= x1 && y0 <= o.y1 && o.y0 <= y1;
    }
    bool contains(const Rect& o) const {
        return x0 <= o.x0 && o.x1 <= x1 && y0 <= o.y0 && o.y1 <= y1;
    }
    bool operator==(const Rect&) const = default;
};

inline constexpr Rect kUnitSquare{0.0, 1.0, 0.0, 1.0};

/// Closed interval [lo, hi].
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double length() const { return hi - lo; }
    bool operator==(const Interval&) const = default;
};

using RectUnion = std::vector<Rect>;

/// Raw parameters of x -> (r x1 + a, s x2 + b). The identity is representable,
/// so this is not an AffineMapSpec.
struct AffineParams {
    double r = 1.0;
    double s = 1.0;
    double a = 0.0;
    double b = 0.0;

    /// Parameters of (*this) o g.
    AffineParams then(const AffineParams& g) const {
        return {r * g.r, s * g.s, a + r * g.a, b + s * g.b};
    }
    bool operator==(const AffineParams&) const = default;
};

struct ExactParams {
    Rational r{1};
    Rational s{1};
    Rational a{0};
    Rational b{0};

    ExactParams then(const ExactParams& g) const {
        return {r * g.r, s * g.s, a + r * g.a, b + s * g.b};
    }
};

/// One contraction f(x1,x2) = (r x1 + a, s x2 + b) with 0 < s < r < 1 and f(Q) in Q.
class AffineMapSpec {
public:
    /// Throws Error(Validation) when the invariants fail.
    AffineMapSpec(Rational r, Rational s, Rational a, Rational b);

    const ExactParams& exact() const { return exact_; }
    const AffineParams& params() const { return params_; }
    /// R_j = f(Q) with correctly rounded corners.
    const Rect& rect() const { return rect_; }

private:
    ExactParams exact_;
    AffineParams params_;
    Rect rect_;
};

/// Geometry of one cylinder: the composed map and its (clamped) rectangle.
struct CylinderGeom {
    AffineParams map;
    Rect rect = kUnitSquare;
};

/// Validated IFS with cached extremal constants. Immutable after construction.
class SelfAffineSystem {
public:
    explicit SelfAffineSystem(std::vector<AffineMapSpec> maps);

    std::size_t m() const { return maps_.size(); }
    const std::vector<AffineMapSpec>& maps() const { return maps_; }
    const AffineMapSpec& map(Letter j) const { return maps_[j - 1]; }

    double s_min() const { return s_min_; }
    double s_max() const { return s_max_; }
    double r_min() const { return r_min_; }
    double r_max() const { return r_max_; }
    double q() const { return to_double(q_exact_); }
    const Rational& q_exact() const { return q_exact_; }

    /// Squared minimum distance between distinct level-1 rectangles.
    const Rational& delta_squared() const { return delta_squared_; }
    double delta() const { return delta_; }

    /// Child cylinder; the rectangle is clamped into the parent so nesting is exact.
    CylinderGeom child(const CylinderGeom& parent, Letter j) const;

    void check_word(const Word& word) const;

private:
    std::vector<AffineMapSpec> maps_;
    double s_min_ = 0, s_max_ = 0, r_min_ = 0, r_max_ = 0;
    Rational q_exact_;
    Rational delta_squared_;
    double delta_ = 0;
};

/// Exact rectangle with rational corners.
struct ExactRect {
    Rational x0, x1, y0, y1;
};

ExactRect exact_rect(const ExactParams& f);

/// Squared Euclidean distance between two closed rectangles.
Rational squared_gap(const ExactRect& p, const ExactRect& q);

AffineParams compose(const SelfAffineSystem& sys, const Word& u);
ExactParams compose_exact(const SelfAffineSystem& sys, const Word& u);

CylinderGeom cylinder(const SelfAffineSystem& sys, const Word& u);
Rect cylinder_rect(const SelfAffineSystem& sys, const Word& u);

struct AddressEnclosure {
    Point center;
    double radius = 0.0;
};

/// Center and half-diagonal of R_prefix; every point of E with this prefix lies
/// within `radius` of `center`.
AddressEnclosure point_of_address(const SelfAffineSystem& sys, const Word& prefix);

/// Minimal words u with R_u meeting `window` and r_u < width_threshold while the
/// parent has r >= width_threshold.
std::vector<Word> cover(const SelfAffineSystem& sys, const Rect& window, double width_threshold,
                        int depth_cap = kDefaultDepthCap);

/// Visits every descendant `levels` below `node` whose rectangles pass `keep` at
/// each level. `word` holds the node's address and is restored on return.
template <class Keep, class Emit>
void for_each_descendant(const SelfAffineSystem& sys, Word& word, const CylinderGeom& node, int levels,
                         Keep&& keep, Emit&& emit) {
    if (levels == 0) {
        emit(static_cast<const Word&>(word), node);
        return;
    }
    const int m = static_cast<int>(sys.m());
    for (int j = 1; j <= m; ++j) {
        CylinderGeom c = sys.child(node, static_cast<Letter>(j));
        if (!keep(c.rect)) continue;
        word.push_back(static_cast<Letter>(j));
        for_each_descendant(sys, word, c, levels - 1, keep, emit);
        word.pop_back();
    }
}

}  // namespace tangentlab

#endif

#include "tangentlab/ifs.hpp"

#include <algorithm>
#include <cmath>

#include "tangentlab/error.hpp"

namespace tangentlab {

std::string to_string(const Word& word) {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i != 0) out.push_back('.');
        out += std::to_string(static_cast<int>(word[i]));
    }
    return out;
}

AffineMapSpec::AffineMapSpec(Rational r, Rational s, Rational a, Rational b)
    : exact_{std::move(r), std::move(s), std::move(a), std::move(b)} {
    const auto& e = exact_;
    auto fail = [&](const std::string& why) {
        throw Error(ErrorKind::Validation,
                    "invalid map (r=" + to_string(e.r) + ", s=" + to_string(e.s) + ", a=" + to_string(e.a) +
                        ", b=" + to_string(e.b) + "): " + why);
    };
    if (!(e.s > 0)) fail("s must be positive");
    if (!(e.s < e.r)) fail("requires s < r");
    if (!(e.r < 1)) fail("requires r < 1");
    if (e.a < 0 || e.a + e.r > 1) fail("horizontal image leaves [0,1]");
    if (e.b < 0 || e.b + e.s > 1) fail("vertical image leaves [0,1]");
    params_ = {to_double(e.r), to_double(e.s), to_double(e.a), to_double(e.b)};
    rect_ = {params_.a, to_double(e.a + e.r), params_.b, to_double(e.b + e.s)};
}

ExactRect exact_rect(const ExactParams& f) {
    return {f.a, f.a + f.r, f.b, f.b + f.s};
}

Rational squared_gap(const ExactRect& p, const ExactRect& q) {
    Rational dx = 0;
    if (q.x0 > p.x1) dx = q.x0 - p.x1;
    else if (p.x0 > q.x1) dx = p.x0 - q.x1;
    Rational dy = 0;
    if (q.y0 > p.y1) dy = q.y0 - p.y1;
    else if (p.y0 > q.y1) dy = p.y0 - q.y1;
    return dx * dx + dy * dy;
}

SelfAffineSystem::SelfAffineSystem(std::vector<AffineMapSpec> maps) : maps_(std::move(maps)) {
    if (maps_.size() < 2) throw Error(ErrorKind::Validation, "a system needs at least two maps");
    if (maps_.size() > 255) throw Error(ErrorKind::Validation, "at most 255 maps are supported");

    const auto& first = maps_.front().exact();
    Rational s_lo = first.s, s_hi = first.s, r_lo = first.r, r_hi = first.r;
    q_exact_ = first.r / first.s;
    for (const auto& f : maps_) {
        const auto& e = f.exact();
        s_lo = std::min(s_lo, e.s);
        s_hi = std::max(s_hi, e.s);
        r_lo = std::min(r_lo, e.r);
        r_hi = std::max(r_hi, e.r);
        q_exact_ = std::min(q_exact_, Rational(e.r / e.s));
    }
    s_min_ = to_double(s_lo);
    s_max_ = to_double(s_hi);
    r_min_ = to_double(r_lo);
    r_max_ = to_double(r_hi);

    bool have_min = false;
    for (std::size_t i = 0; i < maps_.size(); ++i) {
        for (std::size_t j = i + 1; j < maps_.size(); ++j) {
            Rational d2 = squared_gap(exact_rect(maps_[i].exact()), exact_rect(maps_[j].exact()));
            if (d2 == 0) {
                throw Error(ErrorKind::Validation, "rectangles R_" + std::to_string(i + 1) + " and R_" +
                                                       std::to_string(j + 1) + " touch or overlap");
            }
            if (!have_min || d2 < delta_squared_) {
                delta_squared_ = d2;
                have_min = true;
            }
        }
    }
    auto root = exact_sqrt(delta_squared_);
    delta_ = root ? to_double(*root) : std::sqrt(to_double(delta_squared_));
}

void SelfAffineSystem::check_word(const Word& word) const {
    for (Letter c : word) {
        if (c < 1 || c > maps_.size()) {
            throw Error(ErrorKind::Alphabet, "letter " + std::to_string(static_cast<int>(c)) +
                                                 " outside alphabet 1.." + std::to_string(maps_.size()));
        }
    }
}

CylinderGeom SelfAffineSystem::child(const CylinderGeom& parent, Letter j) const {
    const auto& f = maps_[j - 1];
    const auto& p = parent.map;
    CylinderGeom c;
    c.map = p.then(f.params());
    // f_parent applied to the level-1 rectangle.
    const Rect& q = f.rect();
    c.rect.x0 = std::max(parent.rect.x0, p.a + p.r * q.x0);
    c.rect.x1 = std::min(parent.rect.x1, p.a + p.r * q.x1);
    c.rect.y0 = std::max(parent.rect.y0, p.b + p.s * q.y0);
    c.rect.y1 = std::min(parent.rect.y1, p.b + p.s * q.y1);
    return c;
}

AffineParams compose(const SelfAffineSystem& sys, const Word& u) {
    sys.check_word(u);
    AffineParams f;
    for (Letter j : u) f = f.then(sys.map(j).params());
    return f;
}

ExactParams compose_exact(const SelfAffineSystem& sys, const Word& u) {
    sys.check_word(u);
    ExactParams f;
    for (Letter j : u) f = f.then(sys.map(j).exact());
    return f;
}

CylinderGeom cylinder(const SelfAffineSystem& sys, const Word& u) {
    sys.check_word(u);
    CylinderGeom c;
    for (Letter j : u) c = sys.child(c, j);
    return c;
}

Rect cylinder_rect(const SelfAffineSystem& sys, const Word& u) {
    return cylinder(sys, u).rect;
}

AddressEnclosure point_of_address(const SelfAffineSystem& sys, const Word& prefix) {
    if (prefix.empty()) throw Error(ErrorKind::Precondition, "point_of_address needs a nonempty prefix");
    Rect r = cylinder_rect(sys, prefix);
    return {r.center(), 0.5 * std::hypot(r.width(), r.height())};
}

namespace {

void cover_rec(const SelfAffineSystem& sys, const Rect& window, double threshold, int depth_cap, Word& word,
               const CylinderGeom& node, std::vector<Word>& out) {
    if (node.map.r < threshold) {
        out.push_back(word);
        return;
    }
    if (static_cast<int>(word.size()) >= depth_cap) {
        throw DepthCapError(static_cast<int>(word.size()), depth_cap,
                            "cover: width threshold needs words longer than the depth cap " +
                                std::to_string(depth_cap));
    }
    const int m = static_cast<int>(sys.m());
    for (int j = 1; j <= m; ++j) {
        CylinderGeom c = sys.child(node, static_cast<Letter>(j));
        if (!c.rect.intersects(window)) continue;
        word.push_back(static_cast<Letter>(j));
        cover_rec(sys, window, threshold, depth_cap, word, c, out);
        word.pop_back();
    }
}

}  // namespace

std::vector<Word> cover(const SelfAffineSystem& sys, const Rect& window, double width_threshold, int depth_cap) {
    if (!(width_threshold > 0)) throw Error(ErrorKind::Precondition, "cover: width threshold must be positive");
    if (!kUnitSquare.contains(window) || window.x0 > window.x1 || window.y0 > window.y1) {
        throw Error(ErrorKind::Precondition, "cover: window must be a rectangle inside [0,1]^2");
    }
    std::vector<Word> out;
    Word word;
    cover_rec(sys, window, width_threshold, depth_cap, word, CylinderGeom{}, out);
    return out;
}

}  // namespace tangentlab

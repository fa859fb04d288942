#include "tangentlab_tools/json_io.hpp"

namespace tangentlab::tools {

using nlohmann::json;

namespace {

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

json to_json(const GLStructure& gl) {
    json breakpoints = json::array();
    for (const auto& a : gl.breakpoints) breakpoints.push_back(to_string(a));
    json groups = json::array();
    for (const auto& g : gl.groups) {
        json letters = json::array();
        for (Letter j : g) letters.push_back(static_cast<int>(j));
        groups.push_back(letters);
    }
    return {{"k", gl.k()}, {"breakpoints", breakpoints}, {"groups", groups}};
}

json to_json(const HypothesisReport& r) {
    json j = {
        {"m", r.m},
        {"delta_squared", to_string(r.delta_squared)},
        {"delta", r.delta_exact ? json(to_string(*r.delta_exact)) : json(nullptr)},
        {"delta_value", r.delta},
        {"M", r.M},
        {"n_tilde", optional_int(r.n_tilde)},
        {"q", to_string(r.q)},
        {"q_value", to_double(r.q)},
        {"k_tilde", r.k_tilde},
        {"s_min", to_string(r.s_min)},
        {"s_max", to_string(r.s_max)},
        {"r_min", to_string(r.r_min)},
        {"r_max", to_string(r.r_max)},
        {"admissible_p_bound", to_string(r.admissible_p_bound)},
        {"gl_aligned", r.gl.has_value()},
        {"p_admissible", r.p_admissible ? json(*r.p_admissible) : json(nullptr)},
        {"hypotheses_hold", r.hypotheses_hold()},
    };
    if (r.gl) j["gl"] = to_json(*r.gl);
    return j;
}

json to_json(const ViewCover& v) {
    json rects = json::array();
    for (const auto& r : v.rects) rects.push_back({r.x0, r.x1, r.y0, r.y1});
    return {{"depth_n", v.depth_n}, {"K", v.level_K},      {"t", v.t},
            {"center", {v.center.x, v.center.y}}, {"clipped", v.clipped}, {"resolution", v.resolution},
            {"rects", rects}};
}

json to_json(const std::vector<Interval>& intervals) {
    json out = json::array();
    for (const auto& iv : intervals) out.push_back({iv.lo, iv.hi});
    return out;
}

json to_json(const PatternReport& p) {
    return {{"is_pattern", p.is_pattern}, {"intervals", to_json(p.intervals)}, {"max_height", p.max_height},
            {"area", p.area},             {"tol_x", p.tol_x},                  {"reason", p.reason}};
}

json to_json(const FibreComparison& c) {
    return {{"distance", c.distance},   {"bound", c.bound},        {"within_bound", c.within_bound()},
            {"ambiguous", c.ambiguous}, {"fibre", to_json(c.fibre)}, {"section", to_json(c.section)}};
}

json to_json(const ZoomRow& r) {
    return {{"k", r.k},
            {"t", r.t},
            {"depth_n", r.depth_n},
            {"separation_bound", r.separation_bound_holds},
            {"eps", r.eps},
            {"is_pattern", r.is_pattern},
            {"pattern_area", r.pattern_area},
            {"area_bound", r.area_bound},
            {"area_bound_defined", r.area_bound_defined},
            {"max_rect_height", r.max_rect_height},
            {"product_deviation", r.product_deviation},
            {"view_distance", r.view_distance},
            {"clipped", r.clipped}};
}

json to_json(const BoundaryReport& b) {
    json views = json::array();
    for (const auto& v : b.views) {
        views.push_back(
            {{"t", v.t}, {"occupied", v.occupied}, {"violations", v.violations}, {"is_pattern", v.is_pattern}});
    }
    return {{"side", b.side == BorderSide::Left ? "left" : "right"},
            {"letter", static_cast<int>(b.letter)},
            {"point", {b.point.x, b.point.y}},
            {"N", b.grid},
            {"views", views},
            {"holds", b.holds()}};
}

std::string mask_string(const std::vector<bool>& mask) {
    std::string s;
    s.reserve(mask.size());
    for (bool b : mask) s.push_back(b ? '1' : '0');
    return s;
}

}  // namespace tangentlab::tools

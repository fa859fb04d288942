#include "tangentlab/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "tangentlab/error.hpp"

namespace tangentlab {

namespace {

using Weighted = std::pair<Rational, std::uint64_t>;

// Total weight of entries with value <= x (or < x when `strict`).
std::uint64_t weight_until(const std::vector<Weighted>& sorted, const std::vector<std::uint64_t>& prefix,
                           const Rational& x, bool strict) {
    auto it = strict ? std::lower_bound(sorted.begin(), sorted.end(), x,
                                        [](const Weighted& e, const Rational& v) { return e.first < v; })
                     : std::upper_bound(sorted.begin(), sorted.end(), x,
                                        [](const Rational& v, const Weighted& e) { return v < e.first; });
    return prefix[static_cast<std::size_t>(it - sorted.begin())];
}

std::uint64_t checked_pow(std::uint64_t base, int exponent, std::uint64_t cap) {
    std::uint64_t value = 1;
    for (int i = 0; i < exponent; ++i) {
        if (value > cap / base) return cap + 1;
        value *= base;
    }
    return value;
}

}  // namespace

Multiplicity sweep_multiplicity(std::vector<WeightedInterval> intervals) {
    std::vector<Weighted> los, his;
    std::vector<Rational> points{Rational(0), Rational(1)};
    for (const auto& iv : intervals) {
        los.emplace_back(iv.lo, iv.weight);
        his.emplace_back(iv.hi, iv.weight);
        if (iv.lo >= 0 && iv.lo <= 1) points.push_back(iv.lo);
        if (iv.hi >= 0 && iv.hi <= 1) points.push_back(iv.hi);
    }
    auto by_value = [](const Weighted& x, const Weighted& y) { return x.first < y.first; };
    std::sort(los.begin(), los.end(), by_value);
    std::sort(his.begin(), his.end(), by_value);
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    auto prefix_of = [](const std::vector<Weighted>& v) {
        std::vector<std::uint64_t> prefix(v.size() + 1, 0);
        for (std::size_t i = 0; i < v.size(); ++i) prefix[i + 1] = prefix[i] + v[i].second;
        return prefix;
    };
    const auto lo_prefix = prefix_of(los);
    const auto hi_prefix = prefix_of(his);

    Multiplicity result;
    bool first = true;
    auto record = [&](std::uint64_t c) {
        if (first) {
            result.min = result.max = c;
            first = false;
        } else {
            result.min = std::min(result.min, c);
            result.max = std::max(result.max, c);
        }
    };
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Rational& p = points[i];
        // closed intervals containing the point p
        record(weight_until(los, lo_prefix, p, false) - weight_until(his, hi_prefix, p, true));
        if (i + 1 < points.size()) {
            // open gap (p, next): no endpoint lies strictly inside
            record(weight_until(los, lo_prefix, p, false) - weight_until(his, hi_prefix, p, false));
        }
    }
    return result;
}

std::vector<WeightedInterval> level_projections(const SelfAffineSystem& sys, int n) {
    // Cylinders sharing (a_u, r_u) share a projection; track multiplicities only.
    std::map<std::pair<Rational, Rational>, std::uint64_t> level{{{Rational(0), Rational(1)}, 1}};
    for (int depth = 0; depth < n; ++depth) {
        std::map<std::pair<Rational, Rational>, std::uint64_t> next;
        for (const auto& [key, count] : level) {
            const auto& [a, r] = key;
            for (const auto& f : sys.maps()) {
                next[{a + r * f.exact().a, r * f.exact().r}] += count;
            }
        }
        level = std::move(next);
    }
    std::vector<WeightedInterval> out;
    out.reserve(level.size());
    for (const auto& [key, count] : level) out.push_back({key.first, key.first + key.second, count});
    return out;
}

Rational separation_delta_squared(const SelfAffineSystem& sys) {
    if (sys.m() < 2) throw Error(ErrorKind::Precondition, "separation needs at least two maps");
    std::optional<Rational> best;
    for (std::size_t i = 0; i < sys.m(); ++i) {
        for (std::size_t j = i + 1; j < sys.m(); ++j) {
            Rational d2 = squared_gap(exact_rect(sys.maps()[i].exact()), exact_rect(sys.maps()[j].exact()));
            if (!best || d2 < *best) best = d2;
        }
    }
    return *best;
}

double separation_delta(const SelfAffineSystem& sys) {
    Rational d2 = separation_delta_squared(sys);
    if (auto root = exact_sqrt(d2)) return to_double(*root);
    return std::sqrt(to_double(d2));
}

int column_count_M(const SelfAffineSystem& sys) {
    return static_cast<int>(sweep_multiplicity(level_projections(sys, 1)).max);
}

bool vertical_segments_hit_twice(const SelfAffineSystem& sys, int n, std::uint64_t enumeration_cap) {
    if (n < 1) throw Error(ErrorKind::Precondition, "vertical segment level must be at least 1");
    if (checked_pow(sys.m(), n, enumeration_cap) > enumeration_cap) {
        throw Error(ErrorKind::EnumerationCap, "m^" + std::to_string(n) + " cylinders exceed the enumeration cap " +
                                                   std::to_string(enumeration_cap));
    }
    return sweep_multiplicity(level_projections(sys, n)).min >= 2;
}

std::optional<int> vertical_segment_order(const SelfAffineSystem& sys, int n_max, std::uint64_t enumeration_cap) {
    if (n_max < 1) throw Error(ErrorKind::Precondition, "n_max must be at least 1");
    for (int n = 1; n <= n_max; ++n) {
        if (vertical_segments_hit_twice(sys, n, enumeration_cap)) return n;
    }
    return std::nullopt;
}

Rational anisotropy_q(const SelfAffineSystem& sys) {
    return sys.q_exact();
}

bool bernoulli_admissible(const SelfAffineSystem& sys, std::span<const double> p) {
    if (p.size() != sys.m()) {
        throw Error(ErrorKind::Shape, "probability vector has length " + std::to_string(p.size()) + ", expected " +
                                          std::to_string(sys.m()));
    }
    const Rational bound(1, column_count_M(sys));
    double sum = 0.0;
    for (double pj : p) {
        if (!std::isfinite(pj) || !(pj > 0.0)) return false;
        if (!(rational_from_double(pj) < bound)) return false;
        sum += pj;
    }
    return std::abs(sum - 1.0) <= 1e-12;
}

int k_tilde(const SelfAffineSystem& sys) {
    // floor(log(delta/2)/log s^*) is the largest k with (s^*)^(2k) >= delta^2/4.
    const Rational target = sys.delta_squared() / 4;
    Rational s_max = sys.maps().front().exact().s;
    for (const auto& f : sys.maps()) s_max = std::max(s_max, f.exact().s);
    const Rational s2 = s_max * s_max;
    int k = 0;
    Rational power = s2;
    while (power >= target) {
        ++k;
        power *= s2;
    }
    return k;
}

std::optional<GLStructure> gl_alignment(const SelfAffineSystem& sys) {
    const auto& maps = sys.maps();
    for (std::size_t i = 0; i < maps.size(); ++i) {
        for (std::size_t j = i + 1; j < maps.size(); ++j) {
            const auto& p = maps[i].exact();
            const auto& q = maps[j].exact();
            bool coincide = p.a == q.a && p.r == q.r;
            bool interiors_disjoint = p.a + p.r <= q.a || q.a + q.r <= p.a;
            if (!coincide && !interiors_disjoint) return std::nullopt;
        }
    }
    // Distinct columns, ordered by left endpoint.
    std::vector<std::pair<Rational, Rational>> columns;
    for (const auto& f : maps) columns.emplace_back(f.exact().a, f.exact().a + f.exact().r);
    std::sort(columns.begin(), columns.end());
    columns.erase(std::unique(columns.begin(), columns.end()), columns.end());
    if (columns.front().first != 0 || columns.back().second != 1) return std::nullopt;
    for (std::size_t i = 0; i + 1 < columns.size(); ++i) {
        if (columns[i].second != columns[i + 1].first) return std::nullopt;
    }

    GLStructure gl;
    for (const auto& c : columns) gl.breakpoints.push_back(c.first);
    gl.breakpoints.push_back(Rational(1));
    gl.groups.resize(columns.size());
    for (std::size_t j = 0; j < maps.size(); ++j) {
        const auto& e = maps[j].exact();
        auto it = std::lower_bound(columns.begin(), columns.end(), std::make_pair(e.a, e.a + e.r));
        gl.groups[static_cast<std::size_t>(it - columns.begin())].push_back(static_cast<Letter>(j + 1));
        gl.vertical_scale.push_back(e.s);
        gl.vertical_shift.push_back(e.b);
    }
    return gl;
}

HypothesisReport check_hypotheses(const SelfAffineSystem& sys, std::optional<std::vector<double>> p, int n_max,
                                  std::uint64_t enumeration_cap) {
    HypothesisReport report;
    report.m = sys.m();
    report.delta_squared = separation_delta_squared(sys);
    report.delta_exact = exact_sqrt(report.delta_squared);
    report.delta = separation_delta(sys);
    report.M = column_count_M(sys);
    report.n_tilde = vertical_segment_order(sys, n_max, enumeration_cap);
    report.q = anisotropy_q(sys);
    report.k_tilde = k_tilde(sys);
    const auto& first = sys.maps().front().exact();
    report.s_min = report.s_max = first.s;
    report.r_min = report.r_max = first.r;
    for (const auto& f : sys.maps()) {
        const auto& e = f.exact();
        report.s_min = std::min(report.s_min, e.s);
        report.s_max = std::max(report.s_max, e.s);
        report.r_min = std::min(report.r_min, e.r);
        report.r_max = std::max(report.r_max, e.r);
    }
    report.admissible_p_bound = Rational(1, report.M);
    report.gl = gl_alignment(sys);
    if (p) report.p_admissible = bernoulli_admissible(sys, *p);
    return report;
}

}  // namespace tangentlab

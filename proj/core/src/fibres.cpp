#include "tangentlab/fibres.hpp"

#include <algorithm>

#include "tangentlab/error.hpp"
#include "tangentlab/setmetric.hpp"

namespace tangentlab {

namespace {

std::vector<ExactInterval> merged(std::vector<ExactInterval> v) {
    std::sort(v.begin(), v.end(), [](const ExactInterval& a, const ExactInterval& b) {
        return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    });
    std::vector<ExactInterval> out;
    for (auto& iv : v) {
        if (!out.empty() && iv.lo <= out.back().hi) {
            if (iv.hi > out.back().hi) out.back().hi = iv.hi;
        } else {
            out.push_back(std::move(iv));
        }
    }
    return out;
}

struct Affine1D {
    Rational scale{1};
    Rational shift{0};
};

}  // namespace

ColumnAddress column_address(const GLStructure& gl, const Rational& x1, int depth) {
    if (x1 < 0 || x1 > 1) throw Error(ErrorKind::Precondition, "x1 must lie in [0,1]");
    if (depth < 1) throw Error(ErrorKind::Precondition, "column address depth must be at least 1");
    const auto& a = gl.breakpoints;
    const std::size_t k = gl.k();

    ColumnAddress out;
    Rational x = x1;
    Rational alt_x;
    for (int step = 0; step < depth; ++step) {
        // first column whose closed interval contains x
        std::size_t i = 0;
        while (i + 1 < k && x > a[i + 1]) ++i;
        if (!out.ambiguous && i + 1 < k && x == a[i + 1]) {
            // interior breakpoint: left column maps x to 1, right column to 0
            out.ambiguous = true;
            out.alternative = out.letters;
            out.alternative.push_back(static_cast<Letter>(i + 2));
            alt_x = Rational(0);
        } else if (out.ambiguous) {
            std::size_t ai = 0;
            while (ai + 1 < k && alt_x > a[ai + 1]) ++ai;
            out.alternative.push_back(static_cast<Letter>(ai + 1));
            alt_x = (alt_x - a[ai]) / gl.width(ai);
        }
        out.letters.push_back(static_cast<Letter>(i + 1));
        x = (x - a[i]) / gl.width(i);
    }
    return out;
}

std::vector<ExactInterval> fibre_cover_exact(const GLStructure& gl, const std::vector<Letter>& column_letters, int n,
                                             std::uint64_t cap) {
    if (n < 0) throw Error(ErrorKind::Precondition, "fibre level must be nonnegative");
    if (static_cast<std::size_t>(n) > column_letters.size()) {
        throw Error(ErrorKind::Precondition, "column address shorter than the fibre level");
    }
    std::uint64_t count = 1;
    for (int step = 0; step < n; ++step) {
        const Letter col = column_letters[static_cast<std::size_t>(step)];
        if (col < 1 || col > gl.k()) throw Error(ErrorKind::Alphabet, "column letter out of range");
        count *= gl.groups[col - 1].size();
        if (count > cap) throw Error(ErrorKind::EnumerationCap, "fibre cover exceeds the enumeration cap");
    }

    std::vector<Affine1D> level{Affine1D{}};
    for (int step = 0; step < n; ++step) {
        const auto& group = gl.groups[column_letters[static_cast<std::size_t>(step)] - 1];
        std::vector<Affine1D> next;
        next.reserve(level.size() * group.size());
        for (const auto& g : level) {
            for (Letter j : group) {
                const Rational& s = gl.vertical_scale[j - 1];
                const Rational& b = gl.vertical_shift[j - 1];
                next.push_back({g.scale * s, g.shift + g.scale * b});
            }
        }
        level = std::move(next);
    }
    std::vector<ExactInterval> out;
    out.reserve(level.size());
    for (const auto& g : level) out.push_back({g.shift, g.shift + g.scale});
    return merged(std::move(out));
}

std::vector<Interval> fibre_cover(const GLStructure& gl, const std::vector<Letter>& column_letters, int n,
                                  std::uint64_t cap) {
    return to_double(fibre_cover_exact(gl, column_letters, n, cap));
}

std::vector<ExactInterval> section_cover_exact(const SelfAffineSystem& sys, const Rational& x1, int n,
                                               std::uint64_t cap) {
    if (n < 0) throw Error(ErrorKind::Precondition, "section level must be nonnegative");
    std::vector<ExactParams> level{ExactParams{}};
    for (int step = 0; step < n; ++step) {
        std::vector<ExactParams> next;
        for (const auto& f : level) {
            for (const auto& g : sys.maps()) {
                ExactParams c = f.then(g.exact());
                if (c.a <= x1 && x1 <= c.a + c.r) next.push_back(std::move(c));
            }
        }
        if (next.size() > cap) throw Error(ErrorKind::EnumerationCap, "section cover exceeds the enumeration cap");
        level = std::move(next);
    }
    std::vector<ExactInterval> out;
    out.reserve(level.size());
    for (const auto& f : level) out.push_back({f.b, f.b + f.s});
    return merged(std::move(out));
}

FibreComparison fibre_vs_section(const SelfAffineSystem& sys, const GLStructure& gl, const Rational& x1, int n,
                                 int grid, std::uint64_t cap) {
    FibreComparison out;
    std::vector<ExactInterval> fibre;
    if (n == 0) {
        fibre.push_back({Rational(0), Rational(1)});
    } else {
        auto address = column_address(gl, x1, n);
        fibre = fibre_cover_exact(gl, address.letters, n, cap);
        if (address.ambiguous) {
            out.ambiguous = true;
            auto other = fibre_cover_exact(gl, address.alternative, n, cap);
            fibre.insert(fibre.end(), other.begin(), other.end());
            fibre = merged(std::move(fibre));
        }
    }
    out.fibre = to_double(fibre);
    out.section = to_double(section_cover_exact(sys, x1, n, cap));

    double s_power = 1.0;
    for (int i = 0; i < n; ++i) s_power *= sys.s_max();
    out.bound = 2.0 * s_power + 2.0 / grid;
    out.distance = hausdorff_1d(rasterize_intervals(out.fibre, grid), rasterize_intervals(out.section, grid));
    return out;
}

std::vector<double> column_weights(const GLStructure& gl, const ProbVector& p) {
    if (p.size() != gl.vertical_scale.size()) throw Error(ErrorKind::Shape, "probability vector length mismatch");
    std::vector<double> weights;
    for (const auto& group : gl.groups) {
        double sum = 0.0;
        for (Letter j : group) sum += p.of(j);
        weights.push_back(sum);
    }
    return weights;
}

std::vector<Rational> column_weights(const GLStructure& gl, const std::vector<Rational>& p) {
    if (p.size() != gl.vertical_scale.size()) throw Error(ErrorKind::Shape, "probability vector length mismatch");
    std::vector<Rational> weights;
    for (const auto& group : gl.groups) {
        Rational sum = 0;
        for (Letter j : group) sum += p[j - 1];
        weights.push_back(sum);
    }
    return weights;
}

std::vector<Interval> to_double(const std::vector<ExactInterval>& intervals) {
    std::vector<Interval> out;
    out.reserve(intervals.size());
    for (const auto& iv : intervals) out.push_back({tangentlab::to_double(iv.lo), tangentlab::to_double(iv.hi)});
    return out;
}

}  // namespace tangentlab

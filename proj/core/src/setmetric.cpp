#include "tangentlab/setmetric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "tangentlab/error.hpp"

namespace tangentlab {

namespace {

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
    std::int64_t q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

void require_nonempty(const GridSet& s, const char* what) {
    if (s.empty()) throw Error(ErrorKind::Emptiness, std::string(what) + ": empty grid set");
}

void require_same_n(const GridSet& a, const GridSet& b) {
    if (a.n() != b.n()) {
        throw Error(ErrorKind::Shape, "grid resolutions differ: " + std::to_string(a.n()) + " vs " +
                                          std::to_string(b.n()));
    }
}

// Closed-cell index range [lo, hi] meeting [x0, x1]; lo > hi when none.
std::pair<int, int> cell_range(double x0, double x1, int n) {
    const double scale = static_cast<double>(n);
    double lo = std::ceil(x0 * scale) - 1.0;
    double hi = std::floor(x1 * scale);
    lo = std::max(lo, 0.0);
    hi = std::min(hi, scale - 1.0);
    if (lo > hi) return {1, 0};
    return {static_cast<int>(lo), static_cast<int>(hi)};
}

}  // namespace

bool valid_resolution(int n) {
    return n >= kMinGrid && n <= kMaxGrid && (n & (n - 1)) == 0;
}

GridSet::GridSet(int n) : n_(n) {
    if (!valid_resolution(n)) {
        throw Error(ErrorKind::Shape, "grid resolution " + std::to_string(n) + " is not a power of two in [" +
                                          std::to_string(kMinGrid) + ", " + std::to_string(kMaxGrid) + "]");
    }
    cells_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

void GridSet::fill_block(int i0, int i1, int j0, int j1) {
    for (int j = j0; j <= j1; ++j) {
        auto row = cells_.begin() + static_cast<std::ptrdiff_t>(index(0, j));
        std::fill(row + i0, row + i1 + 1, std::uint8_t{1});
    }
}

std::size_t GridSet::count() const {
    return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), std::uint8_t{1}));
}

GridSet rasterize(const RectUnion& rects, int n) {
    GridSet grid(n);
    for (const auto& r : rects) {
        auto [i0, i1] = cell_range(r.x0, r.x1, n);
        auto [j0, j1] = cell_range(r.y0, r.y1, n);
        if (i0 > i1 || j0 > j1) continue;
        grid.fill_block(i0, i1, j0, j1);
    }
    return grid;
}

std::vector<std::int64_t> squared_distance_transform(const GridSet& set) {
    const int n = set.n();
    const std::int64_t inf = 4 * static_cast<std::int64_t>(n);
    const auto idx = [n](int i, int j) { return static_cast<std::size_t>(j) * static_cast<std::size_t>(n) + i; };

    // Phase 1: vertical distance to the nearest occupied cell within each column.
    std::vector<std::int64_t> g(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        g[idx(i, 0)] = set.at(i, 0) ? 0 : inf;
        for (int j = 1; j < n; ++j) g[idx(i, j)] = set.at(i, j) ? 0 : std::min(inf, g[idx(i, j - 1)] + 1);
        for (int j = n - 2; j >= 0; --j) g[idx(i, j)] = std::min(g[idx(i, j)], g[idx(i, j + 1)] + 1);
    }

    // Phase 2: lower envelope of parabolas along each row.
    std::vector<std::int64_t> dt(g.size());
    std::vector<int> s(static_cast<std::size_t>(n)), t(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const std::int64_t* row = &g[idx(0, j)];
        auto f = [row](std::int64_t x, int i) { return (x - i) * (x - i) + row[i] * row[i]; };
        auto sep = [row](int i, int u) {
            return floor_div(static_cast<std::int64_t>(u) * u - static_cast<std::int64_t>(i) * i + row[u] * row[u] -
                                 row[i] * row[i],
                             2 * static_cast<std::int64_t>(u - i));
        };
        int q = 0;
        s[0] = 0;
        t[0] = 0;
        for (int u = 1; u < n; ++u) {
            while (q >= 0 && f(t[q], s[q]) > f(t[q], u)) --q;
            if (q < 0) {
                q = 0;
                s[0] = u;
            } else {
                std::int64_t w = 1 + sep(s[q], u);
                if (w < n) {
                    ++q;
                    s[q] = u;
                    t[q] = static_cast<int>(w);
                }
            }
        }
        for (int u = n - 1; u >= 0; --u) {
            dt[idx(u, j)] = f(u, s[q]);
            if (u == t[q]) --q;
        }
    }
    return dt;
}

std::int64_t directed_squared_cells(const GridSet& from, const GridSet& to) {
    require_same_n(from, to);
    require_nonempty(from, "directed distance");
    require_nonempty(to, "directed distance");
    const auto dt = squared_distance_transform(to);
    const int n = from.n();
    std::int64_t worst = 0;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            if (from.at(i, j)) worst = std::max(worst, dt[static_cast<std::size_t>(j) * n + i]);
        }
    }
    return worst;
}

std::int64_t hausdorff_squared_cells(const GridSet& a, const GridSet& b) {
    return std::max(directed_squared_cells(a, b), directed_squared_cells(b, a));
}

double hausdorff(const GridSet& a, const GridSet& b) {
    return std::sqrt(static_cast<double>(hausdorff_squared_cells(a, b))) / a.n();
}

std::vector<bool> y_projection(const GridSet& set) {
    require_nonempty(set, "y_projection");
    std::vector<bool> rows(static_cast<std::size_t>(set.n()), false);
    for (int j = 0; j < set.n(); ++j) {
        for (int i = 0; i < set.n(); ++i) {
            if (set.at(i, j)) {
                rows[static_cast<std::size_t>(j)] = true;
                break;
            }
        }
    }
    return rows;
}

GridSet row_completion(const GridSet& set) {
    const auto rows = y_projection(set);
    GridSet full(set.n());
    for (int j = 0; j < set.n(); ++j) {
        if (rows[static_cast<std::size_t>(j)]) full.fill_block(0, set.n() - 1, j, j);
    }
    return full;
}

double product_deviation(const GridSet& set) {
    require_nonempty(set, "product_deviation");
    // set is contained in its row completion, so only one direction can be nonzero.
    const auto sq = directed_squared_cells(row_completion(set), set);
    return std::sqrt(static_cast<double>(sq)) / set.n();
}

std::string to_pgm(const GridSet& set) {
    const int n = set.n();
    std::string out = "P5\n" + std::to_string(n) + " " + std::to_string(n) + "\n255\n";
    out.reserve(out.size() + static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int j = n - 1; j >= 0; --j) {
        for (int i = 0; i < n; ++i) out.push_back(set.at(i, j) ? '\0' : '\xff');
    }
    return out;
}

std::string to_rle(const GridSet& set) {
    std::ostringstream out;
    out << "gridset " << set.n() << '\n';
    for (int j = 0; j < set.n(); ++j) {
        std::ostringstream line;
        bool any = false;
        int i = 0;
        while (i < set.n()) {
            if (!set.at(i, j)) {
                ++i;
                continue;
            }
            int start = i;
            while (i < set.n() && set.at(i, j)) ++i;
            line << ' ' << start << ':' << (i - start);
            any = true;
        }
        if (any) out << j << line.str() << '\n';
    }
    return out.str();
}

GridSet from_rle(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string tag;
    int n = 0;
    if (!(in >> tag >> n) || tag != "gridset") throw Error(ErrorKind::Validation, "run-length grid: bad header");
    GridSet grid(n);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream fields(line);
        int j = -1;
        if (!(fields >> j) || j < 0 || j >= n) throw Error(ErrorKind::Validation, "run-length grid: bad row");
        std::string run;
        while (fields >> run) {
            auto colon = run.find(':');
            if (colon == std::string::npos) throw Error(ErrorKind::Validation, "run-length grid: bad run");
            int start = std::stoi(run.substr(0, colon));
            int len = std::stoi(run.substr(colon + 1));
            if (start < 0 || len < 1 || start + len > n) throw Error(ErrorKind::Validation, "run-length grid: run out of range");
            grid.fill_block(start, start + len - 1, j, j);
        }
    }
    return grid;
}

std::vector<bool> rasterize_intervals(const std::vector<Interval>& intervals, int n) {
    if (n < 1) throw Error(ErrorKind::Shape, "1-D resolution must be positive");
    std::vector<bool> cells(static_cast<std::size_t>(n), false);
    for (const auto& iv : intervals) {
        auto [lo, hi] = cell_range(iv.lo, iv.hi, n);
        for (int j = lo; j <= hi; ++j) cells[static_cast<std::size_t>(j)] = true;
    }
    return cells;
}

namespace {

// Distance (in cells) from each cell to the nearest occupied cell of `set`.
std::vector<std::int64_t> distance_1d(const std::vector<bool>& set) {
    const auto n = static_cast<std::int64_t>(set.size());
    const std::int64_t inf = 4 * n;
    std::vector<std::int64_t> d(set.size(), inf);
    for (std::size_t j = 0; j < set.size(); ++j) {
        if (set[j]) d[j] = 0;
        else if (j > 0) d[j] = std::min(inf, d[j - 1] + 1);
    }
    for (std::size_t j = set.size(); j-- > 1;) d[j - 1] = std::min(d[j - 1], d[j] + 1);
    return d;
}

}  // namespace

std::int64_t hausdorff_cells_1d(const std::vector<bool>& a, const std::vector<bool>& b) {
    if (a.size() != b.size()) throw Error(ErrorKind::Shape, "1-D grids differ in size");
    if (std::find(a.begin(), a.end(), true) == a.end() || std::find(b.begin(), b.end(), true) == b.end()) {
        throw Error(ErrorKind::Emptiness, "1-D Hausdorff distance of an empty set");
    }
    const auto da = distance_1d(a);
    const auto db = distance_1d(b);
    std::int64_t worst = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j]) worst = std::max(worst, db[j]);
        if (b[j]) worst = std::max(worst, da[j]);
    }
    return worst;
}

double hausdorff_1d(const std::vector<bool>& a, const std::vector<bool>& b) {
    return static_cast<double>(hausdorff_cells_1d(a, b)) / static_cast<double>(a.size());
}

}  // namespace tangentlab

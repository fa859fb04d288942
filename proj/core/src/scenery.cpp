#include "tangentlab/scenery.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "tangentlab/error.hpp"

namespace tangentlab {

std::vector<double> ScaleLadder::scales() const {
    if (!(t0 > 0.0 && t0 < 0.5)) throw Error(ErrorKind::Precondition, "ladder t0 must lie in (0, 1/2)");
    if (!(rho > 0.0 && rho < 1.0)) throw Error(ErrorKind::Precondition, "ladder rho must lie in (0, 1)");
    if (count < 1) throw Error(ErrorKind::Precondition, "ladder needs at least one scale");
    std::vector<double> out;
    double t = t0;
    for (int k = 0; k < count; ++k) {
        out.push_back(t);
        t *= rho;
    }
    return out;
}

std::size_t ZoomReport::first_pattern() const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].is_pattern) return i;
    }
    return rows.size();
}

ZoomReport zoom_sequence(const SelfAffineSystem& sys, const Word& x_prefix, const ZoomParams& params) {
    ZoomReport report;
    report.prefix = x_prefix;
    const auto scales = params.ladder.scales();
    const double eps = epsilon_K(sys, params.K);
    const AreaBound bound = pattern_area_bound(sys, params.K);
    for (std::size_t k = 0; k < scales.size(); ++k) {
        try {
            Window window(sys, x_prefix, scales[k], params.depth_cap);
            ViewCover approx = approx_view(sys, window, params.K, params.depth_cap);
            ViewCover fine = reference_view(sys, window, params.grid, params.depth_cap);
            PatternReport pattern = is_pattern(approx, eps);

            ZoomRow row;
            row.k = static_cast<int>(k);
            row.t = scales[k];
            row.depth_n = approx.depth_n;
            row.separation_bound_holds = single_cylinder_depth(sys, window, params.depth_cap).separation_bound_holds;
            row.eps = eps;
            row.is_pattern = pattern.is_pattern;
            row.pattern_area = pattern.area;
            row.area_bound = bound.bound;
            row.area_bound_defined = bound.defined;
            for (const auto& r : approx.rects) row.max_rect_height = std::max(row.max_rect_height, r.height());
            GridSet fine_raster = rasterize(fine.rects, params.grid);
            row.product_deviation = product_deviation(fine_raster);
            row.view_distance = hausdorff(fine_raster, rasterize(approx.rects, params.grid));
            row.clipped = approx.clipped;
            report.rows.push_back(row);
        } catch (const DepthCapError& e) {
            throw DepthCapError(e.reached(), e.cap(), "scale k=" + std::to_string(k) + ": " + e.what());
        } catch (const Error& e) {
            throw Error(e.kind(), "scale k=" + std::to_string(k) + ": " + e.what());
        }
    }
    return report;
}

namespace {

std::string fmt(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace

std::string zoom_csv_header() {
    return "sample,k,t,depth_n,separation_bound,eps,is_pattern,pattern_area,area_bound,area_bound_defined,"
           "max_rect_height,product_deviation,view_distance,clipped\n";
}

std::string zoom_csv_rows(const ZoomReport& report, std::size_t sample) {
    std::string out;
    for (const auto& r : report.rows) {
        out += std::to_string(sample) + ',' + std::to_string(r.k) + ',' + fmt(r.t) + ',' + std::to_string(r.depth_n) +
               ',' + (r.separation_bound_holds ? "1" : "0") + ',' + fmt(r.eps) + ',' + (r.is_pattern ? "1" : "0") +
               ',' + fmt(r.pattern_area) + ',' + fmt(r.area_bound) + ',' + (r.area_bound_defined ? "1" : "0") + ',' +
               fmt(r.max_rect_height) + ',' + fmt(r.product_deviation) + ',' + fmt(r.view_distance) + ',' +
               (r.clipped ? "1" : "0") + '\n';
    }
    return out;
}

Gallery gallery_collect(const SelfAffineSystem& sys, const Word& x_prefix, const std::vector<double>& scales, int grid,
                        int depth_cap) {
    if (scales.empty()) throw Error(ErrorKind::Emptiness, "gallery needs at least one scale");
    for (std::size_t i = 1; i < scales.size(); ++i) {
        if (!(scales[i] < scales[i - 1])) throw Error(ErrorKind::Precondition, "gallery scales must decrease");
    }
    if (!valid_resolution(grid)) throw Error(ErrorKind::Shape, "invalid gallery grid " + std::to_string(grid));
    Gallery g;
    g.grid = grid;
    g.scales = scales;
    for (double t : scales) {
        Window window(sys, x_prefix, t, depth_cap);
        g.views.push_back(rasterize(reference_view(sys, window, grid, depth_cap).rects, grid));
    }
    return g;
}

std::vector<std::vector<double>> gallery_matrix(const Gallery& g1, const Gallery& g2) {
    if (g1.views.empty() || g2.views.empty()) throw Error(ErrorKind::Emptiness, "gallery_distance: empty gallery");
    if (g1.grid != g2.grid) throw Error(ErrorKind::Shape, "gallery_distance: grids differ");
    std::vector<std::vector<double>> out(g1.views.size(), std::vector<double>(g2.views.size()));
    for (std::size_t i = 0; i < g1.views.size(); ++i) {
        for (std::size_t j = 0; j < g2.views.size(); ++j) out[i][j] = hausdorff(g1.views[i], g2.views[j]);
    }
    return out;
}

GalleryDistance gallery_distance(const Gallery& g1, const Gallery& g2) {
    const auto d = gallery_matrix(g1, g2);
    double forward = 0.0;
    for (const auto& row : d) forward = std::max(forward, *std::min_element(row.begin(), row.end()));
    double backward = 0.0;
    for (std::size_t j = 0; j < g2.views.size(); ++j) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& row : d) best = std::min(best, row[j]);
        backward = std::max(backward, best);
    }
    return {forward, std::max(forward, backward)};
}

bool BoundaryReport::holds() const {
    return std::all_of(views.begin(), views.end(),
                       [](const BoundaryView& v) { return v.violations == 0 && v.occupied > 0 && !v.is_pattern; });
}

BoundaryReport boundary_demo(const SelfAffineSystem& sys, int grid, BorderSide side, int count, double t0, int K) {
    BoundaryReport report;
    report.side = side;
    report.grid = grid;

    std::size_t pick = 0;
    for (std::size_t j = 1; j < sys.m(); ++j) {
        const auto& cand = sys.maps()[j].params();
        const auto& best = sys.maps()[pick].params();
        if (side == BorderSide::Left ? cand.a < best.a : cand.a + cand.r > best.a + best.r) pick = j;
    }
    report.letter = static_cast<Letter>(pick + 1);
    const Word address(static_cast<std::size_t>(kDefaultDepthCap), report.letter);
    report.point = point_of_address(sys, address).center;

    const double eps = epsilon_K(sys, K);
    const int half = grid / 2;
    const auto scales = ScaleLadder{t0, sys.s_min(), count}.scales();
    for (double t : scales) {
        Window window(sys, address, t);
        GridSet view = rasterize(reference_view(sys, window, grid).rects, grid);
        BoundaryView bv;
        bv.t = t;
        bv.occupied = view.count();
        for (int j = 0; j < grid; ++j) {
            for (int i = 0; i < grid; ++i) {
                if (!view.at(i, j)) continue;
                const bool bad = side == BorderSide::Left ? i < half - 1 : i > half;
                if (bad) ++bv.violations;
            }
        }
        bv.is_pattern = is_pattern(approx_view(sys, window, K), eps).is_pattern;
        report.views.push_back(bv);
    }
    return report;
}

unsigned worker_count() {
    unsigned n = std::max(1U, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("TANGENTLAB_THREADS")) {
        unsigned cap = 0;
        const std::string_view s(env);
        auto res = std::from_chars(s.data(), s.data() + s.size(), cap);
        if (res.ec == std::errc{} && cap >= 1) n = std::min(n, cap);
    }
    return n;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, unsigned workers) {
    if (workers == 0) workers = worker_count();
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::size_t failed_index = n;
    std::exception_ptr failure;

    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(mu);
                if (i < failed_index) {
                    failed_index = i;
                    failure = std::current_exception();
                }
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);
}

std::vector<Word> sample_points(const ProbVector& p, std::uint64_t seed, std::size_t count, std::size_t length) {
    RandomSource root(seed);
    std::vector<Word> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        RandomSource rng = root.substream(i);
        out.push_back(sample_address(p, length, rng));
    }
    return out;
}

std::vector<ZoomReport> zoom_experiment(const SelfAffineSystem& sys, const std::vector<Word>& points,
                                        const ZoomParams& params, unsigned workers) {
    std::vector<ZoomReport> reports(points.size());
    parallel_for(
        points.size(), [&](std::size_t i) { reports[i] = zoom_sequence(sys, points[i], params); }, workers);
    return reports;
}

}  // namespace tangentlab
